#include "vafilt/module/mode_grid.hpp"

#include "vafilt/filtration/relations.hpp"
#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

namespace {

/// Evaluates one identity, treating truncation overflow as a skipped case.
template <class Fn>
void attempt(Tally& t, Fn&& fn) {
  IdentityCheck c;
  try {
    c = fn();
  } catch (const CutoffExceeded&) {
    t.skip();
    return;
  }
  t.record(c.holds, c.identity + ": " + c.detail);
}

}  // namespace

std::vector<CheckOutcome> check_mode_grid(const TwistedModule& mod, const GridOptions& o,
                                          const ExecConfig& exec) {
  const VertexAlgebra& va = mod.algebra();
  const int T = va.period();
  const int R = o.mode_range;
  std::vector<Label> us, ws;
  for (long k = 0; k <= std::min(o.uv_weight, va.cutoff()); ++k)
    for (Label l : va.basis(k)) us.push_back(l);
  for (long k = 0; k <= std::min(o.w_ticks, mod.cutoff_ticks()); ++k)
    for (Label l : mod.basis(k)) ws.push_back(l);

  const std::size_t nu = us.size(), nw = ws.size();
  Tally comm = run_cases(nu * nu * nw, exec, [&](std::size_t c, Tally& t) {
    Label u = us[c / (nu * nw)], v = us[(c / nw) % nu], w = ws[c % nw];
    for (long m = -R; m <= R; ++m)
      for (long n = -R; n <= R; ++n)
        attempt(t, [&] {
          return check_twisted_commutator(mod, VAElement::basis(u), VAElement::basis(v),
                                          ModeIndex(m, va.sector(u), T), ModeIndex(n, va.sector(v), T),
                                          TwistedVector::basis(w));
        });
  });
  Tally assoc, iter;
  {
    std::vector<Tally> a(nu * nu * nw), b(nu * nu * nw);
    for_each_index(a.size(), exec, [&](std::size_t c) {
      Label u = us[c / (nu * nw)], v = us[(c / nw) % nu], w = ws[c % nw];
      const int s = (va.sector(u) + va.sector(v)) % T;
      for (long m = -R; m <= R; ++m)
        for (long n = -R; n <= R; ++n) {
          ModeIndex ni(n, s, T);
          attempt(a[c], [&] {
            return check_associativity_expansion(mod, VAElement::basis(u), m, VAElement::basis(v), ni,
                                                 TwistedVector::basis(w));
          });
          attempt(b[c], [&] {
            return check_iterate_consistency(mod, VAElement::basis(u), m, VAElement::basis(v), ni,
                                             TwistedVector::basis(w));
          });
        }
    });
    for (const auto& t : a) assoc.merge(t);
    for (const auto& t : b) iter.merge(t);
  }
  Tally trans = run_cases(nu * nw, exec, [&](std::size_t c, Tally& t) {
    Label u = us[c / nw], w = ws[c % nw];
    for (long n = -R; n <= R; ++n)
      attempt(t, [&] {
        return check_translation_compat(mod, VAElement::basis(u), n, TwistedVector::basis(w));
      });
  });
  return {comm.outcome("twisted commutator formula"),
          trans.outcome("translation compatibility of modes"),
          assoc.outcome("iterate equals associativity expansion"),
          iter.outcome("iterate equals commutativity expansion")};
}

}  // namespace vafilt
