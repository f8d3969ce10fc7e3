#include "vafilt/module/table_module.hpp"

#include "vafilt/core/errors.hpp"
#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

TableModule::TableModule(const VertexAlgebra& va, long cutoff_ticks, std::string name,
                         const std::vector<LabelSpec>& labels)
    : TwistedModule(cutoff_ticks), va_(va), name_(std::move(name)) {
  for (const auto& spec : labels) {
    if (spec.weight_ticks < 0 || spec.weight_ticks > cutoff_ticks)
      throw ValidationError("module label '" + spec.name + "' has weight " +
                            ticks_str(spec.weight_ticks, va.period()) + " outside the cutoff");
    labels_.add(spec.name, spec.weight_ticks, 0);
  }
}

void TableModule::set_action(Label u, const ModeIndex& m, Label w, TwistedVector value) {
  const int T = period();
  if (m.sector() != va_.sector(u))
    throw ValidationError("mode coset violated: " + va_.name(u) + " (sector " +
                          std::to_string(va_.sector(u)) + ") given mode " + m.str());
  long t = T * static_cast<long>(va_.weight(u)) + weight_ticks(w) - m.ticks() - T;
  for (const auto& [l, c] : value.terms())
    if (weight_ticks(l) != t)
      throw ValidationError("grading violated: " + va_.name(u) + "_(" + m.str() + ") " + name(w) +
                            " contains " + name(l) + " of weight " +
                            ticks_str(weight_ticks(l), T) + ", expected " + ticks_str(t, T));
  if (value.is_zero()) {
    actions_.erase({u, m.ticks(), w});
  } else {
    actions_[{u, m.ticks(), w}] = std::move(value);
  }
}

TwistedVector TableModule::mode_basis(Label u, const ModeIndex& m, Label w) const {
  auto it = actions_.find({u, m.ticks(), w});
  return it == actions_.end() ? TwistedVector{} : it->second;
}

AdjointModule::AdjointModule(const VertexAlgebra& va)
    : TwistedModule(static_cast<long>(va.cutoff())), va_(va) {
  if (va.period() != 1)
    throw UnsupportedPeriod("the adjoint module is untwisted; period must be 1");
  for (std::size_t l = 0; l < va.size(); ++l) {
    Label x = static_cast<Label>(l);
    labels_.add(va.name(x), va.weight(x), 0);
  }
}

TwistedVector AdjointModule::mode_basis(Label u, const ModeIndex& m, Label w) const {
  TwistedVector out;
  const VAElement p = va_.product_basis(u, m.base(), w);
  for (const auto& [l, c] : p.terms()) out.add(l, c);
  return out;
}

void validate_module(const TwistedModule& mod) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  const long cut = mod.cutoff_ticks();
  const long vcut = va.cutoff();
  const Label one = va.vacuum();

  for (long t = 0; t <= cut; ++t)
    for (Label w : mod.basis(t))
      for (long mu = t - cut - T; mu <= t - T; mu += T) {
        TwistedVector got = mod.mode_basis(one, ModeIndex::from_ticks(mu, T), w);
        TwistedVector want = mu == -T ? TwistedVector::basis(w) : TwistedVector{};
        if (!(got == want))
          throw ValidationError("vacuum axiom Y_M(1,x) = id violated at " + mod.name(w) +
                                ", mode " + ticks_str(mu, T));
      }

  auto in_range = [&](long t) { return t >= 0 && t <= cut; };
  for (long a = 1; a <= vcut; ++a)
    for (Label u : va.basis(a))
      for (long b = 1; b + a - 1 <= vcut; ++b)
        for (Label v : va.basis(b))
          for (long c = 0; c <= cut; ++c)
            for (Label w : mod.basis(c)) {
              const int r = va.sector(u), s = va.sector(v);
              // v_n w within range fixes the range of n; likewise for u_m.
              for (long nt = T * b + c - T - cut; nt <= T * b + c - T; ++nt) {
                if (floor_mod(nt - s, T) != 0) continue;
                long vn = T * b + c - nt - T;
                for (long mt = T * a + vn - T - cut; mt <= T * a + vn - T; ++mt) {
                  if (floor_mod(mt - r, T) != 0) continue;
                  long um = T * a + c - mt - T;
                  long fin = T * (a + b) + c - mt - nt - 2 * T;
                  if (!in_range(vn) || !in_range(um) || !in_range(fin)) continue;
                  ModeIndex m = ModeIndex::from_ticks(mt, T), n = ModeIndex::from_ticks(nt, T);
                  IdentityCheck chk = check_twisted_commutator(
                      mod, VAElement::basis(u), VAElement::basis(v), m, n, TwistedVector::basis(w));
                  if (!chk.holds)
                    throw ValidationError("twisted commutator formula violated at (u, v, w) = (" +
                                          va.name(u) + ", " + va.name(v) + ", " + mod.name(w) +
                                          "), m = " + m.str() + ", n = " + n.str() + ": " +
                                          chk.detail);
                }
              }
            }
}

}  // namespace vafilt
