#include "vafilt/module/mode_calculus.hpp"

#include "vafilt/core/errors.hpp"

namespace vafilt {

long max_weight_ticks(const TwistedModule& mod, const TwistedVector& v) {
  long t = -1;
  for (const auto& [l, c] : v.terms()) t = std::max(t, mod.weight_ticks(l));
  return t;
}

std::optional<long> homogeneous_weight_ticks(const TwistedModule& mod, const TwistedVector& v) {
  std::optional<long> t;
  for (const auto& [l, c] : v.terms()) {
    if (t && *t != mod.weight_ticks(l)) return std::nullopt;
    t = mod.weight_ticks(l);
  }
  return t;
}

std::string format(const TwistedModule& mod, const TwistedVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [l, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + mod.name(l);
  }
  return s;
}

const std::vector<Label>& TwistedModule::basis(long ticks) const {
  if (ticks > cutoff_ticks_)
    throw CutoffExceeded("module weight " + ticks_str(ticks, period()) + " exceeds cutoff " +
                         ticks_str(cutoff_ticks_, period()));
  return labels_.at(ticks);
}

TwistedVector module_mode(const TwistedModule& mod, const VAElement& u, const ModeIndex& m,
                          const TwistedVector& w, CosetPolicy policy) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  if (m.period() != T) throw SectorMismatch("mode period differs from module period");
  TwistedVector out;
  for (const auto& [lu, cu] : u.terms()) {
    if (va.sector(lu) != m.sector()) {
      if (policy == CosetPolicy::Lenient) continue;
      throw SectorMismatch("mode " + m.str() + " is not in the coset of " + va.name(lu) +
                           " (sector " + std::to_string(va.sector(lu)) + ")");
    }
    for (const auto& [lw, cw] : w.terms()) {
      long t = T * static_cast<long>(va.weight(lu)) + mod.weight_ticks(lw) - m.ticks() - T;
      if (t < 0) continue;
      if (t > mod.cutoff_ticks())
        throw CutoffExceeded(va.name(lu) + "_(" + m.str() + ") " + mod.name(lw) +
                             " has weight " + ticks_str(t, T) + " above module cutoff " +
                             ticks_str(mod.cutoff_ticks(), T));
      out.add_scaled(mod.mode_basis(lu, m, lw), cu * cw);
    }
  }
  return out;
}

namespace {

int single_sector(const VertexAlgebra& va, const VAElement& u, const char* what) {
  auto s = homogeneous_sector(va, u);
  if (!s) throw SectorMismatch(std::string(what) + " must lie in a single sector");
  return *s;
}

}  // namespace

long annihilation_depth(const TwistedModule& mod, const VAElement& u, const TwistedVector& w) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  if (u.is_zero() || w.is_zero()) return 0;
  int r = single_sector(va, u, "u");
  long q_top = floor_div(T * static_cast<long>(max_weight(va, u)) + max_weight_ticks(mod, w) - r - T, T);
  for (long q = q_top; q >= 0; --q)
    if (!module_mode(mod, u, ModeIndex(q, r, T), w).is_zero()) return q + 1;
  return 0;
}

long iterate_depth(const VertexAlgebra& va, const VAElement& u, long m, const VAElement& v) {
  if (u.is_zero() || v.is_zero()) return 0;
  long top = static_cast<long>(max_weight(va, u)) + max_weight(va, v) - 1;
  for (long p = top; p >= m; --p)
    if (!product_mode(va, u, p, v).is_zero()) return p - m + 1;
  return 0;
}

TwistedVector iterate_mode(const TwistedModule& mod, const VAElement& u, long m, const VAElement& v,
                           const ModeIndex& n, const TwistedVector& w, IterateOptions opts) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  if (u.is_zero() || v.is_zero() || w.is_zero()) return {};
  const long r = single_sector(va, u, "u");
  const long l = opts.l ? *opts.l : annihilation_depth(mod, u, w);
  const long K = opts.k ? *opts.k : iterate_depth(va, u, m, v);
  const long wt_v = max_weight(va, v);
  const long tw = max_weight_ticks(mod, w);
  const Rational top = -Rational(l * T + r, T);

  TwistedVector out;
  for (long i = 0; i < K; ++i) {
    Rational ci = rational_binomial(top, i);
    if (ci.is_zero()) continue;
    long j_max = floor_div(T * wt_v + tw - T - n.ticks() + (l + i) * T + r, T);
    for (long j = 0; j <= j_max; ++j) {
      Rational c = ci * integer_binomial(m + i, j) * sign_power(j);
      if (c.is_zero()) continue;
      ModeIndex nu = ModeIndex::from_ticks(n.ticks() - (l + i - j) * T - r, T);
      TwistedVector inner = module_mode(mod, v, nu, w, CosetPolicy::Lenient);
      if (inner.is_zero()) continue;
      ModeIndex mu = ModeIndex::from_ticks((m + l + i - j) * T + r, T);
      out.add_scaled(module_mode(mod, u, mu, inner), c);
    }
  }
  return out;
}

IdentityCheck compare_vectors(const TwistedModule& mod, std::string identity,
                              const TwistedVector& lhs, const TwistedVector& rhs) {
  IdentityCheck out;
  out.identity = std::move(identity);
  TwistedVector diff = lhs - rhs;
  if (diff.is_zero()) return out;
  out.holds = false;
  const auto& [l, c] = diff.terms().front();
  out.detail = "coefficient of " + mod.name(l) + ": lhs " + lhs.coeff(l).str() + ", rhs " +
               rhs.coeff(l).str();
  return out;
}

IdentityCheck check_twisted_commutator(const TwistedModule& mod, const VAElement& u,
                                       const VAElement& v, const ModeIndex& m, const ModeIndex& n,
                                       const TwistedVector& w) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  TwistedVector lhs = module_mode(mod, u, m, module_mode(mod, v, n, w)) -
                      module_mode(mod, v, n, module_mode(mod, u, m, w));
  TwistedVector rhs;
  long i_max = static_cast<long>(max_weight(va, u)) + max_weight(va, v) - 1;
  for (long i = 0; i <= i_max; ++i) {
    Rational c = rational_binomial(m.value(), i);
    if (c.is_zero()) continue;
    VAElement uv = product_mode(va, u, i, v);
    if (uv.is_zero()) continue;
    rhs.add_scaled(module_mode(mod, uv, ModeIndex::from_ticks(m.ticks() + n.ticks() - i * T, T), w), c);
  }
  return compare_vectors(mod, "twisted commutator", lhs, rhs);
}

IdentityCheck check_translation_compat(const TwistedModule& mod, const VAElement& u, long n,
                                       const TwistedVector& w) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  int r = single_sector(va, u, "u");
  TwistedVector lhs = module_mode(mod, translate(va, u), ModeIndex(-n, r, T), w);
  TwistedVector rhs = module_mode(mod, u, ModeIndex(-n - 1, r, T), w);
  rhs *= Rational(n) - Rational(r, T);
  return compare_vectors(mod, "translation compatibility", lhs, rhs);
}

IdentityCheck check_iterate_consistency(const TwistedModule& mod, const VAElement& u, long m,
                                        const VAElement& v, const ModeIndex& n,
                                        const TwistedVector& w) {
  const VertexAlgebra& va = mod.algebra();
  const int T = mod.period();
  const long r = single_sector(va, u, "u");
  TwistedVector lhs = module_mode(mod, product_mode(va, u, m, v), n, w, CosetPolicy::Lenient);

  const long N = vanishing_order(va, u, v);
  const long wt_u = max_weight(va, u);
  const long wt_v = max_weight(va, v);
  const long tw = max_weight_ticks(mod, w);
  const Rational rT = Rational(r, T);
  TwistedVector rhs;
  for (long j = m; j < N; ++j) {
    Rational cj = rational_binomial(-rT, j - m);
    if (cj.is_zero()) continue;
    // u_{j-i+r/T} v_{m+n+i-j-r/T} w
    long i1 = j + floor_div(T * wt_v + tw - T - m * T - n.ticks() + r, T);
    if (j >= 0) i1 = std::min(i1, j);
    for (long i = 0; i <= i1; ++i) {
      Rational c = sign_power(i) * cj * integer_binomial(j, i);
      if (c.is_zero()) continue;
      ModeIndex vm = ModeIndex::from_ticks(m * T + n.ticks() + (i - j) * T - r, T);
      TwistedVector inner = module_mode(mod, v, vm, w, CosetPolicy::Lenient);
      if (inner.is_zero()) continue;
      rhs.add_scaled(module_mode(mod, u, ModeIndex::from_ticks((j - i) * T + r, T), inner), c);
    }
    // v_{m+n-i-r/T} u_{i+r/T} w
    long i2 = floor_div(T * wt_u + tw - r - T, T);
    if (j >= 0) i2 = std::min(i2, j);
    for (long i = 0; i <= i2; ++i) {
      Rational c = -sign_power(i + j) * cj * integer_binomial(j, i);
      if (c.is_zero()) continue;
      TwistedVector inner = module_mode(mod, u, ModeIndex::from_ticks(i * T + r, T), w);
      if (inner.is_zero()) continue;
      ModeIndex vm = ModeIndex::from_ticks(m * T + n.ticks() - i * T - r, T);
      rhs.add_scaled(module_mode(mod, v, vm, inner, CosetPolicy::Lenient), c);
    }
  }
  return compare_vectors(mod, "twisted iterate (commutativity form)", lhs, rhs);
}

IdentityCheck check_associativity_expansion(const TwistedModule& mod, const VAElement& u, long m,
                                            const VAElement& v, const ModeIndex& n,
                                            const TwistedVector& w, IterateOptions opts) {
  const VertexAlgebra& va = mod.algebra();
  TwistedVector lhs = module_mode(mod, product_mode(va, u, m, v), n, w, CosetPolicy::Lenient);
  TwistedVector rhs = iterate_mode(mod, u, m, v, n, w, opts);
  return compare_vectors(mod, "twisted iterate (associativity form)", lhs, rhs);
}

}  // namespace vafilt
