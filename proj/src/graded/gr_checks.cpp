#include <functional>

#include "vafilt/filtration/relations.hpp"
#include "vafilt/graded/gr_structures.hpp"
#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
struct Triple {
  std::size_t a, b, c;
};

/// Modes n available to a field of sector p in Y_-: n >= 0 for sector 0.
long mode_lo(int p, int range) { return p == 0 ? 0 : -range; }

std::string vname(const GradedContext& ctx, const GrElement& a) {
  return "[" + format(ctx.engine().algebra(), a.rep) + "]@" + std::to_string(a.degree);
}

std::string wname(const GradedContext& ctx, const GrModElement& m) {
  return "[" + format(ctx.engine().module(), m.rep) + "]@" + std::to_string(m.degree);
}

/// u_{mode} w as a gr(W) element, degree rT + s - mode - T, without the Y_-
/// restriction on sector-0 modes.
GrModElement act(const GradedContext& ctx, const GrElement& a, long mode_ticks,
                 const GrModElement& m) {
  const int T = ctx.period();
  return {a.degree + m.degree - mode_ticks - T,
          module_mode(ctx.engine().module(), a.rep, ModeIndex::from_ticks(mode_ticks, T), m.rep)};
}

}  // namespace

std::vector<CheckOutcome> check_vpa_axioms(const GradedContext& ctx, const GrOptions& o) {
  FiltrationEngine& eng = ctx.engine();
  const VertexAlgebra& va = eng.algebra();
  const ExecConfig& exec = eng.exec();
  const int vcut = eng.v_cutoff();
  const int R = o.mode_range;
  const auto S = ctx.gr_sample(std::min(o.v_weight, vcut));
  std::vector<int> wt;
  for (const auto& a : S) wt.push_back(ctx.weight(a));
  const GrElement one{0, VAElement::basis(va.vacuum())};
  auto nm = [&](std::size_t i) { return vname(ctx, S[i]); };

  Pairs pairs;
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (wt[i] + wt[j] <= vcut) pairs.push_back({i, j});
      for (std::size_t k = 0; k < S.size(); ++k)
        if (wt[i] + wt[j] + wt[k] <= vcut) triples.push_back({i, j, k});
    }

  std::vector<CheckOutcome> out;
  out.push_back(run_cases(S.size(), exec, [&](std::size_t i, Tally& t) {
                  t.expect_none(ctx.gr_difference(ctx.gr_product(one, S[i]), S[i]),
                                [&] { return "1 * " + nm(i); });
                  t.expect_none(ctx.gr_difference(ctx.gr_product(S[i], one), S[i]),
                                [&] { return nm(i) + " * 1"; });
                }).outcome("gr(V) unit"));

  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  t.expect_none(ctx.gr_difference(ctx.gr_product(S[i], S[j]), ctx.gr_product(S[j], S[i])),
                                [&] { return nm(i) + " * " + nm(j) + " is not symmetric"; });
                }).outcome("gr(V) commutativity"));

  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  auto l = ctx.gr_product(ctx.gr_product(S[i], S[j]), S[k]);
                  auto r = ctx.gr_product(S[i], ctx.gr_product(S[j], S[k]));
                  t.expect_none(ctx.gr_difference(l, r),
                                [&] { return "(" + nm(i) + nm(j) + ")" + nm(k) + " vs " + nm(i) + "(" + nm(j) + nm(k) + ")"; });
                }).outcome("gr(V) associativity"));

  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  if (wt[i] + wt[j] + 1 > vcut) return t.skip();
                  auto l = ctx.gr_partial(ctx.gr_product(S[i], S[j]));
                  auto r = ctx.gr_add(ctx.gr_product(ctx.gr_partial(S[i]), S[j]),
                                      ctx.gr_product(S[i], ctx.gr_partial(S[j])));
                  t.expect_none(ctx.gr_difference(l, r),
                                [&] { return "d(" + nm(i) + " * " + nm(j) + ")"; });
                }).outcome("gr(V) d is a derivation"));

  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  if (wt[i] + wt[j] + 1 > vcut) return t.skip();
                  auto da = ctx.gr_partial(S[i]);
                  for (long n = 0; n <= wt[i] + wt[j]; ++n) {
                    auto l = ctx.gr_Yminus(da, n, S[j]);
                    GrElement r{l.degree, {}};
                    if (n > 0) r = ctx.gr_scale(Rational(-n), ctx.gr_Yminus(S[i], n - 1, S[j]));
                    t.expect_none(ctx.gr_difference(l, r), [&] {
                      return "(d" + nm(i) + ")_" + std::to_string(n) + " " + nm(j);
                    });
                  }
                }).outcome("gr(V) translation covariance"));

  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  for (long n = 0; n < wt[i] + wt[j]; ++n) {
                    auto l = ctx.gr_Yminus(S[i], n, S[j]);
                    GrElement r{l.degree, {}};
                    Rational fact(1);
                    for (long k = 0; k <= n; ++k) {
                      if (k > 0) fact *= Rational(k);
                      GrElement term = ctx.gr_Yminus(S[j], n + k, S[i]);
                      for (long d = 0; d < k; ++d) term = ctx.gr_partial(term);
                      r = ctx.gr_add(r, ctx.gr_scale(sign_power(n + k + 1) / fact, term));
                    }
                    t.expect_none(ctx.gr_difference(l, r), [&] {
                      return nm(i) + "_" + std::to_string(n) + " " + nm(j) + " skew symmetry";
                    });
                  }
                }).outcome("gr(V) skew symmetry"));

  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  for (long m = 0; m <= R; ++m)
                    for (long n = 0; n <= R; ++n) {
                      auto l = ctx.gr_add(
                          ctx.gr_Yminus(S[i], m, ctx.gr_Yminus(S[j], n, S[k])),
                          ctx.gr_scale(Rational(-1), ctx.gr_Yminus(S[j], n, ctx.gr_Yminus(S[i], m, S[k]))));
                      GrElement r{l.degree, {}};
                      for (long q = 0; q <= m; ++q)
                        r = ctx.gr_add(r, ctx.gr_scale(integer_binomial(m, q),
                                                       ctx.gr_Yminus(ctx.gr_Yminus(S[i], q, S[j]),
                                                                     m + n - q, S[k])));
                      t.expect_none(ctx.gr_difference(l, r), [&] {
                        return "[" + nm(i) + "_" + std::to_string(m) + ", " + nm(j) + "_" +
                               std::to_string(n) + "] " + nm(k);
                      });
                    }
                }).outcome("gr(V) commutator formula"));

  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  for (long n = 0; n <= R; ++n) {
                    auto l = ctx.gr_Yminus(S[i], n, ctx.gr_product(S[j], S[k]));
                    auto r = ctx.gr_add(ctx.gr_product(ctx.gr_Yminus(S[i], n, S[j]), S[k]),
                                        ctx.gr_product(S[j], ctx.gr_Yminus(S[i], n, S[k])));
                    t.expect_none(ctx.gr_difference(l, r), [&] {
                      return nm(i) + "_" + std::to_string(n) + " on " + nm(j) + " * " + nm(k);
                    });
                  }
                }).outcome("gr(V) Y_- acts by derivations"));

  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  const auto& deeper = ctx.E_V(S[i].degree + ctx.period());
                  for (const auto& e : deeper.basis(wt[i])) {
                    GrElement shifted{S[i].degree, S[i].rep + e};
                    t.expect_none(ctx.gr_difference(ctx.gr_product(shifted, S[j]), ctx.gr_product(S[i], S[j])),
                                  [&] { return "product changes when shifting " + nm(i); });
                    for (long n = 0; n <= R; ++n)
                      t.expect_none(ctx.gr_difference(ctx.gr_Yminus(shifted, n, S[j]),
                                                      ctx.gr_Yminus(S[i], n, S[j])),
                                    [&] { return "Y_- changes when shifting " + nm(i); });
                  }
                }).outcome("gr(V) operations well defined"));
  return out;
}

std::vector<CheckOutcome> check_twisted_vpa_module_axioms(const GradedContext& ctx,
                                                          const GrOptions& o) {
  FiltrationEngine& eng = ctx.engine();
  const VertexAlgebra& va = eng.algebra();
  const ExecConfig& exec = eng.exec();
  const int T = ctx.period();
  const long wcut = eng.w_cutoff_ticks();
  const int R = o.mode_range;
  const auto S = ctx.gr_sample(std::min<int>(static_cast<int>(o.w_ticks / T), eng.v_cutoff()));
  const auto M = ctx.grW_sample(std::min(o.w_ticks, wcut));
  std::vector<long> wa, wm;
  std::vector<int> sec;
  for (const auto& a : S) {
    wa.push_back(static_cast<long>(T) * ctx.weight(a));
    sec.push_back(ctx.sector(a));
  }
  for (const auto& m : M) wm.push_back(ctx.weight_ticks(m));
  auto an = [&](std::size_t i) { return vname(ctx, S[i]); };
  auto mn = [&](std::size_t i) { return wname(ctx, M[i]); };
  // Weight in ticks of u_{mode} applied to something of weight w.
  auto after = [&](long u_ticks, long mode_ticks, long w) { return u_ticks + w - mode_ticks - T; };
  const GrElement one{0, VAElement::basis(va.vacuum())};

  Pairs am;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (wa[i] + wm[j] <= wcut) am.push_back({i, j});
  std::vector<Triple> abm;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      for (std::size_t k = 0; k < M.size(); ++k)
        if (wa[i] + wa[j] + wm[k] <= wcut) abm.push_back({i, j, k});

  std::vector<CheckOutcome> out;

  out.push_back(run_cases(S.size(), exec, [&](std::size_t i, Tally& t) {
                  if (sec[i] != 0 || M.empty()) return;
                  bool rejected = false;
                  try {
                    ctx.grW_Yminus(S[i], -1, M.front());
                  } catch (const ConfigError&) {
                    rejected = true;
                  }
                  t.record(rejected, "sector-0 class " + an(i) + " accepted a negative mode");
                }).outcome("gr(W) mode support"));

  out.push_back(run_cases(am.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = am[c];
                  const int p = sec[i];
                  // Least n whose output weight is negative.
                  long n0 = floor_div(wa[i] + wm[j] - p - T, T) + 1;
                  if (p == 0) n0 = std::max(n0, 0L);
                  for (long n = n0; n <= n0 + 1; ++n)
                    t.record(ctx.grW_Yminus(S[i], n, M[j]).rep.is_zero(),
                             an(i) + " mode " + std::to_string(n) + " does not vanish on " + mn(j));
                }).outcome("gr(W) truncation"));

  out.push_back(run_cases(am.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = am[c];
                  const int p = sec[i];
                  auto da = ctx.gr_partial(S[i]);
                  for (long n = mode_lo(p, R); n <= R; ++n) {
                    if (after(wa[i] + T, n * T + p, wm[j]) > wcut) {
                      t.skip();
                      continue;
                    }
                    auto l = ctx.grW_Yminus(da, n, M[j]);
                    GrModElement r{l.degree, {}};
                    if (!(p == 0 && n == 0))
                      r = ctx.grW_scale(Rational(-n * T - p, T), act(ctx, S[i], (n - 1) * T + p, M[j]));
                    t.expect_none(ctx.grW_difference(l, r), [&] {
                      return "(d" + an(i) + ") mode " + std::to_string(n) + " on " + mn(j);
                    });
                  }
                }).outcome("gr(W) translation compatibility"));

  out.push_back(run_cases(abm.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = abm[c];
                  const int p = sec[i], q = sec[j];
                  for (long m = mode_lo(p, R); m <= R; ++m)
                    for (long n = mode_lo(q, R); n <= R; ++n) {
                      long mu = m * T + p, nu = n * T + q;
                      long w1 = after(wa[j], nu, wm[k]), w2 = after(wa[i], mu, wm[k]);
                      long w3 = after(wa[i], mu, w1);
                      if (std::max({w1, w2, w3}) > wcut) {
                        t.skip();
                        continue;
                      }
                      auto l = ctx.grW_add(
                          ctx.grW_Yminus(S[i], m, ctx.grW_Yminus(S[j], n, M[k])),
                          ctx.grW_scale(Rational(-1), ctx.grW_Yminus(S[j], n, ctx.grW_Yminus(S[i], m, M[k]))));
                      GrModElement r{l.degree, {}};
                      for (long q2 = 0; T * q2 < wa[i] + wa[j]; ++q2) {
                        auto ab = ctx.gr_Yminus(S[i], q2, S[j]);
                        r = ctx.grW_add(r, ctx.grW_scale(rational_binomial(Rational(mu, T), q2),
                                                         act(ctx, ab, mu + nu - q2 * T, M[k])));
                      }
                      t.expect_none(ctx.grW_difference(l, r), [&] {
                        return "[" + an(i) + " mode " + ticks_str(mu, T) + ", " + an(j) + " mode " +
                               ticks_str(nu, T) + "] " + mn(k);
                      });
                    }
                }).outcome("gr(W) commutator formula"));

  out.push_back(run_cases(abm.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = abm[c];
                  const int p = sec[i], q = sec[j];
                  long bm = wa[j] + wm[k] - q;
                  for (long n = mode_lo(p, R); n <= R; ++n) {
                    long mu = n * T + p;
                    if (after(wa[i], mu, bm) > wcut || after(wa[i], mu, wm[k]) > wcut) {
                      t.skip();
                      continue;
                    }
                    auto l = ctx.grW_Yminus(S[i], n, ctx.grW_product_action(S[j], M[k]));
                    auto r = ctx.grW_product_action(S[j], ctx.grW_Yminus(S[i], n, M[k]));
                    if (n >= 0)
                      r = ctx.grW_add(r, ctx.grW_product_action(ctx.gr_Yminus(S[i], n, S[j]), M[k]));
                    t.expect_none(ctx.grW_difference(l, r), [&] {
                      return an(i) + " mode " + ticks_str(mu, T) + " on " + an(j) + " * " + mn(k);
                    });
                  }
                }).outcome("gr(W) compatibility with the product"));

  out.push_back(run_cases(M.size(), exec, [&](std::size_t j, Tally& t) {
                  t.expect_none(ctx.grW_difference(ctx.grW_product_action(one, M[j]), M[j]),
                                [&] { return "1 * " + mn(j); });
                }).outcome("gr(W) unit action"));

  out.push_back(run_cases(abm.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = abm[c];
                  auto l = ctx.grW_product_action(ctx.gr_product(S[i], S[j]), M[k]);
                  auto r = ctx.grW_product_action(S[i], ctx.grW_product_action(S[j], M[k]));
                  t.expect_none(ctx.grW_difference(l, r), [&] {
                    return "(" + an(i) + an(j) + ")" + mn(k) + " vs " + an(i) + "(" + an(j) + mn(k) + ")";
                  });
                }).outcome("gr(W) product action associativity"));

  out.push_back(run_cases(am.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = am[c];
                  auto base = ctx.grW_product_action(S[i], M[j]);
                  for (const auto& e : ctx.E_V(S[i].degree + T).basis(wa[i] / T))
                    for (const auto& part : sector_decompose(va, e)) {
                      if (*homogeneous_sector(va, part) != sec[i]) continue;
                      GrElement shifted{S[i].degree, S[i].rep + part};
                      t.expect_none(ctx.grW_difference(ctx.grW_product_action(shifted, M[j]), base),
                                    [&] { return "action changes when shifting " + an(i); });
                    }
                  for (const auto& f : ctx.E_W(M[j].degree + 1).basis(wm[j])) {
                    GrModElement shifted{M[j].degree, M[j].rep + f};
                    t.expect_none(ctx.grW_difference(ctx.grW_product_action(S[i], shifted), base),
                                  [&] { return "action changes when shifting " + mn(j); });
                  }
                }).outcome("gr(W) product action well defined"));

  out.push_back(run_cases(am.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = am[c];
                  if (sec[i] == 0) return;
                  auto y = ctx.grW_Yminus(S[i], -1, M[j]);
                  auto x = ctx.grW_product_action(S[i], M[j]);
                  t.record(y.degree == x.degree && y.rep == x.rep,
                           an(i) + " mode -1 differs from the product on " + mn(j));
                }).outcome("gr(W) product is the mode -1 coefficient"));
  return out;
}

std::vector<CheckOutcome> check_zhu_poisson(const GradedContext& ctx, int max_weight) {
  FiltrationEngine& eng = ctx.engine();
  const VertexAlgebra& va = eng.algebra();
  const ExecConfig& exec = eng.exec();
  const int vcut = eng.v_cutoff();
  const auto& c2 = ctx.C2_V();
  std::vector<VAElement> L;
  std::vector<int> wt;
  for (long w = 0; w <= std::min(max_weight, vcut); ++w)
    for (Label l : va.basis(w)) {
      L.push_back(VAElement::basis(l));
      wt.push_back(static_cast<int>(w));
    }
  auto nm = [&](std::size_t i) { return format(va, L[i]); };
  auto diff = [&](const VAElement& x, const VAElement& y) -> std::optional<Witness> {
    VAElement d = c2.reduce(x - y);
    if (d.is_zero()) return std::nullopt;
    auto parts = c2.split(d);
    auto k = parts.begin()->first;
    return Witness{k, c2.ambient().weight_str(k), c2.describe(parts.begin()->second)};
  };
  auto prod = [&](const VAElement& a, const VAElement& b) { return ctx.zhu_poisson(a, b, ZhuOp::Product); };
  auto br = [&](const VAElement& a, const VAElement& b) { return ctx.zhu_poisson(a, b, ZhuOp::Bracket); };
  const VAElement one = VAElement::basis(va.vacuum());

  Pairs pairs;
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (wt[i] + wt[j] <= vcut) pairs.push_back({i, j});
      for (std::size_t k = 0; k < L.size(); ++k)
        if (wt[i] + wt[j] + wt[k] <= vcut) triples.push_back({i, j, k});
    }

  std::vector<CheckOutcome> out;
  out.push_back(run_cases(L.size(), exec, [&](std::size_t i, Tally& t) {
                  t.expect_none(diff(prod(one, L[i]), L[i]), [&] { return "1 * " + nm(i); });
                }).outcome("V/C_2(V) unit"));
  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  t.expect_none(diff(prod(L[i], L[j]), prod(L[j], L[i])),
                                [&] { return nm(i) + " * " + nm(j) + " is not symmetric"; });
                  t.expect_none(diff(br(L[i], L[j]), Rational(-1) * br(L[j], L[i])),
                                [&] { return "[" + nm(i) + ", " + nm(j) + "] is not antisymmetric"; });
                }).outcome("V/C_2(V) commutativity and antisymmetry"));
  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  t.expect_none(diff(prod(prod(L[i], L[j]), L[k]), prod(L[i], prod(L[j], L[k]))),
                                [&] { return "associativity on " + nm(i) + ", " + nm(j) + ", " + nm(k); });
                }).outcome("V/C_2(V) associativity"));
  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  VAElement l = br(L[i], br(L[j], L[k]));
                  VAElement r = br(br(L[i], L[j]), L[k]) + br(L[j], br(L[i], L[k]));
                  t.expect_none(diff(l, r), [&] { return "Jacobi on " + nm(i) + ", " + nm(j) + ", " + nm(k); });
                }).outcome("V/C_2(V) Jacobi identity"));
  out.push_back(run_cases(triples.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j, k] = triples[c];
                  VAElement l = br(L[i], prod(L[j], L[k]));
                  VAElement r = prod(br(L[i], L[j]), L[k]) + prod(L[j], br(L[i], L[k]));
                  t.expect_none(diff(l, r), [&] { return "Leibniz on " + nm(i) + ", " + nm(j) + ", " + nm(k); });
                }).outcome("V/C_2(V) Leibniz rule"));
  out.push_back(run_cases(pairs.size(), exec, [&](std::size_t c, Tally& t) {
                  auto [i, j] = pairs[c];
                  for (const auto& e : c2.basis(wt[i])) {
                    VAElement s = L[i] + e;
                    t.expect_none(diff(prod(s, L[j]), prod(L[i], L[j])),
                                  [&] { return "product changes when shifting " + nm(i); });
                    t.expect_none(diff(br(s, L[j]), br(L[i], L[j])),
                                  [&] { return "bracket changes when shifting " + nm(i); });
                  }
                }).outcome("V/C_2(V) operations well defined"));
  return out;
}

namespace {

/// Adds vectors to a copy of base slice by slice and reports, per slice of
/// target, whether base + span(vectors) contains it.
template <class Tag>
std::pair<CheckOutcome, FamilyTable> spans(const std::string& name, long n,
                                           const GradedSubspace<Tag>& base,
                                           const GradedSubspace<Tag>& target,
                                           const std::vector<LinComb<Tag>>& vectors,
                                           std::optional<Ambient::Key> max_key) {
  GradedSubspace<Tag> acc = base;
  for (const auto& v : vectors) acc.insert(v);
  FamilyTable table{name, n, {}};
  for (Ambient::Key k : target.ambient().keys()) {
    if (max_key && k > *max_key) break;
    int want = target.dim(k) - base.dim(k);
    if (want == 0) continue;
    GradedSubspace<Tag> both = acc;
    for (const auto& r : target.basis(k)) both.insert(r);
    int got = want - (both.dim(k) - acc.dim(k));
    table.slices.push_back({target.ambient().weight_str(k), want,
                            got == want ? "spanned" : "short by " + std::to_string(want - got)});
  }
  auto w = acc.missing_from(target, max_key);
  CheckOutcome c = make_check(name + "(" + std::to_string(n) + ") spanned", !w,
                              w ? "missing a vector of weight " + w->weight : "", w);
  return {c, table};
}

}  // namespace

SpanningResult check_generation(const GradedContext& ctx, long max_degree, long v_degree_max) {
  FiltrationEngine& eng = ctx.engine();
  const VertexAlgebra& va = eng.algebra();
  const ExecConfig& exec = eng.exec();
  const int T = ctx.period();
  const int vcut = eng.v_cutoff();
  SpanningResult res;

  // gr(V): products of d^{k_1} v_1 ... d^{k_s} v_s with k_1 > ... > k_s >= 0.
  std::vector<VAElement> nonvac;
  for (long w = 1; w <= vcut; ++w)
    for (Label l : va.basis(w)) nonvac.push_back(VAElement::basis(l));
  // derivs[k][i] = D^k of nonvac[i]
  std::vector<std::vector<VAElement>> derivs(1, nonvac);
  for (long k = 1; k <= v_degree_max; ++k) {
    derivs.push_back({});
    for (const auto& v : derivs[static_cast<std::size_t>(k - 1)])
      derivs.back().push_back(!v.is_zero() && *homogeneous_weight(va, v) < vcut ? translate(va, v)
                                                                                : VAElement{});
  }
  auto vw = [&](std::size_t i) { return *homogeneous_weight(va, nonvac[i]); };
  for (long j = 0; j <= v_degree_max; ++j) {
    // (k, index) factor lists with distinct decreasing k summing to j and weight <= vcut.
    std::vector<std::vector<std::pair<long, std::size_t>>> combos;
    std::vector<std::pair<long, std::size_t>> cur;
    std::function<void(long, long, long)> rec = [&](long kmax, long left, long wleft) {
      if (left == 0 && !cur.empty()) combos.push_back(cur);
      for (long k = std::min(kmax, left); k >= 0; --k) {
        if (k == 0 && left != 0) break;
        for (std::size_t i = 0; i < nonvac.size(); ++i) {
          long w = vw(i) + k;
          if (w > wleft) continue;
          cur.push_back({k, i});
          rec(k - 1, left - k, wleft - w);
          cur.pop_back();
        }
      }
    };
    rec(j, j, vcut);
    std::vector<VAElement> vecs(combos.size());
    for_each_index(combos.size(), exec, [&](std::size_t c) {
      const auto& f = combos[c];
      VAElement x = derivs[static_cast<std::size_t>(f.back().first)][f.back().second];
      for (std::size_t i = f.size() - 1; i-- > 0;)
        x = product_mode(va, derivs[static_cast<std::size_t>(f[i].first)][f[i].second], -1, x);
      vecs[c] = std::move(x);
    });
    if (j == 0) vecs.push_back(VAElement::basis(va.vacuum()));
    auto [check, table] = spans("gr_V", j * T, ctx.E_V((j + 1) * T), ctx.E_V(j * T), vecs, std::nullopt);
    Tally inside;
    for (const auto& v : vecs)
      inside.expect_member(v, ctx.E_V(j * T), "generator outside E_V(" + std::to_string(j * T) + ")");
    res.checks.push_back(check);
    res.checks.push_back(inside.outcome("gr_V(" + std::to_string(j * T) + ") generators in degree"));
    res.tables.push_back(table);
  }

  if (!ctx.has_module()) return res;
  const TwistedModule& mod = eng.module();
  const long wcut = eng.w_cutoff_ticks();
  // gr(W): d^{k_1}u_1 ... d^{k_s}u_s . w, k_1 >= ... >= k_s >= 0, total degree n.
  struct Item {
    long k;
    std::size_t u;
    long degree;  // kT - r
    long inc;     // weight increase in ticks
  };
  // Degree-0 classes of gr(V) acting on W: any u with T wt(u) - r within the budget.
  std::vector<VAElement> acting;
  const long u_top = std::min<long>(va.cutoff(), (wcut + T - 1) / T);
  for (long w = 1; w <= u_top; ++w)
    for (Label l : va.basis(w)) acting.push_back(VAElement::basis(l));
  std::vector<Item> items;
  std::vector<std::vector<VAElement>> dacting(1, acting);
  for (long k = 0;; ++k) {
    bool any = false;
    for (std::size_t i = 0; i < acting.size(); ++i) {
      const int r = *homogeneous_sector(va, acting[i]);
      const long wt = *homogeneous_weight(va, acting[i]) + k;
      const long inc = T * wt - r;
      if (inc > wcut || wt > va.cutoff()) continue;
      items.push_back({k, i, k * T - r, inc});
      any = true;
    }
    if (!any) break;
    std::vector<VAElement> next;
    for (const auto& v : dacting.back())
      next.push_back(!v.is_zero() && *homogeneous_weight(va, v) < va.cutoff() ? translate(va, v) : VAElement{});
    dacting.push_back(std::move(next));
  }
  std::vector<Label> wbasis;
  for (long key : eng.w_ambient()->keys())
    for (Label w : eng.w_ambient()->slice(key)) wbasis.push_back(w);

  for (long n = 0; n <= max_degree; ++n) {
    std::vector<std::pair<std::vector<std::size_t>, Label>> combos;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t from, long deg, long wt) {
      if (deg == n && !cur.empty())
        for (Label w : wbasis)
          if (wt + mod.weight_ticks(w) <= wcut) combos.push_back({cur, w});
      if (static_cast<long>(cur.size()) >= n) return;
      for (std::size_t i = from; i < items.size(); ++i) {
        if (wt + items[i].inc > wcut) continue;
        cur.push_back(i);
        rec(i, deg + items[i].degree, wt + items[i].inc);
        cur.pop_back();
      }
    };
    // Items are sorted by k and applied in pick order, so the leftmost factor has the largest k.
    rec(0, 0, 0);
    std::vector<TwistedVector> vecs(combos.size());
    for_each_index(combos.size(), exec, [&](std::size_t c) {
      const auto& [f, w] = combos[c];
      TwistedVector x = TwistedVector::basis(w);
      for (std::size_t idx : f) {
        const Item& it = items[idx];
        const VAElement& u = dacting[static_cast<std::size_t>(it.k)][it.u];
        x = module_mode(mod, u, ModeIndex::from_ticks(-T + *homogeneous_sector(va, acting[it.u]), T), x);
      }
      vecs[c] = std::move(x);
    });
    if (n == 0)
      for (Label w : wbasis) vecs.push_back(TwistedVector::basis(w));
    auto [check, table] = spans("gr_W", n, ctx.E_W(n + 1), ctx.E_W(n), vecs, std::nullopt);
    Tally inside;
    for (const auto& v : vecs)
      inside.expect_member(v, ctx.E_W(n), "generator outside E_W(" + std::to_string(n) + ")");
    res.checks.push_back(check);
    res.checks.push_back(inside.outcome("gr_W(" + std::to_string(n) + ") generators in degree"));
    res.tables.push_back(table);
  }
  return res;
}

SpanningResult check_generating_spanning(const GradedContext& ctx, long max_ticks,
                                         std::optional<std::size_t> drop_m) {
  FiltrationEngine& eng = ctx.engine();
  const VertexAlgebra& va = eng.algebra();
  const TwistedModule& mod = eng.module();
  const int T = ctx.period();
  const long wcut = std::min(max_ticks, eng.w_cutoff_ticks());
  SpanningResult res;

  const auto& c2v = ctx.C2_V();
  const auto& c2w = eng.C_W(2);
  std::vector<Label> U, M;
  for (long k : c2v.ambient().keys())
    for (Label l : pivot_complement(c2v, k)) U.push_back(l);
  for (long k : c2w.ambient().keys()) {
    if (k > wcut) break;
    for (Label l : pivot_complement(c2w, k)) M.push_back(l);
  }
  if (drop_m && *drop_m < M.size()) M.erase(M.begin() + static_cast<long>(*drop_m));

  {
    AlgebraSubspace sum = c2v;
    for (Label l : U) sum.insert(VAElement::basis(l));
    auto w = sum.missing_from(AlgebraSubspace::full(c2v.ambient_ptr()));
    res.checks.push_back(make_check("V = U + C_2(V)", !w, w ? "missing weight " + w->weight : "", w));
    ModuleSubspace wsum = c2w;
    for (Label l : M) wsum.insert(TwistedVector::basis(l));
    auto x = wsum.missing_from(ModuleSubspace::full(c2w.ambient_ptr()), wcut);
    res.checks.push_back(make_check("W = M + C_2(W)", !x, x ? "missing weight " + x->weight : "", x));
  }

  // Factors u_{-1-k+r/T} with u in U (vacuum skipped: its modes are 0 or the identity).
  struct Factor {
    Label u;
    long k;
    long inc;
  };
  std::vector<Factor> factors;
  for (Label u : U) {
    if (u == va.vacuum()) continue;
    for (long k = 0;; ++k) {
      long inc = T * (va.weight(u) + k) - va.sector(u);
      if (inc > wcut) break;
      factors.push_back({u, k, inc});
    }
  }
  // Sequences read left to right with nonincreasing k; built right to left.
  std::vector<std::pair<std::vector<std::size_t>, Label>> combos;
  std::vector<std::size_t> cur;  // rightmost factor first
  std::function<void(long, long)> rec = [&](long kmin, long wt) {
    for (Label w : M)
      if (wt + mod.weight_ticks(w) <= wcut) combos.push_back({cur, w});
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].k < kmin || wt + factors[i].inc > wcut) continue;
      cur.push_back(i);
      rec(factors[i].k, wt + factors[i].inc);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::vector<TwistedVector> vecs(combos.size());
  for_each_index(combos.size(), eng.exec(), [&](std::size_t c) {
    const auto& [f, w] = combos[c];
    TwistedVector x = TwistedVector::basis(w);
    for (std::size_t idx : f) {
      const Factor& fa = factors[idx];
      x = module_mode(mod, VAElement::basis(fa.u),
                      ModeIndex::from_ticks((-1 - fa.k) * T + va.sector(fa.u), T), x);
    }
    vecs[c] = std::move(x);
  });
  auto zero = ModuleSubspace(eng.w_ambient());
  auto [check, table] = spans("W", 0, zero, ModuleSubspace::full(eng.w_ambient()), vecs, wcut);
  check.name = "W spanned by ordered products over U and M";
  check.detail = std::to_string(vecs.size()) + " vectors" + (check.detail.empty() ? "" : "; " + check.detail);
  res.checks.push_back(check);
  res.tables.push_back(table);
  return res;
}

}  // namespace vafilt
