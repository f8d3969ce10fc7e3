#include "vafilt/filtration/relations.hpp"

#include <algorithm>
#include <functional>

#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

void Tally::merge(const Tally& o) {
  checked_ += o.checked_;
  skipped_ += o.skipped_;
  if (!failure_ && o.failure_) {
    failure_ = o.failure_;
    witness_ = o.witness_;
  }
}

CheckOutcome Tally::outcome(std::string name) const {
  CheckOutcome c;
  c.name = std::move(name);
  if (failure_) {
    c.status = CheckStatus::Fail;
    c.detail = *failure_;
    c.witness = witness_;
  } else if (checked_ == 0) {
    c.status = CheckStatus::Unchecked;
    c.detail = "no instance fits under the cutoff";
  } else {
    c.status = CheckStatus::Pass;
    c.detail = std::to_string(checked_) + " cases";
    if (skipped_ > 0) c.detail += ", " + std::to_string(skipped_) + " above cutoff";
  }
  return c;
}

long containment_bound(long n, int T) {
  long b = (n - 2) * T * (T + 1);
  b = n >= 3 ? b << (n - 3) : 0;
  return std::max(1L, b);
}

long containment_variant_bound(long n, int T) {
  long b = (n - 2) * T * (T + 1) * T;
  b = n >= 2 ? b << (n - 2) : 0;
  return std::max(1L, b);
}

namespace {

std::string wmode(long ticks, int T) { return "_(" + ticks_str(ticks, T) + ")"; }

template <class Tag>
CheckOutcome inclusion(const std::string& name, const GradedSubspace<Tag>& big,
                       const GradedSubspace<Tag>& small) {
  auto w = big.missing_from(small);
  if (!w) return make_check(name, true);
  return make_check(name, false, "vector of weight " + w->weight + " not contained", w);
}

template <class Tag>
CheckOutcome equality(const std::string& name, const GradedSubspace<Tag>& a,
                      const GradedSubspace<Tag>& b) {
  if (auto w = a.missing_from(b)) return make_check(name, false, "right side has extra vector", w);
  if (auto w = b.missing_from(a)) return make_check(name, false, "left side has extra vector", w);
  return make_check(name, true);
}

/// Lowest nonzero weight of s must be at least bound_key (in the ambient's key units).
template <class Tag>
CheckOutcome weight_floor(const std::string& name, const GradedSubspace<Tag>& s, long bound_key) {
  auto k = s.min_nonzero_key();
  if (!k || *k >= bound_key)
    return make_check(name, true,
                      k ? "lowest weight " + s.ambient().weight_str(*k) : "zero at this cutoff");
  auto basis = s.basis(*k);
  return make_check(name, false, "nonzero at weight " + s.ambient().weight_str(*k),
                    Witness{*k, s.ambient().weight_str(*k), s.describe(basis.front())});
}

/// Homogeneous basis rows of s, one sector at a time, as (key, sector, vector).
struct VRow {
  long key;
  int sector;
  VAElement v;
  std::string name;
};

std::vector<VRow> v_rows(const VertexAlgebra& va, const AlgebraSubspace& s, long max_key,
                         const std::string& tag) {
  std::vector<VRow> out;
  for (long k : s.ambient().keys()) {
    if (k > max_key) break;
    auto rows = s.basis(k);
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (const auto& part : sector_decompose(va, rows[j]))
        out.push_back({k, *homogeneous_sector(va, part), part,
                       tag + "[" + std::to_string(k) + "#" + std::to_string(j) + "]"});
  }
  return out;
}

struct WRow {
  long key;
  TwistedVector w;
  std::string name;
};

std::vector<WRow> w_rows(const ModuleSubspace& s, const std::string& tag) {
  std::vector<WRow> out;
  for (long k : s.ambient().keys()) {
    auto rows = s.basis(k);
    for (std::size_t j = 0; j < rows.size(); ++j)
      out.push_back({k, rows[j],
                     tag + "[" + s.ambient().weight_str(k) + "#" + std::to_string(j) + "]"});
  }
  return out;
}

}  // namespace

RelationsResult verify_relations(FiltrationEngine& eng, const RelationOptions& o) {
  RelationsResult res;
  auto& checks = res.checks;
  const VertexAlgebra& va = eng.algebra();
  const int T = eng.period();
  const int R = o.mode_range;

  if (o.algebra_side) {
    const long vmax = eng.v_cutoff();
    // Every E_V index any sampled inclusion can target.
    const long ev_top = T * (vmax + 2) + T * (R + 1);
    for (long n = 1; n <= ev_top; ++n) eng.E_V(n);
    for (long n = 2; n <= vmax + 2; ++n) eng.C_V(n);

    std::optional<CheckOutcome> first_bad;
    for (long n = 0; n < ev_top; ++n) {
      auto c = inclusion("", eng.E_V(n), eng.E_V(n + 1));
      if (!c.passed() && !first_bad) {
        first_bad = c;
        first_bad->detail = "E_V(" + std::to_string(n + 1) + ") not inside E_V(" +
                            std::to_string(n) + "): " + c.detail;
      }
    }
    checks.push_back(!first_bad ? make_check("E_V decreasing", true,
                                     "n = 0.." + std::to_string(ev_top))
                        : CheckOutcome{"E_V decreasing", CheckStatus::Fail, first_bad->detail,
                                       first_bad->witness});
    first_bad.reset();
    for (long n = 2; n < vmax + 2; ++n) {
      auto c = inclusion("", eng.C_V(n), eng.C_V(n + 1));
      if (!c.passed() && !first_bad) {
        first_bad = c;
        first_bad->detail = "C_V(" + std::to_string(n + 1) + ") not inside C_V(" +
                            std::to_string(n) + "): " + c.detail;
      }
    }
    checks.push_back(first_bad ? CheckOutcome{"C_V decreasing", CheckStatus::Fail,
                                              first_bad->detail, first_bad->witness}
                               : make_check("C_V decreasing", true,
                                            "n = 2.." + std::to_string(vmax + 2)));

    // E_V is constant on each block 1+kT..T+kT, and the first two blocks are C_2, C_3.
    for (long k = 0; (k + 1) * T <= ev_top; ++k) {
      for (long j = 2; j <= T; ++j) {
        long a = 1 + k * T, b = j + k * T;
        checks.push_back(equality("E_V(" + std::to_string(a) + ") = E_V(" + std::to_string(b) + ")",
                                  eng.E_V(a), eng.E_V(b)));
      }
    }
    for (long k = 0; k < 2; ++k)
      for (long j = 1; j <= T; ++j) {
        long a = j + k * T;
        checks.push_back(equality("E_V(" + std::to_string(a) + ") = C_V(" +
                                      std::to_string(k + 2) + ")",
                                  eng.E_V(a), eng.C_V(k + 2)));
      }

    // Mode actions on E_V: a_m E_n inside E_{n-(m+1)T} (one better for m >= 0),
    // u_{-1-k} E_n inside E_{n+kT}, and u_n v for u in E_r, v in E_s.
    struct VCase {
      Label a;
      long m;
      long n;
      VRow v;
    };
    std::vector<VCase> cases;
    const long en_max = T * (vmax + 1);
    for (long n = 0; n <= en_max; ++n)
      for (const auto& v : v_rows(va, eng.E_V(n), vmax, "E_V(" + std::to_string(n) + ")"))
        for (long wa = 0; wa <= o.sample_weight && wa <= vmax; ++wa)
          for (Label a : va.basis(wa))
            for (long m = -R; m <= R; ++m) cases.push_back({a, m, n, v});
    Tally t = run_cases(cases.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
      const auto& c = cases[i];
      long wt = va.weight(c.a) + c.v.key - c.m - 1;
      if (wt < 0) return;
      if (wt > vmax) return tl.skip();
      long target = c.n - (c.m + 1) * T + (c.m >= 0 ? 1 : 0);
      VAElement x = product_mode(va, VAElement::basis(c.a), c.m, c.v.v);
      tl.expect_member(x, eng.E_V(target),
                       va.name(c.a) + "_(" + std::to_string(c.m) + ") " + c.v.name +
                           " not in E_V(" + std::to_string(target) + ")");
    });
    checks.push_back(t.outcome("modes of V shift E_V"));

    std::vector<std::pair<VRow, VRow>> pairs;
    std::vector<std::pair<long, long>> idx;
    for (long r = 0; r <= 2 * T; ++r)
      for (const auto& u : v_rows(va, eng.E_V(r), o.sample_weight, "E_V(" + std::to_string(r) + ")"))
        for (long s = 0; s <= en_max; s += 1)
          for (const auto& v : v_rows(va, eng.E_V(s), vmax, "E_V(" + std::to_string(s) + ")")) {
            if (u.key + v.key > vmax + R) continue;
            pairs.push_back({u, v});
            idx.push_back({r, s});
          }
    t = run_cases(pairs.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
      const auto& [u, v] = pairs[i];
      auto [r, s] = idx[i];
      for (long n = -R; n <= R; ++n) {
        long wt = u.key + v.key - n - 1;
        if (wt < 0) continue;
        if (wt > vmax) {
          tl.skip();
          continue;
        }
        long target = r + s - (n + 1) * T + (n >= 0 ? 1 : 0);
        tl.expect_member(product_mode(va, u.v, n, v.v), eng.E_V(target),
                         u.name + "_(" + std::to_string(n) + ") " + v.name + " not in E_V(" +
                             std::to_string(target) + ")");
      }
    });
    checks.push_back(t.outcome("E_V(r)_n E_V(s) inside E_V(r+s-(n+1)T)"));
  }

  if (!o.module_side || !eng.has_module()) return res;

  const TwistedModule& mod = eng.module();
  const long wmax = eng.w_cutoff_ticks();
  const long cn_top = std::max(o.n_max, o.containment_n_max);
  const long ew_top = std::max(o.e_max + T * (R + 1), (cn_top - 2) * T + 1);
  for (long n = 1; n <= ew_top; ++n) eng.E_W(n);
  for (long n = 2; n <= cn_top + 1; ++n) eng.C_W(n);

  {
    std::optional<CheckOutcome> bad;
    for (long n = 0; n < ew_top && !bad; ++n) {
      auto c = inclusion("", eng.E_W(n), eng.E_W(n + 1));
      if (!c.passed()) {
        bad = c;
        bad->detail = "E_W(" + std::to_string(n + 1) + ") not inside E_W(" + std::to_string(n) +
                      "): " + c.detail;
      }
    }
    checks.push_back(bad ? CheckOutcome{"E_W decreasing", CheckStatus::Fail, bad->detail, bad->witness}
                         : make_check("E_W decreasing", true, "n = 0.." + std::to_string(ew_top)));
    bad.reset();
    for (long n = 2; n <= cn_top && !bad; ++n) {
      auto c = inclusion("", eng.C_W(n), eng.C_W(n + 1));
      if (!c.passed()) {
        bad = c;
        bad->detail = "C_W(" + std::to_string(n + 1) + ") not inside C_W(" + std::to_string(n) +
                      "): " + c.detail;
      }
    }
    checks.push_back(bad ? CheckOutcome{"C_W decreasing", CheckStatus::Fail, bad->detail, bad->witness}
                         : make_check("C_W decreasing", true,
                                      "n = 2.." + std::to_string(cn_top + 1)));
  }

  checks.push_back(equality("E_W(1) = C_W(2)", eng.E_W(1), eng.C_W(2)));

  for (long n = 2; n <= o.n_max; ++n) {
    long m = (n - 2) * T + 1;
    checks.push_back(inclusion("C_W(" + std::to_string(n) + ") inside E_W(" + std::to_string(m) + ")",
                               eng.E_W(m), eng.C_W(n)));
  }

  for (long n = 2; n <= o.containment_n_max; ++n) {
    ContainmentBound cb{n, containment_bound(n, T), containment_variant_bound(n, T), std::nullopt};
    std::vector<long> at{cb.bound};
    if (cb.variant_bound != cb.bound) at.push_back(cb.variant_bound);
    for (long b : at)
      checks.push_back(inclusion("E_W(" + std::to_string(b) + ") inside C_W(" + std::to_string(n) + ")",
                                 eng.C_W(n), eng.E_W(b)));
    for (long m = 1; m <= cb.variant_bound; ++m)
      if (eng.C_W(n).includes(eng.E_W(m))) {
        cb.empirical_min = m;
        break;
      }
    bool within = cb.empirical_min && *cb.empirical_min <= cb.bound;
    checks.push_back(make_check(
        "least m with E_W(m) inside C_W(" + std::to_string(n) + ") within bound", within,
        "least m " + (cb.empirical_min ? std::to_string(*cb.empirical_min) : std::string("none")) +
            ", bound " + std::to_string(cb.bound) + ", variant bound " +
            std::to_string(cb.variant_bound)));
    res.bounds.push_back(cb);
  }

  for (long n = 0; n <= o.e_max; ++n)
    checks.push_back(weight_floor("E_W(" + std::to_string(n) + ") weight >= " + ticks_str(n, T),
                                  eng.E_W(n), n));
  for (long n = 2; n <= o.n_max; ++n) {
    long b = n * T - (2 * T - 1);
    checks.push_back(weight_floor("C_W(" + std::to_string(n) + ") weight >= " + ticks_str(b, T),
                                  eng.C_W(n), b));
  }
  {
    long n = wmax + 1;  // n/T above the cutoff
    checks.push_back(make_check("E_W(" + std::to_string(n) + ") vanishes below the cutoff",
                                eng.E_W(n).total_dim() == 0));
  }

  // Mode actions on E_W.
  struct WCase {
    Label a;
    long n;
    const WRow* w;
  };
  std::vector<std::vector<WRow>> ew_rows;
  for (long n = 0; n <= o.e_max; ++n) ew_rows.push_back(w_rows(eng.E_W(n), "E_W(" + std::to_string(n) + ")"));
  std::vector<WCase> wcases;
  for (long n = 0; n <= o.e_max; ++n)
    for (const auto& w : ew_rows[static_cast<std::size_t>(n)])
      for (long wa = 0; wa <= o.sample_weight; ++wa)
        for (Label a : va.basis(wa)) wcases.push_back({a, n, &w});

  auto act = [&](const VAElement& a, long mode_ticks, const TwistedVector& w) {
    return module_mode(mod, a, ModeIndex::from_ticks(mode_ticks, T), w);
  };

  Tally t = run_cases(wcases.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
    const auto& c = wcases[i];
    const int r = va.sector(c.a);
    for (long k = 0; k <= R; ++k) {
      long mt = (-1 - k) * T + r;
      long wt = T * va.weight(c.a) + c.w->key - mt - T;
      if (wt > wmax) {
        tl.skip();
        continue;
      }
      long target = c.n + k * T - r;
      tl.expect_member(act(VAElement::basis(c.a), mt, c.w->w), eng.E_W(target),
                       va.name(c.a) + wmode(mt, T) + " " + c.w->name + " not in E_W(" +
                           std::to_string(target) + ")");
    }
  });
  checks.push_back(t.outcome("negative modes raise E_W"));

  t = run_cases(wcases.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
    const auto& c = wcases[i];
    const int p = va.sector(c.a);
    for (long m = -R; m <= R; ++m) {
      long mt = m * T + p;
      long wt = T * va.weight(c.a) + c.w->key - mt - T;
      if (wt < 0) continue;
      if (wt > wmax) {
        tl.skip();
        continue;
      }
      long target = c.n - (m + 1) * T - p + (m >= 0 ? T : 0);
      tl.expect_member(act(VAElement::basis(c.a), mt, c.w->w), eng.E_W(target),
                       va.name(c.a) + wmode(mt, T) + " " + c.w->name + " not in E_W(" +
                           std::to_string(target) + ")");
    }
  });
  checks.push_back(t.outcome("all modes shift E_W"));

  {
    const long vmax = std::min<long>(eng.v_cutoff(), o.sample_weight);
    std::vector<std::pair<long, VRow>> us;
    for (long r = 0; r <= 2; ++r)
      for (auto& u : v_rows(va, eng.E_V(r * T), vmax, "E_V(" + std::to_string(r * T) + ")"))
        us.push_back({r, std::move(u)});
    std::vector<std::pair<std::size_t, std::pair<long, const WRow*>>> pc;
    for (std::size_t ui = 0; ui < us.size(); ++ui)
      for (long s = 0; s <= o.e_max; ++s)
        for (const auto& w : ew_rows[static_cast<std::size_t>(s)]) pc.push_back({ui, {s, &w}});
    t = run_cases(pc.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
      const auto& [r, u] = us[pc[i].first];
      auto [s, w] = pc[i].second;
      const int p = u.sector;
      for (long n = -R; n <= R; ++n) {
        long mt = n * T + p;
        long wt = T * u.key + w->key - mt - T;
        if (wt < 0) continue;
        if (wt > wmax) {
          tl.skip();
          continue;
        }
        long target = r * T + s - (n + 1) * T - p;
        tl.expect_member(act(u.v, mt, w->w), eng.E_W(target),
                         u.name + wmode(mt, T) + " " + w->name + " not in E_W(" +
                             std::to_string(target) + ")");
      }
    });
    checks.push_back(t.outcome("E_V(rT) modes on E_W(s)"));
  }

  // C_W stability under negative modes and the commutator congruence.
  {
    struct CCase {
      Label u;
      long n;
      WRow w;
    };
    std::vector<CCase> cc;
    for (long n = 2; n <= o.n_max; ++n)
      for (auto& w : w_rows(eng.C_W(n), "C_W(" + std::to_string(n) + ")"))
        for (long wa = 0; wa <= o.sample_weight; ++wa)
          for (Label u : va.basis(wa)) cc.push_back({u, n, w});
    t = run_cases(cc.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
      const auto& c = cc[i];
      const int p = va.sector(c.u);
      for (long k = 1; k <= R; ++k) {
        long mt = -k * T + p;
        long wt = T * va.weight(c.u) + c.w.key - mt - T;
        if (wt > wmax) {
          tl.skip();
          continue;
        }
        tl.expect_member(act(VAElement::basis(c.u), mt, c.w.w), eng.C_W(c.n),
                         va.name(c.u) + wmode(mt, T) + " " + c.w.name + " not in C_W(" +
                             std::to_string(c.n) + ")");
      }
    });
    checks.push_back(t.outcome("negative modes preserve C_W(n)"));

    struct QCase {
      Label u, v, w;
      long n, k;
    };
    std::vector<QCase> qc;
    for (long n = 2; n <= 3; ++n)
      for (long k = 1; k <= 2 && n + k - 1 <= cn_top + 1; ++k)
        for (long wu = 1; wu <= 2; ++wu)
          for (Label u : va.basis(wu))
            for (long wv = 1; wv <= 2; ++wv)
              for (Label v : va.basis(wv))
                for (long key : eng.w_ambient()->keys())
                  for (Label w : eng.w_ambient()->slice(key)) qc.push_back({u, v, w, n, k});
    t = run_cases(qc.size(), eng.exec(), [&](std::size_t i, Tally& tl) {
      const auto& c = qc[i];
      const int p = va.sector(c.u), q = va.sector(c.v);
      long mu = -c.n * T + p, mv = -c.k * T + q;
      long wt = T * (va.weight(c.u) + va.weight(c.v)) + mod.weight_ticks(c.w) - mu - mv - 2 * T;
      if (wt > wmax) return tl.skip();
      VAElement U = VAElement::basis(c.u), V = VAElement::basis(c.v);
      TwistedVector W = TwistedVector::basis(c.w);
      TwistedVector d = act(U, mu, act(V, mv, W)) - act(V, mv, act(U, mu, W));
      long target = c.n + c.k - 1;
      tl.expect_member(d, eng.C_W(target),
                       "[" + va.name(c.u) + wmode(mu, T) + ", " + va.name(c.v) + wmode(mv, T) +
                           "] " + mod.name(c.w) + " not in C_W(" + std::to_string(target) + ")");
    });
    checks.push_back(t.outcome("C_W commutator congruence"));
  }

  return res;
}

std::vector<FamilyTable> cofiniteness_report(FiltrationEngine& eng, long n_max) {
  const int T = eng.period();
  const long wmax = eng.w_cutoff_ticks();
  const long need = n_max * T - (2 * T - 1);
  if (need > wmax)
    throw InsufficientCutoff("quotients by C_W(" + std::to_string(n_max) + ") need cutoff >= " +
                             ticks_str(need, T) + ", have " + ticks_str(wmax, T));
  std::vector<FamilyTable> out;
  for (long n = 2; n <= n_max; ++n) {
    const auto& c = eng.C_W(n);
    auto dims = quotient_dims(eng.full_W(), c);
    const long bound = n * T - (2 * T - 1);
    FamilyTable t{"W/C_W", n, {}};
    for (const auto& [k, d] : dims)
      t.slices.push_back({eng.w_ambient()->weight_str(k), d, k < bound ? "complete" : "truncated"});
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace vafilt
