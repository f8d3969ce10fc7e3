// One pass/fail line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "../unit/oracles.hpp"
#include "vafilt/cli/runner.hpp"
#include "vafilt/filtration/relations.hpp"
#include "vafilt/graded/gr_structures.hpp"
#include "vafilt/module/fock_module.hpp"
#include "vafilt/module/mode_grid.hpp"
#include "vafilt/va/heisenberg.hpp"

using namespace vafilt;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool holds, const std::string& what) {
    if (!holds && ok) {
      ok = false;
      detail = what;
    }
  }
  void require_checks(const std::vector<CheckOutcome>& cs) {
    long pass = 0;
    for (const auto& c : cs) {
      if (c.status == CheckStatus::Fail) require(false, c.name + ": " + c.detail);
      if (c.status == CheckStatus::Pass) ++pass;
    }
    require(pass > 0, "no check instance fit under the cutoff");
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Verdict()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("error: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.ok) ++failures;
  std::printf("[%s] %2d  %s  (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
}

std::string slice_str(long ticks, int T) { return ticks_str(ticks, T); }

}  // namespace

int main() {
  Heisenberg va2(2, 8);
  FockModule fock2(va2, 44);

  criterion(1, "twisted Fock graded dimensions up to 9/2", [&] {
    Verdict v;
    const std::vector<int> expected{1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
    for (long t = 0; t <= 9; ++t) {
      const long dim = static_cast<long>(fock2.basis(t).size());
      const long oracle_dim = oracle::count_partitions(t, oracle::parts_up_to(t, 2, 1));
      v.require(dim == expected[static_cast<std::size_t>(t)] && dim == oracle_dim,
                "weight " + slice_str(t, 2) + ": dim " + std::to_string(dim));
    }
    return v;
  });

  criterion(2, "E_1(W) = C_2(W) slice by slice up to 9/2", [&] {
    Verdict v;
    FiltrationEngine eng(va2, &fock2, 4, 9);
    auto w = eng.E_W(1).missing_from(eng.C_W(2));
    if (!w) w = eng.C_W(2).missing_from(eng.E_W(1));
    v.require(!w, w ? "differs at " + w->weight + ": " + w->vector : "");
    return v;
  });

  criterion(3, "E_1(V) = E_2(V) = C_2(V) and E_3(V) = E_4(V) = C_3(V) up to weight 6, T = 2", [&] {
    Verdict v;
    FiltrationEngine eng(va2, nullptr, 6, 0);
    v.require(eng.E_V(1).equals(eng.C_V(2)), "E_1(V) != C_2(V)");
    v.require(eng.E_V(2).equals(eng.C_V(2)), "E_2(V) != C_2(V)");
    v.require(eng.E_V(3).equals(eng.C_V(3)), "E_3(V) != C_3(V)");
    v.require(eng.E_V(4).equals(eng.C_V(3)), "E_4(V) != C_3(V)");
    return v;
  });

  criterion(4, "C_n(W) inside E_{(n-2)T+1}(W) and E_m(W) inside C_n(W) at the stated bound", [&] {
    Verdict v;
    FiltrationEngine eng(va2, &fock2, 4, 9);
    for (long n = 2; n <= 5; ++n) {
      auto w = eng.E_W((n - 2) * 2 + 1).missing_from(eng.C_W(n));
      v.require(!w, "C_W(" + std::to_string(n) + ") not inside E_W(" + std::to_string((n - 2) * 2 + 1) + ")");
    }
    std::string mins;
    for (long n = 3; n <= 4; ++n) {
      const long bound = containment_bound(n, 2);
      v.require(bound == (n == 3 ? 6 : 24), "bound for n = " + std::to_string(n) + " is " + std::to_string(bound));
      v.require(eng.C_W(n).includes(eng.E_W(bound)), "E_W(" + std::to_string(bound) + ") not inside C_W(" + std::to_string(n) + ")");
      long least = -1;
      for (long m = 1; m <= bound && least < 0; ++m)
        if (eng.C_W(n).includes(eng.E_W(m))) least = m;
      v.require(least > 0 && least <= bound, "no m up to the bound works for n = " + std::to_string(n));
      mins += (mins.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": least m " +
              std::to_string(least) + " <= " + std::to_string(bound);
    }
    if (v.ok) v.detail = mins;
    return v;
  });

  criterion(5, "minimum weights of E_n(W) and C_n(W)", [&] {
    Verdict v;
    FiltrationEngine eng(va2, &fock2, 4, 9);
    for (long n = 0; n <= 9; ++n) {
      auto k = eng.E_W(n).min_nonzero_key();  // ticks, so weight >= n/T means k >= n
      v.require(!k || *k >= n, "E_W(" + std::to_string(n) + ") has weight " + slice_str(k.value_or(0), 2));
    }
    for (long n = 2; n <= 5; ++n) {
      auto k = eng.C_W(n).min_nonzero_key();
      v.require(!k || *k >= 2 * n - 3, "C_W(" + std::to_string(n) + ") has weight " + slice_str(k.value_or(0), 2));
    }
    return v;
  });

  criterion(6, "mode-calculus grid on the twisted Fock module", [&] {
    Verdict v;
    GridOptions o;
    o.uv_weight = 3;
    o.w_ticks = 6;
    o.mode_range = 3;
    auto cs = check_mode_grid(fock2, o, ExecConfig{});
    v.require_checks(cs);
    if (v.ok)
      for (const auto& c : cs) v.detail += (v.detail.empty() ? "" : "; ") + c.name + " " + c.detail;
    return v;
  });

  criterion(7, "gr(V) and gr(W) axiom suites up to weight 7/2", [&] {
    Verdict v;
    FiltrationEngine eng(va2, &fock2, 3, 7);
    GradedContext ctx(eng);
    GrOptions o;
    o.v_weight = 3;
    o.w_ticks = 7;
    o.mode_range = 2;
    v.require_checks(check_vpa_axioms(ctx, o));
    v.require_checks(check_twisted_vpa_module_axioms(ctx, o));
    return v;
  });

  criterion(8, "Zhu Poisson algebra V/C_2(V)", [&] {
    Verdict v;
    FiltrationEngine eng(va2, nullptr, 6, 0);
    for (long w = 0; w <= 6; ++w) {
      const long q = static_cast<long>(va2.basis(w).size()) - eng.C_V(2).dim(w);
      v.require(q == 1, "quotient dim " + std::to_string(q) + " at weight " + std::to_string(w));
    }
    GradedContext ctx(eng);
    v.require_checks(check_zhu_poisson(ctx, 4));
    return v;
  });

  criterion(9, "ordered products over U and M span W up to 7/2", [&] {
    Verdict v;
    FiltrationEngine eng(va2, &fock2, 3, 7);
    GradedContext ctx(eng);
    v.require_checks(check_generating_spanning(ctx, 7).checks);
    return v;
  });

  criterion(10, "T = 1 collapses to the untwisted relations", [&] {
    Verdict v;
    Heisenberg va1(1, 8);
    FockModule fock1(va1, 12);
    FiltrationEngine eng(va1, &fock1, 5, 5);
    v.require(eng.E_V(1).equals(eng.C_V(2)), "E_1(V) != C_2(V)");
    v.require(eng.E_W(1).equals(eng.C_W(2)), "E_1(W) != C_2(W)");
    for (long n = 0; n < 6; ++n) {
      v.require(eng.E_V(n).includes(eng.E_V(n + 1)), "E_V not decreasing at " + std::to_string(n));
      v.require(eng.E_W(n).includes(eng.E_W(n + 1)), "E_W not decreasing at " + std::to_string(n));
    }
    for (long n = 2; n < 5; ++n) v.require(eng.C_V(n).includes(eng.C_V(n + 1)), "C_V not decreasing");
    // Li's monomial count: partitions of w with w - length >= n
    for (long n = 0; n <= 5; ++n)
      for (long w = 0; w <= 5; ++w) {
        long d = 0;
        for (long len = 0; len <= w; ++len)
          if (w - len >= n) d += oracle::count_partitions_len(w, len, oracle::parts_up_to(w));
        v.require(eng.E_V(n).dim(w) == d, "E_V(" + std::to_string(n) + ") dim at weight " + std::to_string(w));
      }
    GradedContext ctx(eng);
    GrOptions o;
    o.v_weight = 3;
    o.w_ticks = 4;
    o.mode_range = 2;
    v.require_checks(check_vpa_axioms(ctx, o));
    v.require_checks(check_twisted_vpa_module_axioms(ctx, o));
    return v;
  });

  criterion(11, "full check suite is byte-identical serial and parallel", [&] {
    Verdict v;
    RunConfig c;
    c.command = "check";
    c.backend = "heisenberg-T2";
    c.cutoff = "7/2";
    c.suite = "all";
    c.exec = ExecConfig{Execution::Serial, 1};
    const std::string serial = report_json(run(c));
    c.exec = ExecConfig{Execution::Parallel, 4};
    const std::string parallel = report_json(run(c));
    v.require(serial == parallel, "reports differ");
    v.require(nlohmann::json::parse(serial)["checks"].size() > 0, "empty report");
    return v;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
