#include <doctest.h>

#include "oracles.hpp"
#include "vafilt/core/errors.hpp"
#include "vafilt/module/fock_module.hpp"
#include "vafilt/module/mode_calculus.hpp"
#include "vafilt/module/mode_grid.hpp"
#include "vafilt/module/table_module.hpp"

using namespace vafilt;

namespace {

oracle::Boson::State to_state(const FockModule& w, const TwistedVector& v) {
  oracle::Boson::State s;
  for (const auto& [l, c] : v.terms()) s[w.partition(l)] = c;
  return s;
}

TwistedVector from_state(const FockModule& w, const oracle::Boson::State& s) {
  TwistedVector v;
  for (const auto& [m, c] : s) v.add(*w.find_partition(m), c);
  return v;
}

std::vector<Label> w_labels(const TwistedModule& w, long max_ticks) {
  std::vector<Label> out;
  for (long t = 0; t <= max_ticks; ++t)
    for (Label l : w.basis(t)) out.push_back(l);
  return out;
}

VAElement B(Label l) { return VAElement::basis(l); }
TwistedVector BW(Label l) { return TwistedVector::basis(l); }

}  // namespace

TEST_CASE("twisted Fock graded dimensions up to 9/2") {
  Heisenberg va(2, 6);
  FockModule w(va, 9);
  const std::vector<std::size_t> expected{1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
  for (long t = 0; t <= 9; ++t) {
    CHECK(w.basis(t).size() == expected[static_cast<std::size_t>(t)]);
    CHECK(static_cast<long>(w.basis(t).size()) == oracle::count_partitions(t, oracle::parts_up_to(t, 2, 1)));
  }
}

TEST_CASE("untwisted Fock module has the partition dimensions") {
  Heisenberg va(1, 8);
  FockModule w(va, 8);
  for (long t = 0; t <= 8; ++t)
    CHECK(static_cast<long>(w.basis(t).size()) == oracle::count_partitions(t, oracle::parts_up_to(t)));
}

TEST_CASE("half-integral generator modes follow the twisted commutation relations") {
  Heisenberg va(2, 8);
  FockModule w(va, 16);
  const Label vac = w.basis(0)[0];
  // h_{1/2} h_{-1/2} vac = 1/2 vac
  TwistedVector x = module_mode(w, B(va.generator()), ModeIndex(-1, 1, 2), BW(vac));
  CHECK(module_mode(w, B(va.generator()), ModeIndex(0, 1, 2), x) == Rational(1, 2) * BW(vac));
  oracle::Boson bos{2};
  for (Label l : w_labels(w, 8))
    for (long a = -7; a <= 9; a += 2) {
      long t = w.weight_ticks(l) - a;
      if (t < 0 || t > w.cutoff_ticks()) continue;
      TwistedVector got = module_mode(w, B(va.generator()), ModeIndex::from_ticks(a, 2), BW(l));
      CHECK(got == from_state(w, bos.mode(a, to_state(w, BW(l)))));
    }
}

TEST_CASE("the quadratic field acts with the twisted vacuum shift") {
  // (h(-1)h(-1)1)_n = sum :h_a h_b: + (1/8) delta_{n,1}: the twisted vacuum has
  // conformal weight 1/16 for the Virasoro vector h(-1)h(-1)1 / 2.
  Heisenberg va(2, 8);
  FockModule w(va, 20);
  oracle::Boson bos{2};
  const Label hh = *va.find_partition({1, 1});
  for (Label l : w_labels(w, 8))
    for (long n = -2; n <= 3; ++n) {
      long t = w.weight_ticks(l) + 4 - 2 * n - 2;
      if (t < 0 || t > w.cutoff_ticks()) continue;
      TwistedVector got = module_mode(w, B(hh), ModeIndex(n, 0, 2), BW(l));
      auto want = bos.quadratic_mode(2 * n, to_state(w, BW(l)), 1, Rational(1, 8), w.weight_ticks(l) + 12);
      CHECK(got == from_state(w, want));
    }
}

TEST_CASE("mode actions shift weight by wt(u) - m - 1") {
  Heisenberg va(2, 6);
  FockModule w(va, 16);
  oracle::Gen g(17);
  for (int i = 0; i < 200; ++i) {
    long wu = g.range(0, 3);
    Label u = g.pick(va.basis(wu));
    Label x = g.pick(w.basis(g.range(0, 6)));
    ModeIndex m(g.range(-3, 3), va.sector(u), 2);
    long t = 2 * wu + w.weight_ticks(x) - m.ticks() - 2;
    if (t > w.cutoff_ticks()) continue;
    TwistedVector r = module_mode(w, B(u), m, BW(x));
    if (t < 0) {
      CHECK(r.is_zero());
    } else if (!r.is_zero()) {
      CHECK(homogeneous_weight_ticks(w, r) == t);
    }
  }
}

TEST_CASE("coset policy") {
  Heisenberg va(2, 6);
  FockModule w(va, 10);
  const Label vac = w.basis(0)[0];
  // h lives in sector 1, so integral modes do not exist on the twisted module
  CHECK_THROWS_AS(module_mode(w, B(va.generator()), ModeIndex(-1, 0, 2), BW(vac)), SectorMismatch);
  CHECK(module_mode(w, B(va.generator()), ModeIndex(-1, 0, 2), BW(vac), CosetPolicy::Lenient).is_zero());
  VAElement mixed = B(va.generator()) + B(*va.find_partition({1, 1}));
  TwistedVector lenient = module_mode(w, mixed, ModeIndex(-1, 1, 2), BW(vac), CosetPolicy::Lenient);
  CHECK(lenient == module_mode(w, B(va.generator()), ModeIndex(-1, 1, 2), BW(vac)));
  CHECK_THROWS_AS(module_mode(w, B(va.generator()), ModeIndex(-8, 1, 2), BW(vac)), CutoffExceeded);
}

TEST_CASE("vacuum acts as the identity") {
  Heisenberg va(2, 6);
  FockModule w(va, 10);
  for (Label l : w_labels(w, 8))
    for (long n = -2; n <= 2; ++n) {
      TwistedVector r = module_mode(w, B(va.vacuum()), ModeIndex(n, 0, 2), BW(l));
      CHECK(r == (n == -1 ? BW(l) : TwistedVector{}));
    }
}

TEST_CASE("annihilation depth is the least vanishing mode") {
  Heisenberg va(2, 6);
  FockModule w(va, 12);
  const VAElement h = B(va.generator());
  const Label vac = w.basis(0)[0];
  CHECK(annihilation_depth(w, h, BW(vac)) == 0);
  CHECK(annihilation_depth(w, h, BW(w.basis(1)[0])) == 1);  // h_{1/2} h_{-1/2} vac != 0
  CHECK(annihilation_depth(w, h, BW(w.basis(3)[0])) >= 1);
  for (Label l : w_labels(w, 6)) {
    long d = annihilation_depth(w, h, BW(l));
    for (long q = d; q <= d + 3; ++q) CHECK(module_mode(w, h, ModeIndex(q, 1, 2), BW(l)).is_zero());
    if (d > 0) CHECK(!module_mode(w, h, ModeIndex(d - 1, 1, 2), BW(l)).is_zero());
  }
}

TEST_CASE("iterates agree with direct action for any valid truncation") {
  Heisenberg va(2, 8);
  FockModule w(va, 30);
  const VAElement h = B(va.generator());
  for (Label v : {va.generator(), *va.find_partition({1, 1}), *va.find_partition({2})})
    for (Label x : w_labels(w, 4))
      for (long m = -2; m <= 1; ++m)
        for (long n = -2; n <= 1; ++n) {
          VAElement uv = product_mode(va, h, m, B(v));
          if (uv.is_zero()) continue;
          const int s = *homogeneous_sector(va, uv);
          ModeIndex ni(n, s, 2);
          TwistedVector direct = module_mode(w, uv, ni, BW(x));
          CHECK(iterate_mode(w, h, m, B(v), ni, BW(x)) == direct);
          IterateOptions wide;
          wide.l = annihilation_depth(w, h, BW(x)) + 2;
          wide.k = iterate_depth(va, h, m, B(v)) + 1;
          CHECK(iterate_mode(w, h, m, B(v), ni, BW(x), wide) == direct);
        }
}

TEST_CASE("mode calculus grid on the twisted Fock module") {
  Heisenberg va(2, 8);
  FockModule w(va, 30);
  GridOptions o;
  o.uv_weight = 2;
  o.w_ticks = 3;
  o.mode_range = 2;
  for (const auto& c : check_mode_grid(w, o, ExecConfig{})) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == CheckStatus::Pass);
  }
}

TEST_CASE("identity checkers report a located failure") {
  Heisenberg va(2, 6);
  FockModule w(va, 12);
  auto c = compare_vectors(w, "demo", BW(w.basis(1)[0]), Rational(2) * BW(w.basis(1)[0]));
  CHECK(!c.holds);
  CHECK(c.detail.find("h(-1/2)vac") != std::string::npos);
  CHECK(compare_vectors(w, "demo", BW(0), BW(0)).holds);
}

TEST_CASE("adjoint module reproduces the algebra products") {
  Heisenberg va(1, 6);
  AdjointModule w(va);
  for (long a = 0; a <= 3; ++a)
    for (Label u : va.basis(a))
      for (long b = 0; b <= 3; ++b)
        for (Label v : va.basis(b))
          for (long n = -2; n <= 3; ++n) {
            if (a + b - n - 1 < 0 || a + b - n - 1 > 6) continue;
            VAElement p = product_mode(va, B(u), n, B(v));
            TwistedVector r = module_mode(w, B(u), ModeIndex(n, 0, 1), BW(v));
            std::map<std::string, Rational> got, want;
            for (const auto& [l, c] : r.terms()) got[w.name(l)] = c;
            for (const auto& [l, c] : p.terms()) want[va.name(l)] = c;
            CHECK(got == want);
          }
}
