#include <doctest.h>

#include "oracles.hpp"
#include "vafilt/core/errors.hpp"
#include "vafilt/va/heisenberg.hpp"

using namespace vafilt;

namespace {

oracle::Boson::State to_state(const Heisenberg& va, const VAElement& v) {
  oracle::Boson::State s;
  for (const auto& [l, c] : v.terms()) s[va.partition(l)] = c;
  return s;
}

VAElement from_state(const Heisenberg& va, const oracle::Boson::State& s) {
  VAElement v;
  for (const auto& [m, c] : s) v.add(*va.find_partition(m), c);
  return v;
}

std::vector<Label> labels_up_to(const VertexAlgebra& va, long w) {
  std::vector<Label> out;
  for (long k = 0; k <= w; ++k)
    for (Label l : va.basis(k)) out.push_back(l);
  return out;
}

VAElement B(Label l) { return VAElement::basis(l); }

}  // namespace

TEST_CASE("Heisenberg graded dimensions are partition numbers") {
  for (int T : {1, 2}) {
    Heisenberg va(T, 10);
    for (long w = 0; w <= 10; ++w)
      CHECK(static_cast<long>(va.basis(w).size()) == oracle::count_partitions(w, oracle::parts_up_to(w)));
    CHECK(va.basis(0).size() == 1);
    CHECK(va.vacuum() == va.basis(0)[0]);
  }
}

TEST_CASE("sectors count parts modulo the period") {
  Heisenberg v2(2, 6), v1(1, 6);
  for (Label l : labels_up_to(v2, 6)) CHECK(v2.sector(l) == static_cast<int>(v2.partition(l).size() % 2));
  for (Label l : labels_up_to(v1, 6)) CHECK(v1.sector(l) == 0);
}

TEST_CASE("generator modes match the free boson") {
  Heisenberg va(2, 9);
  oracle::Boson bos{1};
  const VAElement h = B(va.generator());
  for (Label v : labels_up_to(va, 6))
    for (long n = -4; n <= 4; ++n) {
      if (va.weight(v) - n > va.cutoff() || va.weight(v) - n < 0) continue;
      VAElement got = product_mode(va, h, n, B(v));
      CHECK(got == from_state(va, bos.mode(n, to_state(va, B(v)))));
    }
}

TEST_CASE("the quadratic field matches normal ordered products") {
  Heisenberg va(2, 10);
  oracle::Boson bos{1};
  const Label hh = *va.find_partition({1, 1});
  for (Label v : labels_up_to(va, 5))
    for (long n = -3; n <= 3; ++n) {
      long wt = va.weight(v) + 2 - n - 1;
      if (wt < 0 || wt > va.cutoff()) continue;
      VAElement got = product_mode(va, B(hh), n, B(v));
      auto want = bos.quadratic_mode(n, to_state(va, B(v)), 0, Rational(0), va.weight(v) + 8);
      CHECK(got == from_state(va, want));
    }
}

TEST_CASE("vacuum and creation axioms") {
  Heisenberg va(2, 8);
  const VAElement one = B(va.vacuum());
  for (Label v : labels_up_to(va, 5)) {
    for (long n = -3; n <= 3; ++n) {
      VAElement r = product_mode(va, one, n, B(v));
      CHECK(r == (n == -1 ? B(v) : VAElement{}));
    }
    CHECK(product_mode(va, B(v), -1, one) == B(v));
    for (long n = 0; n <= 3; ++n) CHECK(product_mode(va, B(v), n, one).is_zero());
    CHECK(product_mode(va, B(v), -2, one) == translate(va, B(v)));
  }
  CHECK(translate(va, B(va.generator())) == B(*va.find_partition({2})));
  CHECK(product_mode(va, B(va.generator()), 1, B(va.generator())) == one);
  CHECK(product_mode(va, B(va.generator()), 0, B(va.generator())).is_zero());
}

TEST_CASE("skew symmetry up to weight 4") {
  Heisenberg va(2, 12);
  auto ls = labels_up_to(va, 4);
  for (Label u : ls)
    for (Label v : ls)
      for (long n = -2; n <= 5; ++n) {
        long wt = va.weight(u) + va.weight(v) - n - 1;
        if (wt < 0 || wt > va.cutoff()) continue;
        VAElement lhs = product_mode(va, B(u), n, B(v));
        VAElement rhs;
        Rational fact(1);
        for (long i = 0; n + i <= va.weight(u) + va.weight(v); ++i) {
          if (i > 0) fact *= Rational(i);
          VAElement t = product_mode(va, B(v), n + i, B(u));
          for (long d = 0; d < i; ++d) t = translate(va, t);
          rhs.add_scaled(t, sign_power(n + i + 1) / fact);
        }
        CHECK(lhs == rhs);
      }
}

TEST_CASE("commutator formula on small triples") {
  Heisenberg va(2, 10);
  auto ls = labels_up_to(va, 2);
  for (Label u : ls)
    for (Label v : ls)
      for (Label w : ls)
        for (long m = -2; m <= 2; ++m)
          for (long n = -2; n <= 2; ++n) {
            long wt = va.weight(u) + va.weight(v) + va.weight(w) - m - n - 2;
            long mid = std::max(va.weight(v) + va.weight(w) - n - 1, va.weight(u) + va.weight(w) - m - 1);
            if (wt < 0 || wt > va.cutoff() || mid > va.cutoff()) continue;
            VAElement lhs = product_mode(va, B(u), m, product_mode(va, B(v), n, B(w))) -
                            product_mode(va, B(v), n, product_mode(va, B(u), m, B(w)));
            VAElement rhs;
            for (long i = 0; i <= va.weight(u) + va.weight(v); ++i)
              rhs.add_scaled(product_mode(va, product_mode(va, B(u), i, B(v)), m + n - i, B(w)),
                             integer_binomial(m, i));
            CHECK(lhs == rhs);
          }
}

TEST_CASE("translation acts as a derivative on modes") {
  Heisenberg va(2, 10);
  auto ls = labels_up_to(va, 3);
  for (Label u : ls)
    for (Label v : ls)
      for (long n = -2; n <= 4; ++n) {
        long wt = va.weight(u) + 1 + va.weight(v) - n - 1;
        if (wt < 0 || wt > va.cutoff()) continue;
        CHECK(product_mode(va, translate(va, B(u)), n, B(v)) ==
              Rational(-n) * product_mode(va, B(u), n - 1, B(v)));
      }
}

TEST_CASE("products are bilinear") {
  Heisenberg va(2, 8);
  auto ls = labels_up_to(va, 3);
  oracle::Gen g(5);
  for (int i = 0; i < 60; ++i) {
    // homogeneous combinations of equal weight
    long wa = g.range(0, 3), wb = g.range(0, 3);
    VAElement a, b;
    for (Label l : va.basis(wa)) a.add(l, g.rational(4, 3));
    for (Label l : va.basis(wb)) b.add(l, g.rational(4, 3));
    long n = g.range(-2, 2);
    if (wa + wb - n - 1 < 0 || wa + wb - n - 1 > va.cutoff()) continue;
    VAElement direct = product_mode(va, a, n, b);
    VAElement sum;
    for (const auto& [x, cx] : a.terms())
      for (const auto& [y, cy] : b.terms()) sum.add_scaled(product_mode(va, B(x), n, B(y)), cx * cy);
    CHECK(direct == sum);
  }
}

TEST_CASE("automorphism and sector decomposition") {
  Heisenberg va(2, 6);
  VAElement x;
  for (Label l : labels_up_to(va, 4)) x.add(l, Rational(static_cast<long>(l) + 1));
  auto parts = sector_decompose(va, x);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] + parts[1] == x);
  CHECK(automorphism_apply(va, x) == parts[0] - parts[1]);
  CHECK(homogeneous_sector(va, parts[1]) == 1);
  CHECK(!homogeneous_sector(va, x));
  CHECK(homogeneous_weight(va, B(*va.find_partition({2, 1}))) == 3);
  CHECK(!homogeneous_weight(va, x));
  CHECK(max_weight(va, x) == 4);
  CHECK(max_weight(va, VAElement{}) == -1);
}

TEST_CASE("vanishing orders") {
  Heisenberg va(2, 8);
  const VAElement h = B(va.generator());
  CHECK(vanishing_order(va, h, h) == 2);
  CHECK(vanishing_order(va, h, B(va.vacuum())) == 0);
  CHECK(vanishing_order(va, B(va.vacuum()), h) == 0);
  CHECK(vanishing_order(va, B(*va.find_partition({1, 1})), B(*va.find_partition({1, 1}))) == 4);
}

TEST_CASE("results above the cutoff are refused") {
  Heisenberg va(2, 4);
  const VAElement h = B(va.generator());
  CHECK_THROWS_AS(product_mode(va, h, -5, h), CutoffExceeded);
  CHECK_THROWS_AS(va.basis(5), CutoffExceeded);
  CHECK_NOTHROW(product_mode(va, h, -3, h));
}
