#include <doctest.h>

#include <omp.h>

#include "oracles.hpp"
#include "vafilt/core/combinatorics.hpp"
#include "vafilt/core/errors.hpp"
#include "vafilt/core/lin_comb.hpp"
#include "vafilt/core/memo.hpp"
#include "vafilt/core/mode_index.hpp"

using namespace vafilt;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("9/2") == Rational(9, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS(Rational::parse("x/2"));
}

TEST_CASE("rational field laws on random values") {
  oracle::Gen g(101);
  for (int i = 0; i < 400; ++i) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK((a < b) == (a - b).sign() < 0);
  }
}

TEST_CASE("floor of rationals") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("binomials match Pascal's rule and the falling-factorial product") {
  // Pascal oracle for nonnegative tops
  std::vector<std::vector<long>> pascal(12, std::vector<long>(12, 0));
  for (int n = 0; n < 12; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n < 12; ++n)
    for (int k = 0; k < 12; ++k) CHECK(integer_binomial(n, k) == Rational(pascal[n][k]));
  // binom(-n, k) = (-1)^k binom(n+k-1, k)
  for (int n = 1; n < 6; ++n)
    for (int k = 0; k < 6; ++k)
      CHECK(integer_binomial(-n, k) == sign_power(k) * Rational(pascal[n + k - 1][k]));
  CHECK(integer_binomial(5, -1) == Rational(0));
  // binom(1/2, k) by direct products
  Rational a(1, 2);
  for (long k = 0; k < 8; ++k) {
    Rational num(1), den(1);
    for (long j = 0; j < k; ++j) {
      num *= a - Rational(j);
      den *= Rational(j + 1);
    }
    CHECK(rational_binomial(a, k) == num / den);
  }
}

TEST_CASE("mode indices split into integer base and sector") {
  ModeIndex m(-2, 1, 2);
  CHECK(m.ticks() == -3);
  CHECK(m.value() == Rational(-3, 2));
  CHECK(m.base() == -2);
  CHECK(m.sector() == 1);
  CHECK(m.str() == "-3/2");
  ModeIndex f = ModeIndex::from_ticks(5, 2);
  CHECK(f.base() == 2);
  CHECK(f.sector() == 1);
  CHECK(f.shifted(-3).value() == Rational(-1, 2));
  oracle::Gen g(7);
  for (int i = 0; i < 200; ++i) {
    int T = static_cast<int>(g.range(1, 4));
    long t = g.range(-40, 40);
    ModeIndex x = ModeIndex::from_ticks(t, T);
    CHECK(x.base() * T + x.sector() == t);
    CHECK(x.sector() >= 0);
    CHECK(x.sector() < T);
  }
}

TEST_CASE("half weights are exact multiples of 1/T") {
  CHECK(HalfWeight::parse("9/2", 2).ticks() == 9);
  CHECK(HalfWeight::parse("3", 2).ticks() == 6);
  CHECK_THROWS(HalfWeight::parse("1/3", 2));
  CHECK_THROWS(HalfWeight::parse("-1/2", 2));
  CHECK(HalfWeight(7, 2).str() == "7/2");
}

TEST_CASE("partition enumeration agrees with the counting recursion") {
  for (long n = 0; n <= 14; ++n) {
    auto allowed = oracle::parts_up_to(n);
    std::vector<long> desc(allowed.rbegin(), allowed.rend());
    auto ps = partitions_desc(n, desc);
    CHECK(static_cast<long>(ps.size()) == oracle::count_partitions(n, allowed));
    for (const auto& p : ps) {
      CHECK(std::is_sorted(p.rbegin(), p.rend()));
      long s = 0;
      for (long x : p) s += x;
      CHECK(s == n);
    }
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
  }
}

TEST_CASE("half-partitions of the twisted Fock space") {
  // parts 1/2, 3/2, ...: the graded dimensions of the T = 2 twisted Fock space
  const std::vector<long> expected{1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
  for (long t = 0; t < 10; ++t) {
    auto odd = mode_parts(2, 1, t);
    std::vector<HalfWeight> allowed;
    for (auto it = odd.rbegin(); it != odd.rend(); ++it) allowed.emplace_back(*it, 2);
    auto ps = half_partitions(HalfWeight(t, 2), allowed);
    CHECK(static_cast<long>(ps.size()) == expected[static_cast<std::size_t>(t)]);
    CHECK(oracle::count_partitions(t, oracle::parts_up_to(t, 2, 1)) == expected[static_cast<std::size_t>(t)]);
  }
  CHECK(mode_parts(2, 1, 7) == std::vector<long>{1, 3, 5, 7});
  CHECK(mode_parts(3, 2, 9) == std::vector<long>{2, 5, 8});
}

TEST_CASE("linear combinations stay sorted without zero terms") {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    VAElement a, b;
    std::map<Label, Rational> ref;
    for (int j = 0; j < 6; ++j) {
      Label l = static_cast<Label>(g.range(0, 8));
      Rational c = g.rational(3, 2);
      a.add(l, c);
      ref[l] += c;
    }
    for (const auto& [l, c] : a.terms()) CHECK(!c.is_zero());
    CHECK(std::is_sorted(a.terms().begin(), a.terms().end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; }));
    for (const auto& [l, c] : ref) CHECK(a.coeff(l) == c);
    b = a;
    CHECK((a - b).is_zero());
    CHECK(Rational(2) * a == a + b);
    CHECK((Rational(0) * a).is_zero());
  }
}

TEST_CASE("concurrent memo returns one value per key under contention") {
  ConcurrentMemo<long, long> memo;
  std::vector<long> seen(2000);
#pragma omp parallel for num_threads(4)
  for (long i = 0; i < 2000; ++i) seen[static_cast<std::size_t>(i)] = memo.get_or_compute(i % 37, [&] { return (i % 37) * (i % 37); });
  for (long i = 0; i < 2000; ++i) CHECK(seen[static_cast<std::size_t>(i)] == (i % 37) * (i % 37));
  CHECK(memo.size() == 37);
}
