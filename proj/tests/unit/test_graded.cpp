#include <doctest.h>

#include "oracles.hpp"
#include "vafilt/graded/gr_structures.hpp"
#include "vafilt/module/fock_module.hpp"
#include "vafilt/va/heisenberg.hpp"

using namespace vafilt;

namespace {

struct Fixture {
  Heisenberg va{2, 8};
  FockModule mod{va, 44};
  FiltrationEngine eng{va, &mod, 3, 7};
};

bool any_failed(const std::vector<CheckOutcome>& cs) {
  for (const auto& c : cs)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

void expect_no_failure(const std::vector<CheckOutcome>& cs) {
  CHECK(!cs.empty());
  for (const auto& c : cs) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::Fail);
  }
}

GrOptions small_options() {
  GrOptions o;
  o.v_weight = 3;
  o.w_ticks = 5;
  o.mode_range = 2;
  return o;
}

}  // namespace

TEST_CASE("gr(V) satisfies the vertex Poisson axioms") {
  Fixture f;
  GradedContext ctx(f.eng);
  expect_no_failure(check_vpa_axioms(ctx, small_options()));
}

TEST_CASE("gr(W) satisfies the twisted module axioms") {
  Fixture f;
  GradedContext ctx(f.eng);
  expect_no_failure(check_twisted_vpa_module_axioms(ctx, small_options()));
}

TEST_CASE("a sign fault in the gr(V) product is detected") {
  Fixture f;
  GradedContext bad(f.eng, GrFaults{true});
  CHECK(any_failed(check_vpa_axioms(bad, small_options())));
}

TEST_CASE("gr(V) products of degree-zero classes are the classes of u_{-1} v") {
  Fixture f;
  GradedContext ctx(f.eng);
  const VAElement h = VAElement::basis(f.va.generator());
  GrElement a{0, h};
  GrElement p = ctx.gr_product(a, a);
  CHECK(p.degree == 0);
  CHECK(p.rep == VAElement::basis(*f.va.find_partition({1, 1})));
  // the derivative raises the degree by T
  GrElement d = ctx.gr_partial(a);
  CHECK(d.degree == 2);
  CHECK(ctx.weight(d) == 2);
  // Y_- carries h_1 h = 1 into degree 0
  GrElement y = ctx.gr_Yminus(a, 1, a);
  CHECK(ctx.gr_equal(y, GrElement{0, VAElement::basis(f.va.vacuum())}));
}

TEST_CASE("Zhu's C_2 quotient of the Heisenberg algebra is a polynomial ring") {
  Fixture f;
  GradedContext ctx(f.eng);
  for (long w = 0; w <= 3; ++w) {
    // one class per weight: h(-1)^w 1
    std::vector<std::vector<Rational>> rows;
    const auto& labels = f.va.basis(w);
    for (Label l : labels) {
      VAElement c = ctx.zhu_class(VAElement::basis(l));
      std::vector<Rational> row;
      for (Label m : labels) row.push_back(c.coeff(m));
      rows.push_back(row);
    }
    CHECK(oracle::rank(rows) == 1);
  }
  auto cs = check_zhu_poisson(ctx, 3);
  expect_no_failure(cs);
}

TEST_CASE("gr(W) and gr(V) are generated in degree zero") {
  Fixture f;
  GradedContext ctx(f.eng);
  auto res = check_generation(ctx, 4, 1);
  expect_no_failure(res.checks);
  CHECK(!res.tables.empty());
}

TEST_CASE("W is spanned by modes of a C_2 complement on a C_2(W) complement") {
  Fixture f;
  GradedContext ctx(f.eng);
  auto ok = check_generating_spanning(ctx, 7);
  expect_no_failure(ok.checks);
  // the twisted vacuum is the only element of the complement of C_2(W) in low weight
  auto bad = check_generating_spanning(ctx, 7, std::size_t{0});
  CHECK(any_failed(bad.checks));
}

TEST_CASE("samples give quotient bases of the graded pieces") {
  Fixture f;
  GradedContext ctx(f.eng);
  auto gv = ctx.gr_sample(3);
  std::map<std::pair<long, int>, int> count;
  for (const auto& g : gv) ++count[{g.degree, ctx.weight(g)}];
  for (long w = 0; w <= 3; ++w)
    for (long d = 0; d <= 2 * w; d += 2) {
      const int want = f.eng.E_V(d).dim(w) - f.eng.E_V(d + 2).dim(w);
      CHECK(count[{d, static_cast<int>(w)}] == want);
    }
  auto gw = ctx.grW_sample(5);
  std::map<std::pair<long, long>, int> wc;
  for (const auto& g : gw) ++wc[{g.degree, ctx.weight_ticks(g)}];
  for (long t = 0; t <= 5; ++t)
    for (long s = 0; s <= t; ++s)
      CHECK(wc[{s, t}] == f.eng.E_W(s).dim(t) - f.eng.E_W(s + 1).dim(t));
}
