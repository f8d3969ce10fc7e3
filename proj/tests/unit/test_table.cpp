#include <doctest.h>

#include "vafilt/core/errors.hpp"
#include "vafilt/filtration/engine.hpp"
#include "vafilt/module/fock_module.hpp"
#include "vafilt/module/mode_calculus.hpp"
#include "vafilt/module/table_file.hpp"
#include "vafilt/va/heisenberg.hpp"

using namespace vafilt;
using nlohmann::json;

namespace {

std::map<std::string, Rational> by_name(const VertexAlgebra& va, const VAElement& v) {
  std::map<std::string, Rational> out;
  for (const auto& [l, c] : v.terms()) out[va.name(l)] = c;
  return out;
}

std::map<std::string, Rational> by_name(const TwistedModule& m, const TwistedVector& v) {
  std::map<std::string, Rational> out;
  for (const auto& [l, c] : v.terms()) out[m.name(l)] = c;
  return out;
}

json heisenberg_doc(int v_cut, long w_ticks) {
  Heisenberg va(2, 8);
  FockModule mod(va, 30);
  return json::parse(export_table(va, &mod, v_cut, w_ticks).dump());
}

json& product_entry(json& doc, const std::string& u, long n, const std::string& v) {
  for (auto& e : doc["algebra"]["products"])
    if (e["u"] == u && e["n"] == n && e["v"] == v) return e;
  throw std::runtime_error("no entry");
}

}  // namespace

TEST_CASE("an exported table reloads with the same structure constants") {
  Heisenberg va(2, 8);
  FockModule mod(va, 30);
  auto doc = export_table(va, &mod, 3, 6);
  LoadedTable t = load_table(json::parse(doc.dump()));
  REQUIRE(t.module);
  CHECK(t.algebra->period() == 2);
  for (long a = 0; a <= 3; ++a)
    for (Label u : va.basis(a)) {
      const Label tu = *t.algebra->find(va.name(u));
      CHECK(t.algebra->weight(tu) == a);
      CHECK(t.algebra->sector(tu) == va.sector(u));
      for (long b = 0; b <= 3; ++b)
        for (Label v : va.basis(b))
          for (long n = -3; n <= 4; ++n) {
            long wt = a + b - n - 1;
            if (wt < 0 || wt > 3) continue;
            const Label tv = *t.algebra->find(va.name(v));
            CHECK(by_name(*t.algebra, product_mode(*t.algebra, VAElement::basis(tu), n, VAElement::basis(tv))) ==
                  by_name(va, product_mode(va, VAElement::basis(u), n, VAElement::basis(v))));
          }
      for (long s = 0; s <= 6; ++s)
        for (Label w : mod.basis(s))
          for (long q = -3; q <= 3; ++q) {
            ModeIndex m(q, va.sector(u), 2);
            long t2 = 2 * a + s - m.ticks() - 2;
            if (t2 < 0 || t2 > 6) continue;
            const Label tw = *t.module->find(mod.name(w));
            CHECK(by_name(*t.module, module_mode(*t.module, VAElement::basis(tu), m, TwistedVector::basis(tw))) ==
                  by_name(mod, module_mode(mod, VAElement::basis(u), m, TwistedVector::basis(w))));
          }
    }
  // exporting the reloaded table reproduces the document
  CHECK(export_table(*t.algebra, t.module.get(), 3, 6).dump() == doc.dump());
}

TEST_CASE("filtrations agree between the table and the built-in backend") {
  Heisenberg va(2, 8);
  FockModule mod(va, 30);
  LoadedTable t = load_table(json::parse(export_table(va, &mod, 4, 8).dump()));
  FiltrationEngine a(va, &mod, 4, 8), b(*t.algebra, t.module.get(), 4, 8);
  for (long n = 0; n <= 5; ++n)
    for (long k = 0; k <= 8; ++k) CHECK(a.E_W(n).dim(k) == b.E_W(n).dim(k));
  for (long k = 0; k <= 8; ++k) CHECK(a.C_W(2).dim(k) == b.C_W(2).dim(k));
}

TEST_CASE("a corrupted structure constant is rejected") {
  json doc = heisenberg_doc(3, 6);
  product_entry(doc, "h(-1)1", 1, "h(-1)1")["result"] = json::array({json::array({"1", 2, 1})});
  CHECK_THROWS_AS(load_table(doc), ValidationError);
  CHECK_NOTHROW(load_table(doc, false));
}

TEST_CASE("structural problems are validation errors") {
  json base = heisenberg_doc(2, 4);
  {
    json d = base;
    d["format"] = "something-else";
    CHECK_THROWS_AS(load_table(d), ValidationError);
  }
  {
    json d = base;
    d["algebra"]["vacuum"] = "nope";
    CHECK_THROWS_AS(load_table(d), ValidationError);
  }
  {
    json d = base;
    d["algebra"]["products"].push_back({{"u", "h(-1)1"}, {"n", 0}, {"v", "ghost"}, {"result", json::array()}});
    CHECK_THROWS_AS(load_table(d), ValidationError);
  }
  {
    // wrong weight: h(-1)1 _(-1) 1 has weight 1, not 2
    json d = base;
    product_entry(d, "h(-1)1", -1, "1")["result"] = json::array({json::array({"h(-2)1", 1, 1})});
    CHECK_THROWS_AS(load_table(d), ValidationError);
  }
}

TEST_CASE("the one-dimensional algebra with its trivial module") {
  json doc = {
      {"format", "vafilt-table"},
      {"period", 1},
      {"algebra",
       {{"name", "C1"},
        {"cutoff", 3},
        {"vacuum", "1"},
        {"labels", json::array({{{"name", "1"}, {"weight", 0}, {"sector", 0}}})},
        {"products", json::array({{{"u", "1"}, {"n", -1}, {"v", "1"}, {"result", json::array({json::array({"1", 1, 1})})}}})}}},
      {"module",
       {{"name", "C1-trivial"},
        {"cutoff", "3"},
        {"labels", json::array({{{"name", "w"}, {"weight", "0"}}})},
        {"actions", json::array({{{"u", "1"}, {"mode", json::array({-1, 0})}, {"w", "w"}, {"result", json::array({json::array({"w", 1, 1})})}}})}}}};
  LoadedTable t = load_table(doc);
  REQUIRE(t.module);
  FiltrationEngine eng(*t.algebra, t.module.get(), 3, 3);
  CHECK(eng.E_V(0).total_dim() == 1);
  CHECK(eng.E_V(1).total_dim() == 0);
  CHECK(eng.C_V(2).total_dim() == 0);
  CHECK(eng.E_W(0).total_dim() == 1);
  CHECK(eng.E_W(1).total_dim() == 0);
  CHECK(eng.C_W(2).total_dim() == 0);
}
