#include "vafilt/module/table_file.hpp"

#include <fstream>

#include "vafilt/core/errors.hpp"

namespace vafilt {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "vafilt-table";

std::string int_text(const json& j, const std::string& what) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  throw ValidationError(what + " must be an integer or an integer string");
}

template <class Tag, class NameLookup>
LinComb<Tag> parse_result(const json& arr, NameLookup&& lookup, const std::string& where) {
  if (!arr.is_array()) throw ValidationError(where + ": result must be an array");
  LinComb<Tag> out;
  for (const auto& term : arr) {
    if (!term.is_array() || term.size() != 3)
      throw ValidationError(where + ": each result term is [label, num, den]");
    Label l = lookup(term[0].get<std::string>());
    Rational c = Rational::parse(int_text(term[1], where + " numerator") + "/" +
                                 int_text(term[2], where + " denominator"));
    out.add(l, c);
  }
  return out;
}

ordered_json coefficient_json(const Rational& c) {
  auto as_json = [](const std::string& s) -> ordered_json {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::out_of_range&) {
    }
    return s;
  };
  return ordered_json::array({ordered_json(), as_json(c.numerator()), as_json(c.denominator())});
}

template <class Tag, class Namer>
ordered_json result_json(const LinComb<Tag>& v, Namer&& name) {
  ordered_json arr = ordered_json::array();
  for (const auto& [l, c] : v.terms()) {
    ordered_json term = coefficient_json(c);
    term[0] = name(l);
    arr.push_back(term);
  }
  return arr;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

}  // namespace

LoadedTable load_table(const json& doc, bool validate) {
  try {
    if (require(doc, "format", "table").get<std::string>() != kFormat)
      throw ValidationError("table: unknown format tag");
    int T = require(doc, "period", "table").get<int>();
    if (T < 1) throw ValidationError("table: period must be positive");
    const json& alg = require(doc, "algebra", "table");
    int cutoff = require(alg, "cutoff", "algebra").get<int>();
    std::vector<TableVertexAlgebra::LabelSpec> specs;
    for (const auto& l : require(alg, "labels", "algebra"))
      specs.push_back({require(l, "name", "label").get<std::string>(),
                       require(l, "weight", "label").get<int>(),
                       require(l, "sector", "label").get<int>()});
    LoadedTable out;
    out.algebra = std::make_unique<TableVertexAlgebra>(
        T, cutoff, alg.value("name", std::string("table")), specs,
        require(alg, "vacuum", "algebra").get<std::string>());
    TableVertexAlgebra& va = *out.algebra;
    auto va_label = [&](const std::string& name) {
      auto l = va.find(name);
      if (!l) throw ValidationError("unknown algebra label '" + name + "'");
      return *l;
    };
    for (const auto& e : require(alg, "products", "algebra")) {
      Label u = va_label(require(e, "u", "product").get<std::string>());
      Label v = va_label(require(e, "v", "product").get<std::string>());
      long n = require(e, "n", "product").get<long>();
      std::string where = "product " + va.name(u) + "_(" + std::to_string(n) + ") " + va.name(v);
      long wt = static_cast<long>(va.weight(u)) + va.weight(v) - n - 1;
      if (wt < 0 || wt > cutoff) throw ValidationError(where + ": result weight outside 0..cutoff");
      va.set_product(u, n, v, parse_result<AlgebraTag>(require(e, "result", where), va_label, where));
    }
    if (validate) validate_algebra(va);

    if (doc.contains("module")) {
      const json& mj = doc.at("module");
      long mcut = HalfWeight::parse(require(mj, "cutoff", "module").get<std::string>(), T).ticks();
      std::vector<TableModule::LabelSpec> mspecs;
      for (const auto& l : require(mj, "labels", "module"))
        mspecs.push_back({require(l, "name", "module label").get<std::string>(),
                          HalfWeight::parse(require(l, "weight", "module label").get<std::string>(), T)
                              .ticks()});
      out.module = std::make_unique<TableModule>(va, mcut, mj.value("name", std::string("table-module")),
                                                 mspecs);
      TableModule& mod = *out.module;
      auto w_label = [&](const std::string& name) {
        auto l = mod.find(name);
        if (!l) throw ValidationError("unknown module label '" + name + "'");
        return *l;
      };
      for (const auto& e : require(mj, "actions", "module")) {
        Label u = va_label(require(e, "u", "action").get<std::string>());
        Label w = w_label(require(e, "w", "action").get<std::string>());
        const json& mode = require(e, "mode", "action");
        if (!mode.is_array() || mode.size() != 2)
          throw ValidationError("action mode must be [base, sector]");
        ModeIndex m(mode[0].get<long>(), mode[1].get<int>(), T);
        std::string where = "action " + va.name(u) + "_(" + m.str() + ") " + mod.name(w);
        long t = T * static_cast<long>(va.weight(u)) + mod.weight_ticks(w) - m.ticks() - T;
        if (t < 0 || t > mcut) throw ValidationError(where + ": result weight outside the cutoff");
        mod.set_action(u, m, w, parse_result<ModuleTag>(require(e, "result", where), w_label, where));
      }
      if (validate) validate_module(mod);
    }
    return out;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed table: ") + e.what());
  } catch (const SectorMismatch& e) {
    throw ValidationError(e.what());
  }
}

LoadedTable load_table_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("table file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_table(doc, validate);
}

ordered_json export_table(const VertexAlgebra& va, const TwistedModule* mod, int algebra_cutoff,
                          long module_cutoff_ticks) {
  const int T = va.period();
  if (algebra_cutoff > va.cutoff())
    throw CutoffExceeded("export cutoff above the algebra cutoff");
  ordered_json doc;
  doc["format"] = kFormat;
  doc["period"] = T;

  ordered_json alg;
  alg["name"] = va.id();
  alg["cutoff"] = algebra_cutoff;
  alg["vacuum"] = va.name(va.vacuum());
  ordered_json labels = ordered_json::array();
  for (long w = 0; w <= algebra_cutoff; ++w)
    for (Label l : va.basis(w))
      labels.push_back({{"name", va.name(l)}, {"weight", w}, {"sector", va.sector(l)}});
  alg["labels"] = labels;
  ordered_json products = ordered_json::array();
  auto va_name = [&](Label l) { return va.name(l); };
  for (long a = 0; a <= algebra_cutoff; ++a)
    for (Label u : va.basis(a))
      for (long b = 0; b <= algebra_cutoff; ++b)
        for (Label v : va.basis(b))
          for (long n = a + b - 1; n >= a + b - 1 - algebra_cutoff; --n) {
            VAElement r = va.product_basis(u, n, v);
            if (r.is_zero()) continue;
            products.push_back({{"u", va.name(u)}, {"n", n}, {"v", va.name(v)},
                                {"result", result_json(r, va_name)}});
          }
  alg["products"] = products;
  doc["algebra"] = alg;

  if (mod) {
    if (module_cutoff_ticks > mod->cutoff_ticks())
      throw CutoffExceeded("export cutoff above the module cutoff");
    ordered_json mj;
    mj["name"] = mod->id();
    mj["cutoff"] = ticks_str(module_cutoff_ticks, T);
    ordered_json mlabels = ordered_json::array();
    for (long t = 0; t <= module_cutoff_ticks; ++t)
      for (Label w : mod->basis(t))
        mlabels.push_back({{"name", mod->name(w)}, {"weight", ticks_str(t, T)}});
    mj["labels"] = mlabels;
    ordered_json actions = ordered_json::array();
    auto w_name = [&](Label l) { return mod->name(l); };
    for (long a = 0; a <= algebra_cutoff; ++a)
      for (Label u : va.basis(a))
        for (long c = 0; c <= module_cutoff_ticks; ++c)
          for (Label w : mod->basis(c))
            for (long mu = T * a + c - T; mu >= T * a + c - T - module_cutoff_ticks; --mu) {
              if (floor_mod(mu, T) != va.sector(u)) continue;
              ModeIndex m = ModeIndex::from_ticks(mu, T);
              TwistedVector r = mod->mode_basis(u, m, w);
              if (r.is_zero()) continue;
              actions.push_back({{"u", va.name(u)},
                                 {"mode", ordered_json::array({m.base(), m.sector()})},
                                 {"w", mod->name(w)},
                                 {"result", result_json(r, w_name)}});
            }
    mj["actions"] = actions;
    doc["module"] = mj;
  }
  return doc;
}

}  // namespace vafilt
