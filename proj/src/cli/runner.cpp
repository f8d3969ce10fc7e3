#include "vafilt/cli/runner.hpp"

#include <algorithm>
#include <memory>

#include "vafilt/cli/backends.hpp"
#include "vafilt/filtration/relations.hpp"
#include "vafilt/module/mode_grid.hpp"
#include "vafilt/module/table_file.hpp"

namespace vafilt {

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> suites{"mode", "relations", "lemmas", "gr", "zhu", "span"};
  return suites;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& cfg, const Backend& b) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["backend"] = cfg.backend;
  j["period"] = b.algebra->period();
  j["cutoff"] = Rational::parse(cfg.cutoff).str();
  j["v_cutoff"] = b.v_cutoff;
  if (b.module) j["w_cutoff"] = ticks_str(b.w_cutoff_ticks, b.algebra->period());
  if (cfg.command == "filtration") j["families"] = cfg.families;
  if (cfg.command == "check") j["suite"] = cfg.suite;
  j["n_max"] = cfg.n_max;
  j["seed"] = cfg.seed;
  if (cfg.drop_generator) j["drop_generator"] = *cfg.drop_generator;
  if (cfg.faults.flip_product_sign) j["fault"] = "flip_product_sign";
  return j;
}

CheckOutcome no_module(const std::string& name) {
  return {name, CheckStatus::Unchecked, "backend has no module", std::nullopt};
}

template <class Tag>
FamilyTable quotient_table(std::string name, long n, const GradedSubspace<Tag>& big,
                           const GradedSubspace<Tag>& small) {
  FamilyTable t{std::move(name), n, {}};
  for (const auto& [k, d] : quotient_dims(big, small))
    t.slices.push_back({big.ambient().weight_str(k), d, {}});
  return t;
}

void run_filtration(const RunConfig& cfg, const Backend& b, FiltrationEngine& eng, Report& r) {
  if (cfg.families.empty()) throw ConfigError("filtration needs --families (E_V, C_V, E_W, C_W)");
  for (const auto& f : cfg.families) {
    const bool w_side = f == "E_W" || f == "C_W";
    if (f != "E_V" && f != "C_V" && !w_side)
      throw ConfigError("unknown family '" + f + "' (expected E_V, C_V, E_W or C_W)");
    if (w_side && !b.module) throw ConfigError("family " + f + " needs a backend with a module");
    const bool is_e = f[0] == 'E';
    for (long n = is_e ? 0 : 2; n <= cfg.n_max; ++n) {
      if (f == "E_V") r.families.push_back(family_table(f, n, eng.E_V(n)));
      if (f == "C_V") r.families.push_back(family_table(f, n, eng.C_V(n)));
      if (f == "E_W") r.families.push_back(family_table(f, n, eng.E_W(n)));
      if (f == "C_W") r.families.push_back(family_table(f, n, eng.C_W(n)));
    }
  }
  r.certificates = eng.certificates();
}

void run_check(const RunConfig& cfg, const Backend& b, FiltrationEngine& eng, Report& r) {
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = check_suites();
  } else {
    if (std::find(check_suites().begin(), check_suites().end(), cfg.suite) == check_suites().end())
      throw ConfigError("unknown suite '" + cfg.suite +
                        "' (expected all, mode, relations, lemmas, gr, zhu or span)");
    suites = {cfg.suite};
  }
  const bool has_w = b.module != nullptr;
  std::unique_ptr<GradedContext> ctx;
  auto graded = [&]() -> GradedContext& {
    if (!ctx) ctx = std::make_unique<GradedContext>(eng, cfg.faults);
    return *ctx;
  };
  for (const auto& s : suites) {
    if (s == "mode") {
      if (has_w) r.append(check_mode_grid(*b.module, GridOptions{}, cfg.exec));
      else r.checks.push_back(no_module("twisted commutator formula"));
    } else if (s == "relations") {
      RelationOptions ro;
      ro.n_max = std::max(2L, cfg.n_max);
      ro.containment_n_max = std::min(ro.n_max, ro.containment_n_max);
      ro.module_side = has_w;
      r.append(verify_relations(eng, ro).checks);
      if (has_w) {
        auto tables = cofiniteness_report(eng, ro.n_max);
        r.families.insert(r.families.end(), tables.begin(), tables.end());
      }
    } else if (s == "lemmas") {
      if (has_w) r.append(check_small_lemmas(eng, cfg.exec));
      else r.checks.push_back(no_module("products of modes at -2"));
    } else if (s == "gr") {
      GrOptions o;
      o.v_weight = b.v_cutoff;
      o.w_ticks = b.w_cutoff_ticks;
      r.append(check_vpa_axioms(graded(), o));
      if (has_w) r.append(check_twisted_vpa_module_axioms(graded(), o));
    } else if (s == "zhu") {
      r.families.push_back(quotient_table("V/C_V", 2, eng.full_V(), eng.C_V(2)));
      r.append(check_zhu_poisson(graded(), b.v_cutoff));
    } else if (s == "span") {
      auto gen = check_generation(graded(), has_w ? b.w_cutoff_ticks : 0, b.v_cutoff);
      r.append(gen.checks);
      if (has_w) {
        auto sp = check_generating_spanning(graded(), b.w_cutoff_ticks, cfg.drop_generator);
        r.append(sp.checks);
      }
    }
  }
}

void run_gr(const RunConfig& cfg, const Backend& b, FiltrationEngine& eng, Report& r) {
  GradedContext ctx(eng, cfg.faults);
  const int T = eng.period();
  for (long d = 0; d <= static_cast<long>(T) * b.v_cutoff; d += T)
    r.families.push_back(quotient_table("gr_V", d, ctx.E_V(d), ctx.E_V(d + T)));
  const bool has_w = b.module != nullptr;
  if (has_w)
    for (long s = 0; s <= b.w_cutoff_ticks; ++s)
      r.families.push_back(quotient_table("gr_W", s, ctx.E_W(s), ctx.E_W(s + 1)));
  auto gen = check_generation(ctx, has_w ? b.w_cutoff_ticks : 0, b.v_cutoff);
  r.append(gen.checks);
}

void run_span(const RunConfig& cfg, const Backend& b, FiltrationEngine& eng, Report& r) {
  if (!b.module) throw ConfigError("span needs a backend with a module");
  GradedContext ctx(eng, cfg.faults);
  auto sp = check_generating_spanning(ctx, b.w_cutoff_ticks, cfg.drop_generator);
  r.append(sp.checks);
  r.families.insert(r.families.end(), sp.tables.begin(), sp.tables.end());
}

}  // namespace

Report run(const RunConfig& cfg) {
  if (cfg.cutoff.empty()) throw ConfigError("--cutoff is required");
  Backend b = make_backend(cfg.backend, cfg.cutoff);
  FiltrationEngine eng(*b.algebra, b.module.get(), b.v_cutoff, b.w_cutoff_ticks, cfg.exec);
  Report r;
  r.config = config_json(cfg, b);
  if (cfg.command == "filtration") run_filtration(cfg, b, eng, r);
  else if (cfg.command == "check") run_check(cfg, b, eng, r);
  else if (cfg.command == "gr") run_gr(cfg, b, eng, r);
  else if (cfg.command == "span") run_span(cfg, b, eng, r);
  else throw ConfigError("unknown command '" + cfg.command + "'");
  return r;
}

std::string export_backend_table(const RunConfig& cfg) {
  Backend b = make_backend(cfg.backend, cfg.cutoff);
  return export_table(*b.algebra, b.module.get(), b.v_cutoff, b.w_cutoff_ticks).dump(2) + "\n";
}

std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace vafilt
