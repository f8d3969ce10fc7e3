// vafilt: filtrations of twisted modules over truncated vertex algebras.
//
//   vafilt filtration --backend heisenberg-T2 --cutoff 9/2 --families E_W,C_W --n-max 4
//   vafilt check --suite all --backend heisenberg-T2 --cutoff 7/2
//
// Exit status: 0 all checks pass, 1 a check failed, 2 configuration or backend error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vafilt/cli/runner.hpp"

namespace {

void add_common(CLI::App* sub, vafilt::RunConfig& cfg, std::string& out, int& threads, bool& serial) {
  sub->add_option("--backend", cfg.backend, "heisenberg-T2 | heisenberg-T1 | table:<path>")->required();
  sub->add_option("--cutoff", cfg.cutoff, "weight cutoff p/q")->required();
  sub->add_option("--output,-o", out, "write the JSON report here (default: stdout)");
  sub->add_option("--threads", threads, "OpenMP threads (0 = default)");
  sub->add_flag("--serial", serial, "run the serial reference path");
  sub->add_option("--seed", cfg.seed, "sample seed recorded in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filtrations of twisted modules over truncated vertex algebras"};
  app.require_subcommand(1);
  vafilt::RunConfig cfg;
  std::string out;
  int threads = 0;
  bool serial = false;
  std::string families;
  bool fault = false;
  long drop = -1;

  auto* filt = app.add_subcommand("filtration", "dimension tables of E_V, C_V, E_W, C_W");
  add_common(filt, cfg, out, threads, serial);
  filt->add_option("--families", families, "comma-separated subset of E_V,C_V,E_W,C_W")->required();
  filt->add_option("--n-max", cfg.n_max, "largest filtration index");

  auto* check = app.add_subcommand("check", "run verification suites");
  add_common(check, cfg, out, threads, serial);
  check->add_option("--suite", cfg.suite, "all | mode | relations | lemmas | gr | zhu | span");
  check->add_option("--n-max", cfg.n_max, "largest C_n(W) index in the relation checks");
  check->add_flag("--inject-product-fault", fault, "negate some gr products (must make checks fail)");
  check->add_option("--drop-generator", drop, "leave this element of M out of the spanning set");

  auto* gr = app.add_subcommand("gr", "graded dimensions of gr(V), gr(W) and their generation");
  add_common(gr, cfg, out, threads, serial);

  auto* span = app.add_subcommand("span", "spanning of W by ordered products over U and M");
  add_common(span, cfg, out, threads, serial);
  span->add_option("--drop-generator", drop, "leave this element of M out of the spanning set");

  auto* exp = app.add_subcommand("export-table", "write the backend's structure constants");
  add_common(exp, cfg, out, threads, serial);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.exec.mode = serial ? vafilt::Execution::Serial : vafilt::Execution::Parallel;
  cfg.exec.threads = threads;
  cfg.faults.flip_product_sign = fault;
  if (drop >= 0) cfg.drop_generator = static_cast<std::size_t>(drop);
  for (auto& f : CLI::detail::split(families, ','))
    if (!f.empty()) cfg.families.push_back(CLI::detail::trim_copy(f));

  auto emit = [&](const std::string& text) {
    if (out.empty()) {
      std::cout << text;
      return true;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
  };

  try {
    if (cfg.command == "export-table") {
      if (!emit(vafilt::export_backend_table(cfg))) throw vafilt::ConfigError("cannot write " + out);
      return 0;
    }
    vafilt::Report r = vafilt::run(cfg);
    if (!emit(vafilt::report_json(r))) throw vafilt::ConfigError("cannot write " + out);
    (out.empty() ? std::cerr : std::cout) << vafilt::to_text(r);
    return r.all_passed() ? 0 : 1;
  } catch (const vafilt::Error& e) {
    std::cerr << "vafilt: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "vafilt: " << e.what() << "\n";
    return 2;
  }
}
