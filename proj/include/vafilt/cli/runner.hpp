#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vafilt/graded/gr_structures.hpp"
#include "vafilt/parallel/slice_kernel.hpp"
#include "vafilt/report/report.hpp"

namespace vafilt {

struct RunConfig {
  std::string command;  ///< filtration | check | gr | span | export-table
  std::string backend;
  std::string cutoff;
  std::vector<std::string> families;  ///< subset of E_V, C_V, E_W, C_W
  long n_max = 4;
  std::string suite = "all";  ///< all | mode | relations | lemmas | gr | zhu | span
  long seed = 0;
  ExecConfig exec;
  std::optional<std::size_t> drop_generator;  ///< span: leave this element of M out
  GrFaults faults;
};

/// Suites understood by the check subcommand, in execution order.
const std::vector<std::string>& check_suites();

/// Runs one subcommand and returns its report. Configuration and backend
/// problems propagate as Error.
Report run(const RunConfig& cfg);

/// export-table: structure constants of the backend up to the cutoff.
std::string export_backend_table(const RunConfig& cfg);

/// Deterministic JSON text of a report (two-space indent, trailing newline).
std::string report_json(const Report& r);

}  // namespace vafilt
