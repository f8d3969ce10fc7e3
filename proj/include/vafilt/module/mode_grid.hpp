#pragma once

#include <vector>

#include "vafilt/module/twisted_module.hpp"
#include "vafilt/parallel/slice_kernel.hpp"
#include "vafilt/report/report.hpp"

namespace vafilt {

struct GridOptions {
  int uv_weight = 3;   ///< basis u, v of weight up to this
  long w_ticks = 6;    ///< basis w of weight up to this (ticks)
  int mode_range = 3;  ///< integer parts m, n in [-mode_range, mode_range]
};

/// Commutator formula, translation compatibility and both iterate expansions
/// on every basis triple of the grid. Cases whose intermediate vectors leave
/// the truncation are counted as skipped.
std::vector<CheckOutcome> check_mode_grid(const TwistedModule& mod, const GridOptions& opts,
                                          const ExecConfig& exec);

}  // namespace vafilt
