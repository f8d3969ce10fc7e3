#pragma once

#include <memory>
#include <string>

#include "vafilt/core/errors.hpp"
#include "vafilt/core/rational.hpp"
#include "vafilt/module/twisted_module.hpp"

namespace vafilt {

/// A vertex algebra with its module and the cutoffs a run works to. The
/// algebra and module may be truncated higher than the run cutoffs so that
/// mode-calculus checks have room for intermediate vectors.
struct Backend {
  std::string id;
  std::unique_ptr<VertexAlgebra> algebra;
  std::unique_ptr<TwistedModule> module;  ///< null for algebra-only tables
  int v_cutoff = 0;
  long w_cutoff_ticks = 0;
};

/// heisenberg-T2, heisenberg-T1 or table:<path>. The cutoff is a weight
/// "p/q" with q dividing the period. V is reported up to its integer part.
Backend make_backend(const std::string& id, const std::string& cutoff);

}  // namespace vafilt
