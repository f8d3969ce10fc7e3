#pragma once

#include <map>
#include <tuple>

#include "vafilt/module/twisted_module.hpp"

namespace vafilt {

/// Twisted module given by explicit action constants u_m w. Missing entries are zero.
class TableModule final : public TwistedModule {
 public:
  struct LabelSpec {
    std::string name;
    long weight_ticks;
  };

  TableModule(const VertexAlgebra& va, long cutoff_ticks, std::string name,
              const std::vector<LabelSpec>& labels);

  std::string id() const override { return name_; }
  const VertexAlgebra& algebra() const override { return va_; }
  TwistedVector mode_basis(Label u, const ModeIndex& m, Label w) const override;

  void set_action(Label u, const ModeIndex& m, Label w, TwistedVector value);
  const std::map<std::tuple<Label, long, Label>, TwistedVector>& entries() const { return actions_; }

 private:
  const VertexAlgebra& va_;
  std::string name_;
  std::map<std::tuple<Label, long, Label>, TwistedVector> actions_;
};

/// V regarded as an untwisted module over itself (period 1 only).
class AdjointModule final : public TwistedModule {
 public:
  explicit AdjointModule(const VertexAlgebra& va);
  std::string id() const override { return va_.id() + "/adjoint"; }
  const VertexAlgebra& algebra() const override { return va_; }
  TwistedVector mode_basis(Label u, const ModeIndex& m, Label w) const override;

 private:
  const VertexAlgebra& va_;
};

/// Checks grading, vacuum action and the twisted commutator formula on every
/// basis triple whose intermediate weights stay within both cutoffs.
/// Throws ValidationError naming the identity and triple.
void validate_module(const TwistedModule& mod);

}  // namespace vafilt
