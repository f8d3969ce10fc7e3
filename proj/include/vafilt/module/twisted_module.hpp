#pragma once

#include <string>
#include <vector>

#include "vafilt/core/mode_index.hpp"
#include "vafilt/va/vertex_algebra.hpp"

namespace vafilt {

/// Truncated g-twisted V-module. Weights and modes are kept in 1/T steps
/// ("ticks"), so a module weight k/T is stored as k.
class TwistedModule {
 public:
  virtual ~TwistedModule() = default;
  virtual std::string id() const = 0;
  virtual const VertexAlgebra& algebra() const = 0;
  /// u_m w for basis labels with m in the coset of sector(u). Callers
  /// guarantee the result weight lies in [0, cutoff].
  virtual TwistedVector mode_basis(Label u, const ModeIndex& m, Label w) const = 0;

  int period() const { return algebra().period(); }
  long cutoff_ticks() const { return cutoff_ticks_; }
  std::size_t size() const { return labels_.size(); }
  /// Basis of the slice of weight ticks/T; throws CutoffExceeded above the cutoff.
  const std::vector<Label>& basis(long ticks) const;
  long weight_ticks(Label l) const { return labels_.grade(l); }
  const std::string& name(Label l) const { return labels_.name(l); }
  std::optional<Label> find(const std::string& name) const { return labels_.find(name); }

 protected:
  explicit TwistedModule(long cutoff_ticks) : cutoff_ticks_(cutoff_ticks) {}
  GradedLabels labels_;

 private:
  long cutoff_ticks_;
};

long max_weight_ticks(const TwistedModule& w, const TwistedVector& v);
std::optional<long> homogeneous_weight_ticks(const TwistedModule& w, const TwistedVector& v);
std::string format(const TwistedModule& w, const TwistedVector& v);

}  // namespace vafilt
