#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vafilt/core/lin_comb.hpp"

namespace vafilt {

/// Label registry with an integer grade and a sector per label.
class GradedLabels {
 public:
  Label add(std::string name, long grade, int sector);
  std::size_t size() const { return names_.size(); }
  long grade(Label l) const { return grades_.at(static_cast<std::size_t>(l)); }
  int sector(Label l) const { return sectors_.at(static_cast<std::size_t>(l)); }
  const std::string& name(Label l) const { return names_.at(static_cast<std::size_t>(l)); }
  std::optional<Label> find(const std::string& name) const;
  /// Labels of the given grade in insertion order.
  const std::vector<Label>& at(long grade) const;

 private:
  std::vector<std::string> names_;
  std::vector<long> grades_;
  std::vector<int> sectors_;
  std::map<std::string, Label> by_name_;
  std::map<long, std::vector<Label>> by_grade_;
};

/// Truncated vertex algebra: graded basis up to a cutoff, an order-T
/// automorphism recorded as sector labels, and products u_n v on basis labels.
class VertexAlgebra {
 public:
  virtual ~VertexAlgebra() = default;
  virtual std::string id() const = 0;
  /// u_n v for basis labels. Callers guarantee the result weight lies in [0, cutoff].
  virtual VAElement product_basis(Label u, long n, Label v) const = 0;

  int period() const { return period_; }
  int cutoff() const { return cutoff_; }
  std::size_t size() const { return labels_.size(); }
  /// Basis of the weight slice; throws CutoffExceeded above the cutoff.
  const std::vector<Label>& basis(long weight) const;
  int weight(Label l) const { return static_cast<int>(labels_.grade(l)); }
  int sector(Label l) const { return labels_.sector(l); }
  const std::string& name(Label l) const { return labels_.name(l); }
  std::optional<Label> find(const std::string& name) const { return labels_.find(name); }
  Label vacuum() const { return vacuum_; }

 protected:
  VertexAlgebra(int period, int cutoff);
  GradedLabels labels_;
  Label vacuum_ = 0;

 private:
  int period_;
  int cutoff_;
};

/// u_n v extended bilinearly.
VAElement product_mode(const VertexAlgebra& va, const VAElement& u, long n, const VAElement& v);
/// D v = v_{-2} 1.
VAElement translate(const VertexAlgebra& va, const VAElement& v);
/// g acting by exp(2 pi i r / T) on sector r; only real eigenvalues (T <= 2) are representable.
VAElement automorphism_apply(const VertexAlgebra& va, const VAElement& v);
/// Components v^0, ..., v^{T-1} with v = sum v^r.
std::vector<VAElement> sector_decompose(const VertexAlgebra& va, const VAElement& v);
/// Weight if all terms share one, nullopt otherwise (including zero).
std::optional<int> homogeneous_weight(const VertexAlgebra& va, const VAElement& v);
std::optional<int> homogeneous_sector(const VertexAlgebra& va, const VAElement& v);
/// Largest weight appearing, or -1 for zero.
int max_weight(const VertexAlgebra& va, const VAElement& v);
/// Least N >= 0 such that u_i v = 0 for all i >= N.
long vanishing_order(const VertexAlgebra& va, const VAElement& u, const VAElement& v);
/// Human readable form "c*name + ...".
std::string format(const VertexAlgebra& va, const VAElement& v);

}  // namespace vafilt
