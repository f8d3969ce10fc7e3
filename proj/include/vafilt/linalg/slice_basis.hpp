#pragma once

#include <vector>

#include "vafilt/core/rational.hpp"

namespace vafilt {

using DenseRow = std::vector<Rational>;

/// Reduced row echelon basis of a subspace of Q^ncols, kept sorted by pivot.
/// Rows are in fully reduced form, so equal subspaces have equal bases.
class SliceBasis {
 public:
  explicit SliceBasis(int ncols = 0) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == ncols_; }
  const std::vector<DenseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Adds a row to the span; returns true when the rank grows.
  bool insert(DenseRow row);
  /// Row minus its projection along the pivots: zero at every pivot column.
  DenseRow reduce(DenseRow row) const;
  bool contains(const DenseRow& row) const;
  bool contains(const SliceBasis& other) const;
  /// Columns that are not pivots, ascending.
  std::vector<int> free_columns() const;

  friend bool operator==(const SliceBasis&, const SliceBasis&) = default;

 private:
  int ncols_;
  std::vector<DenseRow> rows_;
  std::vector<int> pivots_;
};

bool is_zero_row(const DenseRow& row);

/// Span of the union of two slices.
SliceBasis slice_sum(const SliceBasis& a, const SliceBasis& b);
/// Intersection via the Zassenhaus construction.
SliceBasis slice_intersection(const SliceBasis& a, const SliceBasis& b);

}  // namespace vafilt
