#include "vafilt/linalg/slice_basis.hpp"

#include <algorithm>

#include "vafilt/core/errors.hpp"

namespace vafilt {

bool is_zero_row(const DenseRow& row) {
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x.is_zero(); });
}

DenseRow SliceBasis::reduce(DenseRow row) const {
  if (static_cast<int>(row.size()) != ncols_) throw Error("row length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    int p = pivots_[k];
    if (row[p].is_zero()) continue;
    Rational f = row[p];
    const DenseRow& b = rows_[k];
    for (int c = p; c < ncols_; ++c)
      if (!b[c].is_zero()) row[c] -= f * b[c];
  }
  return row;
}

bool SliceBasis::insert(DenseRow row) {
  if (full()) return false;
  row = reduce(std::move(row));
  auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
  if (lead == row.end()) return false;
  int p = static_cast<int>(lead - row.begin());
  Rational inv = Rational(1) / row[p];
  for (int c = p; c < ncols_; ++c)
    if (!row[c].is_zero()) row[c] *= inv;
  for (auto& b : rows_) {
    if (b[p].is_zero()) continue;
    Rational f = b[p];
    for (int c = p; c < ncols_; ++c)
      if (!row[c].is_zero()) b[c] -= f * row[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool SliceBasis::contains(const DenseRow& row) const { return is_zero_row(reduce(row)); }

bool SliceBasis::contains(const SliceBasis& other) const {
  if (other.ncols_ != ncols_) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<int> SliceBasis::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ncols_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SliceBasis slice_sum(const SliceBasis& a, const SliceBasis& b) {
  SliceBasis s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

SliceBasis slice_intersection(const SliceBasis& a, const SliceBasis& b) {
  const int n = a.ncols();
  if (b.ncols() != n) throw Error("slice width mismatch");
  // Rows (x | x) for x in a and (y | 0) for y in b; echelon rows with a
  // zero left half span the intersection in their right half.
  SliceBasis big(2 * n);
  for (const auto& r : a.rows()) {
    DenseRow row(2 * n);
    for (int c = 0; c < n; ++c) row[c] = row[n + c] = r[c];
    big.insert(std::move(row));
  }
  for (const auto& r : b.rows()) {
    DenseRow row(2 * n);
    for (int c = 0; c < n; ++c) row[c] = r[c];
    big.insert(std::move(row));
  }
  SliceBasis out(n);
  for (std::size_t k = 0; k < big.rows().size(); ++k) {
    if (big.pivots()[k] < n) continue;
    const DenseRow& r = big.rows()[k];
    out.insert(DenseRow(r.begin() + n, r.end()));
  }
  return out;
}

}  // namespace vafilt
