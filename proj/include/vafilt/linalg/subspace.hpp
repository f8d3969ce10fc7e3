#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vafilt/core/errors.hpp"
#include "vafilt/linalg/ambient.hpp"
#include "vafilt/linalg/slice_basis.hpp"

namespace vafilt {

/// A vector of one subspace missing from another, for reports.
struct Witness {
  Ambient::Key key = 0;
  std::string weight;
  std::string vector;
};

/// Graded subspace of a truncated ambient, one echelon basis per weight slice.
template <class Tag>
class GradedSubspace {
 public:
  using Vec = LinComb<Tag>;
  using Key = Ambient::Key;

  GradedSubspace() = default;
  explicit GradedSubspace(std::shared_ptr<const Ambient> amb) : amb_(std::move(amb)) {
    for (Key k : amb_->keys()) slices_.emplace(k, SliceBasis(amb_->width(k)));
  }
  static GradedSubspace full(std::shared_ptr<const Ambient> amb) {
    GradedSubspace s(amb);
    for (Key k : amb->keys()) {
      int n = amb->width(k);
      for (int c = 0; c < n; ++c) {
        DenseRow row(n);
        row[c] = 1;
        s.slices_.at(k).insert(std::move(row));
      }
    }
    return s;
  }

  const Ambient& ambient() const { return *amb_; }
  const std::shared_ptr<const Ambient>& ambient_ptr() const { return amb_; }
  const SliceBasis& slice(Key k) const {
    static const SliceBasis empty;
    auto it = slices_.find(k);
    return it == slices_.end() ? empty : it->second;
  }
  SliceBasis& slice_mut(Key k) { return slices_.at(k); }
  int dim(Key k) const { return slice(k).rank(); }
  int total_dim() const {
    int d = 0;
    for (const auto& [k, s] : slices_) d += s.rank();
    return d;
  }

  /// Homogeneous key of v; nullopt for zero. Throws on mixed weights or labels above the cutoff.
  std::optional<Key> key_of(const Vec& v) const {
    std::optional<Key> key;
    for (const auto& [l, c] : v.terms()) {
      auto loc = locate(l);
      if (key && *key != loc.first)
        throw NonHomogeneous("vector mixes weights " + amb_->weight_str(*key) + " and " +
                             amb_->weight_str(loc.first));
      key = loc.first;
    }
    return key;
  }

  DenseRow to_row(const Vec& v, Key k) const {
    DenseRow row(static_cast<std::size_t>(amb_->width(k)));
    for (const auto& [l, c] : v.terms()) {
      auto loc = locate(l);
      if (loc.first == k) row[static_cast<std::size_t>(loc.second)] = c;
    }
    return row;
  }
  Vec from_row(const DenseRow& row, Key k) const {
    Vec v;
    const auto& labels = amb_->slice(k);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) v.add(labels[i], row[i]);
    return v;
  }

  /// Adds a homogeneous vector; returns true when the dimension grows.
  bool insert(const Vec& v) {
    auto k = key_of(v);
    if (!k) return false;
    return slices_.at(*k).insert(to_row(v, *k));
  }

  bool contains(const Vec& v) const {
    for (const auto& [k, part] : split(v))
      if (!slice(k).contains(to_row(part, k))) return false;
    return true;
  }

  /// Canonical representative of v modulo this subspace.
  Vec reduce(const Vec& v) const {
    Vec out;
    for (const auto& [k, part] : split(v)) out += from_row(slice(k).reduce(to_row(part, k)), k);
    return out;
  }

  std::vector<Vec> basis(Key k) const {
    std::vector<Vec> out;
    for (const auto& r : slice(k).rows()) out.push_back(from_row(r, k));
    return out;
  }

  std::optional<Key> min_nonzero_key() const {
    for (const auto& [k, s] : slices_)
      if (s.rank() > 0) return k;
    return std::nullopt;
  }

  /// A basis vector of other not in this subspace, restricted to keys <= max_key.
  std::optional<Witness> missing_from(const GradedSubspace& other,
                                      std::optional<Key> max_key = std::nullopt) const {
    for (const auto& [k, s] : other.slices_) {
      if (max_key && k > *max_key) break;
      for (const auto& r : s.rows())
        if (!slice(k).contains(r)) return Witness{k, amb_->weight_str(k), describe(from_row(r, k))};
    }
    return std::nullopt;
  }
  /// other is a subspace of this.
  bool includes(const GradedSubspace& other, std::optional<Key> max_key = std::nullopt) const {
    return !missing_from(other, max_key);
  }
  bool equals(const GradedSubspace& other, std::optional<Key> max_key = std::nullopt) const {
    return includes(other, max_key) && other.includes(*this, max_key);
  }

  std::string describe(const Vec& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [l, c] : v.terms()) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + amb_->label_name(l);
    }
    return s;
  }

  std::map<Key, Vec> split(const Vec& v) const {
    std::map<Key, Vec> parts;
    for (const auto& [l, c] : v.terms()) parts[locate(l).first].add(l, c);
    return parts;
  }

 private:
  std::pair<Key, int> locate(Label l) const {
    auto loc = amb_->locate(l);
    if (!loc)
      throw CutoffExceeded("vector component " + amb_->label_name(l) +
                           " lies above the ambient cutoff " + amb_->weight_str(amb_->max_key()));
    return *loc;
  }

  std::shared_ptr<const Ambient> amb_;
  std::map<Key, SliceBasis> slices_;
};

using AlgebraSubspace = GradedSubspace<AlgebraTag>;
using ModuleSubspace = GradedSubspace<ModuleTag>;

/// Echelon bases of the span; every vector must be weight-homogeneous.
template <class Tag>
GradedSubspace<Tag> reduce_spanning(std::shared_ptr<const Ambient> amb,
                                    const std::vector<LinComb<Tag>>& vectors) {
  GradedSubspace<Tag> s(std::move(amb));
  for (const auto& v : vectors) s.insert(v);
  return s;
}

template <class Tag>
bool member(const LinComb<Tag>& v, const GradedSubspace<Tag>& s) {
  return s.contains(v);
}

template <class Tag>
GradedSubspace<Tag> subspace_sum(const GradedSubspace<Tag>& a, const GradedSubspace<Tag>& b) {
  GradedSubspace<Tag> s(a.ambient_ptr());
  for (Ambient::Key k : a.ambient().keys()) s.slice_mut(k) = slice_sum(a.slice(k), b.slice(k));
  return s;
}

template <class Tag>
GradedSubspace<Tag> subspace_intersection(const GradedSubspace<Tag>& a,
                                          const GradedSubspace<Tag>& b) {
  GradedSubspace<Tag> s(a.ambient_ptr());
  for (Ambient::Key k : a.ambient().keys())
    s.slice_mut(k) = slice_intersection(a.slice(k), b.slice(k));
  return s;
}

/// dim(A_k / B_k) per key; throws ContainmentViolation with a witness unless B is inside A.
template <class Tag>
std::map<Ambient::Key, int> quotient_dims(const GradedSubspace<Tag>& a,
                                          const GradedSubspace<Tag>& b) {
  if (auto w = a.missing_from(b))
    throw ContainmentViolation("quotient undefined: " + w->vector + " (weight " + w->weight +
                               ") lies outside the larger subspace");
  std::map<Ambient::Key, int> out;
  for (Ambient::Key k : a.ambient().keys()) out[k] = a.dim(k) - b.dim(k);
  return out;
}

/// Labels at non-pivot columns: a graded complement spanned by basis vectors.
template <class Tag>
std::vector<Label> pivot_complement(const GradedSubspace<Tag>& s, Ambient::Key k) {
  std::vector<Label> out;
  const auto& labels = s.ambient().slice(k);
  for (int c : s.slice(k).free_columns()) out.push_back(labels[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace vafilt
