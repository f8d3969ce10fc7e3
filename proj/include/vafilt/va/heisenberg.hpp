#pragma once

#include <map>
#include <utility>

#include "vafilt/core/combinatorics.hpp"
#include "vafilt/core/memo.hpp"
#include "vafilt/va/vertex_algebra.hpp"

namespace vafilt {

/// Rank one Heisenberg vertex algebra with <h,h> = 1. The basis vector
/// h(-k1)...h(-kr)1 (k1 >= ... >= kr >= 1) has weight sum(k) and, for T = 2,
/// sector r mod 2 under h -> -h. For T = 1 the automorphism is trivial.
class Heisenberg final : public VertexAlgebra {
 public:
  Heisenberg(int period, int cutoff);

  std::string id() const override;
  VAElement product_basis(Label u, long n, Label v) const override;

  Label generator() const { return generator_; }
  int generator_sector() const { return period() == 2 ? 1 : 0; }
  const Partition& partition(Label l) const { return parts_.at(static_cast<std::size_t>(l)); }
  std::optional<Label> find_partition(const Partition& p) const;
  /// u = h(-k) u' with k the largest part.
  std::pair<long, Label> split_leftmost(Label u) const;
  /// h_n v for a basis label v.
  VAElement generator_mode(long n, Label v) const;
  VAElement generator_mode(long n, const VAElement& v) const;

 private:
  struct Key {
    Label u;
    long n;
    Label v;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_mix(hash_mix(std::hash<int>()(k.u), std::hash<long>()(k.n)),
                      std::hash<int>()(k.v));
    }
  };

  VAElement compute_product(Label u, long n, Label v) const;

  std::vector<Partition> parts_;
  std::map<Partition, Label> by_partition_;
  Label generator_ = -1;
  mutable ConcurrentMemo<Key, VAElement, KeyHash> memo_;
};

/// Name of h(-k1)...h(-kr)1 with mode values printed as p/q when fractional.
std::string monomial_name(const Partition& ticks, int period, const std::string& vacuum);

}  // namespace vafilt
