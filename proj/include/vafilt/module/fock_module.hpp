#pragma once

#include <map>

#include "vafilt/core/combinatorics.hpp"
#include "vafilt/core/memo.hpp"
#include "vafilt/module/twisted_module.hpp"
#include "vafilt/va/heisenberg.hpp"

namespace vafilt {

/// Fock module of the Heisenberg algebra twisted by h -> -h (T = 2: modes
/// h_{k+1/2}, lowest weight 0) or untwisted with zero momentum (T = 1).
/// Basis: h(-p1)...h(-ps)vac with parts p in (r/T + N), r the generator sector.
///
/// Composite vertex operators come from the generator field through the
/// associativity-based iterate expansion. Intermediate vectors of that
/// expansion can sit above the cutoff, so the recursion runs on partitions
/// directly and only the final result is mapped to labels.
class FockModule final : public TwistedModule {
 public:
  FockModule(const Heisenberg& va, long cutoff_ticks);

  std::string id() const override;
  const VertexAlgebra& algebra() const override { return va_; }
  TwistedVector mode_basis(Label u, const ModeIndex& m, Label w) const override;

  const Heisenberg& heisenberg() const { return va_; }
  const Partition& partition(Label l) const { return parts_.at(static_cast<std::size_t>(l)); }
  std::optional<Label> find_partition(const Partition& p) const;

  using FockVec = std::map<Partition, Rational>;
  /// u_{mu/T} w on raw partitions, no cutoff.
  FockVec act(Label u, long mu_ticks, const Partition& w) const;
  /// h_{mu/T} w.
  FockVec generator_act(long mu_ticks, const Partition& w) const;

 private:
  struct Key {
    Label u;
    long mu;
    Partition w;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = hash_mix(std::hash<int>()(k.u), std::hash<long>()(k.mu));
      for (long p : k.w) h = hash_mix(h, std::hash<long>()(p));
      return h;
    }
  };

  FockVec compute_act(Label u, long mu_ticks, const Partition& w) const;
  FockVec act_on(Label u, long mu_ticks, const FockVec& x) const;
  FockVec generator_act_on(long mu_ticks, const FockVec& x) const;
  long generator_depth(const Partition& w) const;

  const Heisenberg& va_;
  std::vector<Partition> parts_;
  std::map<Partition, Label> by_partition_;
  mutable ConcurrentMemo<Key, FockVec, KeyHash> memo_;
};

}  // namespace vafilt
