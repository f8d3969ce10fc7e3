#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vafilt/core/lin_comb.hpp"

namespace vafilt {

class VertexAlgebra;
class TwistedModule;

/// Graded ambient space truncated at a cutoff. Slices are keyed by weight in
/// 1/key_period steps; each slice lists its basis labels in canonical order.
class Ambient {
 public:
  using Key = long;

  Ambient(int key_period, Key max_key, std::map<Key, std::vector<Label>> slices,
          std::function<std::string(Label)> namer);
  static std::shared_ptr<const Ambient> of_algebra(const VertexAlgebra& va, int max_weight);
  static std::shared_ptr<const Ambient> of_module(const TwistedModule& mod, long max_ticks);

  int key_period() const { return key_period_; }
  Key max_key() const { return max_key_; }
  /// Keys 0..max_key with a nonempty slice, ascending.
  const std::vector<Key>& keys() const { return keys_; }
  const std::vector<Label>& slice(Key k) const;
  int width(Key k) const { return static_cast<int>(slice(k).size()); }
  /// Slice key and position of a label; nullopt when it lies above the cutoff.
  std::optional<std::pair<Key, int>> locate(Label l) const;
  std::string label_name(Label l) const { return namer_(l); }
  std::string weight_str(Key k) const;

 private:
  int key_period_;
  Key max_key_;
  std::map<Key, std::vector<Label>> slices_;
  std::vector<Key> keys_;
  std::unordered_map<Label, std::pair<Key, int>> where_;
  std::function<std::string(Label)> namer_;
};

}  // namespace vafilt
