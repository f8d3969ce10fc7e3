#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace vafilt {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/// Memo table safe for concurrent readers and writers. The producer runs
/// outside the lock so it may recurse into the same table; racing producers
/// compute equal values and the first insertion wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  template <class Producer>
  const Value& get_or_compute(const Key& key, Producer&& produce) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = produce();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace vafilt
