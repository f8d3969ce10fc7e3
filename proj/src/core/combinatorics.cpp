#include "vafilt/core/combinatorics.hpp"

#include <algorithm>
#include <functional>

#include "vafilt/core/errors.hpp"

namespace vafilt {

std::vector<Partition> partitions_desc(long target, std::span<const long> allowed) {
  std::vector<long> parts(allowed.begin(), allowed.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  for (long p : parts)
    if (p <= 0) throw Error("partition parts must be positive");

  std::vector<Partition> out;
  Partition current;
  std::function<void(long, std::size_t)> rec = [&](long remaining, std::size_t from) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      if (parts[i] > remaining) continue;
      current.push_back(parts[i]);
      rec(remaining - parts[i], i);
      current.pop_back();
    }
  };
  if (target >= 0) rec(target, 0);
  return out;
}

std::vector<std::vector<HalfWeight>> half_partitions(const HalfWeight& target,
                                                     std::span<const HalfWeight> allowed) {
  int period = target.period();
  std::vector<long> ticks;
  for (const auto& p : allowed) {
    if (p.period() != period) throw Error("mixed periods in half_partitions");
    ticks.push_back(p.ticks());
  }
  std::vector<std::vector<HalfWeight>> out;
  for (const auto& part : partitions_desc(target.ticks(), ticks)) {
    std::vector<HalfWeight> hw;
    hw.reserve(part.size());
    for (long t : part) hw.emplace_back(t, period);
    out.push_back(std::move(hw));
  }
  return out;
}

std::vector<long> mode_parts(int period, int sector, long bound) {
  std::vector<long> parts;
  for (long p = sector == 0 ? period : sector; p <= bound; p += period) parts.push_back(p);
  return parts;
}

}  // namespace vafilt
