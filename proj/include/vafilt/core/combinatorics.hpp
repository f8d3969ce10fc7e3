#pragma once

#include <span>
#include <vector>

#include "vafilt/core/mode_index.hpp"

namespace vafilt {

using Partition = std::vector<long>;

/// Multisets of allowed parts summing to target. Parts descend within each
/// multiset and the multisets come out in descending lexicographic order.
std::vector<Partition> partitions_desc(long target, std::span<const long> allowed);

/// Same enumeration over weights in (1/T)Z.
std::vector<std::vector<HalfWeight>> half_partitions(const HalfWeight& target,
                                                     std::span<const HalfWeight> allowed);

/// Parts T*k + s for k >= 0 with 1 <= part <= bound (in 1/T steps).
std::vector<long> mode_parts(int period, int sector, long bound);

}  // namespace vafilt
