#ifndef COLPART_ENUMERATE_HPP_
#define COLPART_ENUMERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "colpart/partition.hpp"

namespace colpart {

/// Every non-colored partition of k points, as restricted growth strings in
/// lexicographic order.
inline std::vector<NonColoredPartition> all_noncolored_partitions(
    std::size_t k) {
  std::vector<NonColoredPartition> out;
  std::vector<std::uint32_t> labels(k, 0);
  std::vector<std::uint32_t> prefix_max(k, 0);  // max label in labels[0..i]
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  while (true) {
    out.emplace_back(detail::canonical_tag{}, labels, prefix_max[k - 1] + 1);
    // Advance to the next restricted growth string.
    std::size_t i = k - 1;
    while (i > 0 && labels[i] > prefix_max[i - 1]) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

/// Every two-colored partition of k points.
inline std::vector<Partition> all_partitions(std::size_t k) {
  std::vector<Partition> out;
  for (auto const& q : all_noncolored_partitions(k)) {
    auto cs = colorings(q);
    out.insert(out.end(), std::make_move_iterator(cs.begin()),
               std::make_move_iterator(cs.end()));
  }
  return out;
}

/// A random two-colored partition: each point joins an existing block or
/// opens a new one with equal probability per choice, and takes a uniform
/// color. The length is uniform in 0..max_length.
inline Partition random_partition(std::size_t max_length,
                                  std::mt19937_64& rng) {
  std::size_t const k =
      std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  std::vector<std::uint32_t> labels(k);
  std::vector<Color> colors(k);
  std::uint32_t blocks = 0;
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = std::uniform_int_distribution<std::uint32_t>(0, blocks)(rng);
    blocks = std::max(blocks, labels[i] + 1);
    colors[i] = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                    ? Color::white
                    : Color::black;
  }
  return Partition(std::move(colors), std::move(labels));
}

}  // namespace colpart

#endif  // COLPART_ENUMERATE_HPP_
