#ifndef COLPART_DETAIL_PACKED_HPP_
#define COLPART_DETAIL_PACKED_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "colpart/partition.hpp"

// Fixed-size encoding of short partitions used by the closure engine: four
// bits of block label per point, one bit of color per point (set = black).
namespace colpart::detail {

inline constexpr std::size_t max_packed_length = 16;

struct Packed {
  std::uint64_t labels = 0;
  std::uint16_t blacks = 0;
  std::uint8_t length = 0;

  friend bool operator==(Packed const&, Packed const&) = default;
};

struct PackedHash {
  std::size_t operator()(Packed const& p) const noexcept {
    std::uint64_t h = p.labels * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(p.blacks) << 8 | p.length) *
         0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

using Labels = std::array<std::uint8_t, max_packed_length>;

inline std::uint16_t length_mask(std::size_t n) noexcept {
  return static_cast<std::uint16_t>((std::uint32_t{1} << n) - 1U);
}

inline Labels unpack_labels(Packed p) noexcept {
  Labels out{};
  for (std::size_t i = 0; i < p.length; ++i) {
    out[i] = static_cast<std::uint8_t>((p.labels >> (4 * i)) & 0xFU);
  }
  return out;
}

/// Packs labels after relabeling them by first occurrence.
inline Packed pack_canonical(Labels const& labels, std::size_t n,
                             std::uint16_t blacks) noexcept {
  std::array<std::uint8_t, 16> map;
  map.fill(0xFF);
  std::uint8_t next = 0;
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t& m = map[labels[i]];
    if (m == 0xFF) {
      m = next++;
    }
    word |= static_cast<std::uint64_t>(m) << (4 * i);
  }
  return Packed{word, static_cast<std::uint16_t>(blacks & length_mask(n)),
                static_cast<std::uint8_t>(n)};
}

inline Packed pack(Partition const& p) {
  Labels labels{};
  std::uint16_t blacks = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    labels[i] = static_cast<std::uint8_t>(p.block_of(i));
    if (p.color(i) == Color::black) {
      blacks = static_cast<std::uint16_t>(blacks | (1U << i));
    }
  }
  return pack_canonical(labels, p.size(), blacks);
}

inline Partition unpack(Packed p) {
  auto const labels = unpack_labels(p);
  std::vector<Color> colors(p.length);
  std::vector<std::uint32_t> ls(p.length);
  for (std::size_t i = 0; i < p.length; ++i) {
    colors[i] = ((p.blacks >> i) & 1U) != 0 ? Color::black : Color::white;
    ls[i] = labels[i];
  }
  return Partition(std::move(colors), std::move(ls));
}

inline int whites(Packed p) noexcept {
  return p.length - std::popcount(p.blacks);
}

/// The representative of p's class under color permutations that keep the
/// number of white points: the first `w` points white, the rest black.
inline Packed with_whites_first(Packed p, int w) noexcept {
  p.blacks = static_cast<std::uint16_t>(length_mask(p.length) &
                                        ~length_mask(static_cast<std::size_t>(w)));
  return p;
}

inline Packed orbit_rep(Packed p) noexcept {
  return with_whites_first(p, whites(p));
}

inline Packed rotate(Packed p) noexcept {
  std::size_t const n = p.length;
  auto const l = unpack_labels(p);
  Labels r{};
  r[0] = l[n - 1];
  for (std::size_t i = 1; i < n; ++i) {
    r[i] = l[i - 1];
  }
  auto const top = static_cast<std::uint16_t>((p.blacks >> (n - 1)) & 1U);
  auto const blacks = static_cast<std::uint16_t>((p.blacks << 1) | top);
  return pack_canonical(r, n, blacks);
}

inline Packed reflect(Packed p) noexcept {
  std::size_t const n = p.length;
  auto const l = unpack_labels(p);
  Labels r{};
  std::uint16_t blacks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = l[n - 1 - i];
    if (((p.blacks >> (n - 1 - i)) & 1U) == 0) {
      blacks = static_cast<std::uint16_t>(blacks | (1U << i));
    }
  }
  return pack_canonical(r, n, blacks);
}

/// Contraction at the 0-based site a and its cyclic successor. Colors are
/// not checked.
inline Packed contract(Packed p, std::size_t a) noexcept {
  std::size_t const n = p.length;
  std::size_t const b = (a + 1) % n;
  auto const l = unpack_labels(p);
  std::uint8_t const keep = l[a];
  std::uint8_t const gone = l[b];
  Labels r{};
  std::uint16_t blacks = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == a || i == b) {
      continue;
    }
    r[m] = l[i] == gone ? keep : l[i];
    if (((p.blacks >> i) & 1U) != 0) {
      blacks = static_cast<std::uint16_t>(blacks | (1U << m));
    }
    ++m;
  }
  return pack_canonical(r, m, blacks);
}

inline std::size_t block_count(Packed p) noexcept {
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < p.length; ++i) {
    seen |= 1U << ((p.labels >> (4 * i)) & 0xFU);
  }
  return static_cast<std::size_t>(std::popcount(seen));
}

/// Side-by-side placement; both inputs are canonical so no relabeling pass
/// is needed.
inline Packed tensor(Packed p, Packed q) noexcept {
  auto const shift = static_cast<std::uint64_t>(block_count(p));
  std::uint64_t labels = p.labels;
  for (std::size_t i = 0; i < q.length; ++i) {
    std::uint64_t const l = ((q.labels >> (4 * i)) & 0xFU) + shift;
    labels |= l << (4 * (i + p.length));
  }
  return Packed{labels,
                static_cast<std::uint16_t>(p.blacks | (q.blacks << p.length)),
                static_cast<std::uint8_t>(p.length + q.length)};
}

}  // namespace colpart::detail

#endif  // COLPART_DETAIL_PACKED_HPP_
