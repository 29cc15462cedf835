#ifndef COLPART_PARTITION_HPP_
#define COLPART_PARTITION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "colpart/errors.hpp"

namespace colpart {

enum class Color : std::uint8_t { white = 0, black = 1 };

constexpr Color inverse(Color c) noexcept {
  return c == Color::white ? Color::black : Color::white;
}

inline char const* to_string(Color c) noexcept {
  return c == Color::white ? "white" : "black";
}

namespace detail {
struct canonical_tag {};

// Relabels so that blocks are numbered 0, 1, 2, ... in order of first
// occurrence. Returns the number of blocks.
inline std::uint32_t canonicalize_labels(std::vector<std::uint32_t>& labels) {
  std::unordered_map<std::uint32_t, std::uint32_t> seen;
  std::uint32_t next = 0;
  for (auto& l : labels) {
    auto [it, fresh] = seen.try_emplace(l, next);
    if (fresh) {
      ++next;
    }
    l = it->second;
  }
  return next;
}
}  // namespace detail

/// A set partition of {1, ..., k} without colors.
///
/// Stored as the block label of every point, labels assigned 0, 1, 2, ... in
/// order of first occurrence.
class NonColoredPartition {
 public:
  NonColoredPartition() = default;

  /// Accepts arbitrary labels; equal labels mean equal blocks.
  explicit NonColoredPartition(std::vector<std::uint32_t> labels)
      : labels_(std::move(labels)) {
    block_count_ = detail::canonicalize_labels(labels_);
  }

  NonColoredPartition(detail::canonical_tag, std::vector<std::uint32_t> labels,
                      std::uint32_t block_count)
      : labels_(std::move(labels)), block_count_(block_count) {}

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::uint32_t block_of(std::size_t i) const { return labels_.at(i); }
  std::span<std::uint32_t const> labels() const noexcept { return labels_; }

  /// Blocks as sorted lists of 0-based positions, in label order.
  std::vector<std::vector<std::size_t>> blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      out[labels_[i]].push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> out(block_count_, 0);
    for (auto l : labels_) {
      ++out[l];
    }
    return out;
  }

  friend bool operator==(NonColoredPartition const&,
                         NonColoredPartition const&) = default;
  friend std::strong_ordering operator<=>(NonColoredPartition const& a,
                                          NonColoredPartition const& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::uint32_t block_count_ = 0;
};

/// A two-colored set partition in canonical form.
class Partition {
 public:
  Partition() = default;

  Partition(std::vector<Color> colors, NonColoredPartition shape)
      : colors_(std::move(colors)), shape_(std::move(shape)) {
    if (colors_.size() != shape_.size()) {
      throw SizeError("Partition: " + std::to_string(colors_.size()) +
                      " colors for " + std::to_string(shape_.size()) +
                      " points");
    }
  }

  Partition(std::vector<Color> colors, std::vector<std::uint32_t> labels)
      : Partition(std::move(colors), NonColoredPartition(std::move(labels))) {}

  std::size_t size() const noexcept { return colors_.size(); }
  bool empty() const noexcept { return colors_.empty(); }
  Color color(std::size_t i) const { return colors_.at(i); }
  std::span<Color const> colors() const noexcept { return colors_; }
  std::uint32_t block_of(std::size_t i) const { return shape_.block_of(i); }
  std::span<std::uint32_t const> labels() const noexcept {
    return shape_.labels();
  }
  std::size_t block_count() const noexcept { return shape_.block_count(); }
  std::vector<std::vector<std::size_t>> blocks() const {
    return shape_.blocks();
  }
  NonColoredPartition const& shape() const noexcept { return shape_; }

  friend bool operator==(Partition const&, Partition const&) = default;
  friend std::strong_ordering operator<=>(Partition const& a,
                                          Partition const& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) {
      return c;
    }
    return a.colors_ <=> b.colors_;
  }

 private:
  std::vector<Color> colors_;
  NonColoredPartition shape_;
};

// ---------------------------------------------------------------------------
// Word notation

/// Parses a word: lowercase letters are white points, uppercase black, and
/// equal letters (ignoring case) share a block.
inline Partition parse(std::string_view text) {
  std::vector<Color> colors;
  std::vector<std::uint32_t> labels;
  colors.reserve(text.size());
  labels.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char const ch = text[i];
    if (ch >= 'a' && ch <= 'z') {
      colors.push_back(Color::white);
      labels.push_back(static_cast<std::uint32_t>(ch - 'a'));
    } else if (ch >= 'A' && ch <= 'Z') {
      colors.push_back(Color::black);
      labels.push_back(static_cast<std::uint32_t>(ch - 'A'));
    } else {
      throw ParseError(std::string("invalid character '") + ch +
                           "' in partition word",
                       i);
    }
  }
  return Partition(std::move(colors), std::move(labels));
}

/// Number of distinct block letters available to the word notation.
inline constexpr std::size_t word_alphabet_size = 26;

inline std::string render(Partition const& p) {
  if (p.block_count() > word_alphabet_size) {
    throw RenderError("render: " + std::to_string(p.block_count()) +
                      " blocks exceed the " +
                      std::to_string(word_alphabet_size) +
                      "-letter alphabet; use the explicit block-list form");
  }
  std::string out(p.size(), '?');
  for (std::size_t i = 0; i < p.size(); ++i) {
    char const base = p.color(i) == Color::white ? 'a' : 'A';
    out[i] = static_cast<char>(base + p.block_of(i));
  }
  return out;
}

/// Lowercase word of a non-colored partition, e.g. "aabbcca".
inline std::string render(NonColoredPartition const& q) {
  if (q.block_count() > word_alphabet_size) {
    throw RenderError("render: " + std::to_string(q.block_count()) +
                      " blocks exceed the " +
                      std::to_string(word_alphabet_size) + "-letter alphabet");
  }
  std::string out(q.size(), '?');
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = static_cast<char>('a' + q.block_of(i));
  }
  return out;
}

/// Colors as a string of 'w' and 'b'.
inline std::string color_string(Partition const& p) {
  std::string out;
  out.reserve(p.size());
  for (auto c : p.colors()) {
    out.push_back(c == Color::white ? 'w' : 'b');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Category operations

inline Partition tensor(Partition const& p, Partition const& q) {
  std::vector<Color> colors(p.colors().begin(), p.colors().end());
  colors.insert(colors.end(), q.colors().begin(), q.colors().end());
  std::vector<std::uint32_t> labels(p.labels().begin(), p.labels().end());
  auto const shift = static_cast<std::uint32_t>(p.block_count());
  for (auto l : q.labels()) {
    labels.push_back(l + shift);
  }
  auto const blocks = shift + static_cast<std::uint32_t>(q.block_count());
  return Partition(std::move(colors),
                   NonColoredPartition(detail::canonical_tag{},
                                       std::move(labels), blocks));
}

/// Contraction at the 1-based position `i`: joins the blocks of point i and
/// its cyclic successor, then removes both points. The two colors must
/// differ.
inline Partition contract(Partition const& p, std::size_t i) {
  std::size_t const k = p.size();
  if (k < 2) {
    throw SizeError("contract: partition of length " + std::to_string(k) +
                    " has no contraction site");
  }
  if (i < 1 || i > k) {
    throw SizeError("contract: position " + std::to_string(i) +
                    " outside 1.." + std::to_string(k));
  }
  std::size_t const a = i - 1;
  std::size_t const b = i % k;
  if (p.color(a) == p.color(b)) {
    throw PreconditionError("contract: points " + std::to_string(a + 1) +
                            " and " + std::to_string(b + 1) +
                            " are both " + to_string(p.color(a)));
  }
  std::uint32_t const keep = p.block_of(a);
  std::uint32_t const gone = p.block_of(b);
  std::vector<Color> colors;
  std::vector<std::uint32_t> labels;
  colors.reserve(k - 2);
  labels.reserve(k - 2);
  for (std::size_t j = 0; j < k; ++j) {
    if (j == a || j == b) {
      continue;
    }
    colors.push_back(p.color(j));
    std::uint32_t const l = p.block_of(j);
    labels.push_back(l == gone ? keep : l);
  }
  return Partition(std::move(colors), std::move(labels));
}

/// Reverses the points and inverts every color.
inline Partition reflect(Partition const& p) {
  std::size_t const k = p.size();
  std::vector<Color> colors(k);
  std::vector<std::uint32_t> labels(k);
  for (std::size_t j = 0; j < k; ++j) {
    colors[j] = inverse(p.color(k - 1 - j));
    labels[j] = p.block_of(k - 1 - j);
  }
  return Partition(std::move(colors), std::move(labels));
}

/// Moves the last point to the front.
inline Partition rotate(Partition const& p) {
  std::size_t const k = p.size();
  if (k == 0) {
    throw SizeError("rotate: empty partition");
  }
  std::vector<Color> colors(k);
  std::vector<std::uint32_t> labels(k);
  colors[0] = p.color(k - 1);
  labels[0] = p.block_of(k - 1);
  for (std::size_t j = 1; j < k; ++j) {
    colors[j] = p.color(j - 1);
    labels[j] = p.block_of(j - 1);
  }
  return Partition(std::move(colors), std::move(labels));
}

struct ColorSum {
  std::int64_t white = 0;
  std::int64_t black = 0;
  std::int64_t c = 0;
  friend bool operator==(ColorSum const&, ColorSum const&) = default;
};

inline ColorSum color_sum(Partition const& p) {
  ColorSum s;
  for (auto c : p.colors()) {
    (c == Color::white ? s.white : s.black) += 1;
  }
  s.c = s.white - s.black;
  return s;
}

/// The color-forgetting map.
inline NonColoredPartition forget_colors(Partition const& p) {
  return p.shape();
}

/// All 2^k colorings of `q`, ordered by the binary number with bit i set
/// when point i is black.
inline std::vector<Partition> colorings(NonColoredPartition const& q) {
  std::size_t const k = q.size();
  if (k >= 8 * sizeof(std::size_t) - 1) {
    throw SizeError("colorings: length " + std::to_string(k) + " too large");
  }
  std::vector<Partition> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Color> colors(k);
    for (std::size_t j = 0; j < k; ++j) {
      colors[j] = ((mask >> j) & 1U) != 0 ? Color::black : Color::white;
    }
    out.emplace_back(std::move(colors), q);
  }
  return out;
}

/// True iff there are no points i < j < k < l with i, k in one block and
/// j, l in another.
inline bool is_noncrossing(NonColoredPartition const& q) {
  // Scan left to right with a stack of open blocks: a point whose block is
  // open but not on top of the stack closes over a different open block.
  auto const sizes = q.block_sizes();
  std::vector<std::size_t> seen(sizes.size(), 0);
  std::vector<std::uint32_t> stack;
  for (auto l : q.labels()) {
    if (seen[l] == 0) {
      stack.push_back(l);
    } else if (stack.empty() || stack.back() != l) {
      return false;
    }
    if (++seen[l] == sizes[l]) {
      stack.pop_back();
    }
  }
  return true;
}

inline bool is_noncrossing(Partition const& p) {
  return is_noncrossing(p.shape());
}

}  // namespace colpart

template <>
struct std::hash<colpart::NonColoredPartition> {
  std::size_t operator()(colpart::NonColoredPartition const& q) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : q.labels()) {
      h = (h ^ l) * 1099511628211ULL;
    }
    return h;
  }
};

template <>
struct std::hash<colpart::Partition> {
  std::size_t operator()(colpart::Partition const& p) const noexcept {
    std::size_t h = std::hash<colpart::NonColoredPartition>{}(p.shape());
    for (auto c : p.colors()) {
      h = (h ^ (static_cast<std::size_t>(c) + 7)) * 1099511628211ULL;
    }
    return h;
  }
};

#endif  // COLPART_PARTITION_HPP_
