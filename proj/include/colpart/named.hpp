#ifndef COLPART_NAMED_HPP_
#define COLPART_NAMED_HPP_

#include <cstdlib>
#include <string>
#include <vector>

#include "colpart/partition.hpp"

// Builders for the partitions that recur throughout the classification.
namespace colpart::named {

namespace impl {
inline Partition repeated(Partition const& unit, std::size_t times) {
  Partition out;
  for (std::size_t i = 0; i < times; ++i) {
    out = tensor(out, unit);
  }
  return out;
}

// Colors alternate white, black, white, ... along the points.
inline Partition alternating(Partition const& p) {
  std::vector<Color> colors(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    colors[i] = i % 2 == 0 ? Color::white : Color::black;
  }
  return Partition(std::move(colors), p.shape());
}
}  // namespace impl

inline Partition pair_wb() { return parse("aA"); }
inline Partition pair_bw() { return parse("Aa"); }
inline Partition pair_ww() { return parse("aa"); }
inline Partition pair_bb() { return parse("AA"); }
inline Partition singleton_w() { return parse("a"); }
inline Partition singleton_b() { return parse("A"); }

/// The white singleton next to a black singleton.
inline Partition singletons_wb() { return parse("aB"); }

/// The four-block colored white, black, white, black.
inline Partition fourblock_wbwb() { return parse("aAaA"); }

/// The crossing partition {1,3},{2,4} colored white, white, black, black.
inline Partition crossing_wwbb() { return parse("abAB"); }

/// The half-liberating partition {1,4},{2,5},{3,6}, three white points
/// followed by three black ones.
inline Partition halflib_wwwbbb() { return parse("abcABC"); }

/// Singletons at 1 and 3 and a pair {2,4}, colored white, white, black,
/// black.
inline Partition positioner_wwbb() { return parse("abCB"); }

/// The white pair next to the black pair; its presence makes a category
/// globally colorized.
inline Partition glob_pair() { return parse("aaBB"); }

/// One block of |k| points, white for k > 0 and black for k < 0.
inline Partition block(int k) {
  std::size_t const n = static_cast<std::size_t>(std::abs(k));
  Color const c = k >= 0 ? Color::white : Color::black;
  return Partition(std::vector<Color>(n, c), std::vector<std::uint32_t>(n, 0));
}

/// u_k: k/2 white pairs side by side; u(-k) uses black pairs.
inline Partition u(int k) {
  if (k % 2 != 0) {
    throw ParameterError("u(k) needs even k, got " + std::to_string(k));
  }
  return impl::repeated(k >= 0 ? pair_ww() : pair_bb(),
                          static_cast<std::size_t>(std::abs(k) / 2));
}

/// s_k: k white singletons; s(-k) uses black singletons.
inline Partition s(int k) {
  return impl::repeated(k >= 0 ? singleton_w() : singleton_b(),
                          static_cast<std::size_t>(std::abs(k)));
}

/// h_s: two blocks on 2s points, odd points in the first, even in the
/// second. All points white.
inline Partition h(int s) {
  if (s < 0) {
    throw ParameterError("h(s) needs s >= 0, got " + std::to_string(s));
  }
  std::vector<std::uint32_t> labels(2 * static_cast<std::size_t>(s));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = static_cast<std::uint32_t>(i % 2);
  }
  std::vector<Color> colors(labels.size(), Color::white);
  return Partition(std::move(colors), std::move(labels));
}

/// h_s with colors alternating from white, so that c = 0.
inline Partition h0(int s) { return impl::alternating(h(s)); }

/// pi_s: the word a1..as as..a1 a1..as as..a1 of length 4s, all white.
inline Partition pi(int s) {
  if (s < 1) {
    throw ParameterError("pi(s) needs s >= 1, got " + std::to_string(s));
  }
  auto const n = static_cast<std::uint32_t>(s);
  std::vector<std::uint32_t> labels;
  labels.reserve(4 * n);
  for (int rep = 0; rep < 2; ++rep) {
    for (std::uint32_t a = 0; a < n; ++a) {
      labels.push_back(a);
    }
    for (std::uint32_t a = n; a-- > 0;) {
      labels.push_back(a);
    }
  }
  std::vector<Color> colors(labels.size(), Color::white);
  return Partition(std::move(colors), std::move(labels));
}

/// pi_s with colors alternating from white.
inline Partition pi0(int s) { return impl::alternating(pi(s)); }

/// The word abbabb with alternating colors. Read as a word in the free
/// product of order-two groups it reduces to the identity, so its shape lies
/// in every group-theoretical category.
inline Partition square_central() { return parse("aBbAbB"); }

}  // namespace colpart::named

#endif  // COLPART_NAMED_HPP_
