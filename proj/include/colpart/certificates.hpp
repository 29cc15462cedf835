#ifndef COLPART_CERTIFICATES_HPP_
#define COLPART_CERTIFICATES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colpart/partition.hpp"

namespace colpart {

/// Structural laws that are preserved by tensor, contraction, reflection and
/// rotation, and hold for both mixed-color pairs. If every generator
/// satisfies one, so does every element of the generated category, which is
/// what makes a violation a proof of non-membership.
enum class Certificate : std::uint8_t {
  pair_blocks_only,
  even_length,
  even_blocks_only,
  blocks_at_most_two,
  c_divisible,  ///< d divides c(p); d = 0 means c(p) = 0
  noncrossing,
  color_balanced_blocks,  ///< each block has as many white as black points
  parity_balanced,  ///< each block has as many odd as even positions
  alternating_pairs,  ///< blocks of size <= 2, pairs join positions of opposite parity
};

inline constexpr std::array<Certificate, 9> all_certificates{
    Certificate::pair_blocks_only,   Certificate::even_length,
    Certificate::even_blocks_only,   Certificate::blocks_at_most_two,
    Certificate::c_divisible,        Certificate::noncrossing,
    Certificate::color_balanced_blocks, Certificate::parity_balanced,
    Certificate::alternating_pairs};

inline std::string certificate_name(Certificate c, std::int64_t divisor = 0) {
  switch (c) {
    case Certificate::pair_blocks_only:
      return "pair-blocks-only";
    case Certificate::even_length:
      return "even-length";
    case Certificate::even_blocks_only:
      return "even-blocks-only";
    case Certificate::blocks_at_most_two:
      return "blocks-at-most-two";
    case Certificate::c_divisible:
      return divisor == 0 ? std::string("c-divisible-by-0")
                          : "c-divisible-by-" + std::to_string(divisor);
    case Certificate::noncrossing:
      return "noncrossing";
    case Certificate::color_balanced_blocks:
      return "color-balanced-blocks";
    case Certificate::parity_balanced:
      return "parity-balanced";
    case Certificate::alternating_pairs:
      return "alternating-pairs";
  }
  return "?";
}

/// Whether `p` satisfies law `c`. For c_divisible the divisor is `d`.
inline bool satisfies(Partition const& p, Certificate c, std::int64_t d = 0) {
  auto const sizes = p.shape().block_sizes();
  auto all_sizes = [&](auto pred) {
    return std::all_of(sizes.begin(), sizes.end(), pred);
  };
  switch (c) {
    case Certificate::pair_blocks_only:
      return all_sizes([](std::size_t s) { return s == 2; });
    case Certificate::even_length:
      return p.size() % 2 == 0;
    case Certificate::even_blocks_only:
      return all_sizes([](std::size_t s) { return s % 2 == 0; });
    case Certificate::blocks_at_most_two:
      return all_sizes([](std::size_t s) { return s <= 2; });
    case Certificate::c_divisible: {
      auto const cp = color_sum(p).c;
      return d == 0 ? cp == 0 : cp % d == 0;
    }
    case Certificate::noncrossing:
      return is_noncrossing(p);
    case Certificate::color_balanced_blocks: {
      std::vector<std::int64_t> bal(p.block_count(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        bal[p.block_of(i)] += p.color(i) == Color::white ? 1 : -1;
      }
      return std::all_of(bal.begin(), bal.end(),
                         [](std::int64_t b) { return b == 0; });
    }
    case Certificate::parity_balanced: {
      std::vector<std::int64_t> bal(p.block_count(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        bal[p.block_of(i)] += i % 2 == 0 ? 1 : -1;
      }
      return p.size() % 2 == 0 &&
             std::all_of(bal.begin(), bal.end(),
                         [](std::int64_t b) { return b == 0; });
    }
    case Certificate::alternating_pairs: {
      if (p.size() % 2 != 0) {
        return false;
      }
      for (auto const& b : p.blocks()) {
        if (b.size() > 2 || (b.size() == 2 && (b[1] - b[0]) % 2 == 0)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

/// The certificates held by a category: those satisfied by every generator
/// and by the two mixed-color pairs.
class CertificateSet {
 public:
  CertificateSet() = default;

  static CertificateSet from_generators(std::span<Partition const> gens) {
    CertificateSet out;
    std::int64_t d = 0;
    for (auto const& g : gens) {
      d = std::gcd(d, color_sum(g).c);
    }
    out.divisor_ = d;
    std::vector<Partition> all(gens.begin(), gens.end());
    all.push_back(parse("aA"));
    all.push_back(parse("Aa"));
    for (auto c : all_certificates) {
      bool const ok = std::all_of(all.begin(), all.end(),
                                  [&](Partition const& g) {
                                    return satisfies(g, c, d);
                                  });
      if (ok) {
        out.held_.push_back(c);
      }
    }
    return out;
  }

  bool holds(Certificate c) const {
    return std::find(held_.begin(), held_.end(), c) != held_.end();
  }

  std::span<Certificate const> held() const noexcept { return held_; }

  /// gcd of |c(g)| over the generators (0 when all are balanced).
  std::int64_t divisor() const noexcept { return divisor_; }

  bool satisfied_by(Partition const& p, Certificate c) const {
    return satisfies(p, c, divisor_);
  }

  /// The first held certificate that `p` violates, if any.
  std::optional<Certificate> violated_by(Partition const& p) const {
    for (auto c : held_) {
      if (!satisfies(p, c, divisor_)) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::string name(Certificate c) const {
    return certificate_name(c, divisor_);
  }

  /// Restricts to a sub-collection of the elements (such as the c = 0
  /// sector); every law still holds and the divisor collapses to 0.
  CertificateSet restricted_to_zero_sector() const {
    CertificateSet out = *this;
    out.divisor_ = 0;
    if (!out.holds(Certificate::c_divisible)) {
      out.held_.push_back(Certificate::c_divisible);
    }
    std::sort(out.held_.begin(), out.held_.end());
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto c : held_) {
      out.push_back(name(c));
    }
    return out;
  }

 private:
  std::vector<Certificate> held_;
  std::int64_t divisor_ = 0;
};

}  // namespace colpart

#endif  // COLPART_CERTIFICATES_HPP_
