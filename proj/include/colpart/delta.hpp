#ifndef COLPART_DELTA_HPP_
#define COLPART_DELTA_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "colpart/cyclotomic.hpp"
#include "colpart/errors.hpp"
#include "colpart/matrix_group.hpp"
#include "colpart/partition.hpp"

namespace colpart {

/// Largest number of entries n^k a tensor may have.
inline constexpr std::size_t default_tensor_capacity = std::size_t{1} << 20;

/// n^k, or CapacityError if it exceeds `cap`.
inline std::size_t tensor_volume(std::size_t n, std::size_t k,
                                 std::size_t cap = default_tensor_capacity) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > cap / std::max<std::size_t>(n, 1)) {
      throw CapacityError(std::to_string(n) + "^" + std::to_string(k) +
                          " entries exceed the cap of " + std::to_string(cap));
    }
    v *= n;
  }
  if (v > cap) {
    throw CapacityError(std::to_string(n) + "^" + std::to_string(k) +
                        " entries exceed the cap of " + std::to_string(cap));
  }
  return v;
}

/// delta_p(alpha): 1 when the 1-based multi-index is constant on every block.
inline int delta(Partition const& p, std::span<std::size_t const> alpha) {
  if (alpha.size() != p.size()) {
    throw DimensionError("multi-index of length " +
                         std::to_string(alpha.size()) + " for a partition of " +
                         std::to_string(p.size()) + " points");
  }
  std::vector<std::size_t> value(p.block_count(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 1) {
      throw DimensionError("multi-index entries start at 1");
    }
    auto& v = value[p.block_of(i)];
    if (v == 0) {
      v = alpha[i];
    } else if (v != alpha[i]) {
      return 0;
    }
  }
  return 1;
}

/// Row-major flattening: leg 1 is the most significant digit, values 0..n-1.
inline std::vector<std::size_t> unflatten(std::size_t flat, std::size_t n,
                                          std::size_t k) {
  std::vector<std::size_t> digits(k);
  for (std::size_t l = k; l-- > 0;) {
    digits[l] = flat % n;
    flat /= n;
  }
  return digits;
}

/// The 0/1 array of delta values of a partition in dimension n.
class DeltaTensor {
 public:
  DeltaTensor(std::size_t n, std::vector<Color> colors,
              std::vector<std::uint8_t> entries)
      : n_(n), colors_(std::move(colors)), entries_(std::move(entries)) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t legs() const noexcept { return colors_.size(); }
  std::span<Color const> colors() const noexcept { return colors_; }
  std::span<std::uint8_t const> entries() const noexcept { return entries_; }

  /// Entry at a 1-based multi-index.
  int at(std::span<std::size_t const> alpha) const {
    if (alpha.size() != legs()) {
      throw DimensionError("multi-index of length " +
                           std::to_string(alpha.size()) + " for a tensor with " +
                           std::to_string(legs()) + " legs");
    }
    std::size_t flat = 0;
    for (auto a : alpha) {
      if (a < 1 || a > n_) {
        throw DimensionError("index " + std::to_string(a) + " outside 1.." +
                             std::to_string(n_));
      }
      flat = flat * n_ + (a - 1);
    }
    return entries_[flat];
  }

  std::size_t ones() const {
    std::size_t c = 0;
    for (auto e : entries_) {
      c += e;
    }
    return c;
  }

  friend bool operator==(DeltaTensor const&, DeltaTensor const&) = default;

  /// One "i1 i2 ...: value" line per entry, for debugging.
  std::string dump() const {
    std::string out;
    for (std::size_t f = 0; f < entries_.size(); ++f) {
      auto const d = unflatten(f, n_, legs());
      for (std::size_t l = 0; l < d.size(); ++l) {
        out += (l ? " " : "") + std::to_string(d[l] + 1);
      }
      out += ": " + std::to_string(entries_[f]) + "\n";
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Color> colors_;
  std::vector<std::uint8_t> entries_;
};

/// All delta_p values in dimension n. Only the n^b constant-on-blocks
/// assignments are visited.
inline DeltaTensor t_vector(Partition const& p, std::size_t n,
                            std::size_t cap = default_tensor_capacity) {
  if (n < 1) {
    throw DimensionError("t_vector needs n >= 1");
  }
  std::size_t const k = p.size();
  std::vector<std::uint8_t> entries(tensor_volume(n, k, cap), 0);
  std::size_t const b = p.block_count();
  std::vector<std::size_t> value(b, 0);
  while (true) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < k; ++i) {
      flat = flat * n + value[p.block_of(i)];
    }
    entries[flat] = 1;
    std::size_t j = 0;
    while (j < b && ++value[j] == n) {
      value[j++] = 0;
    }
    if (j == b) {
      break;
    }
  }
  std::vector<Color> colors(p.colors().begin(), p.colors().end());
  return DeltaTensor(n, std::move(colors), std::move(entries));
}

/// t(p tensor q) equals the outer product of t(p) and t(q).
inline bool check_tensor(Partition const& p, Partition const& q, std::size_t n,
                         std::size_t cap = default_tensor_capacity) {
  auto const tp = t_vector(p, n, cap);
  auto const tq = t_vector(q, n, cap);
  auto const tpq = t_vector(tensor(p, q), n, cap);
  std::size_t const vq = tq.entries().size();
  for (std::size_t f = 0; f < tpq.entries().size(); ++f) {
    if (tpq.entries()[f] != tp.entries()[f / vq] * tq.entries()[f % vq]) {
      return false;
    }
  }
  return true;
}

/// Whether the merged block of points i and i+1 (cyclically, 1-based)
/// consists of those two points only, so that it vanishes on contraction.
inline bool contraction_closes_block(Partition const& p, std::size_t i) {
  std::uint32_t const x = p.block_of(i - 1);
  std::uint32_t const y = p.block_of(i % p.size());
  std::size_t members = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    members += p.block_of(j) == x || p.block_of(j) == y ? 1 : 0;
  }
  return members == 2;
}

/// Summing t(p) over equal values at legs i, i+1 gives n^b t(contract(p, i)),
/// where b = 1 iff the merged block is just those two points.
inline bool check_contraction(Partition const& p, std::size_t i, std::size_t n,
                              std::size_t cap = default_tensor_capacity) {
  auto const q = contract(p, i);
  auto const tp = t_vector(p, n, cap);
  auto const tq = t_vector(q, n, cap);
  std::size_t const k = p.size();
  std::size_t const a = i - 1;
  std::size_t const b = i % k;
  std::int64_t const factor = contraction_closes_block(p, i)
                                  ? static_cast<std::int64_t>(n)
                                  : 1;
  std::vector<std::size_t> full(k);
  for (std::size_t f = 0; f < tq.entries().size(); ++f) {
    auto const rest = unflatten(f, n, k - 2);
    std::size_t r = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (l != a && l != b) {
        full[l] = rest[r++];
      }
    }
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      full[a] = j;
      full[b] = j;
      std::size_t flat = 0;
      for (auto d : full) {
        flat = flat * n + d;
      }
      sum += tp.entries()[flat];
    }
    if (sum != factor * tq.entries()[f]) {
      return false;
    }
  }
  return true;
}

/// A tensor with cyclotomic entries and a color per leg.
struct ExactTensor {
  std::size_t n = 0;
  std::vector<Color> colors;
  std::vector<Cyc> entries;

  static ExactTensor from(DeltaTensor const& t) {
    ExactTensor out;
    out.n = t.dimension();
    out.colors.assign(t.colors().begin(), t.colors().end());
    out.entries.reserve(t.entries().size());
    for (auto e : t.entries()) {
      out.entries.emplace_back(static_cast<long>(e));
    }
    return out;
  }

  friend bool operator==(ExactTensor const&, ExactTensor const&) = default;
};

/// Acts with g on every white leg and with the entrywise conjugate of g on
/// every black leg:
///   (g.t)[b1..bk] = sum over c of g^{s1}[b1][c1] ... g^{sk}[bk][ck] t[c1..ck].
/// The legs are processed one at a time, skipping zero matrix entries.
inline ExactTensor apply_group_element(Matrix const& g, ExactTensor t) {
  std::size_t const n = t.n;
  if (g.size() != n) {
    throw DimensionError("matrix of size " + std::to_string(g.size()) +
                         " acting on a tensor of dimension " +
                         std::to_string(n));
  }
  Matrix const gbar = g.conj();
  std::size_t const k = t.colors.size();
  std::size_t stride = t.entries.size();
  for (std::size_t l = 0; l < k; ++l) {
    stride /= n;
    Matrix const& m = t.colors[l] == Color::white ? g : gbar;
    std::vector<Cyc> next(t.entries.size());
    std::size_t const block = stride * n;
    for (std::size_t base = 0; base < t.entries.size(); base += block) {
      for (std::size_t low = 0; low < stride; ++low) {
        for (std::size_t bi = 0; bi < n; ++bi) {
          Cyc acc;
          for (std::size_t ci = 0; ci < n; ++ci) {
            auto const& x = t.entries[base + ci * stride + low];
            if (!x.is_zero() && !m(bi, ci).is_zero()) {
              acc += m(bi, ci) * x;
            }
          }
          next[base + bi * stride + low] = std::move(acc);
        }
      }
    }
    t.entries = std::move(next);
  }
  return t;
}

/// Whether every element of G fixes t(p) under the colored action. Checking
/// the generators suffices.
inline bool membership_by_fixspace(Partition const& p,
                                   FiniteMatrixGroup const& g,
                                   std::size_t cap = default_tensor_capacity) {
  auto const t = ExactTensor::from(t_vector(p, g.dimension(), cap));
  for (auto const& x : g.generators()) {
    if (apply_group_element(x, t) != t) {
      return false;
    }
  }
  return true;
}

namespace detail {

/// Incremental row echelon form over the cyclotomic field with sparse rows.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Cyc>>;  // sorted by column

  /// Reduces `row` against the stored pivots and keeps it if nonzero.
  bool insert(Row row) {
    while (!row.empty()) {
      auto const it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        break;
      }
      Cyc const f = row.front().second;
      row = axpy(row, rows_[it->second], -f);
    }
    if (row.empty()) {
      return false;
    }
    Cyc const inv = row.front().second.inverse();
    for (auto& e : row) {
      e.second = e.second * inv;
    }
    pivots_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  static Row axpy(Row const& x, Row const& y, Cyc const& s) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, y[j].second * s);
        ++j;
      } else {
        Cyc v = x[i].second + y[j].second * s;
        if (!v.is_zero()) {
          out.emplace_back(x[i].first, std::move(v));
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<std::size_t, std::size_t> pivots_;
  std::vector<Row> rows_;
};

}  // namespace detail

/// Dimension of the joint fixed space of G acting on (C^n)^{tensor k} with
/// the given leg colors: n^k minus the rank of the stacked systems
/// (rho(x) - 1) v = 0 over the generators x.
inline std::size_t fixspace_dim(FiniteMatrixGroup const& g,
                                std::span<Color const> colors,
                                std::size_t cap = default_tensor_capacity) {
  std::size_t const n = g.dimension();
  std::size_t const k = colors.size();
  std::size_t const volume = tensor_volume(n, k, cap);
  detail::SparseEchelon ech;
  for (auto const& x : g.generators()) {
    Matrix const xbar = x.conj();
    std::vector<Matrix const*> leg(k);
    for (std::size_t l = 0; l < k; ++l) {
      leg[l] = colors[l] == Color::white ? &x : &xbar;
    }
    for (std::size_t row = 0; row < volume && ech.rank() < volume; ++row) {
      // Row `row` of rho(x) is the tensor product of the rows of each leg.
      auto const bi = unflatten(row, n, k);
      std::vector<std::pair<std::size_t, Cyc>> entries{{0, Cyc(1)}};
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<std::pair<std::size_t, Cyc>> next;
        for (auto const& [flat, v] : entries) {
          for (std::size_t c = 0; c < n; ++c) {
            auto const& m = (*leg[l])(bi[l], c);
            if (!m.is_zero()) {
              next.emplace_back(flat * n + c, v * m);
            }
          }
        }
        entries = std::move(next);
      }
      // Flattening keeps the columns sorted; subtract the identity.
      bool found = false;
      detail::SparseEchelon::Row r;
      for (auto& [c, v] : entries) {
        if (c == row) {
          found = true;
          v -= 1;
        }
        if (!v.is_zero()) {
          r.emplace_back(c, std::move(v));
        }
      }
      if (!found) {
        auto const pos = std::lower_bound(
            r.begin(), r.end(), row,
            [](auto const& e, std::size_t c) { return e.first < c; });
        r.insert(pos, {row, Cyc(-1)});
      }
      ech.insert(std::move(r));
    }
  }
  return volume - ech.rank();
}

/// The same dimension by averaging characters over the element list:
/// (1/|G|) sum over x of tr(x)^w conj(tr(x))^b.
inline std::size_t fixspace_dim_by_character(FiniteMatrixGroup const& g,
                                             std::span<Color const> colors) {
  std::size_t w = 0;
  for (auto c : colors) {
    w += c == Color::white ? 1 : 0;
  }
  std::size_t const b = colors.size() - w;
  Cyc sum;
  for (auto const& x : g.elements()) {
    Cyc const t = x.trace();
    Cyc const tb = t.conj();
    Cyc term(1);
    for (std::size_t i = 0; i < w; ++i) {
      term = term * t;
    }
    for (std::size_t i = 0; i < b; ++i) {
      term = term * tb;
    }
    sum += term;
  }
  mpq_class const avg =
      sum.rational() / mpq_class(static_cast<long>(g.order()));
  if (avg.get_den() != 1 || sgn(avg) < 0) {
    throw PreconditionError("character average " + avg.get_str() +
                            " is not a dimension");
  }
  return avg.get_num().get_ui();
}

}  // namespace colpart

#endif  // COLPART_DELTA_HPP_
