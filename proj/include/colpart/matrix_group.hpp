#ifndef COLPART_MATRIX_GROUP_HPP_
#define COLPART_MATRIX_GROUP_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colpart/cyclotomic.hpp"
#include "colpart/errors.hpp"

namespace colpart {

/// Dense square matrix over the cyclotomic field.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<Cyc>> const& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw DimensionError("matrix row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) +
                             " entries, expected " +
                             std::to_string(rows.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  /// The permutation matrix sending basis vector e_j to e_{perm[j]}.
  static Matrix permutation(std::span<std::size_t const> perm) {
    Matrix m(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
      m(perm[j], j) = 1;
    }
    return m;
  }

  static Matrix diagonal(std::span<Cyc const> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m(i, i) = d[i];
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Cyc& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Cyc const& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  friend Matrix operator*(Matrix const& x, Matrix const& y) {
    require_same(x, y);
    Matrix out(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t l = 0; l < x.n_; ++l) {
        auto const& xil = x(i, l);
        if (xil.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < x.n_; ++j) {
          if (!y(l, j).is_zero()) {
            out(i, j) += xil * y(l, j);
          }
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix const& x, Matrix const& y) {
    require_same(x, y);
    Matrix out = x;
    for (std::size_t t = 0; t < x.a_.size(); ++t) {
      out.a_[t] += y.a_[t];
    }
    return out;
  }

  friend Matrix operator-(Matrix const& x, Matrix const& y) {
    require_same(x, y);
    Matrix out = x;
    for (std::size_t t = 0; t < x.a_.size(); ++t) {
      out.a_[t] -= y.a_[t];
    }
    return out;
  }

  Matrix scaled(Cyc const& z) const {
    Matrix out = *this;
    for (auto& e : out.a_) {
      e = e * z;
    }
    return out;
  }

  /// Entrywise complex conjugate.
  Matrix conj() const {
    Matrix out = *this;
    for (auto& e : out.a_) {
      e = e.conj();
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out(j, i) = (*this)(i, j);
      }
    }
    return out;
  }

  Matrix adjoint() const { return conj().transpose(); }

  bool is_unitary() const { return *this * adjoint() == identity(n_); }

  std::size_t rank() const {
    auto rows = a_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < n_; ++col) {
      std::size_t piv = r;
      while (piv < n_ && rows[piv * n_ + col].is_zero()) {
        ++piv;
      }
      if (piv == n_) {
        continue;
      }
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(rows[piv * n_ + c], rows[r * n_ + c]);
      }
      Cyc const inv = rows[r * n_ + col].inverse();
      for (std::size_t i = r + 1; i < n_; ++i) {
        if (rows[i * n_ + col].is_zero()) {
          continue;
        }
        Cyc const f = rows[i * n_ + col] * inv;
        for (std::size_t c = col; c < n_; ++c) {
          rows[i * n_ + c] -= f * rows[r * n_ + c];
        }
      }
      ++r;
    }
    return r;
  }

  bool is_invertible() const { return rank() == n_; }

  /// Gauss-Jordan inverse; throws PreconditionError when singular.
  Matrix inverse() const {
    Matrix a = *this;
    Matrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && a(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == n_) {
        throw PreconditionError("matrix is singular");
      }
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
      Cyc const s = a(col, col).inverse();
      for (std::size_t c = 0; c < n_; ++c) {
        a(col, c) = a(col, c) * s;
        inv(col, c) = inv(col, c) * s;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || a(r, col).is_zero()) {
          continue;
        }
        Cyc const f = a(r, col);
        for (std::size_t c = 0; c < n_; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  Cyc trace() const {
    Cyc t;
    for (std::size_t i = 0; i < n_; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  friend bool operator==(Matrix const& x, Matrix const& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend std::strong_ordering operator<=>(Matrix const& x, Matrix const& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(x.a_.begin(), x.a_.end(),
                                                  y.a_.begin(), y.a_.end());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < n_; ++j) {
        out += (j ? ", " : "") + (*this)(i, j).to_string();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  static void require_same(Matrix const& x, Matrix const& y) {
    if (x.n_ != y.n_) {
      throw DimensionError("matrix sizes " + std::to_string(x.n_) + " and " +
                           std::to_string(y.n_) + " differ");
    }
  }

  std::size_t n_ = 0;
  std::vector<Cyc> a_;
};

/// A finite group of n x n matrices, stored as its full sorted element list
/// together with a generating set.
class FiniteMatrixGroup {
 public:
  static constexpr std::size_t default_order_limit = 100000;

  /// Closes `gens` under multiplication; every generator must be invertible
  /// of finite order, otherwise the search stops at `order_limit`.
  static FiniteMatrixGroup from_generators(
      std::string label, std::size_t n, std::vector<Matrix> gens,
      std::size_t order_limit = default_order_limit) {
    for (auto const& g : gens) {
      if (g.size() != n) {
        throw DimensionError("generator of size " + std::to_string(g.size()) +
                             " in a group of " + std::to_string(n) +
                             " x " + std::to_string(n) + " matrices");
      }
    }
    std::set<Matrix> seen{Matrix::identity(n)};
    std::deque<Matrix> todo{Matrix::identity(n)};
    while (!todo.empty()) {
      Matrix const x = std::move(todo.front());
      todo.pop_front();
      for (auto const& g : gens) {
        Matrix y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > order_limit) {
            throw CapacityError("group " + label + " exceeds " +
                                std::to_string(order_limit) + " elements");
          }
          todo.push_back(std::move(y));
        }
      }
    }
    FiniteMatrixGroup out;
    out.label_ = std::move(label);
    out.n_ = n;
    out.elements_.assign(seen.begin(), seen.end());
    out.generators_ = std::move(gens);
    return out;
  }

  /// Takes an explicit element list and checks the group axioms exactly.
  static FiniteMatrixGroup from_elements(std::string label, std::size_t n,
                                         std::vector<Matrix> elems) {
    std::set<Matrix> set(elems.begin(), elems.end());
    for (auto const& g : set) {
      if (g.size() != n) {
        throw DimensionError("element of size " + std::to_string(g.size()) +
                             " in group " + label);
      }
    }
    if (!set.contains(Matrix::identity(n))) {
      throw PreconditionError("group " + label + " lacks the identity");
    }
    for (auto const& x : set) {
      if (!set.contains(x.inverse())) {
        throw PreconditionError("group " + label + " is not closed under inverses");
      }
      for (auto const& y : set) {
        if (!set.contains(x * y)) {
          throw PreconditionError("group " + label + " is not closed under products");
        }
      }
    }
    FiniteMatrixGroup out;
    out.label_ = std::move(label);
    out.n_ = n;
    out.elements_.assign(set.begin(), set.end());
    out.generators_ = out.elements_;
    return out;
  }

  std::string const& label() const noexcept { return label_; }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<Matrix const> elements() const noexcept { return elements_; }
  std::span<Matrix const> generators() const noexcept { return generators_; }

  bool contains(Matrix const& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

  /// Same element set, irrespective of labels and generators.
  bool same_elements(FiniteMatrixGroup const& o) const {
    return n_ == o.n_ && elements_ == o.elements_;
  }

 private:
  std::string label_;
  std::size_t n_ = 0;
  std::vector<Matrix> elements_;
  std::vector<Matrix> generators_;
};

inline FiniteMatrixGroup trivial_group(std::size_t n) {
  return FiniteMatrixGroup::from_generators("{1}", n, {});
}

/// Permutation matrices of S_n, generated by a transposition and an n-cycle.
inline FiniteMatrixGroup symmetric_group(std::size_t n) {
  if (n == 0) {
    throw ParameterError("symmetric_group needs n >= 1");
  }
  std::vector<Matrix> gens;
  if (n >= 2) {
    std::vector<std::size_t> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(Matrix::permutation(swap));
    std::vector<std::size_t> cycle(n);
    for (std::size_t j = 0; j < n; ++j) {
      cycle[j] = (j + 1) % n;
    }
    gens.push_back(Matrix::permutation(cycle));
  }
  return FiniteMatrixGroup::from_generators("S_" + std::to_string(n), n,
                                            std::move(gens));
}

/// Signed permutation matrices H_n.
inline FiniteMatrixGroup hyperoctahedral_group(std::size_t n) {
  auto const sym = symmetric_group(n);
  std::vector<Matrix> gens(sym.generators().begin(), sym.generators().end());
  std::vector<Cyc> flip(n, Cyc(1));
  flip[0] = -1;
  gens.push_back(Matrix::diagonal(flip));
  return FiniteMatrixGroup::from_generators("H_" + std::to_string(n), n,
                                            std::move(gens));
}

/// The scalar matrices z * I_n with z^k = 1.
inline FiniteMatrixGroup scalar_group(std::size_t n, long k) {
  return FiniteMatrixGroup::from_generators(
      "mu_" + std::to_string(k) + "*I_" + std::to_string(n), n,
      {Matrix::identity(n).scaled(Cyc::root_of_unity(k))});
}

/// {z * h : z^k = 1, h in H}. Generated from the generators of H and z * I,
/// then checked to coincide with the explicit set product.
inline FiniteMatrixGroup glued_group(FiniteMatrixGroup const& h, long k) {
  Cyc const z = Cyc::root_of_unity(k);
  std::size_t const n = h.dimension();
  std::vector<Matrix> gens(h.generators().begin(), h.generators().end());
  gens.push_back(Matrix::identity(n).scaled(z));
  auto out = FiniteMatrixGroup::from_generators(
      h.label() + " x mu_" + std::to_string(k), n, std::move(gens));
  std::set<Matrix> product;
  Cyc zp(1);
  for (long a = 0; a < k; ++a, zp = zp * z) {
    for (auto const& g : h.elements()) {
      product.insert(g.scaled(zp));
    }
  }
  if (!std::equal(product.begin(), product.end(), out.elements().begin(),
                  out.elements().end())) {
    throw PreconditionError("glued_group: the set product z * " + h.label() +
                            " is not closed");
  }
  return out;
}

/// Seeded samplers of exact unitary matrices over Q(zeta_12).
namespace sampling {

inline std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

/// A uniformly chosen 12th root of unity.
inline Cyc random_phase(std::mt19937_64& rng) {
  return Cyc::zeta(static_cast<long>(pick(rng, 12)));
}

inline Matrix random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Matrix::permutation(perm);
}

inline Matrix random_signed_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Cyc> signs(n);
  for (auto& s : signs) {
    s = pick(rng, 2) == 0 ? 1 : -1;
  }
  return Matrix::diagonal(signs) * random_permutation(n, rng);
}

/// Primitive Pythagorean triples (a, b, c) with c <= 25.
inline std::span<std::array<long, 3> const> pythagorean_triples() {
  static constexpr std::array<std::array<long, 3>, 6> t{
      {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {4, 3, 5}, {12, 5, 13}}};
  return t;
}

/// A rational rotation [[a/c, -b/c], [b/c, a/c]] acting on a random pair of
/// coordinates.
inline Matrix random_rotation(std::size_t n, std::mt19937_64& rng) {
  auto const& t = pythagorean_triples()[pick(rng, pythagorean_triples().size())];
  mpq_class const a(t[0], t[2]);
  mpq_class const b(t[1], t[2]);
  std::size_t const p = pick(rng, n);
  std::size_t q = pick(rng, n - 1);
  q += q >= p ? 1 : 0;
  Matrix m = Matrix::identity(n);
  m(p, p) = Cyc(a);
  m(p, q) = Cyc(mpq_class(-b));
  m(q, p) = Cyc(b);
  m(q, q) = Cyc(a);
  return m;
}

/// Gaussian-integer quadruples (x1, y1, x2, y2) with x1^2 + y1^2 + x2^2 + y2^2
/// a perfect square and every coordinate in -3..3, both halves nonzero.
inline std::vector<std::array<long, 5>> const& su2_seeds() {
  static auto const seeds = [] {
    std::vector<std::array<long, 5>> out;
    for (long x1 = -3; x1 <= 3; ++x1) {
      for (long y1 = -3; y1 <= 3; ++y1) {
        for (long x2 = -3; x2 <= 3; ++x2) {
          for (long y2 = -3; y2 <= 3; ++y2) {
            long const s = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
            long r = 0;
            while (r * r < s) {
              ++r;
            }
            if (r * r == s && x1 * x1 + y1 * y1 > 0 && x2 * x2 + y2 * y2 > 0) {
              out.push_back({x1, y1, x2, y2, r});
            }
          }
        }
      }
    }
    return out;
  }();
  return seeds;
}

/// [[a, -conj(b)], [b, conj(a)]] with Gaussian-rational a, b and
/// |a|^2 + |b|^2 = 1, on a random pair of coordinates.
inline Matrix random_su2_block(std::size_t n, std::mt19937_64& rng) {
  auto const& s = su2_seeds()[pick(rng, su2_seeds().size())];
  Cyc const i = Cyc::imaginary_unit();
  Cyc const a = (Cyc(s[0]) + Cyc(s[1]) * i).scaled(mpq_class(1, s[4]));
  Cyc const b = (Cyc(s[2]) + Cyc(s[3]) * i).scaled(mpq_class(1, s[4]));
  std::size_t const p = pick(rng, n);
  std::size_t q = pick(rng, n - 1);
  q += q >= p ? 1 : 0;
  Matrix m = Matrix::identity(n);
  m(p, p) = a;
  m(p, q) = -b.conj();
  m(q, p) = b;
  m(q, q) = a.conj();
  return m;
}

/// A product of phase diagonals, permutations, rotations and SU(2) blocks;
/// generically has no special structure.
inline Matrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::vector<Cyc> phases(n);
  for (auto& z : phases) {
    z = random_phase(rng);
  }
  Matrix m = Matrix::diagonal(phases) * random_permutation(n, rng);
  if (n >= 2) {
    m = m * random_su2_block(n, rng) * random_rotation(n, rng);
  }
  return m;
}

/// z * O with z a 12th root of unity and O a real orthogonal matrix.
inline Matrix random_phased_orthogonal(std::size_t n, std::mt19937_64& rng) {
  Matrix o = random_signed_permutation(n, rng);
  if (n >= 2 && pick(rng, 2) == 0) {
    o = o * random_rotation(n, rng);
  }
  return o.scaled(random_phase(rng));
}

/// z * P * B where P is a permutation and B is either I or the reflection
/// (2/n) J - I; all row and column sums equal z.
inline Matrix random_phased_bistochastic(std::size_t n, std::mt19937_64& rng) {
  Matrix b = Matrix::identity(n);
  if (n >= 2 && pick(rng, 2) == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b(i, j) = Cyc(mpq_class(mpq_class(2, static_cast<long>(n)) - (i == j ? 1 : 0)));
      }
    }
  }
  return (random_permutation(n, rng) * b).scaled(random_phase(rng));
}

/// A diagonal matrix of 12th roots of unity.
inline Matrix random_phase_diagonal(std::size_t n, std::mt19937_64& rng) {
  std::vector<Cyc> phases(n);
  for (auto& z : phases) {
    z = random_phase(rng);
  }
  return Matrix::diagonal(phases);
}

/// Draws from the samplers above in turn, so that structured matrices (for
/// which many relations hold) and generic ones both occur.
inline Matrix mixed_unitary(std::size_t n, std::mt19937_64& rng) {
  switch (pick(rng, 4)) {
    case 0:
      return random_unitary(n, rng);
    case 1:
      return random_phased_orthogonal(n, rng);
    case 2:
      return random_phased_bistochastic(n, rng);
    default:
      return random_phase_diagonal(n, rng);
  }
}

}  // namespace sampling

}  // namespace colpart

#endif  // COLPART_MATRIX_GROUP_HPP_
