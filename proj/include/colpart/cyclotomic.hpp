#ifndef COLPART_CYCLOTOMIC_HPP_
#define COLPART_CYCLOTOMIC_HPP_

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "colpart/errors.hpp"

namespace colpart {

namespace detail {
constexpr int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) {
        n /= p;
      }
      result -= result / p;
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
// first, from x^n - 1 = prod over d | n of Phi_d.
inline std::vector<long> cyclotomic_polynomial(int n) {
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) {
      continue;
    }
    auto const den = cyclotomic_polynomial(d);
    // Exact division by a monic polynomial.
    std::size_t const dn = num.size() - 1;
    std::size_t const dd = den.size() - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (std::size_t i = dn - dd + 1; i-- > 0;) {
      long const q = num[i + dd];
      quot[i] = q;
      for (std::size_t j = 0; j <= dd; ++j) {
        num[i + j] -= q * den[j];
      }
    }
    num = std::move(quot);
  }
  return num;
}
}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, z, ..., z^(phi(N)-1) with z = exp(2 pi i / N) and rational
/// coefficients.
template <int N>
class Cyclotomic {
 public:
  static constexpr int conductor = N;
  static constexpr std::size_t degree =
      static_cast<std::size_t>(detail::euler_phi(N));
  using Coefficients = std::array<mpq_class, degree>;

  Cyclotomic() = default;
  Cyclotomic(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  /// Accepts a fraction in any form; it is brought to lowest terms.
  Cyclotomic(mpq_class v) {  // NOLINT(google-explicit-constructor)
    v.canonicalize();
    c_[0] = std::move(v);
  }

  /// z^power.
  static Cyclotomic zeta(long power) {
    long m = power % N;
    if (m < 0) {
      m += N;
    }
    Cyclotomic out;
    auto const& row = powers()[static_cast<std::size_t>(m)];
    for (std::size_t j = 0; j < degree; ++j) {
      out.c_[j] = row[j];
    }
    return out;
  }

  /// exp(2 pi i power / order). The order must divide N.
  static Cyclotomic root_of_unity(long order, long power = 1) {
    if (order <= 0 || N % order != 0) {
      throw ParameterError("root of unity of order " + std::to_string(order) +
                           " is not available with conductor " +
                           std::to_string(N));
    }
    return zeta(power * (N / order));
  }

  static Cyclotomic imaginary_unit() { return root_of_unity(4); }

  Coefficients const& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (auto const& x : c_) {
      if (sgn(x) != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < degree; ++j) {
      if (sgn(c_[j]) != 0) {
        return false;
      }
    }
    return true;
  }

  /// The value as a rational; requires is_rational().
  mpq_class const& rational() const {
    if (!is_rational()) {
      throw ParameterError("cyclotomic number " + to_string() +
                           " is not rational");
    }
    return c_[0];
  }

  Cyclotomic& operator+=(Cyclotomic const& o) {
    for (std::size_t j = 0; j < degree; ++j) {
      c_[j] += o.c_[j];
    }
    return *this;
  }
  Cyclotomic& operator-=(Cyclotomic const& o) {
    for (std::size_t j = 0; j < degree; ++j) {
      c_[j] -= o.c_[j];
    }
    return *this;
  }
  Cyclotomic operator-() const {
    Cyclotomic out;
    for (std::size_t j = 0; j < degree; ++j) {
      out.c_[j] = -c_[j];
    }
    return out;
  }
  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const& b) {
    return a += b;
  }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const& b) {
    return a -= b;
  }

  friend Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b) {
    if (a.is_rational()) {
      return b.scaled(a.c_[0]);
    }
    if (b.is_rational()) {
      return a.scaled(b.c_[0]);
    }
    std::array<mpq_class, 2 * degree> prod;
    for (std::size_t i = 0; i < degree; ++i) {
      if (sgn(a.c_[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < degree; ++j) {
        if (sgn(b.c_[j]) != 0) {
          prod[i + j] += a.c_[i] * b.c_[j];
        }
      }
    }
    Cyclotomic out;
    for (std::size_t m = 0; m < 2 * degree; ++m) {
      if (sgn(prod[m]) == 0) {
        continue;
      }
      auto const& row = powers()[m % static_cast<std::size_t>(N)];
      for (std::size_t j = 0; j < degree; ++j) {
        if (row[j] != 0) {
          out.c_[j] += prod[m] * row[j];
        }
      }
    }
    return out;
  }
  Cyclotomic& operator*=(Cyclotomic const& o) { return *this = *this * o; }

  Cyclotomic scaled(mpq_class r) const {
    r.canonicalize();
    Cyclotomic out;
    for (std::size_t j = 0; j < degree; ++j) {
      if (sgn(c_[j]) != 0) {
        out.c_[j] = c_[j] * r;
      }
    }
    return out;
  }

  /// Complex conjugate: z^j maps to z^(N-j).
  Cyclotomic conj() const {
    Cyclotomic out;
    for (std::size_t j = 0; j < degree; ++j) {
      if (sgn(c_[j]) == 0) {
        continue;
      }
      auto const& row =
          powers()[(static_cast<std::size_t>(N) - j) % static_cast<std::size_t>(N)];
      for (std::size_t i = 0; i < degree; ++i) {
        if (row[i] != 0) {
          out.c_[i] += c_[j] * row[i];
        }
      }
    }
    return out;
  }

  /// Multiplicative inverse, by solving (this * x) = 1 in the power basis.
  Cyclotomic inverse() const {
    if (is_zero()) {
      throw ParameterError("division by zero in cyclotomic field");
    }
    if (is_rational()) {
      return Cyclotomic(mpq_class(1) / c_[0]);
    }
    // Column j of m holds the coordinates of this * z^j.
    std::array<std::array<mpq_class, degree + 1>, degree> m;
    for (std::size_t j = 0; j < degree; ++j) {
      auto const col = *this * zeta(static_cast<long>(j));
      for (std::size_t i = 0; i < degree; ++i) {
        m[i][j] = col.c_[i];
      }
    }
    for (std::size_t i = 0; i < degree; ++i) {
      m[i][degree] = i == 0 ? 1 : 0;
    }
    for (std::size_t col = 0; col < degree; ++col) {
      std::size_t piv = col;
      while (piv < degree && sgn(m[piv][col]) == 0) {
        ++piv;
      }
      std::swap(m[col], m[piv]);
      mpq_class const inv = mpq_class(1) / m[col][col];
      for (auto& x : m[col]) {
        x *= inv;
      }
      for (std::size_t r = 0; r < degree; ++r) {
        if (r != col && sgn(m[r][col]) != 0) {
          mpq_class const f = m[r][col];
          for (std::size_t c = 0; c <= degree; ++c) {
            m[r][c] -= f * m[col][c];
          }
        }
      }
    }
    Cyclotomic out;
    for (std::size_t i = 0; i < degree; ++i) {
      out.c_[i] = m[i][degree];
    }
    return out;
  }

  friend Cyclotomic operator/(Cyclotomic const& a, Cyclotomic const& b) {
    return a * b.inverse();
  }

  friend bool operator==(Cyclotomic const& a, Cyclotomic const& b) {
    for (std::size_t j = 0; j < degree; ++j) {
      if (a.c_[j] != b.c_[j]) {
        return false;
      }
    }
    return true;
  }

  /// Lexicographic on coordinates; only meant for ordered containers.
  friend std::strong_ordering operator<=>(Cyclotomic const& a,
                                          Cyclotomic const& b) {
    for (std::size_t j = 0; j < degree; ++j) {
      int const c = cmp(a.c_[j], b.c_[j]);
      if (c != 0) {
        return c < 0 ? std::strong_ordering::less
                     : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < degree; ++j) {
      if (sgn(c_[j]) == 0) {
        continue;
      }
      if (!first) {
        out << " + ";
      }
      first = false;
      out << c_[j].get_str();
      if (j == 1) {
        out << "*z";
      } else if (j > 1) {
        out << "*z^" << j;
      }
    }
    return first ? "0" : out.str();
  }

 private:
  // Coordinates of z^m for m = 0..N-1, reduced modulo Phi_N.
  static std::vector<std::array<long, degree>> const& powers() {
    static auto const table = [] {
      auto const phi = detail::cyclotomic_polynomial(N);
      std::vector<std::array<long, degree>> t(static_cast<std::size_t>(N));
      std::array<long, degree> cur{};
      cur[0] = 1;
      for (std::size_t m = 0; m < static_cast<std::size_t>(N); ++m) {
        t[m] = cur;
        // Multiply by z and reduce z^degree = -sum phi_j z^j.
        long const top = cur[degree - 1];
        for (std::size_t j = degree - 1; j > 0; --j) {
          cur[j] = cur[j - 1] - top * phi[j];
        }
        cur[0] = -top * phi[0];
      }
      return t;
    }();
    return table;
  }

  Coefficients c_{};
};

/// The default field: conductor 12 contains i, the cube roots and the sixth
/// roots of unity.
using Cyc = Cyclotomic<12>;

}  // namespace colpart

#endif  // COLPART_CYCLOTOMIC_HPP_
