#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "colpart/cyclotomic.hpp"

using namespace colpart;

namespace {

std::complex<double> numeric(Cyc const& x) {
  std::complex<double> out;
  auto const& c = x.coefficients();
  for (std::size_t j = 0; j < Cyc::degree; ++j) {
    out += c[j].get_d() *
           std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / 12);
  }
  return out;
}

Cyc random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  Cyc out;
  for (long j = 0; j < 12; ++j) {
    if (num(rng) > 2) {
      out += Cyc::zeta(j).scaled(mpq_class(num(rng), den(rng)));
    }
  }
  return out;
}

bool close(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) < 1e-9 * (1 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("totient and the twelfth cyclotomic polynomial", "[cyclotomic]") {
  CHECK(detail::euler_phi(12) == 4);
  CHECK(detail::euler_phi(7) == 6);
  CHECK(detail::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(detail::cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
}

TEST_CASE("roots of unity", "[cyclotomic]") {
  Cyc z = Cyc::zeta(1);
  Cyc p(1);
  for (int t = 0; t < 12; ++t) {
    CHECK((t == 0) == (p == Cyc(1)));
    p = p * z;
  }
  CHECK(p == Cyc(1));
  CHECK(Cyc::imaginary_unit() * Cyc::imaginary_unit() == Cyc(-1));
  CHECK(Cyc::root_of_unity(3) * Cyc::root_of_unity(3, 2) == Cyc(1));
  CHECK_THROWS_AS(Cyc::root_of_unity(5), ParameterError);
  Cyc const sqrt3 = z + z.conj();
  CHECK(sqrt3 * sqrt3 == Cyc(3));
  CHECK_FALSE(sqrt3.is_rational());
  CHECK_THROWS_AS(sqrt3.rational(), ParameterError);
}

TEST_CASE("arithmetic agrees with complex evaluation", "[cyclotomic][property]") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    auto const a = random_element(rng);
    auto const b = random_element(rng);
    CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
    CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
    CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
    CHECK(close(numeric(a.conj()), std::conj(numeric(a))));
    CHECK(a * b == b * a);
    if (!b.is_zero()) {
      CHECK(close(numeric(a / b), numeric(a) / numeric(b)));
      CHECK(b * b.inverse() == Cyc(1));
      CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("zero has no inverse", "[cyclotomic]") {
  CHECK_THROWS(Cyc().inverse());
}
