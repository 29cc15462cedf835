#include <catch_amalgamated.hpp>

#include <random>

#include "colpart/matrix_group.hpp"

using namespace colpart;

TEST_CASE("matrix basics", "[matrix]") {
  std::vector<std::size_t> const perm{1, 2, 0};
  auto const p = Matrix::permutation(perm);
  CHECK(p(1, 0) == Cyc(1));
  CHECK(p(0, 0) == Cyc(0));
  CHECK(p * p * p == Matrix::identity(3));
  CHECK(p.is_unitary());
  CHECK(p.inverse() == p.transpose());
  CHECK(p.trace() == Cyc(0));
  auto const m = Matrix::from_rows({{Cyc(1), Cyc(2)}, {Cyc(2), Cyc(4)}});
  CHECK(m.rank() == 1);
  CHECK_FALSE(m.is_invertible());
  CHECK_THROWS_AS(m.inverse(), PreconditionError);
  CHECK_THROWS(Matrix::from_rows({{Cyc(1), Cyc(2)}, {Cyc(2)}}));
}

TEST_CASE("group orders", "[matrix]") {
  CHECK(trivial_group(3).order() == 1);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(hyperoctahedral_group(2).order() == 8);
  CHECK(hyperoctahedral_group(3).order() == 48);
  CHECK(scalar_group(2, 3).order() == 3);
  CHECK(glued_group(symmetric_group(4), 2).order() == 48);
  CHECK(glued_group(symmetric_group(3), 2).order() == 12);
}

TEST_CASE("gluing phases", "[matrix]") {
  auto const h2 = hyperoctahedral_group(2);
  auto const a = glued_group(h2, 3);
  auto const b = glued_group(h2, 6);
  CHECK(a.order() == 24);
  CHECK(a.same_elements(b));
  CHECK(glued_group(h2, 2).same_elements(h2));
  CHECK_FALSE(glued_group(h2, 4).same_elements(h2));
}

TEST_CASE("group closure is checked", "[matrix]") {
  auto const s3 = symmetric_group(3);
  std::vector<Matrix> elems(s3.elements().begin(), s3.elements().end());
  CHECK(FiniteMatrixGroup::from_elements("S_3", 3, elems).order() == 6);
  elems.pop_back();
  CHECK_THROWS(FiniteMatrixGroup::from_elements("broken", 3, elems));
  auto const s5 = symmetric_group(5);
  std::vector<Matrix> const gens(s5.generators().begin(),
                                 s5.generators().end());
  CHECK_THROWS_AS(FiniteMatrixGroup::from_generators("big", 5, gens, 50),
                  CapacityError);
}

TEST_CASE("samplers produce unitary matrices", "[matrix][property]") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t const n = 2 + static_cast<std::size_t>(t % 3);
    CHECK(sampling::random_unitary(n, rng).is_unitary());
    CHECK(sampling::random_phased_orthogonal(n, rng).is_unitary());
    CHECK(sampling::random_phased_bistochastic(n, rng).is_unitary());
    CHECK(sampling::random_su2_block(n, rng).is_unitary());
    CHECK(sampling::mixed_unitary(n, rng).is_unitary());
  }
}

TEST_CASE("phased bistochastic matrices have constant line sums",
          "[matrix][property]") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    auto const m = sampling::random_phased_bistochastic(3, rng);
    Cyc const first = m(0, 0) + m(0, 1) + m(0, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(m(i, 0) + m(i, 1) + m(i, 2) == first);
      CHECK(m(0, i) + m(1, i) + m(2, i) == first);
    }
  }
}
