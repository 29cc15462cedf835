#include <catch_amalgamated.hpp>

#include <random>

#include "colpart/delta.hpp"
#include "colpart/enumerate.hpp"
#include "support/oracles.hpp"

using namespace colpart;

namespace {

oracle::Raw raw(Partition const& p) {
  oracle::Raw r;
  r.colors = color_string(p);
  for (auto l : p.labels()) {
    r.labels.push_back(static_cast<int>(l));
  }
  return r;
}

std::vector<Partition> up_to(std::size_t max_length) {
  std::vector<Partition> out;
  for (std::size_t k = 0; k <= max_length; ++k) {
    auto ps = all_partitions(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

// Dense action of every group element on the delta array, entry by entry.
bool fixed_by_every_element(Partition const& p, FiniteMatrixGroup const& g) {
  std::size_t const n = g.dimension();
  std::size_t const k = p.size();
  auto const t = oracle::delta_array(raw(p), n);
  for (auto const& x : g.elements()) {
    Matrix const xc = x.conj();
    for (std::size_t fb = 0; fb < t.size(); ++fb) {
      auto const beta = unflatten(fb, n, k);
      Cyc sum;
      for (std::size_t fa = 0; fa < t.size(); ++fa) {
        if (t[fa] == 0) {
          continue;
        }
        auto const alpha = unflatten(fa, n, k);
        Cyc term(1);
        for (std::size_t l = 0; l < k; ++l) {
          term = term * (p.color(l) == Color::white ? x : xc)(beta[l], alpha[l]);
        }
        sum += term;
      }
      if (sum != Cyc(t[fb])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("worked delta values", "[delta]") {
  auto const p = parse("AaBBCcA");
  std::vector<std::size_t> const a{1, 1, 3, 3, 6, 6, 1};
  std::vector<std::size_t> const b{1, 1, 3, 3, 1, 1, 1};
  std::vector<std::size_t> const c{1, 2, 3, 3, 6, 6, 1};
  CHECK(delta(p, a) == 1);
  CHECK(delta(p, b) == 1);
  CHECK(delta(p, c) == 0);
  std::vector<std::size_t> const short_index{1, 1};
  std::vector<std::size_t> const zero_index{0, 1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(delta(p, short_index), DimensionError);
  CHECK_THROWS_AS(delta(p, zero_index), DimensionError);
}

TEST_CASE("t-vectors match the brute-force delta array", "[delta]") {
  for (std::size_t n : {1, 2, 3}) {
    for (auto const& p : up_to(5)) {
      auto const t = t_vector(p, n);
      auto const want = oracle::delta_array(raw(p), n);
      REQUIRE(t.entries().size() == want.size());
      CHECK(std::equal(want.begin(), want.end(), t.entries().begin()));
      CHECK(t.ones() == static_cast<std::size_t>(std::count(
                            want.begin(), want.end(), 1)));
    }
  }
}

TEST_CASE("tensor capacity", "[delta]") {
  CHECK(tensor_volume(2, 20) == std::size_t{1} << 20);
  CHECK_THROWS_AS(tensor_volume(2, 21), CapacityError);
  CHECK_THROWS_AS(t_vector(parse("abcdefghijklm"), 3), CapacityError);
}

TEST_CASE("delta respects tensor products and contractions",
          "[delta][property]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    auto const p = random_partition(4, rng);
    auto const q = random_partition(4, rng);
    CHECK(check_tensor(p, q, 2));
    CHECK(check_tensor(p, q, 3));
    for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
      if (p.color(i - 1) != p.color(i % p.size())) {
        CHECK(check_contraction(p, i, 2));
        CHECK(check_contraction(p, i, 3));
      }
    }
  }
}

TEST_CASE("contraction identity factor", "[delta]") {
  CHECK(contraction_closes_block(parse("aA"), 1));
  CHECK(contraction_closes_block(parse("Ab"), 1));
  CHECK(contraction_closes_block(parse("aAbb"), 1));
  CHECK_FALSE(contraction_closes_block(parse("aAa"), 1));
  CHECK_FALSE(contraction_closes_block(parse("abAB"), 2));
}

TEST_CASE("fixed-space dimensions count set partitions", "[delta]") {
  std::vector<Color> const w3(3, Color::white);
  std::vector<Color> const w4(4, Color::white);
  std::vector<Color> const mixed{Color::white, Color::black, Color::white,
                                 Color::black};
  auto const s2 = symmetric_group(2);
  auto const s3 = symmetric_group(3);
  auto const s4 = symmetric_group(4);
  auto const h2 = hyperoctahedral_group(2);
  auto const h3 = hyperoctahedral_group(3);
  CHECK(fixspace_dim(s4, w3) == oracle::count_partitions(3, 4, false));
  CHECK(fixspace_dim(h3, w4) == oracle::count_partitions(4, 3, true));
  CHECK(fixspace_dim(s2, w4) == oracle::count_partitions(4, 2, false));
  CHECK(fixspace_dim(s3, mixed) == oracle::count_partitions(4, 3, false));
  CHECK(fixspace_dim(h2, w4) == oracle::count_partitions(4, 2, true));
  for (auto const* g : {&s2, &s3, &h2, &h3}) {
    for (auto const* legs : {&w3, &w4, &mixed}) {
      CHECK(fixspace_dim(*g, *legs) == fixspace_dim_by_character(*g, *legs));
    }
  }
}

TEST_CASE("membership through generators equals membership through all "
          "elements",
          "[delta][property]") {
  std::vector<FiniteMatrixGroup> const groups{
      symmetric_group(2), hyperoctahedral_group(2), scalar_group(2, 3),
      glued_group(symmetric_group(2), 4)};
  std::mt19937_64 rng(42);
  for (auto const& g : groups) {
    for (int t = 0; t < 40; ++t) {
      auto const p = random_partition(4, rng);
      INFO(g.label() << " on " << render(p));
      CHECK(membership_by_fixspace(p, g) == fixed_by_every_element(p, g));
    }
  }
}

TEST_CASE("scalar groups see only the color sum", "[delta]") {
  for (long k : {1, 2, 3, 4}) {
    auto const g = scalar_group(2, k);
    for (auto const& p : up_to(4)) {
      CHECK(membership_by_fixspace(p, g) == (color_sum(p).c % k == 0));
    }
  }
}
