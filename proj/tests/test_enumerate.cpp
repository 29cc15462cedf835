#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "colpart/enumerate.hpp"
#include "support/oracles.hpp"

using namespace colpart;

TEST_CASE("non-colored enumeration matches the reference enumerator",
          "[enumerate]") {
  for (std::size_t k = 0; k <= 8; ++k) {
    auto const mine = all_noncolored_partitions(k);
    auto const ref = oracle::set_partitions(k);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t t = 0; t < ref.size(); ++t) {
      std::vector<int> labels(mine[t].labels().begin(), mine[t].labels().end());
      CHECK(labels == ref[t]);
    }
  }
}

TEST_CASE("Bell numbers", "[enumerate]") {
  std::size_t const bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t k = 0; k <= 8; ++k) {
    CHECK(all_noncolored_partitions(k).size() == bell[k]);
  }
}

TEST_CASE("colored enumeration has 2^k colorings of every shape",
          "[enumerate]") {
  for (std::size_t k = 0; k <= 5; ++k) {
    auto const all = all_partitions(k);
    CHECK(all.size() == oracle::colored_partitions(k).size());
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (auto const& p : all) {
      CHECK(p.size() == k);
    }
  }
}

TEST_CASE("random partitions are seeded and within range", "[enumerate]") {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  std::map<std::size_t, int> lengths;
  for (int t = 0; t < 2000; ++t) {
    auto const p = random_partition(6, a);
    CHECK(p == random_partition(6, b));
    CHECK(p.size() <= 6);
    ++lengths[p.size()];
  }
  CHECK(lengths.size() == 7);
}
