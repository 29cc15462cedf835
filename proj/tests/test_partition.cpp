#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "colpart/enumerate.hpp"
#include "colpart/named.hpp"
#include "colpart/partition.hpp"
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

}  // namespace

TEST_CASE("word notation round trips", "[partition]") {
  auto const p = parse("AaBBCcA");
  CHECK(render(p) == "AaBBCcA");
  CHECK(color_string(p) == "bwbbbwb");
  CHECK(p.block_count() == 3);
  CHECK(render(parse("")) == "");
  CHECK(render(parse("cbc")) == "aba");
}

TEST_CASE("worked operation examples", "[partition]") {
  auto const p = parse("AaBBCcA");
  auto const q = parse("AabCBcd");
  CHECK(render(tensor(p, q)) == "AaBBCcADdeFEfg");
  CHECK(render(contract(p, 2)) == "AABbA");
  CHECK(render(contract(q, 7)) == "abCBc");
  CHECK(render(reflect(p)) == "aBbccAa");
  CHECK(render(rotate(p)) == "AAaBBCc");
}

TEST_CASE("parse rejects foreign characters with their position",
          "[partition]") {
  try {
    parse("ab1");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("operation preconditions", "[partition]") {
  CHECK_THROWS_AS(contract(parse("a"), 1), SizeError);
  CHECK_THROWS_AS(contract(parse("aA"), 3), SizeError);
  CHECK_THROWS_AS(contract(parse("ab"), 1), PreconditionError);
  CHECK_THROWS_AS(rotate(Partition{}), SizeError);
  CHECK(contract(parse("aA"), 2).empty());
}

TEST_CASE("render refuses more than 26 blocks", "[partition]") {
  CHECK_NOTHROW(render(named::s(26)));
  CHECK_THROWS_AS(render(named::s(27)), RenderError);
}

TEST_CASE("operations agree with the reference model", "[partition][property]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    auto const p = random_partition(9, rng);
    auto const q = random_partition(9, rng);
    auto const rp = raw(p);
    CHECK(raw(tensor(p, q)) == oracle::tensor(rp, raw(q)));
    CHECK(raw(reflect(p)) == oracle::reflect(rp));
    if (!p.empty()) {
      CHECK(raw(rotate(p)) == oracle::rotate(rp));
    }
    for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
      if (p.color(i - 1) != p.color(i % p.size())) {
        CHECK(raw(contract(p, i)) == oracle::contract(rp, i));
      }
    }
    CHECK(render(p) == oracle::word(rp));
  }
}

TEST_CASE("structural laws of the operations", "[partition][property]") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    auto const p = random_partition(8, rng);
    auto const q = random_partition(8, rng);
    auto const r = random_partition(8, rng);
    CHECK(reflect(reflect(p)) == p);
    CHECK(tensor(tensor(p, q), r) == tensor(p, tensor(q, r)));
    CHECK(tensor(p, Partition{}) == p);
    CHECK(reflect(tensor(p, q)) == tensor(reflect(q), reflect(p)));
    if (!p.empty()) {
      Partition x = p;
      for (std::size_t i = 0; i < p.size(); ++i) {
        x = rotate(x);
      }
      CHECK(x == p);
    }
  }
}

TEST_CASE("color-sum laws", "[partition][property]") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    auto const p = random_partition(10, rng);
    auto const q = random_partition(10, rng);
    auto const c = color_sum(p);
    CHECK(c.white + c.black == static_cast<std::int64_t>(p.size()));
    CHECK(color_sum(tensor(p, q)).c == c.c + color_sum(q).c);
    CHECK(color_sum(reflect(p)).c == -c.c);
    if (!p.empty()) {
      CHECK(color_sum(rotate(p)).c == c.c);
    }
    for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
      if (p.color(i - 1) != p.color(i % p.size())) {
        CHECK(color_sum(contract(p, i)).c == c.c);
      }
    }
  }
}

TEST_CASE("forgetting colors and recoloring", "[partition]") {
  auto const p = parse("AaBBCcA");
  CHECK(render(forget_colors(p)) == "aabbcca");
  auto const all = colorings(forget_colors(p));
  CHECK(all.size() == 128);
  CHECK(std::find(all.begin(), all.end(), p) != all.end());
  CHECK(std::set<Partition>(all.begin(), all.end()).size() == 128);
}

TEST_CASE("noncrossing partitions are counted by Catalan numbers",
          "[partition]") {
  std::size_t const catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t k = 0; k < 8; ++k) {
    std::size_t count = 0;
    for (auto const& q : all_noncolored_partitions(k)) {
      count += is_noncrossing(q) ? 1 : 0;
    }
    CHECK(count == catalan[k]);
  }
  CHECK(is_noncrossing(parse("abba")));
  CHECK_FALSE(is_noncrossing(parse("abab")));
  CHECK(is_noncrossing(parse("abCB")));
  CHECK_FALSE(is_noncrossing(parse("abAB")));
}

TEST_CASE("named partitions", "[partition]") {
  CHECK(render(named::u(4)) == "aabb");
  CHECK(render(named::u(-2)) == "AA");
  CHECK(render(named::s(3)) == "abc");
  CHECK(render(named::block(-3)) == "AAA");
  CHECK(render(named::h(3)) == "ababab");
  CHECK(render(named::h0(2)) == "aBaB");
  CHECK(render(named::pi(2)) == "abbaabba");
  CHECK(render(named::pi0(1)) == "aAaA");
  CHECK(color_sum(named::pi0(3)).c == 0);
  CHECK_THROWS_AS(named::u(3), ParameterError);
  CHECK_THROWS_AS(named::pi(0), ParameterError);
}
