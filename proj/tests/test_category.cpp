#include <catch_amalgamated.hpp>

#include <random>

#include "colpart/category.hpp"
#include "colpart/enumerate.hpp"
#include "colpart/io.hpp"
#include "colpart/named.hpp"
#include "support/oracles.hpp"

using namespace colpart;

namespace {

std::vector<Partition> words(std::vector<std::string> const& ws) {
  std::vector<Partition> out;
  for (auto const& w : ws) {
    out.push_back(parse(w));
  }
  return out;
}

std::vector<Partition> unary_images(Partition const& p) {
  std::vector<Partition> out{reflect(p)};
  if (!p.empty()) {
    out.push_back(rotate(p));
  }
  for (std::size_t i = 1; p.size() >= 2 && i <= p.size(); ++i) {
    if (p.color(i - 1) != p.color(i % p.size())) {
      out.push_back(contract(p, i));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closure listings match the reference fixpoint", "[category]") {
  std::vector<std::vector<std::string>> const cases{
      {},           {"aaBB"},       {"aAaA"}, {"abAB"},        {"aB"},
      {"aaaa"},     {"a"},          {"abCB"}, {"aAaA", "aaBB"}, {"abcABC"},
      {"aB", "aaBB"}};
  for (std::size_t bound : {4, 6}) {
    for (auto const& gens : cases) {
      auto const gs = words(gens);
      if (std::any_of(gs.begin(), gs.end(),
                      [&](Partition const& g) { return g.size() > bound; })) {
        continue;
      }
      INFO("generators: " << join_lines(gens) << " L=" << bound);
      auto const want = oracle::up_to(oracle::closure(gens, bound), bound);
      ClosureOptions plain;
      plain.color_orbits = false;
      CHECK(listing(generate_closure(gs, bound, bound, plain)) == want);

      // Orbit mode may add recolorings that the plain run would only reach
      // through longer intermediates; each one keeps shape and white count
      // of an element of the plain run.
      auto const orbit = generate_closure(gs, bound, bound);
      auto const lines = listing(orbit);
      CHECK(std::includes(lines.begin(), lines.end(), want.begin(), want.end()));
      for (auto const& w : lines) {
        auto const p = parse(w);
        bool const matched = std::any_of(
            want.begin(), want.end(), [&](std::string const& v) {
              auto const q = parse(v);
              return q.shape() == p.shape() &&
                     color_sum(q).white == color_sum(p).white;
            });
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("listing examples", "[category]") {
  auto const none = listing(generate_closure(std::vector<Partition>{}, 2, 2));
  CHECK(none == std::vector<std::string>{"Aa", "aA"});

  auto const pair = listing(generate_closure(words({"aa"}), 2, 6));
  CHECK(pair == std::vector<std::string>{"AA", "Aa", "aA", "aa"});

  auto const glob = listing(generate_closure(words({"aaBB"}), 4, 8));
  for (auto const* w : {"aaBB", "AAbb", "aBBa", "AbbA", "aAbB", "AaBb"}) {
    CHECK(std::find(glob.begin(), glob.end(), w) != glob.end());
  }
  CHECK(std::find(glob.begin(), glob.end(), "aabb") == glob.end());
  CHECK(std::is_sorted(glob.begin(), glob.end()));
}

TEST_CASE("the engine is closed at its working bound", "[category][property]") {
  auto const cat = generate_closure(words({"aAaA", "aB"}), 5, 5);
  auto const elems = cat.elements(5);
  for (auto const& p : elems) {
    for (auto const& img : unary_images(p)) {
      CHECK(cat.has(img));
    }
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    auto const& p = elems[pick(rng)];
    auto const& q = elems[pick(rng)];
    if (p.size() + q.size() <= 5) {
      CHECK(cat.has(tensor(p, q)));
    }
  }
}

TEST_CASE("certificates are preserved by every operation",
          "[category][property]") {
  std::vector<Partition> pool;
  for (std::size_t k = 0; k <= 5; ++k) {
    auto ps = all_partitions(k);
    pool.insert(pool.end(), ps.begin(), ps.end());
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (auto c : all_certificates) {
    for (std::int64_t d : {0, 1, 2, 3}) {
      if (c != Certificate::c_divisible && d != 0) {
        continue;
      }
      INFO(certificate_name(c, d));
      for (auto const& p : pool) {
        if (!satisfies(p, c, d)) {
          continue;
        }
        for (auto const& img : unary_images(p)) {
          CHECK(satisfies(img, c, d));
        }
      }
      for (int t = 0; t < 3000; ++t) {
        auto const& p = pool[pick(rng)];
        auto const& q = pool[pick(rng)];
        if (satisfies(p, c, d) && satisfies(q, c, d)) {
          CHECK(satisfies(tensor(p, q), c, d));
        }
      }
    }
  }
}

TEST_CASE("membership is tri-valued", "[category]") {
  auto const cat = generate_closure(words({"aaBB"}), 4, 8);
  CHECK(contains(cat, parse("aaBB")).yes());
  auto const single = contains(cat, parse("aB"));
  CHECK(single.no());
  CHECK(single.certificate_name == "pair-blocks-only");
  auto const far = contains(cat, parse("aAbBcCdDeE"));
  CHECK(far.unknown());
  CHECK(far.working_bound == 8);
}

TEST_CASE("bound preconditions", "[category]") {
  CHECK_THROWS_AS(generate_closure(std::vector<Partition>{}, 1, 4), BoundError);
  CHECK_THROWS_AS(generate_closure(std::vector<Partition>{}, 6, 4), BoundError);
  CHECK_THROWS_AS(generate_closure(words({"aabbcc"}), 2, 4), BoundError);
  CHECK(default_working_bound(words({"abcABC"}), 6) == 12);
  CHECK(default_working_bound({}, 6) == 10);
}

TEST_CASE("degree, cases and sectors", "[category]") {
  auto const s1 = generate_closure(words({"a", "aAaA", "aB", "aaBB"}), 4, 8);
  CHECK(degree_of_reflection(s1).k == 1);
  CHECK(case_of(s1).value == Case::S);
  CHECK(is_globally_colorized(s1).yes());

  auto const o4 = generate_closure(words({"aabb", "aaBB"}), 6, 10);
  auto const d = degree_of_reflection(o4);
  CHECK(d.k == 4);
  CHECK(d.exact);
  CHECK(case_of(o4).value == Case::O);

  auto const zero = zero_sector(o4);
  for (auto const& p : zero.elements(6)) {
    CHECK(color_sum(p).c == 0);
    CHECK(o4.has(p));
  }
  CHECK(color_permutation_property(o4, 500, 1));
}
