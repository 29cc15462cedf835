#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "colpart/enumerate.hpp"
#include "colpart/io.hpp"
#include "colpart/named.hpp"

using namespace colpart;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(std::string const& name) {
  auto const dir = fs::temp_directory_path() / ("colpart-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("explicit form", "[io]") {
  CHECK(to_explicit(parse("aBa")) == R"({"colors":"wbw","blocks":[[1,3],[2]]})");
  CHECK(render(from_explicit(R"({"colors":"wbw","blocks":[[1,3],[2]]})")) ==
        "aBa");
  CHECK(render(from_explicit(R"({"blocks":[[2],[3,1]],"colors":"bbw"})")) ==
        "ABa");
  CHECK(from_explicit(R"({"colors":"","blocks":[]})").empty());
}

TEST_CASE("explicit form rejects malformed input", "[io]") {
  for (auto const* bad :
       {R"({"colors":"wb","blocks":[[1]]})", R"({"colors":"wb"})",
        R"({"colors":"wx","blocks":[[1,2]]})",
        R"({"colors":"wb","blocks":[[1,2],[2]]})",
        R"({"colors":"wb","blocks":[[1,3]]})",
        R"({"colors":"wb","blocks":[[]]})", "{nope"}) {
    INFO(bad);
    CHECK_THROWS_AS(from_explicit(bad), ParseError);
  }
}

TEST_CASE("explicit form round trips beyond the alphabet", "[io][property]") {
  auto const big = named::s(40);
  CHECK(render_any(big).front() == '{');
  CHECK(parse_any(render_any(big)) == big);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 500; ++t) {
    auto const p = random_partition(12, rng);
    CHECK(from_explicit(to_explicit(p)) == p);
    CHECK(parse_any(render_any(p)) == p);
  }
}

TEST_CASE("generator files", "[io]") {
  auto const gens = parse_generator_text("# comment\n\n  aaBB  \naB\n");
  REQUIRE(gens.size() == 2);
  CHECK(render(gens[0]) == "aaBB");
  try {
    parse_generator_text("aa\nbad!\n");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(read_generator_file("/nonexistent/colpart.gen"), IoError);
}

TEST_CASE("closure cache", "[io]") {
  auto const dir = fresh_dir("cache");
  std::vector<Partition> const gens{parse("aaBB")};
  bool hit = true;
  auto const first = cached_listing(dir, gens, 4, 8, {}, &hit);
  CHECK_FALSE(hit);
  auto const second = cached_listing(dir, gens, 4, 8, {}, &hit);
  CHECK(hit);
  CHECK(first == second);
  CHECK(first == listing(generate_closure(gens, 4, 8)));

  auto const key = closure_cache_key(gens, 4, 8, {});
  CHECK(key.size() == 16);
  std::vector<Partition> const twice{parse("aaBB"), parse("aaBB")};
  CHECK(closure_cache_key(twice, 4, 8, {}) == key);
  CHECK(closure_cache_key(gens, 4, 9, {}) != key);
  CHECK(closure_cache_key({parse("aB")}, 4, 8, {}) != key);
  fs::remove_all(dir);
}

TEST_CASE("listing omits the empty partition and is sorted", "[io]") {
  auto const lines = listing(generate_closure({parse("aB")}, 3, 5));
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(std::find(lines.begin(), lines.end(), "") == lines.end());
  CHECK(split_lines(join_lines(lines)) == lines);
}
