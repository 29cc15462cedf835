#include <catch_amalgamated.hpp>

#include <set>

#include "colpart/classifier.hpp"
#include "colpart/io.hpp"

using namespace colpart;

namespace {

std::vector<Partition> words(std::vector<std::string> const& ws) {
  std::vector<Partition> out;
  for (auto const& w : ws) {
    out.push_back(parse(w));
  }
  return out;
}

ClassificationReport classify_words(std::vector<std::string> const& ws) {
  return classify(generate_closure(words(ws), 6, 10));
}

// Rows that the closure at L' = 10 cannot tell apart from a neighbour.
bool beyond_ten(Table1Row const& row) {
  return (row.family == Family::H_pi && row.s == 3) ||
         row.family == Family::H_pi_inf;
}

}  // namespace

TEST_CASE("classification examples", "[classifier]") {
  auto const o4 = classify_words({"aabb", "aaBB"});
  CHECK(o4.row.label() == "O_glob(4)");
  CHECK(o4.row.confidence == Confidence::certified);

  auto const o0 = classify_words({"aaBB"});
  CHECK(o0.row.label() == "O_glob(0)");

  auto const s1 = classify_words({"a", "aAaA", "aB", "aaBB"});
  CHECK(s1.row.label() == "S_glob(1)");
  CHECK(s1.to_text().find("family: S_glob(1)") != std::string::npos);
}

TEST_CASE("categories without the glob pair are rejected", "[classifier]") {
  CHECK_THROWS_AS(classify_words({"aAaA"}), NotGloballyColorizedError);
}

TEST_CASE("the table has sixteen rows", "[classifier]") {
  auto const table = table1_entries();
  CHECK(table.size() == 16);
  std::size_t starred = 0;
  for (auto const& e : table) {
    starred += is_group_theoretical_instance(e.family) ? 1 : 0;
  }
  CHECK(starred == 3);
}

TEST_CASE("generator lists", "[classifier]") {
  auto render_all = [](Table1Row const& row) {
    std::vector<std::string> out;
    for (auto const& g : generators_of(row)) {
      out.push_back(render(g));
    }
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(render_all({Family::O_glob, 4}) == V{"aabb", "aaBB"});
  CHECK(render_all({Family::O_glob, 0}) == V{"aaBB"});
  CHECK(render_all({Family::B_prime_glob, 1}) == V{"a", "abCB", "aaBB"});
  CHECK(render_all({Family::H_hl_glob, 2, 3}) ==
        V{"aa", "aBaBaB", "aAaA", "abcABC", "aaBB"});
  CHECK(render_all({Family::H_pi, 0, 2}) == V{"aBbAaBbA", "aaBB"});
  GeneratorOptions capped;
  capped.max_length = 8;
  CHECK(generators_of({Family::H_pi_inf, 0}, capped).size() == 3);
}

TEST_CASE("inadmissible parameters", "[classifier]") {
  CHECK_THROWS_AS(generators_of({Family::O_glob, 3}), ParameterError);
  CHECK_THROWS_AS(generators_of({Family::O_glob, -2}), ParameterError);
  CHECK_THROWS_AS(generators_of({Family::H_hl_glob, 2, 2}), ParameterError);
  CHECK_THROWS_AS(generators_of({Family::H_pi, 2, 1}), ParameterError);
  CHECK_THROWS_AS(generators_of({Family::B_glob, 2, 3}), ParameterError);
  CHECK_NOTHROW(generators_of({Family::S_glob, 3}));
}

TEST_CASE("rows with k <= 2 round trip", "[classifier]") {
  for (auto const& row : sample_rows({0, 1, 2})) {
    if (beyond_ten(row)) {
      continue;
    }
    auto const rt = round_trip(row, 6, 10);
    INFO(row.label() << ": " << rt.error);
    CHECK(rt.ok);
  }
}

TEST_CASE("rows needing words longer than ten are out of reach at L' = 10",
          "[classifier]") {
  auto const pi3 = round_trip({Family::H_pi, 0, 3}, 6, 10);
  CHECK_FALSE(pi3.ok);
  CHECK(pi3.error.find("longer than the working bound") != std::string::npos);

  auto const inf = round_trip({Family::H_pi_inf, 0}, 6, 10);
  REQUIRE(inf.report);
  CHECK(inf.report->row.label() == "H_pi(0,2)");
}

TEST_CASE("coincidences for k = 1", "[classifier]") {
  auto const rep = verify_coincidences(6, 10, {1});
  REQUIRE(rep.entries.size() == 2);
  for (auto const& e : rep.entries) {
    CHECK(e.expected_equal);
    CHECK(e.equal);
  }
}
