#include <catch_amalgamated.hpp>

#include <random>

#include "colpart/enumerate.hpp"
#include "colpart/named.hpp"
#include "colpart/relations.hpp"

using namespace colpart;

TEST_CASE("template short forms", "[relations]") {
  auto simplified = [](std::string const& w) {
    return emit(parse(w), 3).simplified_form.value_or("(none)");
  };
  CHECK(simplified("aaBB") == "u*[i,j]*u[k,l] = u[i,j]*u*[k,l]");
  CHECK(simplified("aB") == "sum_k u[k,j] = sum_l u[i,l]");
  CHECK(simplified("aabb") == "u[i1,j1]*u[i2,j2] = u*[i1,j1]*u*[i2,j2]");
  CHECK(simplified("abCB") ==
        "u[i,j]*(sum_{k1} u[k1,j1]) = (sum_{l1} u[i1,l1])*u[i,j]");
  CHECK(simplified("ab") == "1 = (sum_{j1} u[i1,j1])*(sum_{j2} u[i2,j2])");
  CHECK(simplified("abAB") == "(none)");
}

TEST_CASE("templates are matched up to rotation", "[relations]") {
  auto const m = match_template(parse("BaaB"));
  REQUIRE(m);
  CHECK(m->kind == RelationTemplate::glob_pair);
  CHECK(rotate(parse("aaBB")) == parse("BaaB"));
  CHECK(m->rotation == 1);
  CHECK(emit(parse("BaaB"), 2).note ==
        "template glob-pair (aaBB) rotated 1 time");
  CHECK_FALSE(match_template(Partition{}));
}

TEST_CASE("raw form", "[relations]") {
  auto const r = emit(parse("aB"), 2);
  CHECK(r.raw_form ==
        "1 = sum_{j1=1..2} sum_{j2=1..2} u[i1,j1]*u*[i2,j2]");
  CHECK(emit(parse("aaBB"), 3).raw_form ==
        "delta(i1,i2)*delta(i3,i4) = sum_{j1=1..3} sum_{j2=1..3} "
        "u[i1,j1]*u[i2,j1]*u*[i3,j2]*u*[i4,j2]");
  CHECK(emit(Partition{}, 2).raw_form == "1 = 1");
  CHECK_THROWS_AS(emit(parse("a"), 0), DimensionError);
}

TEST_CASE(".rel layout", "[relations]") {
  auto const text = to_rel(emit(parse("aB"), 2));
  CHECK(text ==
        "n=2  p=aB\n"
        "forall i1,i2:\n"
        "1 = sum_{j1=1..2} sum_{j2=1..2} u[i1,j1]*u*[i2,j2]\n"
        "# equivalent for unitary u and u^t, template singletons-wb (aB)\n"
        "forall i,j:\n"
        "sum_k u[k,j] = sum_l u[i,l]\n");
  auto const plain = to_rel(emit(parse("abAB"), 2));
  CHECK(plain.find('#') == std::string::npos);
}

TEST_CASE("three evaluations agree on unitary matrices",
          "[relations][property]") {
  std::mt19937_64 rng(61);
  std::vector<Partition> const templates{
      named::singletons_wb(), named::positioner_wwbb(), named::glob_pair(),
      named::u(2), named::u(4), named::s(1), named::s(2)};
  for (auto const& p : templates) {
    auto const m = match_template(p);
    REQUIRE(m);
    for (int t = 0; t < 30; ++t) {
      auto const g = sampling::mixed_unitary(2 + (t % 2 ? 1 : 0), rng);
      bool const c = evaluate_commutative(p, g);
      INFO(render(p) << " at sample " << t);
      CHECK(c == evaluate_raw(p, g));
      CHECK(c == evaluate_simplified(*m, g));
    }
  }
}

TEST_CASE("raw evaluation equals fixedness for any partition",
          "[relations][property]") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 100; ++t) {
    auto const p = random_partition(4, rng);
    auto const g = sampling::mixed_unitary(2, rng);
    INFO(render(p));
    CHECK(evaluate_raw(p, g) == evaluate_commutative(p, g));
  }
}

TEST_CASE("singular matrices are rejected", "[relations]") {
  auto const zero = Matrix(2);
  CHECK_THROWS_AS(evaluate_commutative(parse("aB"), zero), PreconditionError);
}
