#include "doctest.h"
#include "helpers.hpp"
#include "pxmod/io.hpp"

#include <cstdio>
#include <fstream>

using namespace pxmod;
using namespace pxtest;

namespace {

GroupPcmRef c4_over_c2() {
  auto x = c4();
  auto b = c2();
  return pcm_validate(x, b, morphism_validate(x, b, {0, 1, 0, 1}), inversion_action(b, x),
                      "c4/c2");
}

AlgebraPcmRef dual_over_f2() {
  auto d = dual_numbers_f2();
  auto b = f2_alg();
  std::vector<Mat> lambda(1, Mat(2, vzero(2)));
  lambda[0][0] = {Scalar(1), Scalar(0)};
  lambda[0][1] = {Scalar(0), Scalar(1)};
  std::vector<Mat> rho(2, Mat(1, vzero(2)));
  rho[0][0] = {Scalar(1), Scalar(0)};
  rho[1][0] = {Scalar(0), Scalar(1)};
  return pcm_validate(d, b, linear_map_validate(d, b, {{Scalar(1), Scalar(0)}}),
                      action_validate(b, d, lambda, rho), "dual/f2");
}

}  // namespace

TEST_CASE("group round-trip is bit-exact") {
  auto g = s3();
  json j = group_to_json(*g);
  auto g2 = group_from_json(j);
  CHECK(*g == *g2);
  CHECK(group_to_json(*g2).dump() == j.dump());
}

TEST_CASE("algebra round-trip keeps field elements exact") {
  // rational structure constants with nontrivial denominators
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][1] = {Scalar(1) / 3, Scalar(-2) / 7};
  c[1][0] = {Scalar(-1) / 3, Scalar(2) / 7};
  auto a = algebra_validate(Field::rationals(), 2, AlgVariety::Leibniz, true, c, "frac");
  json j = algebra_to_json(*a);
  CHECK(j["c"][0][1][0] == "1/3");
  CHECK(j["c"][0][1][1] == "-2/7");
  auto a2 = algebra_from_json(j);
  CHECK(*a == *a2);
  CHECK(algebra_to_json(*a2).dump() == j.dump());
}

TEST_CASE("pcm round-trip, both varieties") {
  SUBCASE("group") {
    auto p = c4_over_c2();
    json j = pcm_to_json(*p);
    auto back = pcm_from_json(j, ".");
    REQUIRE(back.group.has_value());
    CHECK(pcm_to_json(**back.group).dump() == j.dump());
    CHECK((*back.group)->delta.map == p->delta.map);
  }
  SUBCASE("algebra") {
    auto p = dual_over_f2();
    json j = pcm_to_json(*p);
    auto back = pcm_from_json(j, ".");
    REQUIRE(back.algebra.has_value());
    CHECK(pcm_to_json(**back.algebra).dump() == j.dump());
  }
}

TEST_CASE("file references resolve relative to the referencing file") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pxmod_io_test";
  fs::create_directories(dir);
  write_json_file(dir / "b.json", group_to_json(*c2()));
  write_json_file(dir / "x.json", group_to_json(*c4()));
  json pcm = pcm_to_json(*c4_over_c2());
  pcm["x"] = "x.json";
  pcm["b"] = "b.json";
  pcm["action"]["x"] = "x.json";
  pcm["action"]["b"] = "b.json";
  write_json_file(dir / "pcm.json", pcm);
  auto loaded = load_pcm(dir / "pcm.json");
  REQUIRE(loaded.group.has_value());
  CHECK((*loaded.group)->x->order == 4);
  fs::remove_all(dir);
}

TEST_CASE("error classification") {
  SUBCASE("malformed JSON shape is a ParseError") {
    CHECK_THROWS_AS(group_from_json(json{{"order", 2}}), ParseError);
    CHECK_THROWS_AS(pcm_from_json(json{{"variety", "frobnitz"}}, "."), ParseError);
  }
  SUBCASE("well-formed but invalid tables are ValidationErrors") {
    json j = group_to_json(*c2());
    j["mult"][1][1] = 1;  // no inverse for element 1
    CHECK_THROWS_AS(group_from_json(j), ValidationError);
    json p = pcm_to_json(*c4_over_c2());
    p["delta"][1] = 0;  // no longer a homomorphism
    CHECK_THROWS_AS(pcm_from_json(p, "."), ValidationError);
  }
  SUBCASE("scalar strings are strict") {
    CHECK_THROWS_AS(matrix_from_json(Field::rationals(), json::parse("[[\"1/0\"]]")),
                    ValidationError);
  }
}

TEST_CASE("subobject and morphism serialization") {
  auto p = c4_over_c2();
  auto s = sub_pcm_validate(p, {0, 2});
  json j = subobject_to_json(s);
  CHECK(j["elements"] == json::parse("[0,2]"));
  auto f = px_morphism_validate(p, identity_pcm(c2()), {0, 1, 0, 1});
  json m = morphism_to_json(f);
  CHECK(m["map"] == json::parse("[0,1,0,1]"));
}
