#include "doctest.h"
#include "pxmod/field.hpp"

using namespace pxmod;

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").kind == Field::Kind::Rationals);
  CHECK(Field::parse("F2").p == 2);
  CHECK(Field::parse("F13").p == 13);
  CHECK_THROWS_AS(Field::parse("F4"), ValidationError);
  CHECK_THROWS_AS(Field::parse("F1"), ValidationError);
  CHECK_THROWS_AS(Field::parse("R"), ValidationError);
}

TEST_CASE("scalar round trip") {
  Field q = Field::rationals();
  CHECK(scalar_to_string(scalar_parse(q, "-3/6")) == "-1/2");
  CHECK(scalar_to_string(scalar_parse(q, "4/2")) == "2");
  CHECK(scalar_to_string(scalar_parse(q, "7")) == "7");
  Field f5 = Field::prime(5);
  CHECK(scalar_to_string(scalar_parse(f5, "7")) == "2");
  CHECK(scalar_to_string(scalar_parse(f5, "-1")) == "4");
  // 1/2 = 3 mod 5
  CHECK(scalar_to_string(scalar_parse(f5, "1/2")) == "3");
  CHECK_THROWS_AS(scalar_parse(q, "1/0"), ValidationError);
  CHECK_THROWS_AS(scalar_parse(q, "abc"), ValidationError);
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(fadd(f7, Scalar(5), Scalar(4)) == Scalar(2));
  CHECK(fmul(f7, Scalar(3), Scalar(5)) == Scalar(1));
  CHECK(finv(f7, Scalar(3)) == Scalar(5));
  CHECK(fneg(f7, Scalar(3)) == Scalar(4));
  CHECK_THROWS_AS(finv(f7, Scalar(0)), ValidationError);
}

TEST_CASE("rref canonical form") {
  Field q = Field::rationals();
  Mat m = {{Scalar(2), Scalar(4), Scalar(0)},
           {Scalar(1), Scalar(2), Scalar(1)},
           {Scalar(3), Scalar(6), Scalar(1)}};
  auto pivots = rref(q, m);
  REQUIRE(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m == Mat{{Scalar(1), Scalar(2), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}});
}

TEST_CASE("null space against hand computation") {
  // x + 2y + 3z = 0 over Q: kernel is 2-dimensional
  Field q = Field::rationals();
  Mat m = {{Scalar(1), Scalar(2), Scalar(3)}};
  Mat ns = null_space(q, m, 3);
  REQUIRE(ns.size() == 2);
  for (const Vec& v : ns)
    CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("span membership and coordinates") {
  Field f3 = Field::prime(3);
  Mat basis = {{Scalar(1), Scalar(0), Scalar(2)}, {Scalar(0), Scalar(1), Scalar(1)}};
  std::vector<std::size_t> pivots{0, 1};
  Vec v = {Scalar(2), Scalar(1), Scalar(2)};  // 2*r0 + r1
  CHECK(in_span(f3, basis, pivots, v));
  CHECK(span_coords(f3, basis, pivots, v) == Vec{Scalar(2), Scalar(1)});
  Vec w = {Scalar(0), Scalar(0), Scalar(1)};
  CHECK(!in_span(f3, basis, pivots, w));
  CHECK_THROWS_AS(span_coords(f3, basis, pivots, w), ValidationError);
}
