#include "doctest.h"
#include "helpers.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::poly;
using jhtest::ring;

TEST_CASE("sum, product, power") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  CHECK(idealEquals(idealPower(m, 2), ideal(R, {"x^2", "x*y", "y^2"})));
  CHECK(idealEquals(idealPower(m, 0), Ideal::unit(R)));
  auto A = ideal(R, {"x^2+y", "x*y^3"});
  CHECK(idealEquals(idealProduct(A, Ideal::unit(R)), A));
  CHECK(idealEquals(idealProduct(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  CHECK(idealEquals(idealSum(ideal(R, {"x"}), ideal(R, {"y"})), m));
}

TEST_CASE("intersection") {
  auto R = ring({"x", "y"});
  CHECK(idealEquals(idealIntersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  CHECK(idealEquals(idealIntersect(ideal(R, {"x^2", "y"}), ideal(R, {"x"})), ideal(R, {"x^2", "x*y"})));
  auto A = ideal(R, {"x^2-y^3", "x*y"});
  CHECK(idealEquals(idealIntersect(A, Ideal::unit(R)), A));
  auto B = ideal(R, {"x+y^2"});
  auto C = idealIntersect(A, B);
  CHECK(A.contains(C));
  CHECK(B.contains(C));
}

TEST_CASE("colon") {
  auto R = ring({"x", "y"});
  CHECK(idealEquals(colonIdeal(ideal(R, {"x^2", "x*y"}), ideal(R, {"x"})), ideal(R, {"x", "y"})));
  CHECK(idealEquals(colonIdeal(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x"})));
  auto A = ideal(R, {"x^3", "y^2-x"});
  CHECK(idealEquals(colonIdeal(A, Ideal::unit(R)), A));
  CHECK(colonIdeal(A, Ideal::zero(R)).isUnit());
  auto B = ideal(R, {"x", "y^2"});
  CHECK(A.contains(idealProduct(colonIdeal(A, B), B)));
}

TEST_CASE("saturation") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  CHECK(idealEquals(saturate(ideal(R, {"x^2", "x*y"}), m), ideal(R, {"x"})));
  CHECK(saturate(m, m).isUnit());
  auto A = ideal(R, {"x^2*y", "x*y^3"});
  CHECK(idealEquals(saturate(A, Ideal::unit(R)), A));
  auto S = saturate(A, m);
  CHECK(idealEquals(saturate(S, m), S));
  CHECK(idealEquals(colonIdeal(S, m), S));
}

TEST_CASE("equality and membership") {
  auto R = ring({"x", "y"});
  CHECK(idealEquals(ideal(R, {"x", "y"}), ideal(R, {"y", "x"})));
  CHECK(ideal(R, {"x"}).contains(poly(R, "x^2")));
  CHECK_FALSE(ideal(R, {"x^2"}).contains(poly(R, "x")));
}

TEST_CASE("codimension") {
  auto R = ring({"x", "y"});
  CHECK(codimension(ideal(R, {"x"})) == 1);
  CHECK(codimension(ideal(R, {"x^2", "x*y", "y^2"})) == 2);
  CHECK(codimension(Ideal::unit(R)) == 3);
  auto Q = ring({"x", "y"}, {"x^3-x^2*y"});
  CHECK(Q->dimension() == 1);
  CHECK(codimension(Ideal::maximal(Q)) == 1);
}

TEST_CASE("quotient ring") {
  auto R = ring({"x", "y"}, {"x^3-x^2*y"});
  CHECK(Ideal::zero(R).isZero());
  CHECK(ideal(R, {"x^3"}).contains(poly(R, "x^2*y")));
  auto zeroColonI = colonIdeal(Ideal::zero(R), ideal(R, {"x*y"}));
  CHECK(idealEquals(zeroColonI, ideal(R, {"x^2-x*y"})));
  CHECK(idealEquals(saturate(Ideal::zero(R), ideal(R, {"x*y"})), ideal(R, {"x-y"})));
}

TEST_CASE("local containment ignores components away from the origin") {
  auto R = ring({"x", "y"});
  auto A = ideal(R, {"x*y-x"});
  CHECK_FALSE(A.contains(ideal(R, {"x"})));
  CHECK(locallyContains(ideal(R, {"x*y-x"}), ideal(R, {"x"})));
  CHECK_FALSE(locallyContains(ideal(R, {"x^2"}), ideal(R, {"x"})));
}

TEST_CASE("context errors") {
  CHECK_THROWS_AS(RingContext::create({"x", "x"}, 32003), ContextError);
  CHECK_THROWS_AS(RingContext::create({"x"}, 32001), ContextError);
  CHECK_THROWS_AS(RingContext::create({"x"}, 32003, {"x-1"}), ContextError);
  auto A = ring({"x"}), B = ring({"x"});
  CHECK_THROWS_AS(idealSum(Ideal::maximal(A), Ideal::maximal(B)), ContextError);
}
