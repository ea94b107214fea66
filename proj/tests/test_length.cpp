#include "doctest.h"
#include "helpers.hpp"
#include "jhilbert/length.hpp"
#include "jhilbert/oracle.hpp"
#include "random_monomial.hpp"
#include "suites.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::ring;

TEST_CASE("truncatedDim") {
  auto R = ring({"x", "y"});
  CHECK(truncatedDim(ideal(R, {"x"}), 3) == 3);
  CHECK(truncatedDim(Ideal::unit(R), 5) == 0);
  CHECK(truncatedDim(Ideal::zero(R), 2) == 3);
}

TEST_CASE("pairLength") {
  auto R = ring({"x", "y"});
  auto A = ideal(R, {"x^2+y^3", "x*y"});
  CHECK(pairLength(A, A) == LengthValue::finite(0));
  CHECK(pairLength(ideal(R, {"x", "y"}), ideal(R, {"x^2", "y"})) == LengthValue::finite(1));
  CHECK(pairLength(Ideal::unit(R), ideal(R, {"x^2", "x*y", "y^2"})) == LengthValue::finite(3));
  CHECK_THROWS_AS(pairLength(ideal(R, {"x^2"}), ideal(R, {"x"})), ContainmentError);
  CHECK(pairLength(ideal(R, {"x"}), ideal(R, {"x^2"})).isInfinite());
}

TEST_CASE("locQuotientLength sees only the origin") {
  auto R = ring({"x", "y"});
  CHECK(locQuotientLength(ideal(R, {"x^2", "x*y", "y^2"})) == LengthValue::finite(3));
  CHECK(locQuotientLength(ideal(R, {"x*y"})).isInfinite());
  CHECK(locQuotientLength(ideal(R, {"x*y-x", "y^2-y"})) == LengthValue::finite(1));
}

TEST_CASE("gammaLength") {
  auto R = ring({"x", "y"});
  CHECK(gammaLength(ideal(R, {"x"})) == LengthValue::finite(0));
  CHECK(gammaLength(ideal(R, {"x^2", "x*y"})) == LengthValue::finite(1));
  CHECK(gammaLength(ideal(R, {"x^2", "x*y", "y^2"})) == LengthValue::finite(3));
}

TEST_CASE("policy validation") {
  auto R = ring({"x", "y"});
  TruncationPolicy bad;
  bad.stabilityWindow = 1;
  CHECK_THROWS_AS(pairLength(Ideal::unit(R), Ideal::maximal(R), bad), std::invalid_argument);
}

TEST_CASE("engine agrees with oracle and stabilizes monotonically") {
  auto R = ring({"x", "y", "z"});
  std::mt19937_64 rng(42);
  int finiteSeen = 0;
  for (int k = 0; k < 25; ++k) {
    auto A = jhtest::randomMonomialIdeal(rng, 3, 4, 4);
    auto B = oracle::monSum(oracle::monIntersect(A, jhtest::randomPrimary(rng, 3, 4, 2)),
                            oracle::monProduct(A, jhtest::randomMonomialIdeal(rng, 3, 3, 3)));
    auto expected = oracle::monPairLength(A, B);
    TruncationTrace trace;
    auto got = pairLength(oracle::toIdeal(R, A), oracle::toIdeal(R, B), {}, &trace);
    CHECK(got == expected);
    if (expected.isFinite()) {
      ++finiteSeen;
      CHECK(trace.monotone());
    }
  }
  CHECK(finiteSeen > 10);
}

TEST_CASE("additivity") {
  auto R = ring({"x", "y"});
  std::mt19937_64 rng(8);
  for (int k = 0; k < 15; ++k) {
    auto A = jhtest::randomMonomialIdeal(rng, 2, 3, 4);
    auto C = oracle::monIntersect(A, jhtest::randomPrimary(rng, 2, 3, 1));
    auto B = oracle::monIntersect(C, jhtest::randomPrimary(rng, 2, 4, 1));
    auto a = oracle::toIdeal(R, A), b = oracle::toIdeal(R, B), c = oracle::toIdeal(R, C);
    CHECK(pairLength(a, b).value() == pairLength(a, c).value() + pairLength(c, b).value());
  }
}

TEST_CASE("four-length identity on random quadruples") {
  auto o = jhtest::abcdQuadruples(40, 5);
  INFO(o.detail);
  CHECK(o.pass);
  CHECK(o.checked == 40);
}
