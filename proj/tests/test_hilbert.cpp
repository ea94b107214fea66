#include "doctest.h"
#include "helpers.hpp"
#include "jhilbert/hilbert.hpp"
#include "jhilbert/oracle.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::ring;
using V = std::vector<std::int64_t>;

TEST_CASE("binomial basis conversion") {
  auto P = [](std::int64_t n) {
    return 3 * generalizedBinomial(n + 2, 2) - 2 * generalizedBinomial(n + 1, 1) + 5;
  };
  V vals;
  for (int n = 0; n < 5; ++n) vals.push_back(P(n));
  CHECK(binomialBasisConvert(vals, 2) == V{3, 2, 5});
  CHECK(binomialBasisConvert({7}, 0) == V{7});
  CHECK(binomialBasisConvert({1, 3, 6}, 2) == V{1, 0, 0});
  V shifted;
  for (int n = 4; n < 7; ++n) shifted.push_back(P(n));
  CHECK(binomialBasisConvert(shifted, 2, 4) == V{3, 2, 5});
  CHECK_THROWS_AS(binomialBasisConvert({0, 1, 4, 9, 17}, 2), std::invalid_argument);
  for (int n = -4; n < 6; ++n) CHECK(binomialBasisEvaluate({3, 2, 5}, n) == P(n));
}

TEST_CASE("delta operator") {
  auto sq = [](std::int64_t n) { return n * n; };
  CHECK(deltaOperator([](std::int64_t) { return 9; }, 1, 4) == 0);
  CHECK(deltaOperator(sq, 2, 5) == 2);
  CHECK(deltaOperator(sq, 0, 5) == 25);
}

TEST_CASE("graded torsion and H") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  for (unsigned i = 0; i < 4; ++i) CHECK(gradedTorsionLength(m, i) == LengthValue::finite(i + 1));
  for (unsigned n = 0; n < 4; ++n) {
    CHECK(hilbertFunction(m, n) == LengthValue::finite((n + 1) * (n + 2) / 2));
    CHECK(hilbertFunction(ideal(R, {"x"}), n) == LengthValue::finite(0));
    CHECK(hilbertFunction(Ideal::unit(R), n) == LengthValue::finite(0));
  }
}

TEST_CASE("fitted coefficients") {
  auto R = ring({"x", "y"});
  auto rec = fitHilbertPolynomial(Ideal::maximal(R));
  REQUIRE(rec.stabilized);
  CHECK(rec.j == V{1, 0, 0});
  CHECK(fitHilbertPolynomial(ideal(R, {"x"})).j == V{0, 0, 0});
  auto m2 = fitHilbertPolynomial(ideal(R, {"x^2", "x*y", "y^2"}));
  CHECK(m2.j == V{4, 1, 0});
  for (std::size_t n = m2.agreesFrom; n < m2.values.size(); ++n)
    CHECK(m2.polynomial(static_cast<std::int64_t>(n)) == m2.values[n]);
  for (std::size_t n = 1; n < m2.values.size(); ++n) CHECK(m2.values[n] >= m2.values[n - 1]);
}

TEST_CASE("example ring: j = (t+1, 2-t)") {
  for (int t = 0; t <= 2; ++t) {
    auto R = ring({"x", "y"}, {"x^3-x^2*y"});
    std::string gen = t == 0 ? "x" : "x*y^" + std::to_string(t);
    auto rec = fitHilbertPolynomial(ideal(R, {gen}));
    REQUIRE(rec.stabilized);
    CHECK(rec.j == V{t + 1, 2 - t});
  }
}

TEST_CASE("m-primary: generalized equals classical") {
  auto R = ring({"x", "y"});
  for (auto gens : {std::vector<std::string>{"x^2", "y^3"}, {"x^3", "x*y", "y^3"}, {"x^2", "x*y^2", "y^4"}}) {
    auto I = ideal(R, gens);
    for (unsigned n = 0; n <= 4; ++n)
      CHECK(hilbertFunction(I, n) == locQuotientLength(idealPower(I, n + 1)));
    CHECK(fitHilbertPolynomial(I).j == oracle::oracleHilbertCoefficients(oracle::fromIdeal(I)));
  }
}
