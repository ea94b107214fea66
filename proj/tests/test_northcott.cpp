#include "doctest.h"
#include "helpers.hpp"
#include "jhilbert/northcott.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::ring;

TEST_CASE("bound terms") {
  auto R = ring({"x", "y"});
  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  auto t = northcottBound(m2, sampleGeneralElements(m2, 2, 1));
  CHECK(t.lambdaIJ == LengthValue::finite(1));
  CHECK(t.secondTerm == LengthValue::finite(0));
  auto m = Ideal::maximal(R);
  auto u = northcottBound(m, sampleGeneralElements(m, 2, 1));
  CHECK(u.lambdaIJ == LengthValue::finite(0));
  CHECK(u.secondTerm == LengthValue::finite(0));
  CHECK_THROWS(northcottBound(m, sampleGeneralElements(m, 1, 1)));
}

TEST_CASE("m squared reaches equality with reduction number one") {
  auto R = ring({"x", "y"});
  auto rep = northcottReport(ideal(R, {"x^2", "x*y", "y^2"}), {});
  REQUIRE(rep.j1);
  REQUIRE(rep.bound);
  CHECK(*rep.j1 == 1);
  CHECK(*rep.bound == 1);
  CHECK(rep.reductionNumber.value() == 1u);
  CHECK(rep.equality);
  CHECK((rep.equalityVerdict == Verdict::Consistent));
  CHECK(rep.classicalAgrees);
  CHECK_FALSE(rep.crossCheckFailed);
  CHECK(rep.j1Sums.value() == 1);
}

TEST_CASE("parameter ideals give zeros and complete intersections") {
  auto R = ring({"x", "y"});
  for (auto gens : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "y^3"}, {"x^2+y^2", "x*y"}}) {
    auto rep = northcottReport(ideal(R, gens), {});
    REQUIRE(rep.j1);
    REQUIRE(rep.bound);
    CHECK(*rep.j1 == 0);
    CHECK(*rep.bound == 0);
    CHECK(rep.reductionNumber.value() == 0u);
    CHECK(rep.zeroIsCI.applicable);
    CHECK(rep.zeroIsCI.holds);
    CHECK((rep.equalityVerdict == Verdict::Consistent));
    CHECK_FALSE(rep.crossCheckFailed);
  }
}

TEST_CASE("strict inequality when the reduction number exceeds one") {
  auto R = ring({"x", "y"});
  auto rep = northcottReport(ideal(R, {"x^4", "x^3*y", "x*y^3", "y^4"}), {});
  REQUIRE(rep.j1);
  REQUIRE(rep.bound);
  CHECK(*rep.j1 > *rep.bound);
  CHECK(rep.reductionNumber.value() > 1);
  CHECK((rep.equalityVerdict == Verdict::Consistent));
  CHECK_FALSE(rep.crossCheckFailed);
}

TEST_CASE("non m-primary ideal in two variables") {
  auto R = ring({"x", "y"});
  auto rep = northcottReport(ideal(R, {"x^2", "x*y"}), {});
  CHECK(rep.spread == 2);
  REQUIRE(rep.j1);
  REQUIRE(rep.bound);
  CHECK(*rep.j1 >= *rep.bound);
  CHECK_FALSE(rep.mPrimary);
  CHECK(rep.zeroIsCI.holds);
  CHECK(rep.zeroIsCI.detail.find("not a complete intersection") != std::string::npos);
  CHECK(rep.secondOnlyIsJ.holds);
  CHECK_FALSE(rep.crossCheckFailed);
}

TEST_CASE("one-dimensional example reports the decomposition and a failing surrogate") {
  auto R = ring({"x", "y"}, {"x^3-x^2*y"});
  auto rep = northcottReport(ideal(R, {"x*y^3"}), {});
  REQUIRE(rep.j1);
  CHECK(*rep.j1 == -1);
  CHECK_FALSE(rep.residualHeightPass);
  CHECK((rep.equalityVerdict == Verdict::NotApplicable));
  CHECK_FALSE(rep.bound);
  CHECK(rep.oneDimensionalParts.size() == 3);
}

TEST_CASE("three variables") {
  auto R = ring({"x", "y", "z"});
  auto rep = northcottReport(Ideal::maximal(R), {});
  REQUIRE(rep.j1);
  REQUIRE(rep.bound);
  CHECK(*rep.j1 == 0);
  CHECK(*rep.bound == 0);
  CHECK((rep.equalityVerdict == Verdict::Consistent));
}
