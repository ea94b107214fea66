#include "doctest.h"
#include "helpers.hpp"
#include "jhilbert/coefficients.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::ring;

namespace {

struct Case {
  std::vector<std::string> vars;
  std::vector<std::string> rels;
  std::vector<std::string> gens;
};

void checkIdentity(const Case& c, ColonReading reading, unsigned nMax) {
  auto R = ring(c.vars, c.rels);
  auto I = ideal(R, c.gens);
  auto rec = fitHilbertPolynomial(I);
  REQUIRE(rec.stabilized);
  auto red = sampleGeneralElements(I, static_cast<std::size_t>(rec.d), 11);
  OmegaEvaluator ev(I, red, reading);
  for (unsigned n = 0; n <= nMax; ++n) {
    INFO("n = " << n << ", reading " << toString(reading));
    auto def = ev.defect(n);
    REQUIRE(def.isFinite());
    auto om = ev.omega(n);
    std::string failed;
    for (const auto& t : om.terms) failed += t.error;
    INFO(failed);
    REQUIRE(om.total.has_value());
    CHECK(def.value() + *om.total == deltaDefect(rec, n));
  }
}

}  // namespace

TEST_CASE("difference sum recovers the fitted coefficients") {
  auto R = ring({"x", "y"});
  for (auto gens : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "x*y", "y^2"}, {"x^2", "x*y"},
                                                          {"x^3", "y^2"}, {"x^4", "x^3*y", "x*y^3", "y^4"}}) {
    auto rec = fitHilbertPolynomial(ideal(R, gens));
    REQUIRE(rec.stabilized);
    for (unsigned i = 1; i <= 2; ++i) CHECK(differenceSum(rec, i) == rec.j[i]);
  }
}

TEST_CASE("omega of m^2 at n = 0") {
  auto R = ring({"x", "y"});
  auto I = ideal(R, {"x^2", "x*y", "y^2"});
  auto red = sampleGeneralElements(I, 2, 3);
  OmegaEvaluator ev(I, red, ColonReading::X1);
  auto om = ev.omega(0);
  REQUIRE(om.total.has_value());
  CHECK(*om.total == 0);
  CHECK(ev.defect(0) == LengthValue::finite(1));
}

TEST_CASE("master identity, two variables") {
  for (auto reading : {ColonReading::X1, ColonReading::XNext}) {
    checkIdentity({{"x", "y"}, {}, {"x", "y"}}, reading, 5);
    checkIdentity({{"x", "y"}, {}, {"x^2", "x*y", "y^2"}}, reading, 5);
    checkIdentity({{"x", "y"}, {}, {"x^3", "y^2"}}, reading, 5);
    checkIdentity({{"x", "y"}, {}, {"x^4", "x^3*y", "x*y^3", "y^4"}}, reading, 6);
    checkIdentity({{"x", "y"}, {}, {"x^2", "x*y"}}, reading, 5);
  }
}

TEST_CASE("master identity, one-dimensional quotient") {
  for (auto reading : {ColonReading::X1, ColonReading::XNext}) {
    checkIdentity({{"x", "y"}, {"x*y"}, {"x"}}, reading, 4);
    checkIdentity({{"x", "y"}, {"x*y"}, {"x", "y"}}, reading, 4);
    checkIdentity({{"x", "y"}, {"x^2-y^3"}, {"x", "y"}}, reading, 4);
  }
}

TEST_CASE("example ideal with t >= 1 reports a failing omega term")  {
  auto R = ring({"x", "y"}, {"x^3-x^2*y"});
  auto I = ideal(R, {"x*y"});
  OmegaEvaluator ev(I, sampleGeneralElements(I, 1, 2), ColonReading::X1);
  auto om = ev.omega(0);
  CHECK_FALSE(om.total.has_value());
  bool named = false;
  for (const auto& t : om.terms) named = named || !t.error.empty();
  CHECK(named);
  CHECK(ev.omega(3).total == std::optional<std::int64_t>(0));
}

TEST_CASE("master identity, three variables, xnext reading") {
  checkIdentity({{"x", "y", "z"}, {}, {"x", "y", "z"}}, ColonReading::XNext, 4);
  checkIdentity({{"x", "y", "z"}, {}, {"x^2", "y", "z"}}, ColonReading::XNext, 4);
}

TEST_CASE("summation routes agree with the fit for m-primary ideals") {
  auto R = ring({"x", "y"});
  for (auto gens : std::vector<std::vector<std::string>>{{"x^2", "x*y", "y^2"}, {"x^3", "y^2"}, {"x^2", "y^3", "x*y"}}) {
    auto I = ideal(R, gens);
    auto rec = fitHilbertPolynomial(I);
    REQUIRE(rec.stabilized);
    auto mr = generalMinimalReduction(I, 5);
    OmegaEvaluator ev(I, mr.reduction, ColonReading::XNext);
    for (unsigned i = 1; i <= 2; ++i) {
      auto v = jViaSums(ev, i, mr.reductionNumber);
      REQUIRE(v.isFinite());
      CHECK(v.value() == rec.j[i]);
    }
    auto dep = jOneDepthFormula(I, mr.reduction);
    REQUIRE(dep.isFinite());
    CHECK(dep.value() == rec.j[1]);
  }
}
