#include "doctest.h"
#include "helpers.hpp"
#include "jhilbert/hilbert.hpp"
#include "jhilbert/reductions.hpp"

using namespace jh;
using jhtest::ideal;
using jhtest::ring;

namespace {
Ideal exampleIdeal(int t) {
  auto R = ring({"x", "y"}, {"x^3-x^2*y"});
  return ideal(R, {t == 0 ? "x" : "x*y^" + std::to_string(t)});
}
}  // namespace

TEST_CASE("sampling is deterministic and stays in I") {
  auto R = ring({"x", "y"});
  auto I = ideal(R, {"x^2", "x*y", "y^2"});
  auto a = sampleGeneralElements(I, 2, 17), b = sampleGeneralElements(I, 2, 17);
  CHECK(a.elements == b.elements);
  auto c = sampleGeneralElements(I, 3, 17);
  CHECK(c.elements[0] == a.elements[0]);
  CHECK(c.elements[1] == a.elements[1]);
  CHECK_FALSE(sampleGeneralElements(I, 2, 18).elements == a.elements);
  for (const auto& x : c.elements) CHECK(I.contains(x));
  CHECK(c.J[0].isZero());
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK_FALSE(sampleGeneralElements(Ideal::maximal(R), 1, s).elements[0].isZero());
}

TEST_CASE("analytic spread") {
  auto R = ring({"x", "y"});
  CHECK(analyticSpread(ideal(R, {"x"})) == 1);
  CHECK(analyticSpread(Ideal::maximal(R)) == 2);
  CHECK(analyticSpread(ideal(R, {"x^2", "x*y"})) == 2);
  for (int t = 0; t <= 3; ++t) CHECK(analyticSpread(exampleIdeal(t)) == 1);
  auto S = ring({"x", "y", "z"});
  CHECK(analyticSpread(ideal(S, {"x*y", "x*z", "y*z"})) == 3);
  CHECK(analyticSpread(ideal(S, {"x^2", "x*y"})) == 2);
}

TEST_CASE("reduction numbers") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  CHECK(reductionNumber(m, m) == 0u);
  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  CHECK(reductionNumber(m2, ideal(R, {"x^2", "y^2"})) == 1u);
  CHECK(reductionNumber(m2, m2) == 0u);
  CHECK_FALSE(isReduction(m2, ideal(R, {"x^2"}), 5));
}

TEST_CASE("general minimal reductions") {
  auto R = ring({"x", "y"});
  auto mr = generalMinimalReduction(Ideal::maximal(R), 0);
  CHECK(mr.spread == 2);
  CHECK(mr.reductionNumber == 0);
  auto mr2 = generalMinimalReduction(ideal(R, {"x^2", "x*y", "y^2"}), 0);
  CHECK(mr2.reductionNumber == 1);
  auto ex = generalMinimalReduction(exampleIdeal(2), 0);
  CHECK(ex.spread == 1);
  CHECK(ex.reductionNumber == 0);
  for (std::uint64_t seed : {1u, 2u, 3u})
    CHECK(generalMinimalReduction(ideal(R, {"x^3", "x*y", "y^3"}), seed).reductionNumber ==
          generalMinimalReduction(ideal(R, {"x^3", "x*y", "y^3"}), 0).reductionNumber);
}

TEST_CASE("residual height surrogate") {
  auto R = ring({"x", "y"});
  auto I = ideal(R, {"x^3", "x*y^2", "y^5"});
  CHECK(residualHeightCheck(I, sampleGeneralElements(I, 2, 0)).allPass);
  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  CHECK(residualHeightCheck(m2, sampleGeneralElements(m2, 2, 0)).allPass);
  for (int t = 1; t <= 4; ++t) {
    auto J = exampleIdeal(t);
    CHECK_FALSE(residualHeightCheck(J, sampleGeneralElements(J, 1, 0)).allPass);
  }
}

TEST_CASE("reduction ring, j0 and e1 of the image") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  auto rm = sampleGeneralElements(m, 2, 0);
  auto rr = reductionRing(m, rm);
  CHECK(rr.oneDimensional);
  CHECK(rr.imagePrimary);
  CHECK(idealEquals(rr.K, rm.J[1]));
  CHECK(jZero(rr, rm) == LengthValue::finite(1));
  CHECK(eOneBar(rr, m, rm) == LengthValue::finite(0));

  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  auto r2 = sampleGeneralElements(m2, 2, 0);
  auto rr2 = reductionRing(m2, r2);
  CHECK(rr2.oneDimensional);
  CHECK(jZero(rr2, r2) == LengthValue::finite(4));
  CHECK(eOneBar(rr2, m2, r2) == LengthValue::finite(1));
  CHECK(correctedDefectSum(rr2, m2, r2) == LengthValue::finite(1));

  for (int t = 0; t <= 3; ++t) {
    auto J = exampleIdeal(t);
    auto red = sampleGeneralElements(J, 1, 0);
    CHECK(jZero(J, red) == LengthValue::finite(t + 1));
  }
}

TEST_CASE("j0 vanishes exactly when the spread is below d") {
  auto R = ring({"x", "y"});
  auto I = ideal(R, {"x"});
  auto red = sampleGeneralElements(I, 2, 0);
  CHECK(analyticSpread(I) == 1);
  auto j0 = jZero(I, red);
  CHECK((!j0.isFinite() || j0.value() == 0));
  auto m = Ideal::maximal(R);
  CHECK(jZero(m, sampleGeneralElements(m, 2, 0)).value() != 0);
}

TEST_CASE("Valabrega-Valla") {
  auto R = ring({"x", "y"});
  auto m = Ideal::maximal(R);
  auto rm = sampleGeneralElements(m, 2, 0);
  auto vm = valabregaVallaCheck(m, rm, 4, reductionRing(m, rm), true);
  CHECK(vm.conditionB);
  CHECK(vm.conditionA);
  CHECK(vm.consistent);

  auto m2 = ideal(R, {"x^2", "x*y", "y^2"});
  auto r2 = sampleGeneralElements(m2, 2, 0);
  auto v2 = valabregaVallaCheck(m2, r2, 4, reductionRing(m2, r2), false);
  CHECK(v2.conditionB);
  CHECK(v2.defectSum == LengthValue::finite(1));
  CHECK(v2.e1bar == LengthValue::finite(1));
  CHECK(v2.consistent);

  // x^2 y^2 lies in the Ratliff-Rush closure but not in I, so depth G = 0.
  auto bad = ideal(R, {"x^4", "x^3*y", "x*y^3", "y^4"});
  auto rb = sampleGeneralElements(bad, 2, 0);
  auto vb = valabregaVallaCheck(bad, rb, 5, reductionRing(bad, rb), false);
  CHECK_FALSE(vb.conditionB);
  CHECK_FALSE(vb.conditionA);
  CHECK(vb.consistent);
  CHECK(vb.defectSum.value() > vb.e1bar.value());
}
