// Randomized property suites shared by the unit tests and the acceptance runner.
#pragma once

#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "jhilbert/length.hpp"
#include "random_monomial.hpp"

namespace jhtest {

struct Outcome {
  bool pass = true;
  int checked = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

inline jh::oracle::MonomialIdeal monMaximalPower(std::size_t nv, unsigned k) {
  return jh::oracle::monPower(jh::oracle::MonomialIdeal::maximal(nv), k);
}

/// Quadruples D in B in A, D in C in A with A/B and C/D of finite length;
/// checks lambda(A/B) + lambda(B cap C/D) = lambda(C/D) + lambda(A/B+C) with both engines.
inline Outcome abcdQuadruples(int count, std::uint64_t seed) {
  using namespace jh::oracle;
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> small(1, 3);
  auto R2 = ring({"x", "y"}), R3 = ring({"x", "y", "z"});
  for (int k = 0; k < count; ++k) {
    const std::size_t nv = k % 2 ? 3 : 2;
    const auto& R = nv == 2 ? R2 : R3;
    auto A = randomMonomialIdeal(rng, nv, 3, 3);
    auto B = monSum(monIntersect(A, randomMonomialIdeal(rng, nv, 3, 4)), monProduct(A, monMaximalPower(nv, small(rng))));
    auto C = monIntersect(A, randomMonomialIdeal(rng, nv, 3, 4));
    auto BC = monIntersect(B, C);
    auto D = monSum(monIntersect(BC, randomMonomialIdeal(rng, nv, 3, 4)), monProduct(BC, monMaximalPower(nv, small(rng))));

    auto oAB = monPairLength(A, B), oBCD = monPairLength(BC, D), oCD = monPairLength(C, D),
         oABC = monPairLength(A, monSum(B, C));
    auto a = toIdeal(R, A), b = toIdeal(R, B), c = toIdeal(R, C), d = toIdeal(R, D);
    auto eAB = jh::pairLength(a, b), eBCD = jh::pairLength(jh::idealIntersect(b, c), d),
         eCD = jh::pairLength(c, d), eABC = jh::pairLength(a, jh::idealSum(b, c));
    std::ostringstream where;
    where << "quadruple " << k << ": A=" << A.toString(R->varNames()) << " B=" << B.toString(R->varNames())
          << " C=" << C.toString(R->varNames()) << " D=" << D.toString(R->varNames());
    if (!(oAB.isFinite() && oBCD.isFinite() && oCD.isFinite() && oABC.isFinite())) {
      out.fail(where.str() + ": oracle length not finite");
      continue;
    }
    if (!(eAB == oAB && eBCD == oBCD && eCD == oCD && eABC == oABC)) {
      out.fail(where.str() + ": engine and oracle lengths differ");
      continue;
    }
    if (oAB.value() + oBCD.value() != oCD.value() + oABC.value()) {
      out.fail(where.str() + ": identity fails");
      continue;
    }
    ++out.checked;
  }
  return out;
}

/// Random monomial pairs in 2-3 variables (at most 5 generators of degree at most 6):
/// intersection, colon, saturation at the origin and pairLength agree exactly.
inline Outcome engineOracleEquivalence(int count, std::uint64_t seed) {
  using namespace jh::oracle;
  Outcome out;
  std::mt19937_64 rng(seed);
  auto R2 = ring({"x", "y"}), R3 = ring({"x", "y", "z"});
  for (int k = 0; k < count; ++k) {
    const std::size_t nv = k % 2 ? 3 : 2;
    const auto& R = nv == 2 ? R2 : R3;
    auto A = randomMonomialIdeal(rng, nv, 5, 6), B = randomMonomialIdeal(rng, nv, 5, 6);
    auto a = toIdeal(R, A), b = toIdeal(R, B);
    std::vector<std::size_t> all(nv);
    for (std::size_t i = 0; i < nv; ++i) all[i] = i;
    std::string where = "instance " + std::to_string(k) + ": A=" + A.toString(R->varNames()) +
                        " B=" + B.toString(R->varNames());
    if (fromIdeal(jh::idealIntersect(a, b)) != monIntersect(A, B)) out.fail(where + ": intersect");
    else if (fromIdeal(jh::colonIdeal(a, b)) != monColon(A, B)) out.fail(where + ": colon");
    else if (fromIdeal(jh::saturate(a, jh::Ideal::maximal(R))) != monSaturate(A, all)) out.fail(where + ": saturate");
    else if (jh::pairLength(jh::idealSum(a, b), b) != monPairLength(monSum(A, B), B)) out.fail(where + ": pairLength");
    else ++out.checked;
  }
  return out;
}

}  // namespace jhtest
