// General elements, minimal reductions, reduction numbers, analytic spread,
// residual-intersection height checks and the one-dimensional ring
// R / (J_{d-1} : I^infinity).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jhilbert/ideal.hpp"
#include "jhilbert/length.hpp"

namespace jh {

struct GeneralReduction {
  std::vector<Polynomial> elements;  // x_1 .. x_s
  std::uint64_t seed = 0;
  unsigned attempt = 0;
  std::vector<Ideal> J;  // J[i] = (x_1, ..., x_i), J[0] = (0)

  std::size_t size() const { return elements.size(); }
};

/// s random F_p-combinations of I's generators. Element i depends only on
/// (seed, attempt, i), so longer samples extend shorter ones.
GeneralReduction sampleGeneralElements(const Ideal& I, std::size_t s, std::uint64_t seed,
                                       unsigned attempt = 0);

/// Krull dimension of the fiber cone of I.
int analyticSpread(const Ideal& I);

/// Least r <= cap with J I^r = I^{r+1} at the origin; nullopt when none.
std::optional<unsigned> reductionNumber(const Ideal& I, const Ideal& J, unsigned cap = 30);
bool isReduction(const Ideal& I, const Ideal& J, unsigned cap = 30);

struct MinimalReduction {
  GeneralReduction reduction;
  int spread = 0;
  unsigned reductionNumber = 0;
  unsigned attempts = 0;
};

/// Samples ell(I) general elements, retrying with fresh streams until they form a reduction.
/// Throws ComputationLimitError when every attempt fails.
MinimalReduction generalMinimalReduction(const Ideal& I, std::uint64_t seed, unsigned retries = 5,
                                         unsigned cap = 30);

struct ResidualHeightRow {
  unsigned i = 0;
  int codimColon = 0;     // codim(J_i : I)
  int codimColonPlusI = 0;  // codim(J_i : I + I)
  bool pass = false;
};

struct ResidualHeightReport {
  std::vector<ResidualHeightRow> rows;
  bool allPass = true;
};

/// For i < red.size(): codim(J_i : I) >= i and codim(J_i : I + I) >= i + 1.
ResidualHeightReport residualHeightCheck(const Ideal& I, const GeneralReduction& red);

struct ReductionRing {
  Ideal K;  // J_{d-1} : I^infinity
  bool oneDimensional = false;
  bool imagePrimary = false;
  std::vector<std::string> warnings;
};

ReductionRing reductionRing(const Ideal& I, const GeneralReduction& red);

/// lambda(R / (K + (x_d))).
LengthValue jZero(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy = {});
LengthValue jZero(const ReductionRing& rr, const GeneralReduction& red, const TruncationPolicy& policy = {});

/// sum_n lambda(I^{n+1} + K / x_d I^n + K), computed in R / K.
LengthValue eOneBar(const ReductionRing& rr, const Ideal& I, const GeneralReduction& red,
                    const TruncationPolicy& policy = {}, unsigned nCap = 40);

/// sum_n lambda(I^{n+1} / J I^n), stopping at the first zero term.
LengthValue reductionDefectSum(const Ideal& I, const Ideal& J, const TruncationPolicy& policy = {},
                               unsigned nCap = 40);

/// sum_n [lambda(I^{n+1}/J I^n) - lambda(K cap I^{n+1} / K cap J I^n)].
LengthValue correctedDefectSum(const ReductionRing& rr, const Ideal& I, const GeneralReduction& red,
                               const TruncationPolicy& policy = {}, unsigned nCap = 40);

struct ValabregaVallaReport {
  unsigned nmax = 0;
  std::vector<bool> perN;  // J_{d-1} cap I^{n+1} == J_{d-1} I^n at the origin
  bool conditionB = true;
  LengthValue defectSum = LengthValue::finite(0);
  LengthValue e1bar = LengthValue::finite(0);
  bool conditionA = false;
  bool consistent = false;  // (a) <=> (b)
  bool anAsserted = false;
  std::string depthVerdict;
};

ValabregaVallaReport valabregaVallaCheck(const Ideal& I, const GeneralReduction& red, unsigned nmax,
                                         const ReductionRing& rr, bool anAsserted,
                                         const TruncationPolicy& policy = {});

}  // namespace jh
