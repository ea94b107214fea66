// The generalized Northcott inequality j_1 >= lambda(I/J) + lambda(R / J_{d-1}:I + (J_{d-2}:I + I):m^inf),
// its equality case and the positivity consequences.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jhilbert/coefficients.hpp"
#include "jhilbert/hilbert.hpp"
#include "jhilbert/reductions.hpp"

namespace jh {

struct HypothesisFlags {
  bool gdAsserted = false;
  bool anAsserted = false;
  bool s2Asserted = false;
};

/// Cases where AN^-_{d-2} holds without assertion: d <= 1, I m-primary, or d = 2 over a polynomial ring.
bool artinNagataAutomatic(const Ideal& I);

struct NorthcottTerms {
  LengthValue lambdaIJ = LengthValue::finite(0);
  LengthValue secondTerm = LengthValue::finite(0);
};

/// Requires d = red.size() >= 2.
NorthcottTerms northcottBound(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy = {});

enum class Verdict { Consistent, Violated, NotApplicable };
const char* toString(Verdict v);

struct ImplicationCheck {
  bool applicable = false;
  bool holds = false;
  std::string detail;
};

struct NorthcottOptions {
  std::uint64_t seed = 0;
  HypothesisFlags flags;
  ColonReading reading = ColonReading::X1;
  HilbertOptions hilbert;
  TruncationPolicy policy;
};

struct NorthcottReport {
  int d = 0;
  int spread = 0;
  bool mPrimary = false;
  std::optional<std::int64_t> j1;
  std::string j1Route;
  std::optional<std::int64_t> j1Sums;
  std::optional<std::int64_t> lambdaIJ;
  std::optional<std::int64_t> secondTerm;
  std::optional<std::int64_t> bound;
  bool inequalityHolds = false;
  bool equality = false;
  std::optional<unsigned> reductionNumber;
  std::optional<std::int64_t> mu;

  bool residualHeightPass = false;
  bool depthRI = false;        // depth R/I >= min(1, dim R/I)
  bool anHolds = false;        // asserted, or automatic for m-primary I
  bool s2Holds = false;
  Verdict equalityVerdict = Verdict::NotApplicable;

  ImplicationCheck nonNegative;       // j_1 >= 0
  ImplicationCheck secondOnlyIsJ;     // j_1 = second term => I = J
  ImplicationCheck equalsIJIsPrimary; // j_1 = lambda(I/J) => I m-primary
  ImplicationCheck zeroIsCI;          // j_1 = 0 <=> complete intersection

  std::optional<std::int64_t> classicalGap;  // e_0 - lambda(R/I) for m-primary I
  bool classicalAgrees = false;

  // d = 1: sum lambda(I^{n+1}/JI^n), lambda(R/0:I + I), lambda(H^0_m(R/I)).
  std::vector<std::optional<std::int64_t>> oneDimensionalParts;

  bool crossCheckFailed = false;
  bool nonStabilized = false;
  std::vector<std::string> diagnostics;
};

NorthcottReport northcottReport(const Ideal& I, const NorthcottOptions& options);

}  // namespace jh
