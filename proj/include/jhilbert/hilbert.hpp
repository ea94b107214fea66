// The generalized Hilbert-Samuel function H_I(n) = sum_{i<=n} lambda(Gamma_m(I^i/I^{i+1})),
// its eventual polynomial, and the signed binomial coefficients j_0..j_d.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jhilbert/ideal.hpp"
#include "jhilbert/length.hpp"

namespace jh {

/// lambda(Gamma_m(I^i / I^{i+1})).
LengthValue gradedTorsionLength(const Ideal& I, unsigned i, const TruncationPolicy& policy = {});

/// H_I(n).
LengthValue hilbertFunction(const Ideal& I, unsigned n, const TruncationPolicy& policy = {});

struct HilbertOptions {
  /// Consecutive points with a constant d-th difference; 0 selects d + 2.
  unsigned window = 0;
  /// Further points that must agree before the fit is accepted.
  unsigned confirm = 2;
  /// Largest n evaluated.
  unsigned nCap = 40;
  TruncationPolicy policy;
};

struct HilbertRecord {
  int d = 0;
  /// H(0), H(1), ..., H(N).
  std::vector<std::int64_t> values;
  /// H agrees with the polynomial for every computed n >= agreesFrom.
  unsigned agreesFrom = 0;
  /// Range [windowStart, windowEnd] on which the d-th difference was found constant.
  unsigned windowStart = 0;
  unsigned windowEnd = 0;
  std::vector<std::int64_t> j;
  bool stabilized = false;
  std::string reason;

  /// P_I(n) for any integer n.
  std::int64_t polynomial(std::int64_t n) const;
  /// H_I(n), with H(n) = 0 for n < 0. Requires n < values.size().
  std::int64_t function(std::int64_t n) const;
};

/// Evaluates H up to the first window on which the d-th difference is constant
/// (d = dim R), confirms it, and converts the polynomial to j_0..j_d.
HilbertRecord fitHilbertPolynomial(const Ideal& I, const HilbertOptions& options = {});

/// Signed binomial coefficients of the degree <= d polynomial taking `values`
/// at n = firstN, firstN + 1, ... . Needs at least d + 1 values; extra values
/// must lie on the same polynomial (std::invalid_argument otherwise).
std::vector<std::int64_t> binomialBasisConvert(const std::vector<std::int64_t>& values, int d,
                                               std::int64_t firstN = 0);

/// sum_i (-1)^i j_i C(n + d - i, d - i) with C extended to negative tops.
std::int64_t binomialBasisEvaluate(const std::vector<std::int64_t>& j, std::int64_t n);

/// k-th backward difference of f at n.
std::int64_t deltaOperator(const std::function<std::int64_t(std::int64_t)>& f, unsigned k, std::int64_t n);

/// C(top, k) for any integer top and k >= 0.
std::int64_t generalizedBinomial(std::int64_t top, std::int64_t k);

}  // namespace jh
