// The correction term omega_n(J, I) relating lambda(I^{n+1}/J I^n) to the
// d-th difference of P_I - H_I, and the summation routes to j_1..j_d.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jhilbert/hilbert.hpp"
#include "jhilbert/reductions.hpp"

namespace jh {

/// Which element the K-tilde colon uses for the i-th summand:
/// X1 takes I^{n+1} : x_1 as printed; XNext takes (I^{n+1} + J_i:I) : x_{i+1}.
enum class ColonReading { X1, XNext };

const char* toString(ColonReading r);

struct OmegaTerm {
  std::string name;
  int sign = 1;
  std::optional<std::int64_t> value;
  std::string error;
};

struct OmegaBreakdown {
  unsigned n = 0;
  ColonReading reading = ColonReading::X1;
  std::vector<OmegaTerm> terms;
  /// Sum of sign * value; empty when a term failed.
  std::optional<std::int64_t> total;
};

/// Evaluates omega_n term by term. `red` must hold d = dim R elements.
/// Memoizes sub-lengths, so reuse one instance across n.
class OmegaEvaluator {
 public:
  OmegaEvaluator(Ideal I, GeneralReduction red, ColonReading reading, TruncationPolicy policy = {});

  OmegaBreakdown omega(unsigned n);
  /// lambda(I^{n+1} / J I^n).
  LengthValue defect(unsigned n);
  int d() const { return d_; }
  ColonReading reading() const { return reading_; }

 private:
  std::int64_t tildeK(unsigned i, std::int64_t index);
  std::int64_t tildeL(unsigned i, std::int64_t n);
  std::int64_t bigL(unsigned i, std::int64_t n);
  std::int64_t bigN(unsigned i, std::int64_t n);
  std::int64_t colonTerm(unsigned i, unsigned n);
  std::int64_t beta();
  Ideal power(std::int64_t k);
  Ideal residual(unsigned i);  // J_i : I
  Ideal relSat(const Ideal& x, const Ideal& y);  // x :_y m^inf
  std::int64_t length(const std::string& what, const Ideal& a, const Ideal& b);

  Ideal I_;
  GeneralReduction red_;
  ColonReading reading_;
  TruncationPolicy policy_;
  int d_;
  std::map<std::string, std::int64_t> memo_;
  std::map<unsigned, Ideal> residuals_;
  std::optional<std::int64_t> beta_;
};

struct MasterIdentityRow {
  unsigned n = 0;
  std::optional<std::int64_t> defect;
  std::optional<std::int64_t> omega;
  std::int64_t rhs = 0;  // Delta^d [P - H](n)
  bool holds = false;
};

/// Delta^d [P_I - H_I](n), with P extended as a polynomial and H(n) = 0 for n < 0.
/// Beyond the computed range H is taken equal to P.
std::int64_t deltaDefect(const HilbertRecord& rec, std::int64_t n);

/// sum_{n >= i-1} C(n, i-1) Delta^d[P - H](n), read from a fitted record.
std::int64_t differenceSum(const HilbertRecord& rec, unsigned i);

/// sum_{n >= i-1} C(n, i-1) [lambda(I^{n+1}/J I^n) + omega_n], stopping once
/// max(d+1, 3) consecutive terms past `reductionNumber` vanish.
LengthValue jViaSums(OmegaEvaluator& ev, unsigned i, unsigned reductionNumber, unsigned nCap = 40,
                     std::vector<std::string>* errors = nullptr);

/// sum lambda(I^{n+1}/J I^n) + lambda(R/J_{d-1}:I + I) - lambda(H^0_m(R/H + I)),
/// H = 0 for d = 1 and H = 0:I otherwise.
LengthValue jOneDepthFormula(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy = {});

}  // namespace jh
