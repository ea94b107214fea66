// Lengths of m-supported subquotients A/B of the local ring, measured through
// the Artinian snapshots R/(L + m^M) for growing M.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jhilbert/ideal.hpp"
#include "jhilbert/length_value.hpp"

namespace jh {

class ContainmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TruncationPolicy {
  /// 0 selects 2 * (dim R + largest generator degree).
  std::uint32_t startM = 0;
  std::uint32_t stepM = 2;
  std::uint32_t stabilityWindow = 2;
  std::uint32_t capM = 200;

  /// Throws std::invalid_argument when the fields are inconsistent.
  void validate() const;
};

/// The sampled differences D(M) behind one pairLength call.
struct TruncationTrace {
  std::vector<std::uint32_t> M;
  std::vector<std::int64_t> D;
  bool monotone() const;
};

/// dim_k R/(L + m^M).
std::int64_t truncatedDim(const Ideal& l, std::uint32_t M);

/// lambda(A/B) at the origin. Throws ContainmentError unless B is inside A.
LengthValue pairLength(const Ideal& a, const Ideal& b, const TruncationPolicy& policy = {},
                       TruncationTrace* trace = nullptr);

/// Exact test that A/B has finite length at the origin (B inside A assumed).
bool hasFiniteLength(const Ideal& a, const Ideal& b);

/// lambda(R/L) at the origin.
LengthValue locQuotientLength(const Ideal& l, const TruncationPolicy& policy = {});

/// Length of the m-torsion of R/L.
LengthValue gammaLength(const Ideal& l, const TruncationPolicy& policy = {});

}  // namespace jh
