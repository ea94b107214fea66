// Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal forms,
// elimination, Krull dimension and standard-monomial counting.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jhilbert/core.hpp"
#include "jhilbert/length_value.hpp"

namespace jh {

class ComputationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerLimits {
  std::size_t maxPairs = 200000;
  std::size_t maxTerms = 100000;
};

/// A reduced Groebner basis. Immutable once built.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isConstant() && !gens_[0].isZero(); }
  bool isZero() const { return gens_.empty(); }
  std::vector<Monomial> leadingMonomials() const;

  Polynomial normalForm(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normalForm(f).isZero(); }
  /// Textual form of the reduced basis; equal ideals give equal keys.
  std::string canonicalKey() const;
  std::uint32_t maxDegree() const;

  friend GroebnerBasis buchberger(RingPtr, std::span<const Polynomial>, const GroebnerLimits&);
  friend GroebnerBasis truncatedBasis(const GroebnerBasis&, std::uint32_t, const GroebnerLimits&);

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis of the ideal generated by `gens` in `ring` under the
/// ring's order. Throws ComputationLimitError when a resource cap is exceeded.
GroebnerBasis buchberger(RingPtr ring, std::span<const Polynomial> gens,
                         const GroebnerLimits& limits = {});

/// Basis of (base) + m^M where m is generated by all ring variables. The ring's
/// order must be degree-compatible; terms of degree >= M are dropped on the fly.
GroebnerBasis truncatedBasis(const GroebnerBasis& base, std::uint32_t M,
                             const GroebnerLimits& limits = {});

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// Certifying check: every S-polynomial of `basis` reduces to zero modulo it.
bool allSPolynomialsReduce(std::span<const Polynomial> basis);

/// dim_k of ring/(ideal) when finite; otherwise the infinite marker.
LengthValue standardMonomialCount(const GroebnerBasis& gb);
/// Same count, computed from the minimal generators of a monomial ideal.
LengthValue standardMonomialCount(std::span<const Monomial> leading, std::size_t numVars);

/// Krull dimension of ring/(ideal) from the leading-term ideal; -1 for the unit ideal.
int krullDimension(const GroebnerBasis& gb);
int krullDimension(std::span<const Monomial> leading, std::size_t numVars);

/// Generators of (gens) intersected with the subring free of `dropSlots`,
/// returned as polynomials of `ring`.
std::vector<Polynomial> eliminateSlots(const RingPtr& ring, std::span<const Polynomial> gens,
                                       std::span<const std::size_t> dropSlots,
                                       const GroebnerLimits& limits = {});

}  // namespace jh
