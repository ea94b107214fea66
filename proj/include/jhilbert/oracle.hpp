// Brute-force combinatorics on monomial ideals: a reference implementation
// that shares no code with the Groebner engine.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jhilbert/ideal.hpp"
#include "jhilbert/length_value.hpp"

namespace jh::oracle {

using Exponents = std::vector<int>;

/// Minimal generators, kept as a sorted antichain. No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t numVars, std::vector<Exponents> gens = {});
  static MonomialIdeal unit(std::size_t numVars);
  static MonomialIdeal maximal(std::size_t numVars);

  std::size_t numVars() const { return n_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const;
  bool contains(const Exponents& e) const;
  bool contains(const MonomialIdeal& other) const;
  std::string toString(const std::vector<std::string>& names) const;

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

 private:
  std::size_t n_;
  std::vector<Exponents> gens_;
};

MonomialIdeal monSum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monProduct(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monPower(const MonomialIdeal& a, unsigned k);
MonomialIdeal monIntersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monColon(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : (x_i : i in vars)^infinity.
MonomialIdeal monSaturate(const MonomialIdeal& a, const std::vector<std::size_t>& vars);

/// Number of monomials in a but not in b, or infinite. Throws std::invalid_argument unless b is in a.
LengthValue monPairLength(const MonomialIdeal& a, const MonomialIdeal& b);

/// e_0..e_d from lambda(R/I^{n+1}), for an m-primary I in a polynomial ring with d = numVars.
/// Throws std::invalid_argument when I is not m-primary.
std::vector<std::int64_t> oracleHilbertCoefficients(const MonomialIdeal& I);

/// Conversions to and from engine ideals. fromIdeal throws std::invalid_argument
/// unless the context has no relations and every reduced basis element is a monomial.
MonomialIdeal fromIdeal(const Ideal& l);
Ideal toIdeal(const ContextPtr& ctx, const MonomialIdeal& m);

}  // namespace jh::oracle
