// The local ring R = (F_p[vars] / Q) localized at the origin, and the ideal
// operator algebra on it: sums, products, powers, intersections, colons,
// saturations, equality and codimension.
//
// Every ideal implicitly contains the relations Q; computations happen on the
// preimage in the polynomial ring. Bases are reduced grevlex bases, computed
// once per ideal and shared by copies.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jhilbert/core.hpp"
#include "jhilbert/groebner.hpp"

namespace jh {

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  /// Throws ContextError for a non-prime characteristic, duplicate names, or
  /// relations that do not vanish at the origin.
  static ContextPtr create(std::vector<std::string> varNames, std::uint32_t characteristic,
                           std::vector<std::string> relationsText = {},
                           GroebnerLimits limits = {});
  /// Same, with relations given as polynomials of `ring()` built by the caller.
  static ContextPtr create(RingPtr ring, std::vector<Polynomial> relations,
                           GroebnerLimits limits = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t numVars() const { return ring_->numVars(); }
  std::uint32_t characteristic() const { return ring_->field().characteristic(); }
  const std::vector<std::string>& varNames() const { return ring_->names(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relationBasis() const { return relationBasis_; }
  const GroebnerLimits& limits() const { return limits_; }
  /// Krull dimension of F_p[vars]/Q.
  int dimension() const { return dimension_; }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ring_, i); }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(ring_, c); }

  // Polynomial ring with one extra trailing variable, used for eliminations.
  const RingPtr& extendedRing() const { return extended_; }

  // Memo tables keyed by canonical basis text. Thread-safe.
  std::optional<std::vector<Polynomial>> lookup(const std::string& key) const;
  void store(const std::string& key, std::vector<Polynomial> basis) const;
  std::optional<std::int64_t> lookupCount(const std::string& key) const;
  void storeCount(const std::string& key, std::int64_t value) const;

 private:
  RingContext() = default;
  void finish();

  RingPtr ring_;
  RingPtr extended_;
  std::vector<Polynomial> relations_;
  GroebnerBasis relationBasis_;
  GroebnerLimits limits_;
  int dimension_ = 0;

  mutable std::mutex cacheMutex_;
  mutable std::map<std::string, std::vector<Polynomial>> idealCache_;
  mutable std::map<std::string, std::int64_t> countCache_;
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(ContextPtr ctx, std::vector<Polynomial> gens);
  /// Ideal whose reduced basis (including Q) is already known.
  static Ideal fromBasis(ContextPtr ctx, std::vector<Polynomial> basis);

  static Ideal zero(const ContextPtr& ctx);
  static Ideal unit(const ContextPtr& ctx);
  /// The maximal ideal generated by all variables.
  static Ideal maximal(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  /// Generators as given (Q not included).
  const std::vector<Polynomial>& generators() const { return state_->gens; }
  /// Reduced grevlex basis of (generators) + Q.
  const GroebnerBasis& basis() const;

  bool isUnit() const { return basis().isUnit(); }
  /// True when the ideal is zero in R, i.e. equals Q.
  bool isZero() const;
  bool contains(const Polynomial& f) const { return basis().contains(f); }
  bool contains(const Ideal& other) const;
  std::string key() const { return basis().canonicalKey(); }
  std::string toString() const;
  std::uint32_t maxGeneratorDegree() const;

 private:
  struct State {
    std::vector<Polynomial> gens;
    std::once_flag once;
    GroebnerBasis gb;
  };

  ContextPtr ctx_;
  std::shared_ptr<State> state_;
};

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
/// a^n, with a^0 = (1).
Ideal idealPower(const Ideal& a, unsigned n);
/// Principal multiple f * a.
Ideal elementTimes(const Polynomial& f, const Ideal& a);
Ideal idealIntersect(const Ideal& a, const Ideal& b);
/// a : (f).
Ideal colonElement(const Ideal& a, const Polynomial& f);
/// a : b. A zero ideal b gives (1).
Ideal colonIdeal(const Ideal& a, const Ideal& b);
/// a : b^infinity, by iterating a : b until the chain is stable.
Ideal saturate(const Ideal& a, const Ideal& b);
bool idealEquals(const Ideal& a, const Ideal& b);
/// b is contained in a after localizing at the origin.
bool locallyContains(const Ideal& a, const Ideal& b);
/// Krull dimension of F_p[vars]/(ideal + Q); -1 for the unit ideal.
int krullDimension(const Ideal& l);
/// dim R - dim R/L; dim R + 1 for the unit ideal.
int codimension(const Ideal& l);
/// Generators of (L + Q) intersected with the subring without `dropVars`.
std::vector<Polynomial> eliminate(const Ideal& l, std::span<const std::string> dropVars);

}  // namespace jh
