// Exact arithmetic over a prime field: scalars, exponent-vector monomials,
// monomial orders and sparse multivariate polynomials.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jh {

class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Residue arithmetic modulo an odd prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t lift(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector. Slots beyond the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};
  std::uint32_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t i, std::uint16_t power = 1);
  static Monomial fromExponents(std::span<const int> e);

  bool divides(const Monomial& other) const;
  bool isOne() const { return degree == 0; }
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotientOf(const Monomial& other) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  /// For Block: slots [0, blockEnd) form the eliminated block, compared first.
  std::size_t blockEnd = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(std::size_t firstBlock) { return {Kind::Block, firstBlock}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool degreeCompatible() const { return kind == Kind::Grevlex; }
  bool operator==(const MonomialOrder&) const = default;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;
};

/// Variables, field and order shared by a family of polynomials.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::uint32_t characteristic,
           MonomialOrder order = MonomialOrder::grevlex());

  std::size_t numVars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  int indexOf(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms may be unsorted, repeated or zero; they are normalized.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
  bool isMonomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t totalDegree() const;
  /// Smallest degree of a term (order of vanishing at the origin); 0 for the zero polynomial.
  std::uint32_t lowestDegree() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial timesTerm(const Monomial& m, std::uint32_t c) const;
  Polynomial monic() const;
  /// Exact quotient f / g; throws std::logic_error when g does not divide f.
  Polynomial dividedBy(const Polynomial& g) const;
  /// Re-expresses the polynomial in another ring via a slot map (old index -> new index).
  Polynomial mappedTo(RingPtr target, std::span<const std::size_t> slotMap) const;

  bool operator==(const Polynomial& g) const;
  std::string toString() const;

  // Raw construction for callers that already hold sorted, normalized terms.
  static Polynomial fromSorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  void requireSameRing(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord);
/// Exponent-list form; throws ContextError when the lengths differ.
std::strong_ordering compareMonomials(std::span<const int> a, std::span<const int> b,
                                      const MonomialOrder& ord);

namespace detail {
// Merge helpers on sorted term vectors; used by the Groebner engine's inner loops.
std::vector<Term> addScaledShifted(std::span<const Term> f, std::span<const Term> g,
                                   std::uint32_t c, const Monomial& shift,
                                   const PolyRing& ring, std::uint32_t truncateDegree);
}  // namespace detail

}  // namespace jh
