#include "jhilbert/core.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace jh {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !isPrime(p))
    throw ContextError("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, newT = 1, r = p_, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::tie(t, newT) = std::pair{newT, t - q * newT};
    std::tie(r, newR) = std::pair{newR, r - q * newR};
  }
  return reduce(t);
}

// ---------------------------------------------------------------------------

Monomial Monomial::variable(std::size_t i, std::uint16_t power) {
  Monomial m;
  m.exps.at(i) = power;
  m.degree = power;
  return m;
}

Monomial Monomial::fromExponents(std::span<const int> e) {
  if (e.size() > kMaxVars) throw ContextError("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 0xFFFF) throw ContextError("exponent out of range");
    m.exps[i] = static_cast<std::uint16_t>(e[i]);
    m.degree += static_cast<std::uint32_t>(e[i]);
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
  r.degree = degree + o.degree;
  return r;
}

Monomial Monomial::quotientOf(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = static_cast<std::uint16_t>(o.exps[i] - exps[i]);
  r.degree = o.degree - degree;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps[i] = std::max(exps[i], o.exps[i]);
    r.degree += r.exps[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps[i] = std::min(exps[i], o.exps[i]);
    r.degree += r.exps[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps[i] != 0 && o.exps[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Degree of the slot range, then reverse lexicographic from the last slot.
std::strong_ordering grevlexRange(const Monomial& a, const Monomial& b, std::size_t lo,
                                  std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exps[i];
    db += b.exps[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exps[i] != b.exps[i]) return b.exps[i] <=> a.exps[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Grevlex: {
      if (a.degree != b.degree) return a.degree <=> b.degree;
      for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return b.exps[i] <=> a.exps[i];
      }
      return std::strong_ordering::equal;
    }
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] <=> b.exps[i];
      }
      return std::strong_ordering::equal;
    case Kind::Block: {
      auto c = grevlexRange(a, b, 0, blockEnd);
      if (c != 0) return c;
      return grevlexRange(a, b, blockEnd, kMaxVars);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord) {
  return ord.compare(a, b);
}

std::strong_ordering compareMonomials(std::span<const int> a, std::span<const int> b,
                                      const MonomialOrder& ord) {
  if (a.size() != b.size())
    throw ContextError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  return ord.compare(Monomial::fromExponents(a), Monomial::fromExponents(b));
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, std::uint32_t characteristic,
                   MonomialOrder order)
    : names_(std::move(names)), field_(characteristic), order_(order) {
  if (names_.size() > kMaxVars)
    throw ContextError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

int PolyRing::indexOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

// ---------------------------------------------------------------------------

namespace detail {

std::vector<Term> addScaledShifted(std::span<const Term> f, std::span<const Term> g,
                                   std::uint32_t c, const Monomial& shift,
                                   const PolyRing& ring, std::uint32_t truncateDegree) {
  // f + c * shift * g, with terms of degree >= truncateDegree dropped (0 = no truncation).
  const auto& F = ring.field();
  const auto& ord = ring.order();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool haveG = false;
  std::uint32_t gc = 0;
  auto loadG = [&] {
    while (j < g.size()) {
      gm = g[j].mono * shift;
      if (truncateDegree == 0 || gm.degree < truncateDegree) {
        gc = F.mul(g[j].coeff, c);
        haveG = true;
        return;
      }
      ++j;
    }
    haveG = false;
  };
  loadG();
  while (i < f.size() || haveG) {
    if (!haveG) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == f.size()) {
      out.push_back({gm, gc});
      ++j;
      loadG();
      continue;
    }
    auto cmp = ord.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, gc});
      ++j;
      loadG();
    } else {
      std::uint32_t s = F.add(f[i].coeff, gc);
      if (s != 0) out.push_back({gm, s});
      ++i;
      ++j;
      loadG();
    }
  }
  return out;
}

}  // namespace detail

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  const auto& F = ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    t.coeff %= F.characteristic();
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  auto v = ring->field().reduce(c);
  Polynomial p(std::move(ring));
  if (v != 0) p.terms_.push_back({Monomial::one(), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->numVars()) throw ContextError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t c) {
  c %= ring->field().characteristic();
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::uint32_t Polynomial::totalDegree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

std::uint32_t Polynomial::lowestDegree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().mono.degree;
  for (const auto& t : terms_) d = std::min(d, t.mono.degree);
  return d;
}

void Polynomial::requireSameRing(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_ || !g.ring_ || ring_->names() != g.ring_->names() ||
      ring_->field().characteristic() != g.ring_->field().characteristic() ||
      !(ring_->order() == g.ring_->order()))
    throw ContextError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  requireSameRing(g);
  return fromSorted(ring_, detail::addScaledShifted(terms_, g.terms_, 1, Monomial::one(), *ring_, 0));
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  requireSameRing(g);
  return fromSorted(ring_, detail::addScaledShifted(terms_, g.terms_, ring_->field().neg(1),
                                                    Monomial::one(), *ring_, 0));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  requireSameRing(g);
  const Polynomial& big = size() >= g.size() ? *this : g;
  const Polynomial& small = size() >= g.size() ? g : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_)
    acc = detail::addScaledShifted(acc, big.terms_, t.coeff, t.mono, *ring_, 0);
  return fromSorted(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return fromSorted(ring_, std::move(out));
}

Polynomial Polynomial::timesTerm(const Monomial& m, std::uint32_t c) const {
  // Multiplying by a monomial preserves the order of terms.
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, F.mul(t.coeff, c)});
  return fromSorted(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::dividedBy(const Polynomial& g) const {
  requireSameRing(g);
  if (g.isZero()) throw std::logic_error("division by the zero polynomial");
  const auto& F = ring_->field();
  std::uint32_t lcInv = F.inv(g.leading().coeff);
  const Monomial& lm = g.leading().mono;
  std::vector<Term> rem = terms_;
  std::vector<Term> quot;
  while (!rem.empty()) {
    const Term& lt = rem.front();
    if (!lm.divides(lt.mono)) throw std::logic_error("inexact polynomial division");
    Monomial q = lm.quotientOf(lt.mono);
    std::uint32_t c = F.mul(lt.coeff, lcInv);
    quot.push_back({q, c});
    rem = detail::addScaledShifted(rem, g.terms_, F.neg(c), q, *ring_, 0);
  }
  return fromSorted(ring_, std::move(quot));
}

Polynomial Polynomial::mappedTo(RingPtr target, std::span<const std::size_t> slotMap) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < slotMap.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      m.exps[slotMap[i]] = t.mono.exps[i];
    }
    m.degree = t.mono.degree;
    out.push_back({m, t.coeff});
  }
  return Polynomial(std::move(target), std::move(out));
}

bool Polynomial::operator==(const Polynomial& g) const {
  requireSameRing(g);
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == g.terms_[i].mono) || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  const auto& names = ring_->names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = F.lift(t.coeff);
    bool neg = c < 0;
    std::int64_t a = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool wroteFactor = false;
    if (a != 1 || t.mono.isOne()) {
      os << a;
      wroteFactor = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (wroteFactor) os << '*';
      os << names[i];
      if (t.mono.exps[i] > 1) os << '^' << t.mono.exps[i];
      wroteFactor = true;
    }
  }
  return os.str();
}

}  // namespace jh
