#include "jhilbert/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace jh {

std::int64_t LengthValue::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("length is not finite: " + toString());
  return value_;
}

std::string LengthValue::toString() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::Infinite:
      return "infinite";
    case Kind::NonStabilized:
      return "nonstabilized";
  }
  return "?";
}

namespace {

using Terms = std::vector<Term>;

std::uint32_t supportMask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.exps[i] != 0) mask |= (1u << i);
  return mask;
}

struct Element {
  Terms terms;
  Monomial lm;
  std::uint32_t mask = 0;
  bool active = true;
  bool monomialOnly = false;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(RingPtr ring, std::uint32_t truncate, const GroebnerLimits& limits)
      : ringPtr_(std::move(ring)),
        ring_(*ringPtr_),
        truncate_(truncate),
        limits_(limits),
        pairs_(PairLess{&ring_.order()}) {}

  void seedMonomial(const Monomial& m) {
    Element e;
    e.terms = {{m, 1}};
    e.lm = m;
    e.mask = supportMask(m);
    e.monomialOnly = true;
    basis_.push_back(std::move(e));
  }

  void addGenerator(Terms f) {
    if (unit_) return;
    Terms r = reduce(std::move(f));
    insert(std::move(r));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++pairCount_ > limits_.maxPairs)
        throw ComputationLimitError("Groebner pair cap exceeded (" + std::to_string(limits_.maxPairs) +
                                    ")");
      Terms s = spoly(basis_[p.i], basis_[p.j], p.lcm);
      insert(reduce(std::move(s)));
    }
  }

  std::vector<Polynomial> reducedBasis() {
    if (unit_) return {Polynomial::constant(ringPtr_, 1)};
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].active) live.push_back(k);
    // Drop any element whose leading monomial is divisible by another live one.
    std::vector<std::size_t> minimal;
    for (std::size_t a : live) {
      bool redundant = false;
      for (std::size_t b : live) {
        if (a == b) continue;
        if (basis_[b].lm.divides(basis_[a].lm) && (!(basis_[b].lm == basis_[a].lm) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    for (std::size_t k = 0; k < basis_.size(); ++k) basis_[k].active = false;
    for (std::size_t a : minimal) basis_[a].active = true;
    std::vector<Polynomial> out;
    for (std::size_t a : minimal) {
      Terms& t = basis_[a].terms;
      Terms tail(t.begin() + 1, t.end());
      basis_[a].active = false;
      Terms red = reduce(std::move(tail));
      basis_[a].active = true;
      Terms full;
      full.reserve(red.size() + 1);
      full.push_back(t.front());
      full.insert(full.end(), red.begin(), red.end());
      out.push_back(Polynomial::fromSorted(ringPtr_, full));
    }
    const auto& ord = ring_.order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.leading().mono, b.leading().mono) < 0;
    });
    return out;
  }

  // Full reduction of f by the active elements.
  Terms reduce(Terms f) const {
    const auto& F = ring_.field();
    if (truncate_ > 0)
      std::erase_if(f, [&](const Term& t) { return t.mono.degree >= truncate_; });
    Terms result;
    std::size_t start = 0;
    while (start < f.size()) {
      const Term& lt = f[start];
      const Element* red = findReducer(lt.mono);
      if (!red) {
        result.push_back(lt);
        ++start;
        continue;
      }
      Monomial q = red->lm.quotientOf(lt.mono);
      std::uint32_t c = F.neg(lt.coeff);  // reducers are monic
      std::span<const Term> rest(f.data() + start, f.size() - start);
      f = detail::addScaledShifted(rest, red->terms, c, q, ring_, truncate_);
      start = 0;
      if (f.size() > limits_.maxTerms)
        throw ComputationLimitError("polynomial support cap exceeded (" +
                                    std::to_string(limits_.maxTerms) + " terms)");
    }
    return result;
  }

 private:
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      auto c = ord->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  const Element* findReducer(const Monomial& m) const {
    std::uint32_t mm = supportMask(m);
    for (const auto& e : basis_) {
      if (!e.active || (e.mask & ~mm) != 0) continue;
      if (e.lm.divides(m)) return &e;
    }
    return nullptr;
  }

  Terms spoly(const Element& a, const Element& b, const Monomial& lcm) const {
    Monomial ua = a.lm.quotientOf(lcm);
    Monomial ub = b.lm.quotientOf(lcm);
    const auto& F = ring_.field();
    std::span<const Term> ta(a.terms.data() + 1, a.terms.size() - 1);
    std::span<const Term> tb(b.terms.data() + 1, b.terms.size() - 1);
    Terms left = detail::addScaledShifted({}, ta, 1, ua, ring_, truncate_);
    return detail::addScaledShifted(left, tb, F.neg(1), ub, ring_, truncate_);
  }

  void insert(Terms r) {
    if (r.empty()) return;
    const auto& F = ring_.field();
    std::uint32_t inv = F.inv(r.front().coeff);
    if (inv != 1)
      for (auto& t : r) t.coeff = F.mul(t.coeff, inv);
    Element e;
    e.lm = r.front().mono;
    e.mask = supportMask(e.lm);
    e.monomialOnly = r.size() == 1;
    e.terms = std::move(r);
    if (e.lm.isOne()) unit_ = true;
    basis_.push_back(std::move(e));
    update(basis_.size() - 1);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial lh = basis_[h].lm;
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!basis_[g].active) continue;
      if (basis_[g].monomialOnly && basis_[h].monomialOnly) continue;
      candidates.push_back({g, h, lh.lcm(basis_[g].lm)});
    }
    std::vector<Pair> kept;
    std::vector<bool> removed(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = lh.coprime(basis_[p.i].lm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          if (!removed[b] && candidates[b].lcm.divides(p.lcm)) dominated = true;
        for (const auto& q : kept)
          if (!dominated && q.lcm.divides(p.lcm)) dominated = true;
      }
      if (dominated) {
        removed[a] = true;
      } else {
        kept.push_back(p);
      }
    }
    // Existing pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && !(lh.lcm(basis_[p.i].lm) == p.lcm) &&
          !(lh.lcm(basis_[p.j].lm) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& p : kept)
      if (!lh.coprime(basis_[p.i].lm)) pairs_.insert(p);
    for (std::size_t g = 0; g < h; ++g)
      if (basis_[g].active && lh.divides(basis_[g].lm)) basis_[g].active = false;
  }

  RingPtr ringPtr_;
  const PolyRing& ring_;
  std::uint32_t truncate_;
  GroebnerLimits limits_;
  std::vector<Element> basis_;
  std::set<Pair, PairLess> pairs_;
  std::size_t pairCount_ = 0;
  bool unit_ = false;
};

// Normal form of f modulo an arbitrary list (not necessarily a basis).
Terms reduceByList(const PolyRing& ring, Terms f, std::span<const Polynomial> list) {
  const auto& F = ring.field();
  Terms result;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lt = f[start];
    const Polynomial* red = nullptr;
    for (const auto& g : list)
      if (!g.isZero() && g.leading().mono.divides(lt.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      result.push_back(lt);
      ++start;
      continue;
    }
    Monomial q = red->leading().mono.quotientOf(lt.mono);
    std::uint32_t c = F.neg(F.mul(lt.coeff, F.inv(red->leading().coeff)));
    std::span<const Term> rest(f.data() + start, f.size() - start);
    f = detail::addScaledShifted(rest, red->terms(), c, q, ring, 0);
    start = 0;
  }
  return result;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leadingMonomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading().mono);
  return out;
}

Polynomial GroebnerBasis::normalForm(const Polynomial& f) const {
  if (f.ring() != ring_ && f.ring()->names() != ring_->names())
    throw ContextError("normal form across different rings");
  return Polynomial::fromSorted(ring_, reduceByList(*ring_, f.terms(), gens_));
}

std::string GroebnerBasis::canonicalKey() const {
  std::ostringstream os;
  std::size_t n = ring_ ? ring_->numVars() : 0;
  for (const auto& g : gens_) {
    for (const auto& t : g.terms()) {
      os << t.coeff << ':';
      for (std::size_t i = 0; i < n; ++i) os << t.mono.exps[i] << ',';
      os << ';';
    }
    os << '|';
  }
  return os.str();
}

std::uint32_t GroebnerBasis::maxDegree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.totalDegree());
  return d;
}

GroebnerBasis buchberger(RingPtr ring, std::span<const Polynomial> gens,
                         const GroebnerLimits& limits) {
  Engine engine(ring, 0, limits);
  // Sparser and lower generators first keeps intermediate growth down.
  std::vector<const Polynomial*> order;
  for (const auto& g : gens)
    if (!g.isZero()) order.push_back(&g);
  const auto& ord = ring->order();
  std::stable_sort(order.begin(), order.end(), [&](const Polynomial* a, const Polynomial* b) {
    return ord.compare(a->leading().mono, b->leading().mono) < 0;
  });
  for (const auto* g : order) {
    if (g->ring()->names() != ring->names()) throw ContextError("generator from a different ring");
    engine.addGenerator(g->terms());
    engine.run();
  }
  GroebnerBasis gb;
  gb.ring_ = std::move(ring);
  gb.gens_ = engine.reducedBasis();
  return gb;
}

GroebnerBasis truncatedBasis(const GroebnerBasis& base, std::uint32_t M,
                             const GroebnerLimits& limits) {
  if (!base.order().degreeCompatible())
    throw ContextError("truncated bases need a degree-compatible order");
  if (M == 0) throw ContextError("truncation degree must be positive");
  const RingPtr& ring = base.ring();
  Engine engine(ring, M, limits);
  std::size_t n = ring->numVars();
  // All monomials of degree exactly M.
  std::size_t seeded = 0;
  std::vector<int> e(n, 0);
  auto emit = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == n) {
      e[var] = remaining;
      engine.seedMonomial(Monomial::fromExponents(e));
      if (++seeded > limits.maxTerms)
        throw ComputationLimitError("truncation generates too many monomials");
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (n > 0) emit(emit, 0, static_cast<int>(M));
  for (const auto& g : base.generators()) {
    engine.addGenerator(g.terms());
    engine.run();
  }
  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.gens_ = engine.reducedBasis();
  return gb;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  const auto& ring = f.ring();
  const auto& F = ring->field();
  const Term& a = f.leading();
  const Term& b = g.leading();
  Monomial l = a.mono.lcm(b.mono);
  Polynomial left = f.timesTerm(a.mono.quotientOf(l), F.inv(a.coeff));
  Polynomial right = g.timesTerm(b.mono.quotientOf(l), F.inv(b.coeff));
  return left - right;
}

bool allSPolynomialsReduce(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = sPolynomial(basis[i], basis[j]);
      if (!reduceByList(*s.ring(), s.terms(), basis).empty()) return false;
    }
  return true;
}

namespace {

std::int64_t countStandard(std::vector<Monomial> gens, std::size_t nv) {
  for (const auto& g : gens)
    if (g.isOne()) return 0;
  if (nv == 0) return 1;
  std::size_t v = nv - 1;
  int bound = -1;
  for (const auto& g : gens) {
    bool pure = true;
    for (std::size_t i = 0; i < v; ++i)
      if (g.exps[i] != 0) pure = false;
    if (pure && (bound < 0 || g.exps[v] < bound)) bound = g.exps[v];
  }
  if (bound < 0) return -1;
  std::int64_t total = 0;
  for (int k = 0; k < bound; ++k) {
    std::vector<Monomial> sub;
    for (const auto& g : gens) {
      if (g.exps[v] > k) continue;
      Monomial h = g;
      h.degree -= h.exps[v];
      h.exps[v] = 0;
      sub.push_back(h);
    }
    std::int64_t c = countStandard(std::move(sub), v);
    if (c < 0) return -1;
    total += c;
  }
  return total;
}

}  // namespace

LengthValue standardMonomialCount(std::span<const Monomial> leading, std::size_t numVars) {
  std::vector<Monomial> gens(leading.begin(), leading.end());
  std::int64_t c = countStandard(std::move(gens), numVars);
  return c < 0 ? LengthValue::infinite() : LengthValue::finite(c);
}

LengthValue standardMonomialCount(const GroebnerBasis& gb) {
  auto lms = gb.leadingMonomials();
  return standardMonomialCount(lms, gb.ring()->numVars());
}

int krullDimension(std::span<const Monomial> leading, std::size_t numVars) {
  std::vector<std::uint32_t> masks;
  for (const auto& m : leading) {
    if (m.isOne()) return -1;
    masks.push_back(supportMask(m));
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  int best = 0;
  // Depth-first search for a largest variable set containing no generator support.
  auto dfs = [&](auto&& self, std::size_t var, std::uint32_t chosen, int size) -> void {
    if (size + static_cast<int>(numVars - var) <= best) return;
    if (var == numVars) {
      best = size;
      return;
    }
    std::uint32_t with = chosen | (1u << var);
    bool ok = true;
    for (auto m : masks)
      if ((m & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) self(self, var + 1, with, size + 1);
    self(self, var + 1, chosen, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

int krullDimension(const GroebnerBasis& gb) {
  auto lms = gb.leadingMonomials();
  return krullDimension(lms, gb.ring()->numVars());
}

std::vector<Polynomial> eliminateSlots(const RingPtr& ring, std::span<const Polynomial> gens,
                                       std::span<const std::size_t> dropSlots,
                                       const GroebnerLimits& limits) {
  std::size_t n = ring->numVars();
  std::vector<bool> drop(n, false);
  for (auto s : dropSlots) {
    if (s >= n) throw ContextError("elimination slot out of range");
    drop[s] = true;
  }
  // New slot layout: dropped variables first.
  std::vector<std::size_t> toNew(n), toOld(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (drop[i]) {
      toNew[i] = k;
      toOld[k++] = i;
      names.push_back(ring->names()[i]);
    }
  std::size_t blockEnd = k;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) {
      toNew[i] = k;
      toOld[k++] = i;
      names.push_back(ring->names()[i]);
    }
  auto elimRing = std::make_shared<const PolyRing>(names, ring->field().characteristic(),
                                                   MonomialOrder::block(blockEnd));
  std::vector<Polynomial> mapped;
  mapped.reserve(gens.size());
  for (const auto& g : gens) mapped.push_back(g.mappedTo(elimRing, toNew));
  GroebnerBasis gb = buchberger(elimRing, mapped, limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t s = 0; s < blockEnd && free; ++s)
        if (t.mono.exps[s] != 0) free = false;
      if (!free) break;
    }
    if (free) out.push_back(g.mappedTo(ring, toOld));
  }
  return out;
}

}  // namespace jh
