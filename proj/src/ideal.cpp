#include "jhilbert/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jhilbert/problem.hpp"

namespace jh {

// ---------------------------------------------------------------------------
// RingContext

ContextPtr RingContext::create(std::vector<std::string> varNames, std::uint32_t characteristic,
                               std::vector<std::string> relationsText, GroebnerLimits limits) {
  std::set<std::string> seen;
  for (const auto& v : varNames)
    if (!seen.insert(v).second) throw ContextError("duplicate variable name '" + v + "'");
  if (varNames.empty()) throw ContextError("a ring needs at least one variable");
  if (varNames.size() + 1 > kMaxVars) throw ContextError("too many variables");
  auto ring = std::make_shared<const PolyRing>(std::move(varNames), characteristic);
  std::vector<Polynomial> rel;
  for (const auto& text : relationsText) rel.push_back(parsePolynomial(ring, text));
  return create(std::move(ring), std::move(rel), limits);
}

ContextPtr RingContext::create(RingPtr ring, std::vector<Polynomial> relations,
                               GroebnerLimits limits) {
  if (!ring->order().degreeCompatible()) throw ContextError("base ring must use grevlex");
  std::shared_ptr<RingContext> ctx(new RingContext());
  ctx->ring_ = std::move(ring);
  ctx->limits_ = limits;
  for (auto& r : relations) {
    if (r.isZero()) continue;
    if (r.ring()->names() != ctx->ring_->names()) throw ContextError("relation from another ring");
    for (const auto& t : r.terms())
      if (t.mono.isOne())
        throw ContextError("relation " + r.toString() +
                           " does not vanish at the origin; the local ring would be zero");
    ctx->relations_.push_back(std::move(r));
  }
  ctx->finish();
  return ctx;
}

void RingContext::finish() {
  auto names = ring_->names();
  names.push_back("_t");
  extended_ = std::make_shared<const PolyRing>(names, characteristic());
  relationBasis_ = buchberger(ring_, relations_, limits_);
  dimension_ = krullDimension(relationBasis_);
}

std::optional<std::vector<Polynomial>> RingContext::lookup(const std::string& key) const {
  std::lock_guard lock(cacheMutex_);
  auto it = idealCache_.find(key);
  if (it == idealCache_.end()) return std::nullopt;
  return it->second;
}

void RingContext::store(const std::string& key, std::vector<Polynomial> basis) const {
  std::lock_guard lock(cacheMutex_);
  idealCache_.emplace(key, std::move(basis));
}

std::optional<std::int64_t> RingContext::lookupCount(const std::string& key) const {
  std::lock_guard lock(cacheMutex_);
  auto it = countCache_.find(key);
  if (it == countCache_.end()) return std::nullopt;
  return it->second;
}

void RingContext::storeCount(const std::string& key, std::int64_t value) const {
  std::lock_guard lock(cacheMutex_);
  countCache_.emplace(key, value);
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), state_(std::make_shared<State>()) {
  for (auto& g : gens) {
    if (g.isZero()) continue;
    if (g.ring()->names() != ctx_->varNames()) throw ContextError("generator from another ring");
    state_->gens.push_back(std::move(g));
  }
}

Ideal Ideal::fromBasis(ContextPtr ctx, std::vector<Polynomial> basis) {
  Ideal out(ctx, basis);
  std::call_once(out.state_->once, [&] {
    // The basis is already reduced; recomputing is cheap but pointless.
    out.state_->gb = buchberger(ctx->ring(), basis, ctx->limits());
  });
  return out;
}

Ideal Ideal::zero(const ContextPtr& ctx) { return Ideal(ctx, {}); }

Ideal Ideal::unit(const ContextPtr& ctx) { return Ideal(ctx, {ctx->constant(1)}); }

Ideal Ideal::maximal(const ContextPtr& ctx) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ctx->numVars(); ++i) vars.push_back(ctx->variable(i));
  return Ideal(ctx, std::move(vars));
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(state_->once, [this] {
    std::vector<Polynomial> all = state_->gens;
    // Starting from Q's reduced basis is cheaper than from the raw relations.
    for (const auto& q : ctx_->relationBasis().generators()) all.push_back(q);
    state_->gb = buchberger(ctx_->ring(), all, ctx_->limits());
  });
  return state_->gb;
}

bool Ideal::isZero() const { return key() == ctx_->relationBasis().canonicalKey(); }

bool Ideal::contains(const Ideal& other) const {
  if (isUnit()) return true;
  for (const auto& g : other.basis().generators())
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::toString() const {
  std::ostringstream os;
  os << '(';
  const auto& gens = basis().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].toString();
  os << ')';
  return os.str();
}

std::uint32_t Ideal::maxGeneratorDegree() const { return basis().maxDegree(); }

// ---------------------------------------------------------------------------
// Operations

namespace {

void requireSameContext(const Ideal& a, const Ideal& b) {
  if (a.context() != b.context()) throw ContextError("ideals belong to different ring contexts");
}

// Generators worth multiplying: the reduced basis without the elements of Q.
std::vector<Polynomial> productGenerators(const Ideal& a) {
  std::vector<Polynomial> out;
  const auto& q = a.context()->relationBasis();
  for (const auto& g : a.basis().generators())
    if (q.isZero() || !q.contains(g)) out.push_back(g);
  return out;
}

Ideal cached(const ContextPtr& ctx, const std::string& key, auto&& compute) {
  if (auto hit = ctx->lookup(key)) return Ideal::fromBasis(ctx, std::move(*hit));
  Ideal result = compute();
  ctx->store(key, result.basis().generators());
  return result;
}

// Raw intersection in the polynomial ring: eliminate t from t*A + (1-t)*B.
std::vector<Polynomial> intersectRaw(const ContextPtr& ctx, std::span<const Polynomial> a,
                                     std::span<const Polynomial> b) {
  const RingPtr& ext = ctx->extendedRing();
  const std::size_t n = ctx->numVars();
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;
  Polynomial t = Polynomial::variable(ext, n);
  Polynomial oneMinusT = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * f.mappedTo(ext, slots));
  for (const auto& f : b) gens.push_back(oneMinusT * f.mappedTo(ext, slots));
  std::size_t drop[] = {n};
  auto elim = eliminateSlots(ext, gens, drop, ctx->limits());
  std::vector<Polynomial> out;
  for (const auto& f : elim) out.push_back(f.mappedTo(ctx->ring(), slots));
  return out;
}

}  // namespace

Ideal idealSum(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.context(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  auto ga = productGenerators(a);
  auto gb = productGenerators(b);
  std::vector<Polynomial> gens;
  for (const auto& f : ga)
    for (const auto& g : gb) gens.push_back(f * g);
  return Ideal(a.context(), std::move(gens));
}

Ideal idealPower(const Ideal& a, unsigned n) {
  const auto& ctx = a.context();
  if (n == 0) return Ideal::unit(ctx);
  if (n == 1) return a;
  return cached(ctx, "pow" + std::to_string(n) + "#" + a.key(),
                [&] { return idealProduct(idealPower(a, n - 1), a); });
}

Ideal elementTimes(const Polynomial& f, const Ideal& a) {
  std::vector<Polynomial> gens;
  for (const auto& g : productGenerators(a)) gens.push_back(f * g);
  return Ideal(a.context(), std::move(gens));
}

Ideal idealIntersect(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  if (a.isUnit()) return b;
  if (b.isUnit()) return a;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  const auto& ctx = a.context();
  std::string ka = a.key(), kb = b.key();
  if (kb < ka) std::swap(ka, kb);
  return cached(ctx, "cap#" + ka + "#" + kb, [&] {
    return Ideal(ctx, intersectRaw(ctx, a.basis().generators(), b.basis().generators()));
  });
}

Ideal colonElement(const Ideal& a, const Polynomial& f) {
  const auto& ctx = a.context();
  if (f.isZero() || a.contains(f)) return Ideal::unit(ctx);
  if (f.isConstant()) return a;
  std::string key = "colon#" + a.key() + "#" + f.toString();
  return cached(ctx, key, [&] {
    std::vector<Polynomial> principal{f};
    auto inter = intersectRaw(ctx, a.basis().generators(), principal);
    std::vector<Polynomial> quot;
    for (const auto& g : inter) quot.push_back(g.dividedBy(f));
    return Ideal(ctx, std::move(quot));
  });
}

Ideal colonIdeal(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  const auto& ctx = a.context();
  if (a.contains(b)) return Ideal::unit(ctx);
  if (b.isUnit()) return a;
  std::optional<Ideal> acc;
  for (const auto& g : productGenerators(b)) {
    Ideal c = colonElement(a, g);
    acc = acc ? idealIntersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal::unit(ctx);
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  const auto& ctx = a.context();
  if (b.isUnit()) return a;
  return cached(ctx, "sat#" + a.key() + "#" + b.key(), [&] {
    Ideal current = a;
    for (std::size_t step = 0;; ++step) {
      if (step > ctx->limits().maxPairs)
        throw ComputationLimitError("saturation chain did not stabilize");
      Ideal next = colonIdeal(current, b);
      if (current.contains(next)) return current;
      current = next;
    }
  });
}

bool idealEquals(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  return a.key() == b.key();
}

bool locallyContains(const Ideal& a, const Ideal& b) {
  requireSameContext(a, b);
  if (a.contains(b)) return true;
  // b is in a at the origin iff (a : b) is not inside the maximal ideal.
  Ideal c = colonIdeal(a, b);
  return idealSum(c, Ideal::maximal(a.context())).isUnit();
}

int krullDimension(const Ideal& l) { return krullDimension(l.basis()); }

int codimension(const Ideal& l) {
  int dimR = l.context()->dimension();
  if (l.isUnit()) return dimR + 1;
  return dimR - krullDimension(l);
}

std::vector<Polynomial> eliminate(const Ideal& l, std::span<const std::string> dropVars) {
  const auto& ctx = l.context();
  std::vector<std::size_t> slots;
  for (const auto& v : dropVars) {
    int idx = ctx->ring()->indexOf(v);
    if (idx < 0) throw ContextError("unknown variable '" + v + "'");
    slots.push_back(static_cast<std::size_t>(idx));
  }
  return eliminateSlots(ctx->ring(), l.basis().generators(), slots, ctx->limits());
}

}  // namespace jh
