#include "jhilbert/reductions.hpp"

#include <limits>
#include <random>

namespace jh {

namespace {

std::uint32_t uniformResidue(std::mt19937_64& rng, std::uint32_t p) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return static_cast<std::uint32_t>(v % p);
  }
}

}  // namespace

GeneralReduction sampleGeneralElements(const Ideal& I, std::size_t s, std::uint64_t seed, unsigned attempt) {
  const auto& ctx = I.context();
  if (I.generators().empty()) throw std::invalid_argument("cannot sample from the zero ideal");
  if (s < 1) throw std::invalid_argument("need at least one general element");
  GeneralReduction red;
  red.seed = seed;
  red.attempt = attempt;
  red.J.push_back(Ideal::zero(ctx));
  const std::uint32_t p = ctx->characteristic();
  for (std::size_t i = 0; i < s; ++i) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), attempt,
                     static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(sq);
    Polynomial x(ctx->ring());
    for (const auto& a : I.generators()) x = x + a.scaled(uniformResidue(rng, p));
    red.elements.push_back(x);
    red.J.push_back(Ideal(ctx, red.elements));
  }
  return red;
}

int analyticSpread(const Ideal& I) {
  const auto& ctx = I.context();
  if (I.isUnit() || I.isZero()) throw std::invalid_argument("analytic spread needs a proper nonzero ideal");
  std::vector<Polynomial> gens;
  const auto& q = ctx->relationBasis();
  for (const auto& g : I.basis().generators())
    if (q.isZero() || !q.contains(g)) gens.push_back(g);
  const std::size_t n = ctx->numVars(), t = gens.size();
  if (n + t + 1 > kMaxVars) throw ContextError("too many generators for the fiber cone presentation");

  // Slots: x_1..x_n, T_1..T_t, u.
  std::vector<std::string> names = ctx->varNames();
  for (std::size_t j = 0; j < t; ++j) names.push_back("_T" + std::to_string(j + 1));
  names.push_back("_u");
  auto big = std::make_shared<const PolyRing>(names, ctx->characteristic());
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;
  Polynomial u = Polynomial::variable(big, n + t);
  std::vector<Polynomial> rees;
  for (std::size_t j = 0; j < t; ++j)
    rees.push_back(Polynomial::variable(big, n + j) - u * gens[j].mappedTo(big, slots));
  for (const auto& r : q.generators()) rees.push_back(r.mappedTo(big, slots));
  std::size_t drop[] = {n + t};
  auto kernel = eliminateSlots(big, rees, drop, ctx->limits());

  // Fiber cone: kernel + (x); keep the T-part of each kernel element.
  auto tRing = std::make_shared<const PolyRing>(std::vector<std::string>(names.begin() + n, names.end() - 1),
                                                ctx->characteristic());
  std::vector<Polynomial> fiber;
  for (const auto& f : kernel) {
    std::vector<Term> kept;
    for (const auto& term : f.terms()) {
      bool hasX = false;
      for (std::size_t i = 0; i < n && !hasX; ++i) hasX = term.mono.exps[i] != 0;
      if (hasX) continue;
      Monomial m;
      for (std::size_t j = 0; j < t; ++j) {
        m.exps[j] = term.mono.exps[n + j];
        m.degree += m.exps[j];
      }
      kept.push_back({m, term.coeff});
    }
    if (!kept.empty()) fiber.emplace_back(tRing, kept);
  }
  return krullDimension(buchberger(tRing, fiber, ctx->limits()));
}

std::optional<unsigned> reductionNumber(const Ideal& I, const Ideal& J, unsigned cap) {
  if (!I.contains(J)) throw ContainmentError("reduction candidate is not inside the ideal");
  for (unsigned r = 0; r <= cap; ++r) {
    Ideal lhs = idealProduct(J, idealPower(I, r));
    if (locallyContains(lhs, idealPower(I, r + 1))) return r;
  }
  return std::nullopt;
}

bool isReduction(const Ideal& I, const Ideal& J, unsigned cap) {
  return reductionNumber(I, J, cap).has_value();
}

MinimalReduction generalMinimalReduction(const Ideal& I, std::uint64_t seed, unsigned retries, unsigned cap) {
  MinimalReduction out;
  out.spread = analyticSpread(I);
  for (unsigned attempt = 0; attempt <= retries; ++attempt) {
    auto red = sampleGeneralElements(I, static_cast<std::size_t>(std::max(out.spread, 1)), seed, attempt);
    auto r = reductionNumber(I, red.J.back(), cap);
    out.attempts = attempt + 1;
    if (r) {
      out.reduction = std::move(red);
      out.reductionNumber = *r;
      return out;
    }
  }
  throw ComputationLimitError("no sampled minimal reduction after " + std::to_string(retries + 1) +
                              " attempts");
}

ResidualHeightReport residualHeightCheck(const Ideal& I, const GeneralReduction& red) {
  ResidualHeightReport rep;
  for (unsigned i = 0; i < red.size(); ++i) {
    Ideal colon = colonIdeal(red.J[i], I);
    ResidualHeightRow row;
    row.i = i;
    row.codimColon = codimension(colon);
    row.codimColonPlusI = codimension(idealSum(colon, I));
    row.pass = row.codimColon >= static_cast<int>(i) && row.codimColonPlusI >= static_cast<int>(i) + 1;
    rep.allPass = rep.allPass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

ReductionRing reductionRing(const Ideal& I, const GeneralReduction& red) {
  if (red.size() < 1) throw std::invalid_argument("reduction ring needs at least one element");
  ReductionRing rr{saturate(red.J[red.size() - 1], I), false, false, {}};
  rr.oneDimensional = krullDimension(rr.K) == 1;
  if (!rr.oneDimensional)
    rr.warnings.push_back("R/(J_{d-1} : I^inf) has dimension " + std::to_string(krullDimension(rr.K)) +
                          ", expected 1");
  rr.imagePrimary = hasFiniteLength(Ideal::unit(I.context()), idealSum(I, rr.K));
  if (!rr.imagePrimary) rr.warnings.push_back("image of I is not primary to the maximal ideal");
  return rr;
}

LengthValue jZero(const ReductionRing& rr, const GeneralReduction& red, const TruncationPolicy& policy) {
  const auto& ctx = rr.K.context();
  return locQuotientLength(idealSum(rr.K, Ideal(ctx, {red.elements.back()})), policy);
}

LengthValue jZero(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy) {
  return jZero(reductionRing(I, red), red, policy);
}

LengthValue eOneBar(const ReductionRing& rr, const Ideal& I, const GeneralReduction& red,
                    const TruncationPolicy& policy, unsigned nCap) {
  const Polynomial& xd = red.elements.back();
  std::int64_t sum = 0;
  for (unsigned n = 0; n <= nCap; ++n) {
    Ideal upper = idealSum(idealPower(I, n + 1), rr.K);
    Ideal lower = idealSum(elementTimes(xd, idealPower(I, n)), rr.K);
    LengthValue term = pairLength(upper, lower, policy);
    if (!term.isFinite()) return term;
    if (term.value() == 0) return LengthValue::finite(sum);
    sum += term.value();
  }
  return LengthValue::nonStabilized("e1 sum still growing at n=" + std::to_string(nCap));
}

LengthValue reductionDefectSum(const Ideal& I, const Ideal& J, const TruncationPolicy& policy, unsigned nCap) {
  std::int64_t sum = 0;
  for (unsigned n = 0; n <= nCap; ++n) {
    LengthValue term = pairLength(idealPower(I, n + 1), idealProduct(J, idealPower(I, n)), policy);
    if (!term.isFinite()) return term;
    if (term.value() == 0) return LengthValue::finite(sum);
    sum += term.value();
  }
  return LengthValue::nonStabilized("defect sum still growing at n=" + std::to_string(nCap));
}

LengthValue correctedDefectSum(const ReductionRing& rr, const Ideal& I, const GeneralReduction& red,
                               const TruncationPolicy& policy, unsigned nCap) {
  const Ideal& J = red.J.back();
  std::int64_t sum = 0;
  for (unsigned n = 0; n <= nCap; ++n) {
    Ideal upper = idealPower(I, n + 1);
    Ideal lower = idealProduct(J, idealPower(I, n));
    LengthValue whole = pairLength(upper, lower, policy);
    if (!whole.isFinite()) return whole;
    if (whole.value() == 0) return LengthValue::finite(sum);
    LengthValue part = pairLength(idealIntersect(rr.K, upper), idealIntersect(rr.K, lower), policy);
    if (!part.isFinite()) return part;
    sum += whole.value() - part.value();
  }
  return LengthValue::nonStabilized("corrected defect sum still changing at n=" + std::to_string(nCap));
}

ValabregaVallaReport valabregaVallaCheck(const Ideal& I, const GeneralReduction& red, unsigned nmax,
                                         const ReductionRing& rr, bool anAsserted,
                                         const TruncationPolicy& policy) {
  ValabregaVallaReport rep;
  rep.nmax = nmax;
  rep.anAsserted = anAsserted;
  const Ideal& Jd1 = red.J[red.size() - 1];
  for (unsigned n = 0; n <= nmax; ++n) {
    Ideal lhs = idealIntersect(Jd1, idealPower(I, n + 1));
    Ideal rhs = idealProduct(Jd1, idealPower(I, n));
    bool eq = locallyContains(rhs, lhs) && locallyContains(lhs, rhs);
    rep.perN.push_back(eq);
    rep.conditionB = rep.conditionB && eq;
  }
  rep.defectSum = reductionDefectSum(I, red.J.back(), policy);
  rep.e1bar = eOneBar(rr, I, red, policy);
  rep.conditionA = rep.defectSum.isFinite() && rep.e1bar.isFinite() && rep.defectSum == rep.e1bar;
  rep.consistent = rep.conditionA == rep.conditionB;
  if (anAsserted)
    rep.depthVerdict = rep.conditionA && rep.conditionB ? "depth(G) >= d-1 implied (verified up to nmax)"
                                                        : "depth(G) >= d-1 not implied";
  return rep;
}

}  // namespace jh
