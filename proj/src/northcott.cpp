#include "jhilbert/northcott.hpp"

namespace jh {

namespace {

std::optional<std::int64_t> finiteOr(const LengthValue& v) {
  if (v.isFinite()) return v.value();
  return std::nullopt;
}

}  // namespace

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool artinNagataAutomatic(const Ideal& I) {
  const auto& ctx = I.context();
  const int d = ctx->dimension();
  if (d <= 1) return true;
  if (d == 2 && ctx->relations().empty()) return true;
  return hasFiniteLength(Ideal::unit(ctx), I);
}

NorthcottTerms northcottBound(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy) {
  const std::size_t d = red.size();
  if (d < 2) throw std::invalid_argument("the Northcott bound needs d >= 2");
  NorthcottTerms t;
  t.lambdaIJ = pairLength(I, red.J[d], policy);
  Ideal inner = saturate(idealSum(colonIdeal(red.J[d - 2], I), I), Ideal::maximal(I.context()));
  t.secondTerm = locQuotientLength(idealSum(colonIdeal(red.J[d - 1], I), inner), policy);
  return t;
}

NorthcottReport northcottReport(const Ideal& I, const NorthcottOptions& opt) {
  NorthcottReport rep;
  const auto& ctx = I.context();
  rep.d = std::max(ctx->dimension(), 0);
  const int d = rep.d;
  rep.mPrimary = hasFiniteLength(Ideal::unit(ctx), I);

  HilbertRecord rec = fitHilbertPolynomial(I, opt.hilbert);
  if (rec.stabilized) {
    rep.j1 = rec.j.size() > 1 ? std::optional<std::int64_t>(rec.j[1]) : std::nullopt;
    rep.j1Route = "fit";
  } else {
    rep.nonStabilized = true;
    rep.diagnostics.push_back("Hilbert fit: " + rec.reason);
  }

  MinimalReduction mr;
  try {
    mr = generalMinimalReduction(I, opt.seed);
  } catch (const ComputationLimitError& e) {
    rep.diagnostics.push_back(e.what());
    rep.nonStabilized = true;
    return rep;
  }
  rep.spread = mr.spread;
  rep.reductionNumber = mr.reductionNumber;
  rep.mu = finiteOr(pairLength(I, idealProduct(Ideal::maximal(ctx), I), opt.policy));
  if (rep.spread != d) {
    rep.diagnostics.push_back("analytic spread " + std::to_string(rep.spread) + " differs from d = " +
                              std::to_string(d));
    return rep;
  }
  const GeneralReduction& red = mr.reduction;

  rep.residualHeightPass = residualHeightCheck(I, red).allPass;
  if (!rep.residualHeightPass) rep.diagnostics.push_back("J does not satisfy G_" + std::to_string(d));
  rep.anHolds = opt.flags.anAsserted || artinNagataAutomatic(I);
  rep.s2Holds = opt.flags.s2Asserted || rep.anHolds;
  {
    LengthValue g = gammaLength(I, opt.policy);
    rep.depthRI = rep.mPrimary || (g.isFinite() && g.value() == 0);
  }

  if (d == 1) {
    rep.oneDimensionalParts = {finiteOr(reductionDefectSum(I, red.J[1], opt.policy)),
                               finiteOr(locQuotientLength(idealSum(colonIdeal(red.J[0], I), I), opt.policy)),
                               finiteOr(gammaLength(I, opt.policy))};
    rep.diagnostics.push_back("d = 1: the bound involves J_{d-2} and is not defined; j_1 decomposition reported");
    return rep;
  }

  NorthcottTerms terms = northcottBound(I, red, opt.policy);
  rep.lambdaIJ = finiteOr(terms.lambdaIJ);
  rep.secondTerm = finiteOr(terms.secondTerm);
  if (rep.lambdaIJ && rep.secondTerm) rep.bound = *rep.lambdaIJ + *rep.secondTerm;
  else rep.diagnostics.push_back("bound has a non-finite term");

  const bool gd = rep.residualHeightPass || opt.flags.gdAsserted;
  const bool hyp41 = gd && rep.s2Holds;
  const bool hypEquality = gd && rep.anHolds && rep.depthRI;

  if (hyp41 && rec.stabilized) {
    OmegaEvaluator ev(I, red, opt.reading, opt.policy);
    std::vector<std::string> errs;
    LengthValue sums = jViaSums(ev, 1, mr.reductionNumber, opt.hilbert.nCap, &errs);
    for (auto& e : errs) rep.diagnostics.push_back(e);
    if (sums.isFinite()) {
      rep.j1Sums = sums.value();
      if (rep.j1 && *rep.j1 != sums.value() && rep.anHolds) {
        rep.crossCheckFailed = true;
        rep.diagnostics.push_back("j_1 fit " + std::to_string(*rep.j1) + " disagrees with summation route " +
                                  std::to_string(sums.value()));
      }
    } else {
      rep.diagnostics.push_back("summation route for j_1: " + sums.toString());
    }
  }

  if (!rep.j1 || !rep.bound) return rep;
  const std::int64_t j1 = *rep.j1;
  rep.inequalityHolds = j1 >= *rep.bound;
  rep.equality = j1 == *rep.bound;
  if (hyp41 && !rep.inequalityHolds) {
    rep.crossCheckFailed = true;
    rep.diagnostics.push_back("inequality fails although its hypotheses pass");
  }

  const bool small = mr.reductionNumber <= 1;
  if (!hypEquality) rep.equalityVerdict = Verdict::NotApplicable;
  else rep.equalityVerdict = rep.equality == small ? Verdict::Consistent : Verdict::Violated;
  if (rep.equalityVerdict == Verdict::Violated) rep.crossCheckFailed = true;

  if (hyp41) {
    rep.nonNegative = {true, j1 >= 0, "j_1 = " + std::to_string(j1)};
    bool isJ = *rep.lambdaIJ == 0;
    rep.secondOnlyIsJ = {true, j1 != *rep.secondTerm || isJ,
                         j1 == *rep.secondTerm ? (isJ ? "I = J" : "I != J") : "premise false"};
    rep.equalsIJIsPrimary = {true, j1 != *rep.lambdaIJ || rep.mPrimary,
                             j1 == *rep.lambdaIJ ? (rep.mPrimary ? "I is m-primary" : "I is not m-primary")
                                                 : "premise false"};
    const int height = codimension(I);
    bool ci = rep.mu && *rep.mu == height;
    rep.zeroIsCI = {true, (j1 == 0) == ci,
                    "mu = " + (rep.mu ? std::to_string(*rep.mu) : std::string("?")) + ", height = " +
                        std::to_string(height) + (ci ? ": complete intersection" : ": not a complete intersection")};
    for (const auto* c : {&rep.nonNegative, &rep.secondOnlyIsJ, &rep.equalsIJIsPrimary, &rep.zeroIsCI})
      if (!c->holds) {
        rep.crossCheckFailed = true;
        rep.diagnostics.push_back("implication check failed: " + c->detail);
      }
  }

  if (rep.mPrimary && rec.stabilized) {
    LengthValue colength = locQuotientLength(I, opt.policy);
    if (colength.isFinite()) {
      rep.classicalGap = rec.j[0] - colength.value();
      rep.classicalAgrees = *rep.classicalGap == *rep.lambdaIJ;
      if (!rep.classicalAgrees) {
        rep.crossCheckFailed = true;
        rep.diagnostics.push_back("e_0 - lambda(R/I) differs from lambda(I/J)");
      }
    }
  }
  return rep;
}

}  // namespace jh
