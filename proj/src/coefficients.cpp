#include "jhilbert/coefficients.hpp"

#include <stdexcept>

namespace jh {

namespace {

// Raised inside the evaluator to abort one named term.
struct TermFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

const char* toString(ColonReading r) { return r == ColonReading::X1 ? "x1" : "xnext"; }

OmegaEvaluator::OmegaEvaluator(Ideal I, GeneralReduction red, ColonReading reading, TruncationPolicy policy)
    : I_(std::move(I)), red_(std::move(red)), reading_(reading), policy_(policy) {
  d_ = std::max(I_.context()->dimension(), 0);
  if (static_cast<int>(red_.size()) != d_)
    throw std::invalid_argument("omega needs exactly d = dim R general elements");
}

Ideal OmegaEvaluator::power(std::int64_t k) {
  if (k <= 0) return Ideal::unit(I_.context());
  return idealPower(I_, static_cast<unsigned>(k));
}

Ideal OmegaEvaluator::residual(unsigned i) {
  auto it = residuals_.find(i);
  if (it != residuals_.end()) return it->second;
  Ideal r = colonIdeal(red_.J.at(i), I_);
  residuals_.emplace(i, r);
  return r;
}

Ideal OmegaEvaluator::relSat(const Ideal& x, const Ideal& y) {
  return idealIntersect(saturate(x, Ideal::maximal(I_.context())), y);
}

std::int64_t OmegaEvaluator::length(const std::string& what, const Ideal& a, const Ideal& b) {
  auto it = memo_.find(what);
  if (it != memo_.end()) return it->second;
  LengthValue v = LengthValue::finite(0);
  try {
    v = pairLength(a, b, policy_);
  } catch (const ContainmentError&) {
    throw TermFailure(what + ": denominator not contained in numerator");
  }
  if (!v.isFinite()) throw TermFailure(what + ": length is " + v.toString());
  memo_.emplace(what, v.value());
  return v.value();
}

// K~^i_{index} with index = n - 1.
std::int64_t OmegaEvaluator::tildeK(unsigned i, std::int64_t index) {
  const std::int64_t n = index + 1;
  if (n <= 0) return 0;
  std::string key = "Ktilde^" + std::to_string(i) + "_" + std::to_string(index);
  Ideal num = reading_ == ColonReading::X1
                  ? colonElement(power(n + 1), red_.elements.at(0))
                  : colonElement(idealSum(power(n + 1), residual(i)), red_.elements.at(i));
  Ideal den = idealSum(residual(i), power(n));
  return length(key, num, den);
}

std::int64_t OmegaEvaluator::tildeL(unsigned i, std::int64_t n) {
  if (n < 0) return 0;
  std::string key = "Ltilde^" + std::to_string(i) + "_" + std::to_string(n);
  const Ideal& Ji = red_.J.at(i);
  const Ideal& Ji1 = red_.J.at(i + 1);
  Ideal num = idealIntersect(Ji1, power(n));
  Ideal den = idealSum(idealSum(idealIntersect(Ji, power(n)), idealIntersect(Ji1, power(n + 1))),
                       elementTimes(red_.elements.at(i), power(n - 1)));
  return length(key, num, den);
}

std::int64_t OmegaEvaluator::bigL(unsigned i, std::int64_t n) {
  if (n < 0) return 0;
  std::string key = "L^" + std::to_string(i) + "_" + std::to_string(n);
  Ideal Ri = residual(i), Ri1 = residual(i + 1);
  Ideal num = relSat(idealSum(idealIntersect(Ri, power(n)), power(n + 1)), idealIntersect(Ri1, power(n)));
  Ideal inner = relSat(idealSum(idealIntersect(Ri, power(n - 1)), power(n)), power(n - 1));
  Ideal den = idealSum(idealSum(idealIntersect(Ri, power(n)), idealIntersect(Ri1, power(n + 1))),
                       elementTimes(red_.elements.at(i), inner));
  return length(key, num, den);
}

std::int64_t OmegaEvaluator::bigN(unsigned i, std::int64_t n) {
  if (n < 0) return 0;
  std::string key = "N^" + std::to_string(i) + "_" + std::to_string(n);
  Ideal Ri = residual(i), Ri1 = residual(i + 1);
  Ideal num = relSat(idealSum(idealIntersect(Ri1, power(n)), power(n + 1)), power(n));
  Ideal den = idealSum(idealIntersect(Ri1, power(n)),
                       relSat(idealSum(idealIntersect(Ri, power(n)), power(n + 1)), power(n)));
  return length(key, num, den);
}

std::int64_t OmegaEvaluator::colonTerm(unsigned i, unsigned n) {
  std::string key = "colon^" + std::to_string(i) + "_" + std::to_string(n);
  Ideal Ri = residual(i);
  Ideal JIn = idealProduct(red_.J.back(), power(n));
  Ideal num = idealIntersect(Ri, power(n + 1));
  Ideal den = idealIntersect(Ri, JIn);
  if (i >= 2) {
    num = idealSum(num, residual(i - 1));
    den = idealSum(den, residual(i - 1));
  }
  return length(key, num, den);
}

std::int64_t OmegaEvaluator::beta() {
  if (beta_) return *beta_;
  auto g1 = gammaLength(I_, policy_);
  auto g2 = gammaLength(idealSum(residual(0), I_), policy_);
  if (!g1.isFinite() || !g2.isFinite()) throw TermFailure("beta: torsion length not finite");
  beta_ = g1.value() - g2.value();
  return *beta_;
}

LengthValue OmegaEvaluator::defect(unsigned n) {
  return pairLength(power(n + 1), idealProduct(red_.J.back(), power(n)), policy_);
}

OmegaBreakdown OmegaEvaluator::omega(unsigned n) {
  OmegaBreakdown out;
  out.n = n;
  out.reading = reading_;
  auto add = [&](std::string name, int sign, auto&& compute) {
    OmegaTerm t{std::move(name), sign, std::nullopt, {}};
    try {
      t.value = compute();
    } catch (const TermFailure& e) {
      t.error = e.what();
    } catch (const ComputationLimitError& e) {
      t.error = e.what();
    }
    out.terms.push_back(std::move(t));
  };
  auto delta = [&](unsigned k, auto&& f) {
    return deltaOperator([&](std::int64_t m) { return f(m); }, k, n);
  };

  if (n == 0) {
    add("lambda(R/J_{d-1}:I+I)", 1, [&] {
      Ideal c = idealSum(residual(static_cast<unsigned>(d_ - 1)), I_);
      return length("omega0-first", Ideal::unit(I_.context()), c);
    });
    add("lambda(H0_m(R/I))", -1, [&] {
      auto g = gammaLength(I_, policy_);
      if (!g.isFinite()) throw TermFailure("torsion of R/I: " + g.toString());
      return g.value();
    });
  } else {
    for (int i = 0; i + 2 <= d_; ++i) {
      unsigned ui = static_cast<unsigned>(i);
      add("Delta^" + std::to_string(d_ - 1 - i) + " Ktilde^" + std::to_string(i), 1,
          [&] { return delta(static_cast<unsigned>(d_ - 1 - i), [&](std::int64_t m) { return tildeK(ui, m - 1); }); });
    }
    for (int i = 0; i + 2 <= d_; ++i) {
      unsigned ui = static_cast<unsigned>(i), k = static_cast<unsigned>(d_ - 2 - i);
      std::string suffix = "^" + std::to_string(i);
      std::string op = "Delta^" + std::to_string(k) + " ";
      add(op + "Ltilde" + suffix, 1, [&] { return delta(k, [&](std::int64_t m) { return tildeL(ui, m); }); });
      add(op + "L" + suffix, -1, [&] { return delta(k, [&](std::int64_t m) { return bigL(ui, m); }); });
      add(op + "N" + suffix, 1, [&] { return delta(k, [&](std::int64_t m) { return bigN(ui, m); }); });
    }
    for (int i = 1; i <= d_ - 1; ++i)
      add("colon^" + std::to_string(i), -1, [&] { return colonTerm(static_cast<unsigned>(i), n); });
    if (n <= static_cast<unsigned>(d_ - 1) && d_ >= 1) {
      add("(-1)^n C(d-1,n) beta", -1, [&] {
        std::int64_t c = generalizedBinomial(d_ - 1, n);
        return (n % 2 ? -c : c) * beta();
      });
    }
  }

  std::int64_t total = 0;
  bool ok = true;
  for (const auto& t : out.terms) {
    if (!t.value) {
      ok = false;
      break;
    }
    total += t.sign * *t.value;
  }
  if (ok) out.total = total;
  return out;
}

std::int64_t deltaDefect(const HilbertRecord& rec, std::int64_t n) {
  auto pMinusH = [&](std::int64_t m) -> std::int64_t {
    if (m < 0) return rec.polynomial(m);
    if (m >= static_cast<std::int64_t>(rec.values.size())) return 0;
    return rec.polynomial(m) - rec.values[static_cast<std::size_t>(m)];
  };
  return deltaOperator(pMinusH, static_cast<unsigned>(rec.d), n);
}

std::int64_t differenceSum(const HilbertRecord& rec, unsigned i) {
  if (!rec.stabilized) throw std::invalid_argument("Hilbert record did not stabilize");
  std::int64_t sum = 0;
  const std::int64_t last = static_cast<std::int64_t>(rec.agreesFrom) + rec.d;
  for (std::int64_t n = static_cast<std::int64_t>(i) - 1; n <= last; ++n)
    sum += generalizedBinomial(n, static_cast<std::int64_t>(i) - 1) * deltaDefect(rec, n);
  return sum;
}

LengthValue jViaSums(OmegaEvaluator& ev, unsigned i, unsigned reductionNumber, unsigned nCap,
                     std::vector<std::string>* errors) {
  const unsigned quiet = static_cast<unsigned>(std::max(ev.d() + 1, 3));
  std::int64_t sum = 0;
  unsigned zeros = 0;
  for (unsigned n = i - 1; n <= nCap; ++n) {
    LengthValue def = ev.defect(n);
    if (!def.isFinite()) {
      if (errors) errors->push_back("lambda(I^" + std::to_string(n + 1) + "/JI^" + std::to_string(n) + ") is " + def.toString());
      return def.isInfinite() ? LengthValue::infinite() : def;
    }
    OmegaBreakdown om = ev.omega(n);
    if (!om.total) {
      if (errors)
        for (const auto& t : om.terms)
          if (!t.error.empty()) errors->push_back("omega_" + std::to_string(n) + ": " + t.error);
      return LengthValue::nonStabilized("omega_" + std::to_string(n) + " could not be evaluated");
    }
    std::int64_t term = def.value() + *om.total;
    sum += generalizedBinomial(n, static_cast<std::int64_t>(i) - 1) * term;
    zeros = term == 0 ? zeros + 1 : 0;
    if (n > reductionNumber && zeros >= quiet) return LengthValue::finite(sum);
  }
  return LengthValue::nonStabilized("terms still nonzero at n=" + std::to_string(nCap));
}

LengthValue jOneDepthFormula(const Ideal& I, const GeneralReduction& red, const TruncationPolicy& policy) {
  const auto& ctx = I.context();
  const int d = static_cast<int>(red.size());
  LengthValue sum = reductionDefectSum(I, red.J.back(), policy);
  if (!sum.isFinite()) return sum;
  LengthValue second = locQuotientLength(idealSum(colonIdeal(red.J.at(static_cast<std::size_t>(d - 1)), I), I), policy);
  if (!second.isFinite()) return second;
  Ideal H = d == 1 ? Ideal::zero(ctx) : colonIdeal(Ideal::zero(ctx), I);
  LengthValue third = gammaLength(idealSum(H, I), policy);
  if (!third.isFinite()) return third;
  return LengthValue::finite(sum.value() + second.value() - third.value());
}

}  // namespace jh
