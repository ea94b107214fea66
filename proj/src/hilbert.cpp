#include "jhilbert/hilbert.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace jh {

using boost::multiprecision::cpp_int;

namespace {

cpp_int binomBig(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  cpp_int num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

std::int64_t narrow(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Value at n of the polynomial of degree < values.size() through (firstN + t, values[t]).
cpp_int newtonEvaluate(const std::vector<cpp_int>& forwardDiffs, std::int64_t firstN, std::int64_t n) {
  cpp_int s = 0;
  for (std::size_t k = 0; k < forwardDiffs.size(); ++k)
    s += forwardDiffs[k] * binomBig(n - firstN, static_cast<std::int64_t>(k));
  return s;
}

}  // namespace

std::int64_t generalizedBinomial(std::int64_t top, std::int64_t k) { return narrow(binomBig(top, k)); }

LengthValue gradedTorsionLength(const Ideal& I, unsigned i, const TruncationPolicy& policy) {
  const auto& ctx = I.context();
  Ideal lower = idealPower(I, i);
  Ideal upper = idealPower(I, i + 1);
  Ideal torsion = idealIntersect(saturate(upper, Ideal::maximal(ctx)), lower);
  return pairLength(torsion, upper, policy);
}

LengthValue hilbertFunction(const Ideal& I, unsigned n, const TruncationPolicy& policy) {
  std::int64_t sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    LengthValue v = gradedTorsionLength(I, i, policy);
    if (!v.isFinite()) return v;
    sum += v.value();
  }
  return LengthValue::finite(sum);
}

std::int64_t HilbertRecord::polynomial(std::int64_t n) const { return binomialBasisEvaluate(j, n); }

std::int64_t HilbertRecord::function(std::int64_t n) const {
  if (n < 0) return 0;
  return values.at(static_cast<std::size_t>(n));
}

HilbertRecord fitHilbertPolynomial(const Ideal& I, const HilbertOptions& options) {
  HilbertRecord rec;
  rec.d = std::max(I.context()->dimension(), 0);
  const unsigned d = static_cast<unsigned>(rec.d);
  const unsigned window = options.window ? options.window : d + 2;
  if (window < d + 2) throw std::invalid_argument("fit window must be at least d + 2");
  const unsigned need = window + options.confirm;

  auto diff = [&](unsigned n) {
    return deltaOperator([&](std::int64_t m) { return rec.function(m); }, d, n);
  };

  std::int64_t running = 0;
  for (unsigned n = 0; n <= options.nCap; ++n) {
    LengthValue g = gradedTorsionLength(I, n, options.policy);
    if (!g.isFinite()) {
      rec.reason = "graded torsion length at n=" + std::to_string(n) + " is " + g.toString();
      return rec;
    }
    running += g.value();
    rec.values.push_back(running);
    if (n < d + need - 1) continue;
    const unsigned a = n + 1 - need;  // candidate window [a, n]
    std::int64_t c = diff(a);
    bool constant = true;
    for (unsigned m = a + 1; m <= n && constant; ++m) constant = diff(m) == c;
    if (!constant) continue;
    std::vector<std::int64_t> tail(rec.values.begin() + (a - d), rec.values.end());
    rec.j = binomialBasisConvert(tail, rec.d, a - d);
    rec.windowStart = a;
    rec.windowEnd = n;
    unsigned from = a - d;
    while (from > 0 && rec.polynomial(from - 1) == rec.values[from - 1]) --from;
    rec.agreesFrom = from;
    rec.stabilized = true;
    return rec;
  }
  rec.reason = "d-th difference not constant up to n=" + std::to_string(options.nCap);
  return rec;
}

std::vector<std::int64_t> binomialBasisConvert(const std::vector<std::int64_t>& values, int d,
                                               std::int64_t firstN) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  if (values.size() < k) throw std::invalid_argument("need at least d + 1 values");
  std::vector<cpp_int> row(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<cpp_int> forward;
  for (std::size_t level = 0; level < k; ++level) {
    forward.push_back(row[0]);
    for (std::size_t t = 0; t + 1 < row.size(); ++t) row[t] = row[t + 1] - row[t];
    row.pop_back();
  }
  for (std::size_t t = k; t < values.size(); ++t)
    if (newtonEvaluate(forward, firstN, firstN + static_cast<std::int64_t>(t)) != values[t])
      throw std::invalid_argument("values do not lie on a polynomial of degree <= d");

  // j_{d-k} = (-1)^{d-k} * (k-th backward difference of P at -1).
  std::vector<std::int64_t> j(k);
  for (int kk = 0; kk <= d; ++kk) {
    cpp_int nabla = 0;
    for (int m = 0; m <= kk; ++m) {
      cpp_int term = binomBig(kk, m) * newtonEvaluate(forward, firstN, -1 - m);
      nabla += m % 2 ? -term : term;
    }
    int i = d - kk;
    j[static_cast<std::size_t>(i)] = narrow(i % 2 ? -nabla : nabla);
  }
  return j;
}

std::int64_t binomialBasisEvaluate(const std::vector<std::int64_t>& j, std::int64_t n) {
  const std::int64_t d = static_cast<std::int64_t>(j.size()) - 1;
  cpp_int s = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    cpp_int term = cpp_int(j[static_cast<std::size_t>(i)]) * binomBig(n + d - i, d - i);
    s += i % 2 ? -term : term;
  }
  return narrow(s);
}

std::int64_t deltaOperator(const std::function<std::int64_t(std::int64_t)>& f, unsigned k, std::int64_t n) {
  cpp_int s = 0;
  for (unsigned m = 0; m <= k; ++m) {
    cpp_int term = binomBig(k, m) * f(n - m);
    s += m % 2 ? -term : term;
  }
  return narrow(s);
}

}  // namespace jh
