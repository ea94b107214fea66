#include "jhilbert/length.hpp"

#include <algorithm>

namespace jh {

void TruncationPolicy::validate() const {
  if (stepM < 1) throw std::invalid_argument("truncation step must be at least 1");
  if (stabilityWindow < 2) throw std::invalid_argument("stability window must be at least 2");
  if (startM != 0 && capM < startM) throw std::invalid_argument("truncation cap is below the start");
  if (capM < 1) throw std::invalid_argument("truncation cap must be positive");
}

bool TruncationTrace::monotone() const {
  return std::is_sorted(D.begin(), D.end());
}

std::int64_t truncatedDim(const Ideal& l, std::uint32_t M) {
  if (M < 1) throw std::invalid_argument("truncation degree must be at least 1");
  const auto& ctx = l.context();
  if (l.isUnit()) return 0;
  std::string key = "tdim#" + std::to_string(M) + "#" + l.key();
  if (auto hit = ctx->lookupCount(key)) return *hit;
  auto gb = truncatedBasis(l.basis(), M, ctx->limits());
  std::int64_t value = standardMonomialCount(gb).value();
  ctx->storeCount(key, value);
  return value;
}

bool hasFiniteLength(const Ideal& a, const Ideal& b) {
  Ideal ann = colonIdeal(b, a);
  if (ann.isUnit()) return true;
  const auto& ctx = a.context();
  return idealSum(saturate(ann, Ideal::maximal(ctx)), Ideal::maximal(ctx)).isUnit();
}

LengthValue pairLength(const Ideal& a, const Ideal& b, const TruncationPolicy& policy,
                       TruncationTrace* trace) {
  policy.validate();
  if (!a.contains(b)) throw ContainmentError("submodule is not contained in the ambient ideal");
  if (a.key() == b.key()) return LengthValue::finite(0);

  const auto& ctx = a.context();
  std::uint32_t start = policy.startM;
  if (start == 0) {
    std::uint32_t deg = std::max(a.maxGeneratorDegree(), b.maxGeneratorDegree());
    start = 2 * (static_cast<std::uint32_t>(std::max(ctx->dimension(), 0)) + deg);
    start = std::max<std::uint32_t>(start, 1);
  }
  if (start > policy.capM) start = policy.capM;

  std::vector<std::int64_t> history;
  bool exactChecked = false;
  for (std::uint32_t M = start; M <= policy.capM; M += policy.stepM) {
    std::int64_t D = truncatedDim(b, M) - truncatedDim(a, M);
    history.push_back(D);
    if (trace) {
      trace->M.push_back(M);
      trace->D.push_back(D);
    }
    const std::size_t w = policy.stabilityWindow;
    if (history.size() >= w &&
        std::all_of(history.end() - static_cast<std::ptrdiff_t>(w), history.end(),
                    [&](std::int64_t v) { return v == D; }))
      return LengthValue::finite(D);
    // Two consecutive increases: settle finiteness exactly before climbing further.
    const std::size_t h = history.size();
    if (!exactChecked && h >= 3 && history[h - 1] > history[h - 2] && history[h - 2] > history[h - 3]) {
      exactChecked = true;
      if (!hasFiniteLength(a, b)) return LengthValue::infinite();
    }
  }
  if (!exactChecked && !hasFiniteLength(a, b)) return LengthValue::infinite();
  return LengthValue::nonStabilized("truncation differences still changing at M=" +
                                    std::to_string(policy.capM));
}

LengthValue locQuotientLength(const Ideal& l, const TruncationPolicy& policy) {
  return pairLength(Ideal::unit(l.context()), l, policy);
}

LengthValue gammaLength(const Ideal& l, const TruncationPolicy& policy) {
  return pairLength(saturate(l, Ideal::maximal(l.context())), l, policy);
}

}  // namespace jh
