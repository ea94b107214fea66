#pragma once

#include <string>
#include <vector>

#include "jhilbert/ideal.hpp"
#include "jhilbert/problem.hpp"

namespace jhtest {

inline jh::ContextPtr ring(std::vector<std::string> vars, std::vector<std::string> mod = {},
                           std::uint32_t p = 32003) {
  return jh::RingContext::create(std::move(vars), p, std::move(mod));
}

inline jh::Polynomial poly(const jh::ContextPtr& ctx, const std::string& text) {
  return jh::parsePolynomial(ctx->ring(), text);
}

inline jh::Ideal ideal(const jh::ContextPtr& ctx, std::vector<std::string> gens) {
  std::vector<jh::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(ctx, g));
  return jh::Ideal(ctx, std::move(ps));
}

}  // namespace jhtest
