#include "jhilbert/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace jh::oracle {

namespace {

bool dividesExp(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && dividesExp(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Visits every exponent vector with 0 <= e[i] <= bound[i].
void forEachInBox(const Exponents& bound, const std::function<void(const Exponents&)>& visit) {
  Exponents e(bound.size(), 0);
  for (;;) {
    visit(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t numVars, std::vector<Exponents> gens) : n_(numVars) {
  for (const auto& g : gens) {
    if (g.size() != n_) throw std::invalid_argument("exponent vector has the wrong length");
    for (int v : g)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t numVars) {
  return MonomialIdeal(numVars, {Exponents(numVars, 0)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t numVars) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < numVars; ++i) {
    Exponents e(numVars, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(numVars, gens);
}

bool MonomialIdeal::isUnit() const {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](int v) { return v == 0; });
}

bool MonomialIdeal::contains(const Exponents& e) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return dividesExp(g, e); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Exponents& g) { return contains(g); });
}

std::string MonomialIdeal::toString(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) os << ", ";
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!gens_[k][i]) continue;
      if (any) os << '*';
      os << names.at(i);
      if (gens_[k][i] > 1) os << '^' << gens_[k][i];
      any = true;
    }
    if (!any) os << '1';
  }
  os << ')';
  return os.str();
}

MonomialIdeal monSum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.numVars(), gens);
}

MonomialIdeal monProduct(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponents> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Exponents e(a.numVars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = f[i] + g[i];
      gens.push_back(e);
    }
  return MonomialIdeal(a.numVars(), gens);
}

MonomialIdeal monPower(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal out = MonomialIdeal::unit(a.numVars());
  for (unsigned i = 0; i < k; ++i) out = monProduct(out, a);
  return out;
}

MonomialIdeal monIntersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponents> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Exponents e(a.numVars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(f[i], g[i]);
      gens.push_back(e);
    }
  return MonomialIdeal(a.numVars(), gens);
}

MonomialIdeal monColon(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal acc = MonomialIdeal::unit(a.numVars());
  for (const auto& g : b.generators()) {
    std::vector<Exponents> gens;
    for (const auto& f : a.generators()) {
      Exponents e(a.numVars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(f[i] - g[i], 0);
      gens.push_back(e);
    }
    acc = monIntersect(acc, MonomialIdeal(a.numVars(), gens));
  }
  return acc;
}

MonomialIdeal monSaturate(const MonomialIdeal& a, const std::vector<std::size_t>& vars) {
  // a : (x_S)^inf is the intersection over i in S of a : x_i^inf, and the
  // latter just forgets the x_i exponent.
  MonomialIdeal acc = MonomialIdeal::unit(a.numVars());
  for (std::size_t v : vars) {
    auto gens = a.generators();
    for (auto& g : gens) g.at(v) = 0;
    acc = monIntersect(acc, MonomialIdeal(a.numVars(), gens));
  }
  return acc;
}

LengthValue monPairLength(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.contains(b)) throw std::invalid_argument("second ideal is not contained in the first");
  const std::size_t n = a.numVars();
  if (a.isZero()) return LengthValue::finite(0);
  // Membership in a or b depends only on exponents clipped at `bound`, so a
  // point of a \ b on the box boundary spawns an infinite ray.
  Exponents bound(n, 0);
  for (const auto* ideal : {&a, &b})
    for (const auto& g : ideal->generators())
      for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  std::int64_t count = 0;
  bool infinite = false;
  forEachInBox(bound, [&](const Exponents& e) {
    if (infinite || !a.contains(e) || b.contains(e)) return;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] == bound[i]) {
        infinite = true;
        return;
      }
    ++count;
  });
  return infinite ? LengthValue::infinite() : LengthValue::finite(count);
}

std::vector<std::int64_t> oracleHilbertCoefficients(const MonomialIdeal& I) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const std::size_t d = I.numVars();
  const auto unit = MonomialIdeal::unit(d);
  if (!monPairLength(unit, I).isFinite()) throw std::invalid_argument("ideal is not m-primary");

  auto binom = [](std::int64_t top, std::int64_t k) {
    cpp_int r = 1;
    for (std::int64_t i = 0; i < k; ++i) r = r * (top - i) / (i + 1);
    return r;
  };
  std::vector<std::int64_t> values;
  MonomialIdeal power = I;  // I^{n+1}
  auto extend = [&] {
    values.push_back(monPairLength(unit, power).value());
    power = monProduct(power, I);
  };
  for (std::size_t n = 0; n <= d + 4; ++n) extend();

  for (;;) {
    // Solve sum_i (-1)^i e_i C(n+d-i, d-i) = values[n] on the last d+1 points.
    const std::size_t N = values.size() - 1;
    const std::size_t k = d + 1;
    std::vector<std::vector<cpp_rational>> mat(k, std::vector<cpp_rational>(k + 1));
    for (std::size_t row = 0; row < k; ++row) {
      std::int64_t nn = static_cast<std::int64_t>(N - row);
      for (std::size_t i = 0; i <= d; ++i) {
        cpp_int c = binom(nn + static_cast<std::int64_t>(d - i), static_cast<std::int64_t>(d - i));
        mat[row][i] = cpp_rational(i % 2 ? -c : c);
      }
      mat[row][k] = values[N - row];
    }
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t piv = col;
      while (mat[piv][col] == 0) ++piv;
      std::swap(mat[piv], mat[col]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == col || mat[r][col] == 0) continue;
        cpp_rational f = mat[r][col] / mat[col][col];
        for (std::size_t c = col; c <= k; ++c) mat[r][c] -= f * mat[col][c];
      }
    }
    std::vector<cpp_rational> e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = mat[i][k] / mat[i][i];
    auto eval = [&](std::int64_t nn) {
      cpp_rational s = 0;
      for (std::size_t i = 0; i <= d; ++i) {
        cpp_rational c(binom(nn + static_cast<std::int64_t>(d - i), static_cast<std::int64_t>(d - i)));
        s += (i % 2 ? -c : c) * e[i];
      }
      return s;
    };
    // Require two earlier points on the same polynomial before accepting.
    bool fits = N >= k + 1 && eval(static_cast<std::int64_t>(N - k)) == values[N - k] &&
                eval(static_cast<std::int64_t>(N - k - 1)) == values[N - k - 1];
    if (fits) {
      std::vector<std::int64_t> out;
      for (const auto& v : e) {
        if (denominator(v) != 1) throw std::logic_error("non-integral Hilbert coefficient");
        out.push_back(static_cast<std::int64_t>(numerator(v)));
      }
      return out;
    }
    if (values.size() > 60) throw std::runtime_error("Hilbert polynomial not reached");
    extend();
  }
}

MonomialIdeal fromIdeal(const Ideal& l) {
  const auto& ctx = l.context();
  if (!ctx->relations().empty()) throw std::invalid_argument("oracle needs a polynomial ring");
  std::vector<Exponents> gens;
  for (const auto& g : l.basis().generators()) {
    if (!g.isMonomial()) throw std::invalid_argument("not a monomial ideal: " + g.toString());
    Exponents e(ctx->numVars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.leading().mono.exps[i];
    gens.push_back(e);
  }
  return MonomialIdeal(ctx->numVars(), gens);
}

Ideal toIdeal(const ContextPtr& ctx, const MonomialIdeal& m) {
  if (m.numVars() != ctx->numVars()) throw ContextError("variable count mismatch");
  std::vector<Polynomial> gens;
  for (const auto& g : m.generators()) gens.push_back(Polynomial::monomial(ctx->ring(), Monomial::fromExponents(g)));
  return Ideal(ctx, gens);
}

}  // namespace jh::oracle
