// The line-oriented input language:
//
//   ring char=32003 vars=x,y
//   mod x^3-x^2*y          (optional, repeatable; defines the relations Q)
//   ideal x*y^2            (exactly once)
//
// '#' starts a comment. Polynomials are signed sums of products of
// IDENT[^INT] and integer literals, with '*' between factors.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jhilbert/core.hpp"

namespace jh {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string detail_;
};

struct ProblemSpec {
  RingPtr ring;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> ideal;

  bool operator==(const ProblemSpec& o) const;
};

/// Throws ParseError. `charOverride`, when nonzero, replaces the declared characteristic.
ProblemSpec parseProblem(const std::string& text, std::uint32_t charOverride = 0);
/// Canonical text; parseProblem(printProblem(s)) == s.
std::string printProblem(const ProblemSpec& spec);

/// Parses one polynomial over `ring`; errors are reported on line 1.
Polynomial parsePolynomial(const RingPtr& ring, const std::string& text);

}  // namespace jh
