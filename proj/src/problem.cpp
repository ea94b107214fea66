#include "jhilbert/problem.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace jh {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error((kind == Kind::Syntax ? "syntax error" : "error") + std::string(" at line ") +
                         std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  enum Type { Ident, Int, Sym, End } type;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, int lineNo) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, line.substr(i, j - i), col});
      i = j;
    } else if (std::string_view("+-*^,=").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), col});
      ++i;
    } else {
      throw ParseError(ParseError::Kind::Syntax, lineNo, col,
                       std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> toks, int lineNo) : toks_(std::move(toks)), line_(lineNo) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool atEnd() const { return peek().type == Token::End; }
  bool isSym(char c) const { return peek().type == Token::Sym && peek().text[0] == c; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, line_, peek().column, msg);
  }
  [[noreturn]] void failSemantic(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Semantic, line_, t.column, msg);
  }
  void expectSym(char c) {
    if (!isSym(c)) fail(std::string("expected '") + c + "'");
    next();
  }
  Token expect(Token::Type type, const std::string& what) {
    if (peek().type != type) fail("expected " + what);
    return next();
  }
  void expectKeyword(const std::string& kw) {
    if (peek().type != Token::Ident || peek().text != kw) fail("expected '" + kw + "'");
    next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::uint32_t digitsModP(const std::string& digits, std::uint32_t p) {
  std::uint64_t r = 0;
  for (char ch : digits) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
  return static_cast<std::uint32_t>(r);
}

// term := factor ('*' factor)* ; factor := INT | IDENT ['^' INT]
Polynomial parseTerm(Cursor& cur, const RingPtr& ring) {
  const auto& F = ring->field();
  std::uint32_t coeff = 1;
  Monomial mono;
  for (;;) {
    const Token& t = cur.peek();
    if (t.type == Token::Int) {
      coeff = F.mul(coeff, digitsModP(cur.next().text, F.characteristic()));
    } else if (t.type == Token::Ident) {
      Token id = cur.next();
      int idx = ring->indexOf(id.text);
      if (idx < 0) cur.failSemantic(id, "unknown variable '" + id.text + "'");
      std::uint64_t power = 1;
      if (cur.isSym('^')) {
        cur.next();
        Token e = cur.expect(Token::Int, "an exponent");
        if (e.text.size() > 5 || std::stoull(e.text) > 0xFFFF)
          cur.failSemantic(e, "exponent too large");
        power = std::stoull(e.text);
      }
      std::uint64_t total = mono.exps[idx] + power;
      if (total > 0xFFFF) cur.failSemantic(id, "exponent too large");
      mono.exps[idx] = static_cast<std::uint16_t>(total);
      mono.degree += static_cast<std::uint32_t>(power);
    } else {
      cur.fail("expected a number or a variable");
    }
    if (!cur.isSym('*')) break;
    cur.next();
  }
  return Polynomial::monomial(ring, mono, coeff);
}

// poly := ['+'|'-'] term (('+'|'-') term)*
Polynomial parsePoly(Cursor& cur, const RingPtr& ring) {
  Polynomial acc(ring);
  bool negate = false;
  if (cur.isSym('+') || cur.isSym('-')) negate = cur.next().text == "-";
  for (;;) {
    Polynomial t = parseTerm(cur, ring);
    acc = negate ? acc - t : acc + t;
    if (!(cur.isSym('+') || cur.isSym('-'))) break;
    negate = cur.next().text == "-";
  }
  return acc;
}

std::vector<Polynomial> parsePolyList(Cursor& cur, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.push_back(parsePoly(cur, ring));
  while (cur.isSym(',')) {
    cur.next();
    out.push_back(parsePoly(cur, ring));
  }
  if (!cur.atEnd()) cur.fail("expected ',' or end of line");
  return out;
}

RingPtr parseRingLine(Cursor& cur, std::uint32_t charOverride) {
  cur.expectKeyword("ring");
  cur.expectKeyword("char");
  cur.expectSym('=');
  Token c = cur.expect(Token::Int, "an integer characteristic");
  std::uint64_t p = c.text.size() > 10 ? 0 : std::stoull(c.text);
  if (charOverride) p = charOverride;
  if (p < 3 || p >= (1ull << 31) || !isPrime(p))
    cur.failSemantic(c, "characteristic must be an odd prime below 2^31");
  cur.expectKeyword("vars");
  cur.expectSym('=');
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (;;) {
    Token id = cur.expect(Token::Ident, "a variable name");
    if (id.text.starts_with('_')) cur.failSemantic(id, "variable names may not start with '_'");
    if (!seen.insert(id.text).second) cur.failSemantic(id, "duplicate variable '" + id.text + "'");
    names.push_back(id.text);
    if (!cur.isSym(',')) break;
    cur.next();
  }
  if (!cur.atEnd()) cur.fail("expected ',' or end of line");
  if (names.size() + 1 > kMaxVars) cur.failSemantic(c, "too many variables");
  return std::make_shared<const PolyRing>(std::move(names), static_cast<std::uint32_t>(p));
}

}  // namespace

bool ProblemSpec::operator==(const ProblemSpec& o) const {
  if (!ring || !o.ring) return ring == o.ring;
  return ring->names() == o.ring->names() &&
         ring->field().characteristic() == o.ring->field().characteristic() &&
         relations == o.relations && ideal == o.ideal;
}

ProblemSpec parseProblem(const std::string& text, std::uint32_t charOverride) {
  ProblemSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool sawIdeal = false;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor cur(tokenize(line, lineNo), lineNo);
    if (cur.atEnd()) continue;
    const Token& head = cur.peek();
    if (head.type != Token::Ident) cur.fail("expected 'ring', 'mod' or 'ideal'");
    if (head.text == "ring") {
      if (spec.ring) cur.fail("duplicate 'ring' line");
      spec.ring = parseRingLine(cur, charOverride);
    } else if (head.text == "mod" || head.text == "ideal") {
      if (!spec.ring) cur.fail("'" + head.text + "' before the 'ring' line");
      bool isIdeal = head.text == "ideal";
      cur.next();
      if (isIdeal && sawIdeal) throw ParseError(ParseError::Kind::Syntax, lineNo, 1, "duplicate 'ideal' line");
      auto polys = parsePolyList(cur, spec.ring);
      auto& dest = isIdeal ? spec.ideal : spec.relations;
      for (auto& f : polys) {
        if (!isIdeal) {
          for (const auto& t : f.terms())
            if (t.mono.isOne())
              throw ParseError(ParseError::Kind::Semantic, lineNo, 5,
                               "relation " + f.toString() + " does not vanish at the origin");
        }
        if (!f.isZero()) dest.push_back(std::move(f));
      }
      if (isIdeal) {
        sawIdeal = true;
        if (spec.ideal.empty())
          throw ParseError(ParseError::Kind::Semantic, lineNo, 1, "the ideal is zero");
      }
    } else {
      cur.fail("expected 'ring', 'mod' or 'ideal'");
    }
  }
  if (!spec.ring) throw ParseError(ParseError::Kind::Syntax, std::max(lineNo, 1), 1, "missing 'ring' line");
  if (!sawIdeal) throw ParseError(ParseError::Kind::Syntax, std::max(lineNo, 1), 1, "missing 'ideal' line");
  return spec;
}

std::string printProblem(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "ring char=" << spec.ring->field().characteristic() << " vars=";
  const auto& names = spec.ring->names();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << '\n';
  auto list = [&](const char* kw, const std::vector<Polynomial>& ps) {
    os << kw << ' ';
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << ps[i].toString();
    os << '\n';
  };
  if (!spec.relations.empty()) list("mod", spec.relations);
  list("ideal", spec.ideal);
  return os.str();
}

Polynomial parsePolynomial(const RingPtr& ring, const std::string& text) {
  Cursor cur(tokenize(text, 1), 1);
  Polynomial f = parsePoly(cur, ring);
  if (!cur.atEnd()) cur.fail("unexpected trailing input");
  return f;
}

}  // namespace jh
