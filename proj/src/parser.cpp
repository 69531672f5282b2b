#include "nc/parser.hpp"

#include <algorithm>
#include <cctype>

namespace nc {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      // Word boundary: next char must not extend the identifier.
      size_t e = pos + w.size();
      if (e >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[e])))) {
        pos = e;
        return true;
      }
    }
    return false;
  }
  std::int64_t nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected a number", pos);
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 40)) throw ParseError("number too large", pos);
      ++pos;
    }
    return v;
  }
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : lx_(text), names_(names) {
    // Longer names first so z12-style names would win over z1 (not used now,
    // but keeps lookup unambiguous).
    order_.resize(names.size());
    for (size_t i = 0; i < names.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](size_t a, size_t b) {
      return names_[a].size() > names_[b].size();
    });
  }

  MixedPolynomial run() {
    MixedPolynomial f = expr();
    lx_.skip_ws();
    if (lx_.pos != lx_.s.size()) throw ParseError("trailing input", lx_.pos);
    return f;
  }

 private:
  Lexer lx_;
  const std::vector<std::string>& names_;
  std::vector<size_t> order_;

  size_t n() const { return names_.size(); }

  MixedPolynomial expr() {
    MixedPolynomial acc = term();
    for (;;) {
      if (lx_.eat('+')) {
        acc = acc + term();
      } else if (lx_.eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MixedPolynomial term() {
    MixedPolynomial acc = unary();
    while (lx_.eat('*')) acc = acc * unary();
    return acc;
  }

  MixedPolynomial unary() {
    if (lx_.eat('-')) return -unary();
    return factor();
  }

  MixedPolynomial factor() {
    MixedPolynomial base = primary();
    if (lx_.eat('^')) return base.pow(lx_.nat());
    return base;
  }

  MixedPolynomial primary() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.expect('(');
      MixedPolynomial f = expr();
      lx_.expect(')');
      return f;
    }
    if (c == '|') {
      lx_.expect('|');
      MixedPolynomial f = expr();
      lx_.expect('|');
      size_t at = lx_.pos;
      lx_.expect('^');
      std::int64_t k = lx_.nat();
      if (k % 2 != 0) throw ParseError("modulus power must be even", at);
      return (f * f.conj()).pow(k / 2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (lx_.eat_word("conj")) {
      lx_.expect('(');
      MixedPolynomial f = expr();
      lx_.expect(')');
      return f.conj();
    }
    if (lx_.eat_word("Re")) {
      lx_.expect('(');
      MixedPolynomial f = expr();
      lx_.expect(')');
      return (f + f.conj()).scaled(GaussianRational(Rational(1, 2)));
    }
    if (lx_.eat_word("Im")) {
      lx_.expect('(');
      MixedPolynomial f = expr();
      lx_.expect(')');
      return (f - f.conj()).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    }
    if (lx_.eat_word("i"))
      return MixedPolynomial::constant(n(), GaussianRational::unit_im());
    // Variables, longest name first.
    for (size_t oi : order_) {
      if (lx_.eat_word(names_[oi]))
        return MixedPolynomial::monomial(n(), unit(n(), oi), Exponents(n(), 0),
                                         GaussianRational(1));
    }
    throw ParseError("unknown variable or token", lx_.pos);
  }

  MixedPolynomial rational_literal() {
    std::int64_t num = lx_.nat();
    if (lx_.eat('/')) {
      size_t at = lx_.pos;
      std::int64_t den = lx_.nat();
      if (den == 0) throw ParseError("zero denominator", at);
      return MixedPolynomial::constant(n(), GaussianRational(Rational(num, den)));
    }
    return MixedPolynomial::constant(n(), GaussianRational(Rational(num)));
  }
};

}  // namespace

MixedPolynomial parse_mixed(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

MixedPolynomial parse_mixed(const std::string& text, size_t nvars) {
  bool uses_w = Lexer(text).s.find('w') != std::string::npos;
  std::vector<std::string> names;
  size_t zcount = uses_w ? nvars - 1 : nvars;
  for (size_t j = 0; j < zcount; ++j) names.push_back("z" + std::to_string(j + 1));
  if (uses_w) names.push_back("w");
  return parse_mixed(text, names);
}

std::vector<std::string> detect_variables(const std::string& text) {
  size_t maxz = 0;
  bool uses_w = false;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'z' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      maxz = std::max<size_t>(maxz, text[i + 1] - '0');
    if (text[i] == 'w') uses_w = true;
  }
  std::vector<std::string> names;
  for (size_t j = 0; j < maxz; ++j) names.push_back("z" + std::to_string(j + 1));
  if (uses_w) names.push_back("w");
  if (names.empty()) names.push_back("z1");
  return names;
}

std::vector<Poly1> parse_curve_literal(const std::string& text) {
  // Split "( c1 , c2 , ... )" at depth-1 commas.
  size_t open = text.find('(');
  size_t close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("curve literal must be parenthesized", 0);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = open + 1; i < close; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::vector<Poly1> comps;
  for (const auto& p : parts) {
    MixedPolynomial f = parse_mixed(p, {"t"});
    Poly1 c;
    for (const auto& [k, v] : f.terms()) {
      if (!is_zero(k.beta)) throw ParseError("curve components must be holomorphic in t", 0);
      if (is_zero(k.alpha)) throw ParseError("curve components must vanish at t = 0", 0);
      c[k.alpha[0]] = v;
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

std::string poly1_str(const Poly1& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : p) {
    if (!first) s += " + ";
    first = false;
    if (!(c == GaussianRational(1))) s += "(" + c.str() + ")*";
    s += "t";
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s;
}

}  // namespace nc
