#include "pfsm/parse.hpp"

#include <cctype>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

bool is_dyadic(const Rational& x) {
  Integer d = x.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  bool saw_decimal() const { return saw_decimal_; }
  bool saw_non_dyadic() const { return saw_non_dyadic_; }

  // Polynomial in one variable; coefficients exact.
  QPoly poly() {
    QPoly acc;
    std::string var;
    skip();
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sgn_term = 1;
      if (peek() == '+' || peek() == '-') {
        sgn_term = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      skip();
      Rational coeff = 1;
      bool has_coeff = false;
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
        coeff = number_literal();
        has_coeff = true;
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          Rational den = number_literal();
          if (sgn(den) == 0) fail("zero denominator");
          coeff /= den;
        }
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        } else {
          acc += QPoly::constant(Rational(sgn_term * coeff));
          continue;
        }
      }
      std::string name = identifier();
      if (name.empty()) fail(has_coeff ? "expected variable after '*'" : "expected term");
      if (var.empty()) var = name;
      if (name != var) fail("polynomial mixes variables '" + var + "' and '" + name + "'");
      unsigned long power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        Rational e = number_literal();
        if (e.get_den() != 1 || sgn(e) < 0 || e > 64) fail("bad exponent");
        power = e.get_num().get_ui();
      }
      acc += QPoly::monomial(Rational(sgn_term * coeff), power);
    }
    return acc;
  }

  std::size_t pos() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse '" + std::string(s_) + "': " + msg);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational number_literal() {
    std::size_t start = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    bool decimal = false;
    int frac = 0;
    if (peek() == '.') {
      decimal = true;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += s_[pos_++];
        ++frac;
      }
    }
    long exponent = 0;
    if ((peek() == 'e' || peek() == 'E') && !digits.empty()) {
      std::size_t save = pos_;
      ++pos_;
      int es = 1;
      if (peek() == '+' || peek() == '-') es = s_[pos_++] == '-' ? -1 : 1;
      std::string ed;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ed += s_[pos_++];
      if (ed.empty() || ed.size() > 6) {
        pos_ = save;
      } else {
        decimal = true;
        exponent = es * std::stol(ed);
      }
    }
    if (digits.empty()) {
      pos_ = start;
      fail("expected number");
    }
    Rational value{Integer(digits, 10)};
    long shift = exponent - frac;
    Integer ten = 1;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0)
      value /= Rational(ten);
    else
      value *= Rational(ten);
    if (decimal) {
      saw_decimal_ = true;
      if (!is_dyadic(value)) saw_non_dyadic_ = true;
    }
    return value;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      skip();
      if (peek() == '+') {
        ++pos_;
        v = v + term();
      } else if (peek() == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        v = v * unary();
      } else if (peek() == '/') {
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Scalar primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Scalar(number_literal());
    std::string name = identifier();
    if (name == "sqrt") {
      expect('(');
      Scalar arg = expr();
      expect(')');
      if (!arg.is_rational()) fail("sqrt takes a rational argument");
      if (sgn(arg.rational()) < 0) fail("sqrt of a negative number");
      return Scalar::sqrt(arg.rational());
    }
    if (name == "root") return root();
    if (name.empty()) fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    fail("unknown name '" + name + "'");
  }

  // root(poly; [lo,hi])
  Scalar root() {
    expect('(');
    std::size_t close = s_.find(';', pos_);
    if (close == std::string_view::npos) fail("expected ';' in root(...)");
    QPoly m = Parser(s_.substr(pos_, close - pos_)).poly_checked();
    pos_ = close + 1;
    expect('[');
    Rational lo = signed_rational();
    expect(',');
    Rational hi = signed_rational();
    expect(']');
    expect(')');
    if (lo > hi) fail("empty interval");
    if (m.degree() < 1) fail("root of a constant polynomial");
    if (!(gcd(m, m.derivative()).degree() == 0)) fail("root polynomial must be squarefree");
    int inside = SturmSequence(m).count_roots(lo, hi) + (sign_at(m, lo) == 0 ? 1 : 0);
    if (inside != 1) fail("interval must contain exactly one root");
    AlgebraicReal given{primitive(m), lo, hi};
    if (sign_at(m, lo) == 0) return Scalar(lo);
    if (sign_at(m, hi) == 0) return Scalar(hi);
    for (const auto& r : isolate_real_roots(m, default_isolation_width()))
      if (compare(r, given) == 0) return Scalar::from_root(r);
    fail("root not found");
  }

  Rational signed_rational() {
    skip();
    int s = 1;
    if (peek() == '-') {
      s = -1;
      ++pos_;
    }
    skip();
    Rational v = number_literal();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      Rational d = number_literal();
      if (sgn(d) == 0) fail("zero denominator");
      v /= d;
    }
    return s * v;
  }

 public:
  QPoly poly_checked() {
    QPoly p = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' in polynomial");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  bool saw_decimal_ = false;
  bool saw_non_dyadic_ = false;
};

}  // namespace

Scalar parse_scalar(std::string_view text, NumberMode mode) {
  Parser p(text);
  Scalar v;
  try {
    v = p.parse_all();
  } catch (const DomainError& e) {
    throw ParseError("cannot parse '" + std::string(text) + "': " + e.what());
  }
  switch (mode) {
    case NumberMode::Float:
      return v.to_float();
    case NumberMode::Exact:
      if (p.saw_non_dyadic())
        throw ParseError("cannot parse '" + std::string(text) + "': non-dyadic decimal is not exact; write it as p/q");
      return v;
    case NumberMode::Auto:
      return p.saw_decimal() ? v.to_float() : v;
  }
  return v;
}

QPoly parse_qpoly(std::string_view text) { return Parser(text).poly_checked(); }

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> w;
  for (const auto& tok : split_top_level(text)) {
    std::string t;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "0")
      w.push_back(0);
    else if (t == "1")
      w.push_back(1);
    else
      throw ParseError("word entries must be 0 or 1, got '" + tok + "'");
  }
  return w;
}

}  // namespace pfsm
