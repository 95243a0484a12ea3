#include "dcsos/parser.hpp"

#include <cctype>
#include <sstream>

#include "dcsos/errors.hpp"

namespace dcsos {

namespace {

constexpr unsigned kMaxExponent = 1u << 20;

class Parser {
 public:
  Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected " + what);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return text_.substr(start, pos_ - start);
  }

  unsigned nat(const std::string& what) {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      fail(what + " must be a nonnegative integer literal");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(what + " must be a nonnegative integer literal");
    std::string d = digits();
    if (d.size() > 7) fail(what + " is too large");
    unsigned long v = std::stoul(d);
    if (v > kMaxExponent) fail(what + " is too large");
    return static_cast<unsigned>(v);
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      if (accept('*')) {
        p = p * factor();
      } else if (peek() == '/') {
        fail("division of expressions is not supported");
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    bool negate = accept('-');
    Polynomial p = atom();
    if (accept('^')) {
      unsigned e = nat("exponent");
      p = pow(p, e);
    }
    return negate ? -p : p;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')', "')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      unsigned idx = nat("variable index");
      if (idx == 0) throw ParseError("variable indices start at x1", at);
      if (static_cast<int>(idx) > nvars_)
        throw ParseError("unknown variable x" + std::to_string(idx) + " (nvars = " +
                             std::to_string(nvars_) + ")",
                         at);
      return Polynomial::variable(nvars_, static_cast<int>(idx) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        std::string den = digits();
        Rational d = Rational::from_string(den);
        if (d.is_zero()) throw ParseError("denominator must be positive", at);
        return Polynomial::constant(nvars_, Rational::from_string(num) / d);
      }
      return Polynomial::constant(nvars_, Rational::from_string(num));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  int nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_body(const Exponent& a, FormatStyle style) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] == 0) continue;
    if (!first && style == FormatStyle::plain) out << "*";
    first = false;
    if (style == FormatStyle::plain) {
      out << "x" << (i + 1);
      if (a[i] > 1) out << "^" << a[i];
    } else {
      out << "x_{" << (i + 1) << "}";
      if (a[i] > 1) out << "^{" << a[i] << "}";
    }
  }
  return out.str();
}

std::string coeff_body(const Rational& c, FormatStyle style) {
  Rational a = c.abs();
  if (style == FormatStyle::plain) return a.str();
  if (a.is_integer()) return a.str();
  return "\\frac{" + a.numerator_str() + "}{" + a.denominator_str() + "}";
}

}  // namespace

Polynomial parse(const std::string& text, int nvars) {
  return Parser(text, nvars).run();
}

int max_variable_index(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      unsigned long v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000000)
        v = v * 10 + static_cast<unsigned long>(text[j++] - '0');
      best = std::max(best, static_cast<int>(v));
    }
  }
  return best;
}

std::string format(const Polynomial& p, FormatStyle style) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono = monomial_body(a, style);
    std::string coeff = coeff_body(c, style);
    if (mono.empty()) {
      out << coeff;
    } else if (c.abs().is_one()) {
      out << mono;
    } else {
      out << coeff << (style == FormatStyle::plain ? "*" : " ") << mono;
    }
  }
  return out.str();
}

std::string format(const Monomial& m, int nvars, FormatStyle style) {
  return format(Polynomial::monomial(nvars, m.coeff, m.exponent), style);
}

}  // namespace dcsos
