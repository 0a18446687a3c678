#include "vgr/poly_io.hpp"

#include <cctype>
#include <cstdlib>

namespace vgr {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw ParseError("invalid variable name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ParseError("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw ParseError("duplicate variable name '" + n + "'");
  }
}

const std::string& VariableSet::name(Var v) const {
  if (v >= names_.size()) throw Error("variable index " + std::to_string(v) + " has no name");
  return names_[v];
}

std::optional<Var> VariableSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.entries()) {
    if (!s.empty()) s += " * ";
    s += vars.name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const Polynomial& p, const VariableSet& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    Rational a = abs(c);
    if (m.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + " * ";
      s += to_string(m, vars);
    }
  }
  return s;
}

std::string to_string(const RationalFunction& f, const VariableSet& vars) {
  std::string num = to_string(f.num(), vars);
  if (f.den() == Polynomial(1)) return num;
  if (f.num().term_count() > 1) num = "(" + num + ")";
  std::string den = to_string(f.den(), vars);
  if (f.den().term_count() > 1 || f.den().leading_monomial().entries().size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = accept('-') ? -term() : term();
    while (true) {
      if (accept('+'))
        r = r + term();
      else if (accept('-'))
        r = r - term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    while (true) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  long exponent() {
    skip_space();
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    long e = std::strtol(digits.c_str(), nullptr, 10);
    return negative ? -e : e;
  }

  RationalFunction powered(RationalFunction base) {
    if (!accept('^')) return base;
    long e = exponent();
    if (e < 0 && base.is_zero()) fail("negative power of zero");
    return base.pow(e);
  }

  RationalFunction factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return powered(r);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return powered(RationalFunction(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto v = vars_.index(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return powered(RationalFunction(Polynomial::variable(*v)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const VariableSet& vars) {
  return Parser(text, vars).parse();
}

Polynomial parse_polynomial(std::string_view text, const VariableSet& vars) {
  RationalFunction f = parse_rational_function(text, vars);
  if (!f.is_polynomial()) throw ParseError("'" + std::string(text) + "' is not a polynomial");
  return f.num().scaled(1 / f.den().leading_coefficient());
}

}  // namespace vgr
