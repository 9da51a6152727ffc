#include "linf/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace linf {

namespace {

struct ExprParser {
  const std::string &s;
  const std::vector<std::string> &names;
  size_t pos = 0;

  ExprParser(const std::string &text, const std::vector<std::string> &n) : s(text), names(n) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw std::runtime_error("polynomial expression, offset " + std::to_string(pos) + ": " + msg);
  }

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  int nvars() const { return static_cast<int>(names.size()); }

  Polynomial parseSum() {
    Polynomial acc = parseProduct();
    for (;;) {
      if (eat('+')) acc += parseProduct();
      else if (eat('-')) acc -= parseProduct();
      else return acc;
    }
  }

  Polynomial parseProduct() {
    Polynomial acc = parsePower();
    for (;;) {
      skipWs();
      if (eat('*')) { acc *= parsePower(); continue; }
      // implicit product before '(' or an identifier
      if (pos < s.size() && (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
        acc *= parsePower();
        continue;
      }
      return acc;
    }
  }

  Polynomial parsePower() {
    Polynomial base = parseAtom();
    skipWs();
    if (eat('^')) {
      skipWs();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected integer exponent");
      return base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }

  Polynomial parseAtom() {
    skipWs();
    if (pos >= s.size()) fail("unexpected end of expression");
    if (eat('(')) {
      Polynomial inner = parseSum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (eat('-')) return -parseAtom();
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      return Polynomial::constant(nvars(), Rational::fromString(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string id = s.substr(start, pos - start);
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == id) return Polynomial::variable(nvars(), static_cast<int>(i));
      fail("unknown coordinate '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Polynomial Polynomial::parse(const std::string &text, const std::vector<std::string> &names) {
  ExprParser p(text, names);
  Polynomial out = p.parseSum();
  p.skipWs();
  if (p.pos != text.size())
    throw std::runtime_error("polynomial expression: trailing input at offset " +
                             std::to_string(p.pos));
  return out;
}

std::string Polynomial::str(const std::vector<std::string> &names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto &[e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out += "*" + names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

} // namespace linf
