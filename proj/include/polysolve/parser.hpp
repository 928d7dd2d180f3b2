#ifndef POLYSOLVE_PARSER_HPP
#define POLYSOLVE_PARSER_HPP

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "polysolve/polynomial.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := coefficient | variable ['^' exponent]
//          coefficient := integer ['/' integer]
// Whitespace is insignificant.
class PolynomialParser {
 public:
  PolynomialParser(std::string text, std::vector<std::string> vars)
      : text_(std::move(text)), vars_(std::move(vars)) {}

  PolyQ parse() {
    PolyQ result(static_cast<int>(vars_.size()));
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (get() == '-');
    result = result + parse_term(negative);
    skip_ws();
    while (!at_end()) {
      char c = get();
      if (c != '+' && c != '-') throw ParseError(pos_ - 1, "expected '+' or '-'");
      result = result + parse_term(c == '-');
      skip_ws();
    }
    return result;
  }

 private:
  PolyQ parse_term(bool negative) {
    int n = static_cast<int>(vars_.size());
    Rational coeff = negative ? Rational(-1) : Rational(1);
    Monomial mono(n);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_rational();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        int v = parse_variable();
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          exp = parse_uint("exponent");
          if (exp <= 0) throw ParseError(pos_, "exponent must be positive");
        }
        mono[v] += exp;
      } else if (first) {
        throw ParseError(pos_, "expected coefficient or variable");
      } else {
        break;
      }
      first = false;
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
    }
    if (first) throw ParseError(pos_, "empty term");
    return PolyQ::monomial(static_cast<int>(vars_.size()), mono, coeff);
  }

  Rational parse_rational() {
    long num = parse_uint("integer");
    long den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      den = parse_uint("denominator");
      if (den == 0) throw ParseError(pos_, "zero denominator");
    }
    return rat(num, den);
  }

  long parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (pos_ == start) throw ParseError(pos_, std::string("expected ") + what);
    return std::stol(text_.substr(start, pos_ - start));
  }

  int parse_variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      get();
    std::string name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError(start, "unknown variable '" + name + "'");
    return static_cast<int>(it - vars_.begin());
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

inline PolyQ parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return PolynomialParser(text, vars).parse();
}

// Canonical term order for printed output: grlex descending, with the
// declared variable list fixing precedence. Stable across runs so
// golden-file comparisons are byte-exact.
inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

inline std::string format_polynomial(const PolyQ& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  MonomialOrder order = MonomialOrder::grlex(p.nvars());
  std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return order.greater(a.first, b.first);
  });
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Rational c = ts[i].second;
    bool neg = sgn(c) < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational ac = abs(c);
    std::string mono = format_monomial(ts[i].first, vars);
    if (mono.empty()) {
      out += to_string(ac);
    } else if (ac == 1) {
      out += mono;
    } else {
      out += to_string(ac) + "*" + mono;
    }
  }
  return out;
}

// System file format:
//   vars: x, y, z
//   <one polynomial per non-empty, non-# line>
struct SystemFile {
  std::vector<std::string> vars;
  SystemQ system;
};

inline SystemFile parse_system_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vars;
  bool have_vars = false;
  std::vector<PolyQ> polys;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (!have_vars) {
      if (trimmed.rfind("vars:", 0) != 0)
        throw ParseError(lineno, "first line must declare variables as 'vars: x, y'");
      std::istringstream vs(trimmed.substr(5));
      std::string name;
      while (std::getline(vs, name, ',')) {
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (!name.empty()) vars.push_back(name);
      }
      if (vars.empty()) throw ParseError(lineno, "no variables declared");
      have_vars = true;
      continue;
    }
    polys.push_back(parse_polynomial(trimmed, vars));
  }
  if (!have_vars) throw ParseError(lineno, "missing 'vars:' declaration");
  if (polys.empty()) throw ParseError(lineno, "no polynomials in system file");
  return SystemFile{vars, SystemQ(static_cast<int>(vars.size()), std::move(polys))};
}

inline std::string format_system(const SystemQ& F, const std::vector<std::string>& vars) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i];
  }
  out += "\n";
  for (const auto& f : F.polys) out += format_polynomial(f, vars) + "\n";
  return out;
}

}  // namespace polysolve

#endif
