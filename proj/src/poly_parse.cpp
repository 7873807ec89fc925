#include <cctype>
#include <stdexcept>

#include "gpi/poly.hpp"

namespace gpi {

namespace {

struct Parser {
  const std::string& text;
  const LabelMap& labels;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool starts_rational() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c));
  }

  Rat parse_rational() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a rational");
    std::string num = text.substr(start, pos - start);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator");
      num += "/" + text.substr(dstart, pos - dstart);
    }
    return rat_parse(num);
  }

  std::string parse_label_token() {
    skip_ws();
    if (pos >= text.size()) fail("expected a degree label");
    if (text[pos] == '(') {
      size_t start = pos;
      int depth = 0;
      while (pos < text.size()) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') {
          --depth;
          if (depth == 0) {
            ++pos;
            return text.substr(start, pos - start);
          }
        }
        ++pos;
      }
      fail("unterminated residue tuple");
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a degree label");
    return text.substr(start, pos - start);
  }

  GradedPoly parse_var() {
    skip_ws();
    if (peek() != 'x') fail("expected a variable");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a variable index");
    int index = std::stoi(text.substr(start, pos - start));
    if (!eat(':')) fail("expected ':' and a degree label");
    std::string label = parse_label_token();
    GroupElement deg;
    try {
      deg = labels.resolve(label);
    } catch (const std::exception& e) {
      fail(std::string("unknown degree label '") + label + "': " + e.what());
    }
    return poly_var(labels.group, index, deg);
  }

  GradedPoly parse_factor() {
    skip_ws();
    if (pos + 3 <= text.size() && text.compare(pos, 3, "ac(") == 0) {
      pos += 3;
      GradedPoly a = parse_poly_expr();
      if (!eat(',')) fail("expected ',' in ac(,)");
      GradedPoly b = parse_poly_expr();
      if (!eat(')')) fail("expected ')' closing ac(");
      return poly_anticommutator(a, b);
    }
    char c = peek();
    if (c == 'x') return parse_var();
    if (c == '[') {
      ++pos;
      std::vector<GradedPoly> args{parse_poly_expr()};
      while (eat(',')) args.push_back(parse_poly_expr());
      if (!eat(']')) fail("expected ']'");
      if (args.size() < 2) fail("commutator needs at least two arguments");
      GradedPoly acc = args[0];
      for (size_t i = 1; i < args.size(); ++i) acc = poly_commutator(acc, args[i]);
      return acc;
    }
    if (c == '(') {
      ++pos;
      GradedPoly p = parse_poly_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    fail("expected a factor");
  }

  bool starts_factor() {
    char c = peek();
    if (c == 'x' || c == '[' || c == '(') return true;
    return pos + 3 <= text.size() && text.compare(pos, 3, "ac(") == 0;
  }

  GradedPoly parse_term() {
    Rat coeff(1);
    if (starts_rational()) coeff = parse_rational();
    GradedPoly acc = poly_zero(labels.group);
    bool first = true;
    while (starts_factor()) {
      GradedPoly f = parse_factor();
      acc = first ? f : poly_mul(acc, f);
      first = false;
    }
    if (first) fail("expected at least one factor");
    return poly_scale(acc, coeff);
  }

  GradedPoly parse_poly_expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos;
      neg = true;
    }
    GradedPoly acc = parse_term();
    if (neg) acc = poly_scale(acc, Rat(-1));
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = poly_add(acc, parse_term());
      } else if (c == '-') {
        ++pos;
        acc = poly_sub(acc, parse_term());
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

GradedPoly parse_poly(const std::string& text, const LabelMap& labels) {
  {
    // The zero polynomial round-trips as the bare literal "0".
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "0") return poly_zero(labels.group);
  }
  Parser p{text, labels};
  GradedPoly out = p.parse_poly_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

std::string emit_poly(const GradedPoly& p, const LabelMap& labels) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    if (a != 1) out += rat_str(a) + " ";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += " ";
      out += "x" + std::to_string(w[i].index) + ":" + labels.label_of(w[i].deg);
    }
  }
  return out;
}

}  // namespace gpi
