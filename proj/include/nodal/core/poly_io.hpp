#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nodal/core/mpoly.hpp"

namespace nodal {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text form `c*x1^2*y3 + ...`, terms in descending grlex order. Coefficients
/// are exact integers or fractions `a/b`.
inline std::string to_text(const QPoly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw std::invalid_argument("variable list does not match arity");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << vars[i];
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  QPoly parse() {
    QPoly f(RationalField{}, vars_.size());
    skip();
    if (done()) throw ParseError("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' at offset " + std::to_string(pos_));
      }
      first = false;
      parse_term(f, sign);
      skip();
    }
    return f;
  }

 private:
  void parse_term(QPoly& f, int sign) {
    Rational coeff = sign;
    Exponent e(vars_.size(), 0);
    bool any = false;
    for (;;) {
      skip();
      if (done()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
        std::size_t idx = index_of(name);
        unsigned power = 1;
        skip();
        if (!done() && peek() == '^') {
          get();
          skip();
          power = static_cast<unsigned>(parse_uint());
        }
        e[idx] = static_cast<std::uint16_t>(e[idx] + power);
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'");
      }
      any = true;
      skip();
      if (done() || peek() != '*') break;
      get();
    }
    if (!any) throw ParseError("empty term");
    f.add_term(e, coeff);
  }

  Rational parse_number() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    Integer num(digits);
    skip();
    if (!done() && peek() == '/') {
      get();
      skip();
      std::string den;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) den += get();
      if (den.empty()) throw ParseError("missing denominator");
      return make_rational(num, Integer(den));
    }
    return Rational(num);
  }

  unsigned long parse_uint() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) throw ParseError("expected exponent");
    return std::stoul(digits);
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw ParseError("unknown variable '" + name + "'");
  }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline QPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

/// {vars:[...], terms:[{exp:[...], num:"..", den:".."}]}; terms in ascending grlex order.
inline nlohmann::json to_json(const QPoly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw std::invalid_argument("variable list does not match arity");
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", vars}, {"terms", terms}};
}

struct NamedPoly {
  std::vector<std::string> vars;
  QPoly poly;
};

inline NamedPoly poly_from_json(const nlohmann::json& j) {
  NamedPoly out;
  out.vars = j.at("vars").get<std::vector<std::string>>();
  out.poly = QPoly(RationalField{}, out.vars.size());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    if (e.size() != out.vars.size()) throw ParseError("exponent length does not match vars");
    out.poly.add_term(e, make_rational(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>())));
  }
  return out;
}

}  // namespace nodal
