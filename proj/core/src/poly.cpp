#include <sstream>

#include "prymlab/poly.hpp"

namespace prymlab {

UPoly<Rational> parse_poly(std::string_view text) { return UPoly<Rational>(parse_rational_list(text)); }

std::string to_string(const UPoly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) s += ",";
    s += to_string(p.coef(i));
  }
  return s;
}

std::string pretty(const UPoly<Rational>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coef(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace prymlab
