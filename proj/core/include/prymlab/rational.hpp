#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace prymlab {

// mpq_class keeps itself canonical as long as we never touch the raw
// numerator/denominator without calling canonicalize().
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double d) { return d == 0.0; }

namespace detail {
// Unqualified call so that overloads declared after a template (MPoly,
// series) are still found by ADL at instantiation.
template <class T>
bool zero(const T& t) {
  return is_zero(t);
}
}  // namespace detail

// Conversion of exact constants into whatever ring a template runs over.
template <class R>
R from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }

template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }

}  // namespace prymlab
