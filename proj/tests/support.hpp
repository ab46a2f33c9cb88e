#pragma once

#include <doctest.h>

#include <sstream>

#include "prymlab/poly.hpp"
#include "prymlab/verify.hpp"

namespace prymlab {

inline doctest::String toString(const Rational& q) { return to_string(q).c_str(); }
inline doctest::String toString(const UPoly<Rational>& p) { return to_string(p).c_str(); }

}  // namespace prymlab

namespace testing {

using prymlab::Rational;
using Poly = prymlab::UPoly<Rational>;

inline Poly P(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

inline Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace testing
