#pragma once

#include <climits>
#include <string>
#include <vector>

#include "prymlab/rational.hpp"

namespace prymlab {

// Truncated Laurent series sum_{e >= lo} c_e t^e, known exactly through t^prec.
// Exact polynomials (constants, in particular) carry prec == kExact so that
// mixing them with truncated series never loses precision.
class LaurentSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  LaurentSeries() = default;
  LaurentSeries(int c) : LaurentSeries(Rational(c)) {}  // NOLINT
  LaurentSeries(const Rational& c) {                    // NOLINT
    if (sgn(c) != 0) c_ = {c};
  }
  // Coefficients c[0..] for t^lo, t^{lo+1}, ..., known through t^prec.
  LaurentSeries(int lo, std::vector<Rational> c, int prec);
  static LaurentSeries monomial(const Rational& c, int e, int prec = kExact);

  int lo() const { return lo_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ == kExact; }
  // Smallest exponent with a nonzero coefficient; prec()+1 if none is known.
  int valuation() const;
  // Order of the pole at t=0, 0 if none.
  int pole_order() const { return std::max(0, -valuation()); }
  Rational coef(int e) const;
  bool is_zero() const;  // no nonzero coefficient among the known ones

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this += -o; }
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  LaurentSeries derivative() const;
  LaurentSeries inverse() const;
  LaurentSeries truncated(int prec) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  int lo_ = 0;
  std::vector<Rational> c_;
  int prec_ = kExact;
};

inline bool is_zero(const LaurentSeries& s) { return s.is_zero(); }

template <>
inline LaurentSeries from_rational<LaurentSeries>(const Rational& q) { return LaurentSeries(q); }

}  // namespace prymlab
