#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "prymlab/painleve.hpp"
#include "prymlab/poly.hpp"
#include "prymlab/series.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

// K = sum a_i, L = sum a_i a_{i+2} for a KM point with n = 5.
struct SpectralData5 {
  Rational K, L;
};
SpectralData5 spectral_data_5(const TodaPointQ& p);
// x^5 - K x^3 + L x: the polynomial with h + 1/h = P(x) on the spectral curve.
UPoly<Rational> spectral_poly_5(const Rational& K, const Rational& L);

// Curves v^2 = rhs(u) obtained from y^2 = f(x) with f even, u = x^2.
struct QuotientCurves {
  UPoly<Rational> sigma, tau;
};
// n odd: sigma is v^2 = g(u) and tau is v^2 = u g(u), where f(x) = g(x^2); n even swaps them.
QuotientCurves quotient_curves(const UPoly<Rational>& f, int n);
// f(x) = (x^5 - k x^3 + l x)^2 - 4
UPoly<Rational> fiber_curve_5(const Rational& k, const Rational& l);

class ProjectivePoint9 {
 public:
  explicit ProjectivePoint9(std::array<Rational, 9> c);
  const std::array<Rational, 9>& coords() const { return c_; }
  // first nonzero coordinate scaled to 1
  ProjectivePoint9 normalized() const;
  std::string to_string() const;
  friend bool operator==(const ProjectivePoint9& a, const ProjectivePoint9& b);

 private:
  std::array<Rational, 9> c_;
};

template <class R>
std::array<R, 9> z_functions(const std::vector<R>& a) {
  if (a.size() != 5) throw InputError("the embedding is defined for n = 5");
  const R &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4];
  R z1 = a1 * a2;
  R z2 = z1 * a4;
  return {R(1),
          z1,
          z2,
          z1 * (a1 + a5),
          z2 * (a3 + a4 + a5),
          z2 * (a1 - a2),
          z2 * ((a3 + a4) * a1 - (a4 + a5) * a2),
          z1 * z2 * a5,
          z2 * a2 * ((a4 + a5) * (a4 + a5) + a3 * a4)};
}

ProjectivePoint9 z_embedding(const TodaPointQ& p);

// The five points p_1..p_5 (index 0..4).
std::array<ProjectivePoint9, 5> divisor_points_5(const Rational& k, const Rational& l);

// Curve Gamma_i (i = 1..5) in terms of (beta, delta) with k fixed; the
// constraint (k - delta) delta + beta + 1/(beta delta) = l is not checked here.
template <class R>
std::array<R, 9> gamma_raw(int i, const R& b, const R& d, const R& K) {
  R o(1), z(0);
  switch (i) {
    case 1:
      return {z, z, z, o, z, R(2) * d, R(2) * d * d, b * d, -(d * d * d)};
    case 2:
      return {b * d * d, -(b * b * d * d), z, -(b * b * d * d * d), b * d, b * d, b * d * d, z, o - b * d * d * d};
    case 3:
      return {o, z, b * d, z, b * d * (K - d), b * d * d, -(b * d * (b + d * d - K * d)), z, b * b * d * (K - d)};
    case 4:
      return {b * b * d, z,          b * d, -(b * d), b * d * (K - d), -(b * d * d), o + b * d * d * (d - K), -d,
              -(b * d * d * (b - (d - K) * (d - K)))};
    case 5:
      return {b * d * d, -d, z, d * (d - K), b * d, -(b * d), -(b * d * d), -o, o};
  }
  throw InputError("curve index must be 1..5");
}

bool satisfies_constraint_5(const Rational& beta, const Rational& delta, const Rational& k, const Rational& l);
// Point of Gamma_i at (beta, delta); throws InputError if the constraint fails.
ProjectivePoint9 gamma_param(int i, const Rational& beta, const Rational& delta, const Rational& k,
                             const Rational& l);

// Local parameters around the three points of each curve:
//   'a': delta = 1/u,  beta = u^{-2}(1 + O(u))
//   'b': delta = 1/u,  beta = u^3 (1 + O(u))
//   'c': beta = 1/u,   delta = -u^2 (1 + O(u))
// solved from the constraint as series in u, `order` terms past the leading one.
std::pair<LaurentSeries, LaurentSeries> boundary_chart(char chart, const Rational& k, const Rational& l,
                                                       int order = 6);
// Lowest-order part of a 9-vector of series; throws InvariantViolation when
// the truncation leaves nothing to read.
ProjectivePoint9 leading_point(const std::array<LaurentSeries, 9>& z);
ProjectivePoint9 chart_limit(int curve, char chart, const Rational& k, const Rational& l, int order = 6);
// inc[i][j]: some boundary chart of Gamma_{i+1} tends to p_{j+1}.
std::array<std::array<bool, 5>, 5> incidence_matrix(const Rational& k, const Rational& l, int order = 6);

// The principal balance {s+1, s+2} and its free slots filled from (beta, delta)
// through the constraint system 2 alpha + delta = k, gamma beta delta = -1.
Balance principal_balance_5(int s);
struct PrincipalParams {
  Rational alpha, beta, gamma, delta, k, l;
};
PrincipalParams principal_params(const Rational& beta, const Rational& delta, const Rational& k);
std::map<std::string, Rational> principal_slots(int s, const PrincipalParams& p);
// t -> 0 limit of the embedding along a Laurent solution.
ProjectivePoint9 balance_to_divisor(const std::vector<LaurentSeries>& a);

}  // namespace prymlab
