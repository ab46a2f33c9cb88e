#pragma once

#include "prymlab/bracket.hpp"
#include "prymlab/mumford.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

template <class R>
struct PhiImage {
  int m = 0;
  UPoly<R> u, v, w, p;
};

// Phi_m = Phi_n o shift^m: the index m is rotated into position n and
// the minors are those of x Id - L with the h-corners removed.
//   u = Delta_n
//   v = a_{n-1} Delta_{n-1,n} - a_n Delta_{n,1}
//   w = (x-b_n)^2 Delta_n - 2 (x-b_n)(a_{n-1} Delta_{n-1,n} + a_n Delta_{n,1})
//       + 4 a_n a_{n-1} Delta_{n-1,n,1}
//   p = (x-b_n) Delta_n - a_n Delta_{n,1} - a_{n-1} Delta_{n-1,n}
template <class R>
PhiImage<R> phi(const TodaPoint<R>& pt, int m) {
  int n = pt.n();
  if (n < 3) throw InputError("Phi needs n >= 3");
  int mm = ((m % n) + n) % n;
  TodaPoint<R> q = shift(pt, mm);
  auto T = tridiag_of(q);
  const R& an = q.a[n - 1];
  const R& an1 = q.a[n - 2];
  UPoly<R> xb = UPoly<R>::linear_root(q.b[n - 1]);
  UPoly<R> d_n = T.minor_det({n});
  UPoly<R> d_n1n = T.minor_det({n - 1, n});
  UPoly<R> d_n1 = T.minor_det({n, 1});
  UPoly<R> d_n1n1 = T.minor_det({n - 1, n, 1});
  UPoly<R> s1 = an1 * d_n1n;
  UPoly<R> s2 = an * d_n1;
  PhiImage<R> img;
  img.m = mm == 0 ? n : mm;
  img.u = d_n;
  img.v = s1 - s2;
  img.w = xb * xb * d_n - R(2) * (xb * (s1 + s2)) + R(4) * (R(an * an1) * d_n1n1);
  img.p = xb * d_n - s2 - s1;
  return img;
}

// The image as a point of the even Mumford space M'_{n-1}.
Triple phi_triple(const PhiImage<Rational>& img, int n);
// KM points land in odd-Prym (n odd) or even-Prym (n even); returns that triple.
Triple phi_prym_triple(const PhiImage<Rational>& img, int n);

// Reconstructs the Toda point with Phi_n(point) = (u, v, w). Throws InputError
// ("not in image") when any separation step fails.
TodaPointQ phi_inverse(const UPoly<Rational>& u, const UPoly<Rational>& v, const UPoly<Rational>& w, int n);

// {,}q^phi on M'_{n-1} (coordinates of the even flavor with g = n-1), deg phi <= 1.
BracketTable quad_mumford_bracket(int n, const UPoly<Rational>& phi);
// Generating functions of the same bracket, for tests of the displayed identities.
Generating quad_mumford_generating(int n, const UPoly<Rational>& phi);
// Coefficients of p and r from u w + v^2 = p^2 + r, as polynomials in the coordinates of M'_{n-1}.
std::pair<UPoly<MPoly>, UPoly<MPoly>> symbolic_pr(int n);

// Components of Phi_n as polynomials in (a, b) (variables as in toda_symbolic),
// in the coordinate order of M'_{n-1}.
std::vector<MPoly> phi_components(int n);

}  // namespace prymlab
