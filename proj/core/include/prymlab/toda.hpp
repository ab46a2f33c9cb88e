#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "prymlab/bracket.hpp"
#include "prymlab/mpoly.hpp"
#include "prymlab/tridiag.hpp"

namespace prymlab {

template <class R>
struct TodaPoint {
  std::vector<R> a, b;
  int n() const { return static_cast<int>(a.size()); }
};
using TodaPointQ = TodaPoint<Rational>;

// Throws InputError unless sizes agree, n >= 2 and prod a_i = 1.
void validate(const TodaPointQ& p);
TodaPointQ km_point(const std::vector<Rational>& a);
bool is_km(const TodaPointQ& p);

// ((a_1..a_n),(b_1..b_n)) -> ((a_2..a_1),(b_2..b_1))
template <class R>
TodaPoint<R> shift(const TodaPoint<R>& p, int times = 1) {
  int n = p.n();
  TodaPoint<R> q = p;
  for (int i = 0; i < n; ++i) {
    int j = (((i + times) % n) + n) % n;
    q.a[i] = p.a[j];
    q.b[i] = p.b[j];
  }
  return q;
}

// Symbolic points: a_i is variable i-1, b_i is variable n+i-1 (b = 0 for KM).
TodaPoint<MPoly> toda_symbolic(int n);
TodaPoint<MPoly> km_symbolic(int n);
std::vector<std::string> toda_names(int n);
std::vector<std::string> km_names(int n);

// Laurent polynomial in the spectral parameter h.
template <class C>
class HLaurent {
 public:
  HLaurent() = default;
  explicit HLaurent(int c) {
    if (c != 0) t_[0] = C(c);
  }
  static HLaurent term(const C& c, int e) {
    HLaurent r;
    if (!is_zero(c)) r.t_[e] = c;
    return r;
  }
  const std::map<int, C>& terms() const { return t_; }
  C coef(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? C(0) : it->second;
  }
  bool is_zero() const { return t_.empty(); }
  bool h_free() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }

  HLaurent& operator+=(const HLaurent& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  HLaurent& operator-=(const HLaurent& o) {
    for (const auto& [e, c] : o.t_) add(e, C(-c));
    return *this;
  }
  friend HLaurent operator+(HLaurent a, const HLaurent& b) { return a += b; }
  friend HLaurent operator-(HLaurent a, const HLaurent& b) { return a -= b; }
  friend HLaurent operator*(const HLaurent& a, const HLaurent& b) {
    HLaurent r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add(ea + eb, C(ca * cb));
    return r;
  }
  friend HLaurent operator*(const C& s, const HLaurent& a) {
    HLaurent r;
    for (const auto& [e, c] : a.t_) r.add(e, C(s * c));
    return r;
  }
  void add(int e, const C& c) {
    if (detail::zero(c)) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (detail::zero(it->second)) t_.erase(it);
    }
  }

 private:
  std::map<int, C> t_;
};

template <class C>
bool is_zero(const HLaurent<C>& a) {
  return a.is_zero();
}

template <class C>
using HMatrix = std::vector<std::vector<HLaurent<C>>>;

template <class C>
HMatrix<C> hzero(int n) {
  return HMatrix<C>(n, std::vector<HLaurent<C>>(n));
}

template <class C>
HMatrix<C> operator*(const HMatrix<C>& A, const HMatrix<C>& B) {
  int n = static_cast<int>(A.size());
  HMatrix<C> P = hzero<C>(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!B[k][j].is_zero()) P[i][j] += A[i][k] * B[k][j];
    }
  return P;
}

template <class C>
HMatrix<C> commutator(const HMatrix<C>& A, const HMatrix<C>& B) {
  HMatrix<C> P = A * B, Q = B * A;
  for (size_t i = 0; i < P.size(); ++i)
    for (size_t j = 0; j < P.size(); ++j) P[i][j] -= Q[i][j];
  return P;
}

template <class C>
HLaurent<C> trace(const HMatrix<C>& A) {
  HLaurent<C> t;
  for (size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return t;
}

// (sum A_j h^j)_+ = sum_{j>0} A_j h^j + strictly upper part of A_0
template <class C>
HMatrix<C> plus_part(const HMatrix<C>& A) {
  int n = static_cast<int>(A.size());
  HMatrix<C> P = hzero<C>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [e, c] : A[i][j].terms())
        if (e > 0 || (e == 0 && j > i)) P[i][j].add(e, c);
  return P;
}

// b on the diagonal, a_i above, 1 below, h^{-1} at (1,n) and h a_n at (n,1).
template <class R>
HMatrix<R> lax_matrix(const TodaPoint<R>& p) {
  int n = p.n();
  HMatrix<R> L = hzero<R>(n);
  for (int i = 0; i < n; ++i) L[i][i].add(0, p.b[i]);
  for (int i = 0; i + 1 < n; ++i) {
    L[i][i + 1].add(0, p.a[i]);
    L[i + 1][i].add(0, R(1));
  }
  L[0][n - 1].add(-1, R(1));
  L[n - 1][0].add(1, p.a[n - 1]);
  return L;
}

// tr(L^{i+1})/(i+1) for i = 0..n-1, with h + 1/h removed from the last one.
// Entries are exact h-Laurent polynomials; see toda_integrals for the h-free values.
template <class R>
std::vector<HLaurent<R>> toda_integrals_full(const TodaPoint<R>& p) {
  int n = p.n();
  HMatrix<R> L = lax_matrix(p), P = L;
  std::vector<HLaurent<R>> I;
  for (int i = 0; i < n; ++i) {
    if (i > 0) P = P * L;
    HLaurent<R> t = from_rational<R>(Rational(1, i + 1)) * trace(P);
    if (i == n - 1) {
      t.add(1, R(-1));
      t.add(-1, R(-1));
    }
    I.push_back(t);
  }
  return I;
}

// The h^0 parts; on prod a = 1 these are the integrals themselves.
template <class R>
std::vector<R> toda_integrals_h0(const TodaPoint<R>& p) {
  std::vector<R> out;
  for (const auto& t : toda_integrals_full(p)) out.push_back(t.coef(0));
  return out;
}

// Exact integrals at a point of T_n; throws if any h-dependence survives.
std::vector<Rational> toda_integrals(const TodaPointQ& p);

template <class R>
TridiagSpec<R> tridiag_of(const TodaPoint<R>& p) {
  return TridiagSpec<R>::from_lax(p.a, p.b);
}

// K(x) = 2 (Delta - a_n Delta_{1,n}), so that det(x - L(h)) = -h - 1/h + K(x)/2.
template <class R>
UPoly<R> char_poly(const TodaPoint<R>& p) {
  auto T = tridiag_of(p);
  int n = p.n();
  UPoly<R> K = T.minor_det({}) - p.a[n - 1] * T.minor_det({1, n});
  return R(2) * K;
}

// Expands det(x Id - L(h)) as an h-Laurent polynomial with polynomial
// coefficients and checks it equals -h - 1/h + K(x)/2. Returns K.
UPoly<Rational> char_poly_checked(const TodaPointQ& p);
HLaurent<UPoly<Rational>> spectral_determinant(const TodaPointQ& p);

// X_i L = [L, (L^i)_+], read back into (da, db). Throws if the commutator
// leaves the shape of a Lax operator; in floating point, entries at round-off
// level outside the shape are dropped.
template <class R>
TodaPoint<R> toda_flow(const TodaPoint<R>& p, int i) {
  int n = p.n();
  if (i < 1 || i > n - 1) throw InputError("hierarchy index must be in 1.." + std::to_string(n - 1));
  HMatrix<R> L = lax_matrix(p), P = L;
  for (int k = 1; k < i; ++k) P = P * L;
  HMatrix<R> X = commutator(L, plus_part(P));
  TodaPoint<R> d;
  d.a.assign(n, R(0));
  d.b.assign(n, R(0));
  [[maybe_unused]] double shape_tol = 0;
  if constexpr (std::is_floating_point_v<R>) {
    for (const auto& row : X)
      for (const auto& x : row)
        for (const auto& [e, v] : x.terms()) shape_tol = std::max(shape_tol, std::abs(v));
    shape_tol = 1e-10 * (1 + shape_tol);
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (const auto& [e, v] : X[r][c].terms()) {
        if (e == 0 && r == c)
          d.b[r] = v;
        else if (e == 0 && c == r + 1)
          d.a[r] = v;
        else if (e == 1 && r == n - 1 && c == 0)
          d.a[n - 1] = v;
        else {
          if constexpr (std::is_floating_point_v<R>) {
            if (std::abs(v) <= shape_tol) continue;  // cancellation lost to round-off
          }
          throw InvariantViolation("Lax shape", "toda_flow produced entry (" + std::to_string(r + 1) + "," +
                                                    std::to_string(c + 1) + ") h^" + std::to_string(e));
        }
      }
  return d;
}

// da_i = a_i (a_{i-1} - a_{i+1})
template <class R>
std::vector<R> km_field(const std::vector<R>& a) {
  int n = static_cast<int>(a.size());
  std::vector<R> d(n);
  for (int i = 0; i < n; ++i) d[i] = a[i] * (a[(i + n - 1) % n] - a[(i + 1) % n]);
  return d;
}

// (a_1 a_3 ... a_{n-1}, a_2 a_4 ... a_n) for even n.
template <class R>
std::pair<R, R> km_even_split(const std::vector<R>& a) {
  int n = static_cast<int>(a.size());
  if (n % 2) throw InputError("km_even_split needs n even");
  R odd(1), even(1);
  for (int i = 0; i < n; ++i) (i % 2 == 0 ? odd : even) *= a[i];
  return {odd, even};
}

enum class TodaBracket { Linear, Quadratic, KM };
enum class Pair { AA, AB, BB };

// {a_i, a_j}, {a_i, b_j} or {b_i, b_j} (1-based, mod n) at a point.
Rational toda_bracket(TodaBracket kind, int i, int j, Pair which, const TodaPointQ& p);
// Symbolic table on (a_1..a_n, b_1..b_n), or (a_1..a_n) for KM.
BracketTable toda_table(TodaBracket kind, int n);
// phi_1 {,}^x + phi_0 {,}^1 for deg phi <= 1.
BracketTable toda_pencil(int n, const UPoly<Rational>& phi);

}  // namespace prymlab
