#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prymlab/error.hpp"
#include "prymlab/rational.hpp"

namespace prymlab {

// Dense univariate polynomial, coefficients in ascending degree.
// R is any commutative ring with is_zero(R) and construction from int:
// Rational, double, MPoly, LaurentSeries.
template <class R>
class UPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UPoly() = default;
  explicit UPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  UPoly(std::initializer_list<R> c) : c_(c) { trim(); }
  // Constant polynomial; lets UPoly itself serve as a ring in templates.
  explicit UPoly(int c) : c_{R(c)} { trim(); }

  static UPoly constant(const R& a) { return UPoly(std::vector<R>{a}); }
  static UPoly x() { return UPoly(std::vector<R>{R(0), R(1)}); }
  static UPoly monomial(const R& a, int d) {
    std::vector<R> c(d + 1, R(0));
    c[d] = a;
    return UPoly(std::move(c));
  }
  // x - a
  static UPoly linear_root(const R& a) { return UPoly(std::vector<R>{R(-a), R(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coef(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R(0); }
  R lead() const { return c_.empty() ? R(0) : c_.back(); }
  void set_coef(int i, const R& a) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, R(0));
    c_[i] = a;
    trim();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator*(const R& s, const UPoly& p) {
    UPoly r = p;
    for (auto& a : r.c_) a = s * a;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  R operator()(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(-x)
  UPoly reflect() const {
    UPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }
  // (even, odd) with p = even + odd
  std::pair<UPoly, UPoly> parity_split() const {
    std::vector<R> e(c_.size(), R(0)), o(c_.size(), R(0));
    for (size_t i = 0; i < c_.size(); ++i) (i % 2 ? o : e)[i] = c_[i];
    return {UPoly(std::move(e)), UPoly(std::move(o))};
  }
  bool has_parity(int parity) const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (static_cast<int>(i % 2) != parity && !detail::zero(c_[i])) return false;
    return true;
  }
  UPoly derivative() const {
    std::vector<R> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(R(static_cast<int>(i)) * c_[i]);
    return UPoly(std::move(r));
  }
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(f(a));
    return UPoly<S>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
  return p.is_zero();
}

// Division with remainder over a field (Rational, double).
template <class R>
std::pair<UPoly<R>, UPoly<R>> divrem(const UPoly<R>& p, const UPoly<R>& q) {
  if (q.is_zero()) throw InputError("polynomial division by zero");
  std::vector<R> r = p.coeffs();
  int dq = q.degree();
  int dp = p.degree();
  if (dp < dq) return {UPoly<R>{}, p};
  std::vector<R> quo(dp - dq + 1, R(0));
  R inv = R(1) / q.lead();
  for (int k = dp - dq; k >= 0; --k) {
    R c = r[k + dq] * inv;
    quo[k] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= dq; ++j) r[k + j] -= c * q.coeffs()[j];
  }
  r.resize(dq > 0 ? dq : 0);
  return {UPoly<R>(std::move(quo)), UPoly<R>(std::move(r))};
}

// Synthetic division by x - y; works over any ring. Returns (quotient, p(y)).
template <class R>
std::pair<UPoly<R>, R> div_linear(const UPoly<R>& p, const R& y) {
  if (p.is_zero()) return {UPoly<R>{}, R(0)};
  const auto& c = p.coeffs();
  int d = p.degree();
  std::vector<R> q(d > 0 ? d : 0, R(0));
  R acc(0);
  for (int i = d; i >= 0; --i) {
    acc = acc * y + c[i];
    if (i > 0) q[i - 1] = acc;
  }
  return {UPoly<R>(std::move(q)), acc};
}

// p(x) = g(x^2) for even p; returns g.
template <class R>
UPoly<R> even_to_square_variable(const UPoly<R>& p) {
  if (!p.has_parity(0)) throw InputError("polynomial is not even");
  std::vector<R> g;
  for (int i = 0; i <= p.degree(); i += 2) g.push_back(p.coef(i));
  return UPoly<R>(std::move(g));
}

// g(x) -> g(x^2)
template <class R>
UPoly<R> substitute_square(const UPoly<R>& g) {
  std::vector<R> c(g.is_zero() ? 0 : 2 * g.degree() + 1, R(0));
  for (int i = 0; i <= g.degree(); ++i) c[2 * i] = g.coef(i);
  return UPoly<R>(std::move(c));
}

// Unique (p, r) with p monic of degree n, deg r < n and H = p^2 + r.
// Solved top-down; only needs division by 2 so works over MPoly too.
template <class R>
std::pair<UPoly<R>, UPoly<R>> pr_split(const UPoly<R>& H, int n) {
  if (n < 0 || H.degree() != 2 * n || !(H.lead() == R(1)))
    throw InputError("pr_split needs a monic polynomial of degree " + std::to_string(2 * n));
  const R half = from_rational<R>(Rational(1, 2));
  std::vector<R> p(n + 1, R(0));
  p[n] = R(1);
  for (int k = 1; k <= n; ++k) {
    // coefficient of x^{2n-k} in p^2 not involving p_{n-k}
    R rest(0);
    for (int i = n - k + 1; i < n; ++i) {
      int j = 2 * n - k - i;
      if (j > n - k && j <= n) rest += p[i] * p[j];
    }
    p[n - k] = half * (H.coef(2 * n - k) - rest);
  }
  UPoly<R> P(std::move(p));
  UPoly<R> r = H - P * P;
  if (r.degree() >= n) throw InvariantViolation("pr_split", "remainder degree not below n");
  return {P, r};
}

UPoly<Rational> parse_poly(std::string_view text);
std::string to_string(const UPoly<Rational>& p);
// Human readable, e.g. "x^2 - 1"; used in reports only.
std::string pretty(const UPoly<Rational>& p, char var = 'x');

}  // namespace prymlab
