#pragma once

#include <vector>

#include "prymlab/poly.hpp"

namespace prymlab {

enum class Parity { Even = 0, Odd = 1 };

// Dense bivariate polynomial in (x, x'); c[i][j] is the coefficient of x^i x'^j.
template <class R>
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int nx, int ny) : c_(nx, std::vector<R>(ny, R(0))) {}

  // f(x) g(x')
  static BiPoly outer(const UPoly<R>& f, const UPoly<R>& g) {
    BiPoly r(f.degree() + 1, g.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
      for (int j = 0; j <= g.degree(); ++j) r.c_[i][j] = f.coef(i) * g.coef(j);
    return r;
  }
  static BiPoly in_x(const UPoly<R>& f) { return outer(f, UPoly<R>::constant(R(1))); }
  static BiPoly in_xp(const UPoly<R>& g) { return outer(UPoly<R>::constant(R(1)), g); }
  // q(x + x')
  static BiPoly of_sum(const UPoly<R>& q) {
    int d = q.degree();
    BiPoly r(d + 1, d + 1);
    for (int k = 0; k <= d; ++k) {
      long long binom = 1;
      for (int i = 0; i <= k; ++i) {
        r.c_[i][k - i] += R(static_cast<int>(binom)) * q.coef(k);
        binom = binom * (k - i) / (i + 1);
      }
    }
    return r;
  }

  int rows() const { return static_cast<int>(c_.size()); }
  int cols() const { return c_.empty() ? 0 : static_cast<int>(c_[0].size()); }
  R coef(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows() || j >= cols()) return R(0);
    return c_[i][j];
  }
  void add_to(int i, int j, const R& a) {
    grow(i + 1, j + 1);
    c_[i][j] += a;
  }
  bool is_zero() const {
    for (const auto& row : c_)
      for (const auto& a : row)
        if (!detail::zero(a)) return false;
    return true;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return (a - b).is_zero(); }
  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& row : r.c_)
      for (auto& a : row) a = -a;
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    grow(o.rows(), o.cols());
    for (int i = 0; i < o.rows(); ++i)
      for (int j = 0; j < o.cols(); ++j) c_[i][j] += o.c_[i][j];
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.rows() == 0 || b.rows() == 0) return {};
    BiPoly r(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (detail::zero(a.c_[i][j])) continue;
        for (int k = 0; k < b.rows(); ++k)
          for (int l = 0; l < b.cols(); ++l) r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
      }
    return r;
  }
  friend BiPoly operator*(const R& s, BiPoly a) {
    for (auto& row : a.c_)
      for (auto& e : row) e = s * e;
    return a;
  }

  // F(x', x)
  BiPoly swapped() const {
    BiPoly r(cols(), rows());
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) r.c_[j][i] = c_[i][j];
    return r;
  }
  // F(sx * x, sy * x') for signs sx, sy in {+1,-1}
  BiPoly reflected(int sx, int sy) const {
    BiPoly r = *this;
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) {
        bool neg = (sx < 0 && i % 2) != (sy < 0 && j % 2);
        if (neg) r.c_[i][j] = -r.c_[i][j];
      }
    return r;
  }

  // Exact quotient by (x - x') (sign = -1) or (x + x') (sign = +1).
  // Throws if the division is not exact.
  BiPoly divide_linear(int sign) const {
    // Treat F as a polynomial in x with coefficients in R[x'], divide by x - s x'.
    // Synthetic division: q_{i-1} = F_i + s x' q_i, top-down.
    int nx = rows(), ny = cols();
    if (nx == 0) return {};
    BiPoly q(nx > 1 ? nx - 1 : 1, ny + nx);
    std::vector<R> acc(ny + nx, R(0));
    R s(-sign);  // x - s x' ; sign=-1 -> s=1
    for (int i = nx - 1; i >= 0; --i) {
      std::vector<R> next(ny + nx, R(0));
      for (int j = 0; j < ny; ++j) next[j] = c_[i][j];
      for (int j = 0; j + 1 < ny + nx; ++j)
        if (!detail::zero(acc[j])) next[j + 1] += s * acc[j];
      acc = std::move(next);
      if (i > 0) q.c_[i - 1] = acc;
    }
    for (const auto& a : acc)
      if (!detail::zero(a))
        throw InvariantViolation("exact division", "bivariate quotient has nonzero remainder");
    q.shrink();
    return q;
  }
  BiPoly divide_diff_squares() const { return divide_linear(-1).divide_linear(+1); }

  void shrink() {
    int nx = rows(), ny = cols();
    while (nx > 0) {
      bool z = true;
      for (int j = 0; j < ny; ++j) z = z && detail::zero(c_[nx - 1][j]);
      if (!z) break;
      --nx;
    }
    while (ny > 0) {
      bool z = true;
      for (int i = 0; i < nx; ++i) z = z && detail::zero(c_[i][ny - 1]);
      if (!z) break;
      --ny;
    }
    c_.resize(nx);
    for (auto& row : c_) row.resize(ny);
    if (ny == 0) c_.clear();
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    BiPoly<S> r(rows(), cols());
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) r.add_to(i, j, f(c_[i][j]));
    return r;
  }

 private:
  void grow(int nx, int ny) {
    int ox = rows(), oy = cols();
    int tx = std::max(nx, ox), ty = std::max(ny, oy);
    if (tx == ox && ty == oy) return;
    c_.resize(tx);
    for (auto& row : c_) row.resize(ty, R(0));
  }
  std::vector<std::vector<R>> c_;
};

// (p(x) phi(x') - p(x') phi(x)) / (x - x'), expanded monomial by monomial.
template <class R>
BiPoly<R> divided_difference(const UPoly<R>& p, const UPoly<R>& phi) {
  BiPoly<R> r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p.coef(i))) continue;
    for (int j = 0; j <= phi.degree(); ++j) {
      if (i == j || is_zero(phi.coef(j))) continue;
      R c = p.coef(i) * phi.coef(j);
      // (x^i x'^j - x'^i x^j)/(x - x')
      int hi = std::max(i, j), lo = std::min(i, j);
      if (i < j) c = -c;
      // x^lo x'^lo (x^{hi-lo} - x'^{hi-lo})/(x-x') = x^lo x'^lo sum_k x^k x'^{hi-lo-1-k}
      for (int k = 0; k < hi - lo; ++k) r.add_to(lo + k, lo + hi - lo - 1 - k, c);
    }
  }
  return r;
}

// Keeps the monomials x^i x'^j with i of parity px and j of parity py.
template <class R>
BiPoly<R> parity_project(const BiPoly<R>& F, Parity px, Parity py) {
  BiPoly<R> r;
  for (int i = 0; i < F.rows(); ++i)
    for (int j = 0; j < F.cols(); ++j)
      if (i % 2 == static_cast<int>(px) && j % 2 == static_cast<int>(py) && !is_zero(F.coef(i, j)))
        r.add_to(i, j, F.coef(i, j));
  return r;
}

}  // namespace prymlab
