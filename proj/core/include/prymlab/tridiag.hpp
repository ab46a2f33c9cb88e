#pragma once

#include <set>
#include <vector>

#include "prymlab/poly.hpp"

namespace prymlab {

// x*Id - L with the two h-dependent corners removed: a tridiagonal band with
// polynomial diagonal, constant off-diagonals. Indices are 1-based, mod n.
template <class R>
struct TridiagSpec {
  std::vector<UPoly<R>> diag;  // n entries, x - b_i
  std::vector<R> super;        // n-1 entries, entry (i, i+1) = -a_i
  std::vector<R> sub;          // n-1 entries, entry (i+1, i) = -1

  int size() const { return static_cast<int>(diag.size()); }

  // x - b_i on the diagonal, -a_i above, -1 below.
  static TridiagSpec from_lax(const std::vector<R>& a, const std::vector<R>& b) {
    TridiagSpec t;
    int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i) t.diag.push_back(UPoly<R>::linear_root(b[i]));
    for (int i = 0; i + 1 < n; ++i) {
      t.super.push_back(R(-a[i]));
      t.sub.push_back(R(-1));
    }
    return t;
  }

  // Continuant of the consecutive block first..last (1-based, inclusive).
  UPoly<R> block_det(int first, int last) const {
    UPoly<R> prev = UPoly<R>::constant(R(1));
    if (last < first) return prev;
    UPoly<R> cur = diag[first - 1];
    for (int k = first + 1; k <= last; ++k) {
      R off = super[k - 2] * sub[k - 2];
      UPoly<R> next = diag[k - 1] * cur - off * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  // Delta_{removed}: determinant of the minor with the rows and columns in
  // `removed` deleted. The band has no corners, so the remaining indices split
  // into linear blocks and the determinant is the product of their continuants.
  // Indices are reduced mod n into 1..n, so {n, n+1} means {n, 1}.
  UPoly<R> minor_det(const std::vector<int>& removed) const {
    int n = size();
    std::set<int> gone;
    for (int i : removed) {
      int j = ((i - 1) % n + n) % n + 1;
      if (!gone.insert(j).second) throw InputError("minor_det: repeated index");
    }
    UPoly<R> result = UPoly<R>::constant(R(1));
    int start = 1;
    for (int i = 1; i <= n + 1; ++i) {
      if (i == n + 1 || gone.count(i)) {
        if (i > start) result = result * block_det(start, i - 1);
        start = i + 1;
      }
    }
    return result;
  }
};

// Division-free determinant by Laplace expansion along rows, memoized over
// the set of used columns. O(2^n n) ring operations; fine for n <= 12 or so.
template <class T>
T laplace_det(const std::vector<std::vector<T>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return T(1);
  std::vector<T> memo(size_t(1) << n, T(0));
  std::vector<char> known(size_t(1) << n, 0);
  // det of rows [popcount(mask) .. n-1] against columns not in mask
  auto rec = [&](auto&& self, unsigned mask, int row) -> T {
    if (row == n) return T(1);
    if (known[mask]) return memo[mask];
    T acc(0);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (!is_zero(m[row][c])) {
        T sub = self(self, mask | (1u << c), row + 1);
        if (sign > 0)
          acc += m[row][c] * sub;
        else
          acc -= m[row][c] * sub;
      }
      sign = -sign;
    }
    known[mask] = 1;
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, 0u, 0);
}

}  // namespace prymlab
