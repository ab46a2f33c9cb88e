#include "prymlab/painleve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "prymlab/error.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

std::vector<bool> membership(int n, const Subset& A) {
  std::vector<bool> in(n, false);
  for (int i : A) {
    if (i < 1 || i > n) throw InputError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (in[i - 1]) throw InputError("repeated index " + std::to_string(i));
    in[i - 1] = true;
  }
  return in;
}

struct Run {
  int start;  // 0-based
  int len;
};

// Maximal cyclic runs of `want` (true: runs of A, false: gaps). Requires at
// least one position with the opposite value.
std::vector<Run> cyclic_runs(const std::vector<bool>& in, bool want) {
  int n = static_cast<int>(in.size());
  int first_other = -1;
  for (int i = 0; i < n; ++i)
    if (in[i] != want) {
      first_other = i;
      break;
    }
  std::vector<Run> runs;
  if (first_other < 0) {
    runs.push_back({0, n});
    return runs;
  }
  for (int k = 1; k <= n; ++k) {
    int i = (first_other + k) % n;
    if (in[i] != want) continue;
    int prev = (i + n - 1) % n;
    if (in[prev] == want) continue;
    int len = 0;
    while (len < n && in[(i + len) % n] == want) ++len;
    runs.push_back({i, len});
  }
  return runs;
}

void gen(int n, int g0, int pos, Subset& cur, std::vector<Subset>& out) {
  if (pos > n) {
    if ((g0 - 1) % 2 == 0) out.push_back(cur);
    return;
  }
  gen(n, g0, pos + 1, cur, out);
  for (int len = 1; pos + len - 1 <= n; ++len) {
    int end = pos + len - 1;
    size_t mark = cur.size();
    for (int i = pos; i <= end; ++i) cur.push_back(i);
    if (end == n) {
      // joins the prefix run 1..g0-1 across the wrap
      if ((len + g0 - 1) % 2 == 0) out.push_back(cur);
    } else if (len % 2 == 0) {
      gen(n, g0, end + 2, cur, out);
    }
    cur.resize(mark);
  }
}

// Reduced row echelon form in place; returns pivot columns (only among the first `cols`).
std::vector<int> rref(QMatrix& m, int cols) {
  int rows = static_cast<int>(m.size());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& e : m[r]) e *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

QMatrix inverse(QMatrix m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = 1;
  }
  auto piv = rref(m, n);
  if (static_cast<int>(piv.size()) != n) throw InvariantViolation("C-block lemma", "basis f_j is singular");
  QMatrix r(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = m[i][n + j];
  return r;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  QMatrix r(n, std::vector<Rational>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

QMatrix lambda_matrix(int l) {
  QMatrix L(l, std::vector<Rational>(l));
  for (int r = 1; r <= l; ++r) {
    L[r - 1][l - r] = r;
    if (l - r + 1 < l) L[r - 1][l - r + 1] = 1 - r;
  }
  return L;
}

}  // namespace

bool in_sigma(int n, const Subset& A) {
  auto in = membership(n, A);
  if (static_cast<int>(A.size()) == n) return n % 2 == 0;
  for (const auto& run : cyclic_runs(in, true))
    if (run.len % 2) return false;
  return true;
}

std::vector<Subset> sigma_enum(int n) {
  if (n < 2) throw InputError("sigma_enum needs n >= 2");
  std::vector<Subset> out;
  // g0 = the first index not in A; 1..g0-1 is a prefix run that may wrap.
  for (int g0 = 1; g0 <= n; ++g0) {
    Subset cur;
    for (int i = 1; i < g0; ++i) cur.push_back(i);
    gen(n, g0, g0 + 1, cur, out);
  }
  if (n % 2 == 0) {
    Subset all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    out.push_back(all);
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Balance make_balance(int n, const Subset& A) {
  if (n < 3) throw InputError("balances need n >= 3");
  Subset sorted = A;
  std::sort(sorted.begin(), sorted.end());
  if (!in_sigma(n, sorted)) throw InputError("A is not in Sigma_" + std::to_string(n) + " (a maximal run has odd length)");
  if (static_cast<int>(sorted.size()) == n) throw InputError("A = Z/n has no Laurent solution");
  Balance b;
  b.n = n;
  b.A = sorted;
  b.alpha.assign(n, Rational(0));
  auto in = membership(n, sorted);
  if (!sorted.empty())
    for (const auto& run : cyclic_runs(in, true)) {
      int l = run.len / 2;
      for (int k = 0; k < run.len; ++k)
        b.alpha[(run.start + k) % n] = (k % 2 == 0) ? Rational(-l + k / 2) : Rational((k + 1) / 2);
    }
  for (int i = 0; i < n; ++i) {
    Rational r = b.alpha[(i + 1) % n] - b.alpha[(i + n - 1) % n];
    b.r.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return b;
}

std::vector<Balance> indicial_solutions(int n) {
  std::vector<Balance> out;
  for (const auto& A : sigma_enum(n)) {
    if (static_cast<int>(A.size()) == n) continue;
    out.push_back(make_balance(n, A));
    if (!satisfies_indicial(out.back())) throw InvariantViolation("indicial equation", "balance fails for some A");
  }
  return out;
}

bool satisfies_indicial(const Balance& b) {
  int n = b.n;
  for (int i = 0; i < n; ++i) {
    const Rational& a = b.alpha[i];
    Rational prev = b.alpha[(i + n - 1) % n], next = b.alpha[(i + 1) % n];
    if (-a != a * (prev - next)) return false;
    if (Rational(b.r[i]) != next - prev) return false;
  }
  return true;
}

QMatrix kowalevski_matrix(const Balance& b) {
  int n = b.n;
  QMatrix M(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    if (sgn(b.alpha[i]) == 0) {
      M[i][i] = 1 - b.r[i];
    } else {
      M[i][(i + n - 1) % n] += b.alpha[i];
      M[i][(i + 1) % n] -= b.alpha[i];
    }
  }
  return M;
}

std::vector<int> c_block_lambda_diagonal(int l) {
  QMatrix F(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    Rational p = 1;
    for (int j = 0; j < l; ++j) {
      F[i][j] = p;
      p *= i + 1;
    }
  }
  QMatrix T = mul(inverse(F), mul(lambda_matrix(l), F));
  std::vector<int> diag;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < i; ++j)
      if (sgn(T[i][j]) != 0) throw InvariantViolation("C-block lemma", "Lambda is not triangular in the basis f_j");
    int want = (i % 2 == 0) ? i + 1 : -(i + 1);
    if (T[i][i] != want) throw InvariantViolation("C-block lemma", "unexpected diagonal entry " + to_string(T[i][i]));
    diag.push_back(want);
  }
  return diag;
}

KowalevskiReport kowalevski(int n, const Subset& A) {
  Balance b = make_balance(n, A);
  KowalevskiReport rep;
  rep.n = n;
  rep.A = b.A;
  rep.alpha = b.alpha;
  rep.r = b.r;
  rep.matrix = kowalevski_matrix(b);
  const QMatrix& M = rep.matrix;
  auto in = membership(n, b.A);

  std::vector<int> run_of(n, -1);
  std::vector<Run> runs;
  if (!b.A.empty()) runs = cyclic_runs(in, true);
  for (size_t k = 0; k < runs.size(); ++k)
    for (int j = 0; j < runs[k].len; ++j) run_of[(runs[k].start + j) % n] = static_cast<int>(k);

  // Gap rows must be diagonal and run rows may only reach their own run or
  // gap columns: then M is block triangular with the gaps first.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || sgn(M[i][j]) == 0) continue;
      if (run_of[i] < 0) throw InvariantViolation("block structure", "gap row " + std::to_string(i + 1) + " is not diagonal");
      if (run_of[j] >= 0 && run_of[j] != run_of[i])
        throw InvariantViolation("block structure", "row " + std::to_string(i + 1) + " couples two runs");
    }

  for (const auto& run : runs) {
    int l = run.len / 2;
    // odd positions ascending, then even positions descending
    std::vector<int> order;
    for (int k = 0; k < run.len; k += 2) order.push_back((run.start + k) % n);
    for (int k = run.len - 1; k >= 1; k -= 2) order.push_back((run.start + k) % n);
    QMatrix P(run.len, std::vector<Rational>(run.len));
    for (int r = 0; r < run.len; ++r)
      for (int c = 0; c < run.len; ++c) P[r][c] = M[order[r]][order[c]];
    QMatrix L = lambda_matrix(l);
    for (int r = 0; r < run.len; ++r)
      for (int c = 0; c < run.len; ++c) {
        bool top = r < l, left = c < l;
        Rational want = 0;
        if (top && !left) want = L[c - l][r];
        if (!top && left) want = L[c][r - l];
        if (P[r][c] != want)
          throw InvariantViolation("C-block lemma", "block for the run at " + std::to_string(run.start + 1) +
                                                         " is not [[0, X], [X, 0]] with X^T = Lambda");
      }
    KowalevskiBlock blk{'C', {}, {}};
    for (int k = 0; k < run.len; ++k) blk.indices.push_back((run.start + k) % n + 1);
    for (int d : c_block_lambda_diagonal(l)) {
      blk.spectrum.push_back(d);
      blk.spectrum.push_back(-d);
    }
    std::sort(blk.spectrum.begin(), blk.spectrum.end());
    rep.blocks.push_back(blk);
  }

  if (static_cast<int>(b.A.size()) < n) {
    std::vector<Run> gaps = cyclic_runs(in, false);
    for (const auto& gap : gaps) {
      int l_prev = 0, l_next = 0;
      if (!runs.empty()) {
        l_prev = runs[run_of[(gap.start + n - 1) % n]].len / 2;
        l_next = runs[run_of[(gap.start + gap.len) % n]].len / 2;
      }
      KowalevskiBlock blk{'D', {}, {}};
      for (int k = 0; k < gap.len; ++k) {
        int i = (gap.start + k) % n;
        int want = 1 + (k == 0 ? l_prev : 0) + (k == gap.len - 1 ? l_next : 0);
        if (M[i][i] != want)
          throw InvariantViolation("D-block diagonal", "entry " + std::to_string(i + 1) + " is " + to_string(M[i][i]) +
                                                           ", expected " + std::to_string(want));
        blk.indices.push_back(i + 1);
        blk.spectrum.push_back(want);
      }
      rep.blocks.push_back(blk);
    }
  }

  for (const auto& blk : rep.blocks) rep.spectrum.insert(rep.spectrum.end(), blk.spectrum.begin(), blk.spectrum.end());
  std::sort(rep.spectrum.begin(), rep.spectrum.end());
  rep.nonneg_count = static_cast<int>(std::count_if(rep.spectrum.begin(), rep.spectrum.end(), [](int e) { return e >= 0; }));

  Eigen::MatrixXd Md(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Md(i, j) = M[i][j].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(Md, false);
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  double dev = 0;
  for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(ev[i] - std::complex<double>(rep.spectrum[i], 0.0)));
  rep.float_max_deviation = dev;
  return rep;
}

std::string slot_name(int i, int k) { return "a" + std::to_string(i) + "_" + std::to_string(k); }

std::vector<std::string> free_slots(const Balance& b, int N) {
  int n = b.n;
  QMatrix M = kowalevski_matrix(b);
  std::vector<std::string> out;
  for (int k = 1; k <= N; ++k) {
    QMatrix A = M;
    for (int i = 0; i < n; ++i) A[i][i] -= k;
    auto piv = rref(A, n);
    for (int c = 0; c < n; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) out.push_back(slot_name(c + 1, k));
  }
  return out;
}

std::vector<LaurentSeries> laurent_balance(const Balance& b, const std::map<std::string, Rational>& params, int N) {
  int n = b.n;
  if (N < 1) throw InputError("order must be >= 1");
  QMatrix M = kowalevski_matrix(b);
  // coef[k][i] = a_{i+1}^{(k)}
  std::vector<std::vector<Rational>> coef(N + 1, std::vector<Rational>(n));
  coef[0] = b.alpha;
  size_t used = 0;
  for (int k = 1; k <= N; ++k) {
    std::vector<Rational> R(n);
    for (int i = 0; i < n; ++i) {
      int im = (i + n - 1) % n, ip = (i + 1) % n;
      for (int j = 1; j < k; ++j) R[i] += coef[j][i] * (coef[k - j][im] - coef[k - j][ip]);
    }
    QMatrix A = M;
    for (int i = 0; i < n; ++i) {
      A[i][i] -= k;
      A[i].push_back(-R[i]);
    }
    auto piv = rref(A, n);
    for (size_t r = piv.size(); r < A.size(); ++r)
      if (sgn(A[r][n]) != 0)
        throw InvariantViolation("resonance", "consistency equation fails at k = " + std::to_string(k));
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int c = 0; c < n; ++c) {
      if (is_piv[c]) continue;
      auto it = params.find(slot_name(c + 1, k));
      if (it == params.end()) throw InputError("missing free parameter " + slot_name(c + 1, k));
      coef[k][c] = it->second;
      ++used;
    }
    for (size_t r = 0; r < piv.size(); ++r) {
      Rational v = A[r][n];
      for (int c = 0; c < n; ++c)
        if (!is_piv[c] && sgn(A[r][c]) != 0) v -= A[r][c] * coef[k][c];
      coef[k][piv[r]] = v;
    }
  }
  if (used != params.size()) {
    auto slots = free_slots(b, N);
    for (const auto& [name, v] : params)
      if (std::find(slots.begin(), slots.end(), name) == slots.end())
        throw InputError("unknown parameter " + name + " (not a free slot at this order)");
  }
  std::vector<LaurentSeries> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= N; ++k) c.push_back(coef[k][i]);
    out.emplace_back(-1, std::move(c), N - 1);
  }
  return out;
}

std::vector<LaurentSeries> km_residual(const std::vector<LaurentSeries>& a) {
  int n = static_cast<int>(a.size());
  std::vector<LaurentSeries> r;
  for (int i = 0; i < n; ++i) r.push_back(a[i].derivative() - a[i] * (a[(i + n - 1) % n] - a[(i + 1) % n]));
  return r;
}

std::vector<LaurentSeries> km_char_coefficients(const std::vector<LaurentSeries>& a) {
  TodaPoint<LaurentSeries> p{a, std::vector<LaurentSeries>(a.size())};
  return char_poly(p).coeffs();
}

}  // namespace prymlab
