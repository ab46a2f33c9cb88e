#pragma once

#include <map>
#include <string>
#include <vector>

#include "prymlab/rational.hpp"
#include "prymlab/series.hpp"

namespace prymlab {

// Subsets of Z/n are sorted vectors of 1-based indices.
using Subset = std::vector<int>;

// Subsets all of whose maximal cyclic runs have even length, built run by
// run (not by filtering). Sorted by size, then lexicographically.
std::vector<Subset> sigma_enum(int n);
bool in_sigma(int n, const Subset& A);

struct Balance {
  int n = 0;
  Subset A;
  std::vector<Rational> alpha;  // leading coefficients, 0 off A
  std::vector<int> r;           // r_i = alpha_{i+1} - alpha_{i-1}
  int order() const { return static_cast<int>(A.size()) / 2; }
};

// Leading coefficients for A: each run of length 2l carries (-l, 1, 1-l, 2, ..., -1, l).
Balance make_balance(int n, const Subset& A);
// One balance per A in Sigma_n, except A = Z/n (n even), which has no solution.
std::vector<Balance> indicial_solutions(int n);
// -alpha_i = alpha_i (alpha_{i-1} - alpha_{i+1}) for all i, and the r_i relation.
bool satisfies_indicial(const Balance& b);

struct KowalevskiBlock {
  char kind;                 // 'C' (a run of A) or 'D' (a gap)
  std::vector<int> indices;  // 1-based
  std::vector<int> spectrum;
};

struct KowalevskiReport {
  int n = 0;
  Subset A;
  std::vector<Rational> alpha;
  std::vector<int> r;
  std::vector<std::vector<Rational>> matrix;
  std::vector<KowalevskiBlock> blocks;
  std::vector<int> spectrum;  // sorted ascending, with multiplicity
  int nonneg_count = 0;
  double float_max_deviation = 0;  // vs. a dense floating eigensolver
};

std::vector<std::vector<Rational>> kowalevski_matrix(const Balance& b);
// Structural spectrum from the block decomposition; every structural claim
// (block shapes, the triangularizing basis of the C blocks, the D diagonals)
// is checked exactly and a failure raises InvariantViolation.
KowalevskiReport kowalevski(int n, const Subset& A);
// The C-block lemma for a single run of length 2l: eigenvalues of Lambda in
// the basis f_j = [1^{j-1}, ..., l^{j-1}]. Returns the diagonal.
std::vector<int> c_block_lambda_diagonal(int l);

// Name of the free coefficient a_i^{(k)}: "a<i>_<k>".
std::string slot_name(int i, int k);
// Slots left free by the recursion (M - k)a^{(k)} = -R^{(k)} for k = 1..N.
std::vector<std::string> free_slots(const Balance& b, int N);

// a_i(t) = sum_{k=0}^{N} a_i^{(k)} t^{k-1}, known through t^{N-1}.
// Every free slot must be supplied, and nothing else.
std::vector<LaurentSeries> laurent_balance(const Balance& b, const std::map<std::string, Rational>& params, int N);
// da_i/dt - a_i (a_{i-1} - a_{i+1}) for series a
std::vector<LaurentSeries> km_residual(const std::vector<LaurentSeries>& a);
// Coefficients of K(x) (b = 0) along series a; on a solution they are constant in t.
std::vector<LaurentSeries> km_char_coefficients(const std::vector<LaurentSeries>& a);

}  // namespace prymlab
