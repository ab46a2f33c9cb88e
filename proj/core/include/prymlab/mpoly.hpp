#pragma once

#include <map>
#include <string>
#include <vector>

#include "prymlab/rational.hpp"

namespace prymlab {

// Sparse multivariate polynomial over Rational. Only as much as the bracket
// computations need: ring operations, partial derivatives, substitution.
// Variables are plain indices; exponent vectors carry no trailing zeros.
class MPoly {
 public:
  using Monomial = std::vector<int>;

  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT: implicit on purpose, R(0)/R(1) in templates
  MPoly(const Rational& c) {            // NOLINT
    if (sgn(c) != 0) terms_[{}] = c;
  }
  static MPoly var(int i);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_term() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int total_degree() const;
  // Highest variable index occurring plus one.
  int num_vars() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly derivative(int var) const;

  // Substitutes values[i] for variable i (variables beyond the vector are left alone).
  template <class R>
  R evaluate(const std::vector<R>& values) const;
  Rational eval(const std::vector<Rational>& values) const;
  MPoly compose(const std::vector<MPoly>& values) const;
  // Variable i -> sign[i] * variable i
  MPoly rescale(const std::vector<int>& sign) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

template <>
inline MPoly from_rational<MPoly>(const Rational& q) { return MPoly(q); }

template <class R>
R MPoly::evaluate(const std::vector<R>& values) const {
  R acc(0);
  for (const auto& [mono, c] : terms_) {
    R t = from_rational<R>(c);
    for (size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (i >= values.size()) {
        throw std::out_of_range("MPoly::evaluate: missing value for variable " + std::to_string(i));
      }
      for (int e = 0; e < mono[i]; ++e) t = t * values[i];
    }
    acc += t;
  }
  return acc;
}

}  // namespace prymlab
