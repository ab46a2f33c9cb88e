#include "prymlab/casefive.hpp"

#include <algorithm>

#include "prymlab/error.hpp"

namespace prymlab {

SpectralData5 spectral_data_5(const TodaPointQ& p) {
  if (p.n() != 5) throw InputError("spectral_data_5 needs n = 5");
  validate(p);
  if (!is_km(p)) throw InputError("spectral_data_5 expects a KM point (b = 0)");
  SpectralData5 s;
  for (int i = 0; i < 5; ++i) {
    s.K += p.a[i];
    s.L += p.a[i] * p.a[(i + 2) % 5];
  }
  return s;
}

UPoly<Rational> spectral_poly_5(const Rational& K, const Rational& L) {
  return UPoly<Rational>(std::vector<Rational>{0, L, 0, -K, 0, 1});
}

UPoly<Rational> fiber_curve_5(const Rational& k, const Rational& l) {
  UPoly<Rational> P = spectral_poly_5(k, l);
  return P * P - UPoly<Rational>::constant(4);
}

QuotientCurves quotient_curves(const UPoly<Rational>& f, int n) {
  if (!f.has_parity(0) || f.is_zero()) throw InputError("quotient_curves needs an even polynomial f");
  if (f.lead() != 1) throw InputError("quotient_curves needs f monic");
  UPoly<Rational> g = even_to_square_variable(f);
  UPoly<Rational> ug = UPoly<Rational>::x() * g;
  if (n % 2) return {g, ug};
  return {ug, g};
}

ProjectivePoint9::ProjectivePoint9(std::array<Rational, 9> c) : c_(std::move(c)) {
  if (std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; }))
    throw InvariantViolation("projective point", "all nine coordinates vanish");
}

ProjectivePoint9 ProjectivePoint9::normalized() const {
  auto c = c_;
  Rational s;
  for (const auto& q : c)
    if (sgn(q) != 0) {
      s = q;
      break;
    }
  for (auto& q : c) q /= s;
  return ProjectivePoint9(c);
}

std::string ProjectivePoint9::to_string() const {
  std::string s = "(";
  auto n = normalized();
  for (int i = 0; i < 9; ++i) s += (i ? ":" : "") + prymlab::to_string(n.c_[i]);
  return s + ")";
}

bool operator==(const ProjectivePoint9& a, const ProjectivePoint9& b) {
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j)
      if (a.c_[i] * b.c_[j] != a.c_[j] * b.c_[i]) return false;
  return true;
}

ProjectivePoint9 z_embedding(const TodaPointQ& p) {
  if (p.n() != 5) throw InputError("the embedding is defined for n = 5");
  return ProjectivePoint9(z_functions(p.a));
}

std::array<ProjectivePoint9, 5> divisor_points_5(const Rational& k, const Rational&) {
  using A = std::array<Rational, 9>;
  return {ProjectivePoint9(A{0, 0, 0, 1, 0, 0, 0, 0, 0}), ProjectivePoint9(A{0, 0, 0, 0, 0, 0, 0, 0, 1}),
          ProjectivePoint9(A{1, 0, 0, 0, 0, 0, 1, 0, -k}), ProjectivePoint9(A{1, 0, 0, 0, 0, 0, -1, 0, 0}),
          ProjectivePoint9(A{0, 0, 0, 0, 0, 0, 0, 1, -1})};
}

bool satisfies_constraint_5(const Rational& beta, const Rational& delta, const Rational& k, const Rational& l) {
  if (sgn(beta) == 0 || sgn(delta) == 0) return false;
  Rational lhs = (k - delta) * delta + beta + 1 / (beta * delta);
  return lhs == l;
}

ProjectivePoint9 gamma_param(int i, const Rational& beta, const Rational& delta, const Rational& k,
                             const Rational& l) {
  if (!satisfies_constraint_5(beta, delta, k, l))
    throw InputError("(beta, delta) violates (k - delta) delta + beta + 1/(beta delta) = l");
  return ProjectivePoint9(gamma_raw<Rational>(i, beta, delta, k));
}

std::pair<LaurentSeries, LaurentSeries> boundary_chart(char chart, const Rational& k, const Rational& l, int order) {
  using S = LaurentSeries;
  S u = S::monomial(1, 1);
  S inv_u = S::monomial(1, -1);
  S K(k), L(l);
  switch (chart) {
    case 'a': {
      S d = inv_u;
      int prec = -2 + order;
      S base = L - (K - d) * d;
      S b = S::monomial(1, -2, prec);
      for (int it = 0; it <= order + 2; ++it) b = (base - u * b.truncated(prec).inverse()).truncated(prec);
      return {b, d};
    }
    case 'b': {
      S d = inv_u;
      int prec = 3 + order;
      S base = L - (K - d) * d;
      S b = S::monomial(1, 3, prec);
      for (int it = 0; it <= order + 2; ++it) b = (u * (base - b).truncated(prec).inverse()).truncated(prec);
      return {b, d};
    }
    case 'c': {
      S b = inv_u;
      int prec = 2 + order;
      S d = S::monomial(-1, 2, prec);
      for (int it = 0; it <= order + 2; ++it)
        d = (u * (L - (K - d) * d - b).truncated(prec).inverse()).truncated(prec);
      return {b, d};
    }
  }
  throw InputError(std::string("unknown chart '") + chart + "'");
}

ProjectivePoint9 leading_point(const std::array<LaurentSeries, 9>& z) {
  int e = LaurentSeries::kExact, known = LaurentSeries::kExact;
  for (const auto& s : z) {
    e = std::min(e, s.valuation());
    known = std::min(known, s.prec());
  }
  if (e > known) throw InvariantViolation("limit degenerate", "no coordinate is nonzero within the truncation order");
  std::array<Rational, 9> c;
  for (int i = 0; i < 9; ++i) c[i] = z[i].coef(e);
  return ProjectivePoint9(c);
}

ProjectivePoint9 chart_limit(int curve, char chart, const Rational& k, const Rational& l, int order) {
  auto [b, d] = boundary_chart(chart, k, l, order);
  return leading_point(gamma_raw<LaurentSeries>(curve, b, d, LaurentSeries(k)));
}

std::array<std::array<bool, 5>, 5> incidence_matrix(const Rational& k, const Rational& l, int order) {
  auto pts = divisor_points_5(k, l);
  std::array<std::array<bool, 5>, 5> inc{};
  for (int i = 0; i < 5; ++i)
    for (char c : {'a', 'b', 'c'}) {
      ProjectivePoint9 lim = chart_limit(i + 1, c, k, l, order);
      for (int j = 0; j < 5; ++j)
        if (lim == pts[j]) inc[i][j] = true;
    }
  return inc;
}

Balance principal_balance_5(int s) {
  int m = ((s % 5) + 5) % 5;
  Subset A{m + 1, (m + 1) % 5 + 1};
  std::sort(A.begin(), A.end());
  return make_balance(5, A);
}

PrincipalParams principal_params(const Rational& beta, const Rational& delta, const Rational& k) {
  if (sgn(beta) == 0 || sgn(delta) == 0) throw InputError("beta and delta must be nonzero");
  PrincipalParams p;
  p.beta = beta;
  p.delta = delta;
  p.k = k;
  p.gamma = -1 / (beta * delta);
  p.alpha = (k - delta) / 2;
  p.l = 2 * p.alpha * delta + beta - p.gamma;
  return p;
}

std::map<std::string, Rational> principal_slots(int s, const PrincipalParams& p) {
  // The shifted balance is the rotation b_i = a_{i-s} of the {1,2} balance;
  // its free slots are read off that rotation, since the recursion frees
  // different columns once the indices move.
  std::map<std::string, Rational> base = {{"a2_1", p.alpha}, {"a4_1", p.delta}, {"a3_2", p.gamma}, {"a5_2", p.beta}};
  auto a = laurent_balance(principal_balance_5(0), base, 2);
  int m = ((s % 5) + 5) % 5;
  if (m == 0) return base;
  std::map<std::string, Rational> out;
  for (const auto& name : free_slots(principal_balance_5(m), 2)) {
    int idx = std::stoi(name.substr(1, name.find('_') - 1));
    int k = std::stoi(name.substr(name.find('_') + 1));
    out[name] = a[((idx - 1 - m) % 5 + 5) % 5].coef(k - 1);
  }
  return out;
}

ProjectivePoint9 balance_to_divisor(const std::vector<LaurentSeries>& a) {
  if (a.size() != 5) throw InputError("balance_to_divisor needs n = 5");
  return leading_point(z_functions(a));
}

}  // namespace prymlab
