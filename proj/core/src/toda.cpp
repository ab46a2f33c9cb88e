#include "prymlab/toda.hpp"

namespace prymlab {

void validate(const TodaPointQ& p) {
  if (p.a.size() != p.b.size()) throw InputError("a and b must have the same length");
  if (p.n() < 2) throw InputError("need n >= 2");
  Rational prod = 1;
  for (const auto& a : p.a) prod *= a;
  if (prod != 1) throw InputError("product constraint violated: prod a_i = " + to_string(prod) + ", expected 1");
}

TodaPointQ km_point(const std::vector<Rational>& a) {
  TodaPointQ p{a, std::vector<Rational>(a.size(), Rational(0))};
  validate(p);
  return p;
}

bool is_km(const TodaPointQ& p) {
  for (const auto& b : p.b)
    if (sgn(b) != 0) return false;
  return true;
}

TodaPoint<MPoly> toda_symbolic(int n) {
  TodaPoint<MPoly> p;
  for (int i = 0; i < n; ++i) {
    p.a.push_back(MPoly::var(i));
    p.b.push_back(MPoly::var(n + i));
  }
  return p;
}

TodaPoint<MPoly> km_symbolic(int n) {
  TodaPoint<MPoly> p;
  for (int i = 0; i < n; ++i) {
    p.a.push_back(MPoly::var(i));
    p.b.push_back(MPoly());
  }
  return p;
}

std::vector<std::string> km_names(int n) {
  std::vector<std::string> s;
  for (int i = 1; i <= n; ++i) s.push_back("a" + std::to_string(i));
  return s;
}

std::vector<std::string> toda_names(int n) {
  auto s = km_names(n);
  for (int i = 1; i <= n; ++i) s.push_back("b" + std::to_string(i));
  return s;
}

std::vector<Rational> toda_integrals(const TodaPointQ& p) {
  validate(p);
  std::vector<Rational> out;
  auto full = toda_integrals_full(p);
  for (size_t i = 0; i < full.size(); ++i) {
    if (!full[i].h_free())
      throw InvariantViolation("h-independence", "I_" + std::to_string(i) + " depends on h");
    out.push_back(full[i].coef(0));
  }
  return out;
}

HLaurent<UPoly<Rational>> spectral_determinant(const TodaPointQ& p) {
  using C = UPoly<Rational>;
  using E = HLaurent<C>;
  int n = p.n();
  std::vector<std::vector<E>> M(n, std::vector<E>(n));
  for (int i = 0; i < n; ++i) M[i][i].add(0, C::linear_root(p.b[i]));
  for (int i = 0; i + 1 < n; ++i) {
    M[i][i + 1].add(0, C::constant(-p.a[i]));
    M[i + 1][i].add(0, C::constant(-1));
  }
  M[0][n - 1].add(-1, C::constant(-1));
  M[n - 1][0].add(1, C::constant(-p.a[n - 1]));
  return laplace_det(M);
}

UPoly<Rational> char_poly_checked(const TodaPointQ& p) {
  validate(p);
  UPoly<Rational> K = char_poly(p);
  HLaurent<UPoly<Rational>> want;
  want.add(1, UPoly<Rational>::constant(-1));
  want.add(-1, UPoly<Rational>::constant(-1));
  want.add(0, Rational(1, 2) * K);
  HLaurent<UPoly<Rational>> got = spectral_determinant(p);
  if (!(got - want).is_zero())
    throw InvariantViolation("spectral determinant", "det(x - L(h)) != -h - 1/h + K(x)/2");
  return K;
}

namespace {

int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }
int delta(int i, int j, int n) { return mod1(i, n) == mod1(j, n) ? 1 : 0; }

// Coefficients as polynomials in the symbolic variables; index helpers 1-based.
MPoly A(int i, int n) { return MPoly::var(mod1(i, n) - 1); }
MPoly B(int i, int n) { return MPoly::var(n + mod1(i, n) - 1); }

MPoly entry(TodaBracket kind, int i, int j, Pair which, int n) {
  switch (kind) {
    case TodaBracket::Linear:
      if (which == Pair::AB) return MPoly(delta(i, j, n) - delta(i + 1, j, n)) * A(i, n);
      return MPoly();
    case TodaBracket::KM:
      if (which != Pair::AA) return MPoly();
      [[fallthrough]];
    case TodaBracket::Quadratic:
      switch (which) {
        case Pair::AA: return MPoly(delta(i, j + 1, n) - delta(i + 1, j, n)) * A(i, n) * A(j, n);
        case Pair::AB: return MPoly(delta(i, j, n) - delta(i + 1, j, n)) * A(i, n) * B(j, n);
        case Pair::BB:
          // {b_i, b_{i+1}} = -a_i and {b_{i+1}, b_i} = a_i: the coefficient
          // is always a at the lower index of the adjacent pair.
          return MPoly(delta(i, j + 1, n)) * A(j, n) - MPoly(delta(i + 1, j, n)) * A(i, n);
      }
  }
  return MPoly();
}

}  // namespace

Rational toda_bracket(TodaBracket kind, int i, int j, Pair which, const TodaPointQ& p) {
  int n = p.n();
  std::vector<Rational> vals = p.a;
  vals.insert(vals.end(), p.b.begin(), p.b.end());
  return entry(kind, i, j, which, n).eval(vals);
}

BracketTable toda_table(TodaBracket kind, int n) {
  if (n < 2) throw InputError("need n >= 2");
  bool km = kind == TodaBracket::KM;
  BracketTable t(km ? km_names(n) : toda_names(n));
  int N = km ? n : 2 * n;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      bool ra = r < n, ca = c < n;
      int i = (r % n) + 1, j = (c % n) + 1;
      MPoly e;
      if (ra && ca)
        e = entry(kind, i, j, Pair::AA, n);
      else if (ra && !ca)
        e = entry(kind, i, j, Pair::AB, n);
      else if (!ra && ca)
        e = -entry(kind, j, i, Pair::AB, n);
      else
        e = entry(kind, i, j, Pair::BB, n);
      t.set(r, c, e);
    }
  return t;
}

BracketTable toda_pencil(int n, const UPoly<Rational>& phi) {
  if (phi.degree() > 1) throw InputError("the Toda pencil needs deg phi <= 1");
  return phi.coef(1) * toda_table(TodaBracket::Quadratic, n) + phi.coef(0) * toda_table(TodaBracket::Linear, n);
}

}  // namespace prymlab
