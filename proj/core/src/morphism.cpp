#include "prymlab/morphism.hpp"

namespace prymlab {

Triple phi_triple(const PhiImage<Rational>& img, int n) {
  Triple t{Flavor::EvenMumford, n - 1, img.u, img.v, img.w};
  validate(t);
  return t;
}

Triple phi_prym_triple(const PhiImage<Rational>& img, int n) {
  Triple t{n % 2 ? Flavor::OddPrym : Flavor::EvenPrym, n % 2 ? (n - 1) / 2 : (n - 2) / 2, img.u, img.v, img.w};
  validate(t);
  return t;
}

namespace {

[[noreturn]] void not_in_image(const std::string& why) { throw InputError("not in image of Phi: " + why); }

// a * (monic of degree d) -> (a, monic part)
std::pair<Rational, UPoly<Rational>> split_scalar(const UPoly<Rational>& q, int d, const char* what) {
  if (q.degree() != d) not_in_image(std::string(what) + " has degree " + std::to_string(q.degree()));
  Rational a = q.lead();
  return {a, (Rational(1) / a) * q};
}

}  // namespace

TodaPointQ phi_inverse(const UPoly<Rational>& u, const UPoly<Rational>& v, const UPoly<Rational>& w, int n) {
  using P = UPoly<Rational>;
  if (n < 3) throw InputError("phi_inverse needs n >= 3");
  Triple t{Flavor::EvenMumford, n - 1, u, v, w};
  validate(t);

  // u w + v^2 = p^2 - 4, p monic of degree n
  auto [p, r] = pr_split(momentum_H(t), n);
  if (!(r == P::constant(-4))) not_in_image("u w + v^2 + 4 is not a square");

  std::vector<Rational> a(n), b(n);
  b[n - 1] = u.coef(n - 2) - p.coef(n - 1);

  // S = a_{n-1} D_{n-1,n} - a_n D_{1,n},  T = a_{n-1} D_{n-1,n} + a_n D_{1,n}
  P S = v;
  P T = P::linear_root(b[n - 1]) * u - p;
  auto [an1, chain_prev] = split_scalar(Rational(1, 2) * (S + T), n - 2, "a_{n-1} Delta_{n-1,n}");
  auto [an, d1n] = split_scalar(Rational(1, 2) * (T - S), n - 2, "a_n Delta_{1,n}");
  a[n - 2] = an1;
  a[n - 1] = an;

  // chain(j) = det of the block 1..j; chain(n-1) = u, chain(n-2) = Delta_{n-1,n}.
  // chain(j) = (x - b_j) chain(j-1) - a_{j-1} chain(j-2)
  P cj = u, cj1 = chain_prev;
  for (int j = n - 1; j >= 2; --j) {
    b[j - 1] = -cj.coef(j - 1) + cj1.coef(j - 2);
    P rest = P::linear_root(b[j - 1]) * cj1 - cj;
    if (j == 2) {
      if (rest.degree() != 0) not_in_image("chain does not terminate in a constant");
      a[0] = rest.lead();
      cj = cj1;
      break;
    }
    auto [aj, cj2] = split_scalar(rest, j - 2, "chain remainder");
    a[j - 2] = aj;
    cj = cj1;
    cj1 = cj2;
  }
  // cj is now chain(1) = x - b_1
  if (cj.degree() != 1 || cj.lead() != 1) not_in_image("chain(1) is not monic linear");
  b[0] = -cj.coef(0);

  TodaPointQ pt{a, b};
  for (const auto& ai : a)
    if (sgn(ai) == 0) not_in_image("some a_i vanishes");
  try {
    validate(pt);
  } catch (const InputError& e) {
    not_in_image(e.what());
  }
  PhiImage<Rational> back = phi(pt, n);
  if (!(back.u == u && back.v == v && back.w == w)) not_in_image("reconstruction does not map back");
  (void)d1n;
  return pt;
}

std::pair<UPoly<MPoly>, UPoly<MPoly>> symbolic_pr(int n) {
  auto t = symbolic_triple(Flavor::EvenMumford, n - 1);
  return pr_split(momentum_H(t), n);
}

Generating quad_mumford_generating(int n, const UPoly<Rational>& phi_q) {
  using BP = BiPoly<MPoly>;
  if (n < 2) throw InputError("need n >= 2");
  if (phi_q.is_zero() || phi_q.degree() > 1) throw InputError("quadratic bracket needs 0 <= deg phi <= 1");
  auto t = symbolic_triple(Flavor::EvenMumford, n - 1);
  auto [p, r] = pr_split(momentum_H(t), n);
  UPoly<MPoly> phi = phi_q.map([](const Rational& q) { return MPoly(q); });
  UPoly<MPoly> pphi = p * phi;

  // linear bracket with p*phi in place of phi
  Generating g;
  BP A = BP::of_sum(alpha_poly(t));
  g.uv = divided_difference(t.u, pphi);
  g.uw = MPoly(-2) * divided_difference(t.v, pphi);
  g.vw = divided_difference(t.w, pphi) - A * BP::outer(t.u, pphi);
  g.ww = MPoly(2) * (A * (BP::outer(t.v, pphi) - BP::outer(pphi, t.v)));

  // alpha^phi(s) = phi(alpha(2s)/2) = phi_0 + phi_1 (s + c/2), alpha(s) = s + c
  MPoly c = alpha_poly(t).coef(0);
  UPoly<MPoly> aphi(std::vector<MPoly>{MPoly(phi_q.coef(0)) + MPoly(Rational(phi_q.coef(1) / 2)) * c, MPoly(phi_q.coef(1))});
  BP Aq = BP::of_sum(aphi);
  g.uv += Aq * BP::outer(t.u, t.u);
  g.uw -= MPoly(2) * (Aq * BP::outer(t.u, t.v));
  g.vw += Aq * BP::outer(t.u, t.w);
  g.ww += MPoly(2) * (Aq * (BP::outer(t.w, t.v) - BP::outer(t.v, t.w)));
  return g;
}

BracketTable quad_mumford_bracket(int n, const UPoly<Rational>& phi) {
  return table_from_generating(Flavor::EvenMumford, n - 1, quad_mumford_generating(n, phi), true);
}

std::vector<MPoly> phi_components(int n) {
  auto img = phi(toda_symbolic(n), n);
  MumfordTriple<MPoly> t{Flavor::EvenMumford, n - 1, img.u, img.v, img.w};
  return coords_of(t);
}

}  // namespace prymlab
