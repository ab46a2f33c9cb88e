#include "prymlab/prym.hpp"

namespace prymlab {

namespace {

// sign of coefficient i of a polynomial of kind p ('u','v','w') under j or -j
int coefficient_sign(char p, int i, int sign) {
  int s = (i % 2) ? -1 : 1;  // x -> -x
  if (p == 'v') s = -s;
  return sign > 0 ? s : -s;
}

UPoly<Rational> transform(const UPoly<Rational>& q, char p, int sign) {
  std::vector<Rational> c = q.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (coefficient_sign(p, static_cast<int>(i), sign) < 0) c[i] = -c[i];
  return UPoly<Rational>(std::move(c));
}

void require_even_mumford(const Triple& t, int sign) {
  if (t.flavor != Flavor::EvenMumford) throw InputError("the involution acts on even Mumford triples");
  if ((sign > 0) != (t.g % 2 == 0))
    throw InputError(std::string(sign > 0 ? "j" : "-j") + " does not preserve monicity for g = " +
                     std::to_string(t.g));
}

UPoly<MPoly> lift(const UPoly<Rational>& p) {
  return p.map([](const Rational& q) { return MPoly(q); });
}

// For each ambient coordinate, the Prym coordinate variable it becomes, or 0.
std::vector<MPoly> ambient_to_prym(Flavor f, int n) {
  int g = ambient_genus(f, n);
  auto amb = coordinates(Flavor::EvenMumford, g);
  auto pry = coordinates(f, n);
  std::vector<MPoly> vals;
  for (const auto& c : amb) {
    MPoly v;
    for (size_t k = 0; k < pry.size(); ++k)
      if (pry[k] == c) v = MPoly::var(static_cast<int>(k));
    vals.push_back(v);
  }
  return vals;
}

BiPoly<MPoly> compose_all(const BiPoly<MPoly>& F, const std::vector<MPoly>& vals) {
  return F.map([&](const MPoly& p) { return p.compose(vals); });
}

void check_phi(Flavor f, int n, const UPoly<Rational>& phi) {
  if (!is_prym(f)) throw InputError("dirac_reduce expects a Prym flavor");
  if (phi.is_zero()) throw InputError("phi must be nonzero");
  int g = ambient_genus(f, n);
  if (phi.degree() > g) throw InputError("deg phi exceeds the ambient genus " + std::to_string(g));
}

Generating closed_form(Flavor f, int n, const UPoly<Rational>& phi_q) {
  using BP = BiPoly<MPoly>;
  auto t = symbolic_triple(f, n);
  UPoly<MPoly> phi = lift(phi_q);
  UPoly<MPoly> x = UPoly<MPoly>::x();
  auto skew = [&](const UPoly<MPoly>& a, const UPoly<MPoly>& b) { return BP::outer(a, b) - BP::outer(b, a); };
  BP X = BP::in_x(x), Xp = BP::in_xp(x);
  Generating g;
  g.uv = Xp * skew(t.u, phi).divide_diff_squares();
  g.uw = MPoly(-2) * skew(x * t.v, phi).divide_diff_squares();
  g.vw = X * skew(t.w, phi).divide_diff_squares() - BP::outer(x * t.u, phi);
  g.ww = MPoly(2) * skew(x * t.v, phi);
  return g;
}

}  // namespace

std::vector<int> involution_signs(int g, int sign) {
  std::vector<int> s;
  for (const auto& c : coordinates(Flavor::EvenMumford, g)) s.push_back(coefficient_sign(c.poly, c.index, sign));
  return s;
}

Triple involution_j(const Triple& t, int sign) {
  require_even_mumford(t, sign);
  Triple r = t;
  r.u = transform(t.u, 'u', sign);
  r.v = transform(t.v, 'v', sign);
  r.w = transform(t.w, 'w', sign);
  return r;
}

bool is_fixed_by_j(const Triple& t, int sign) {
  Triple r = involution_j(t, sign);
  return r.u == t.u && r.v == t.v && r.w == t.w;
}

int prym_sign(Flavor f) {
  if (f == Flavor::OddPrym) return 1;
  if (f == Flavor::EvenPrym) return -1;
  throw InputError("not a Prym flavor");
}

Triple embed_prym(const Triple& prym) {
  validate(prym);
  Triple t = prym;
  t.flavor = Flavor::EvenMumford;
  t.g = ambient_genus(prym.flavor, prym.g);
  return t;
}

Triple restrict_to_prym(const Triple& ambient, Flavor f) {
  int sign = prym_sign(f);
  if (!is_fixed_by_j(ambient, sign)) throw InputError("triple is not fixed by the involution");
  Triple t = ambient;
  t.flavor = f;
  t.g = f == Flavor::OddPrym ? ambient.g / 2 : (ambient.g - 1) / 2;
  validate(t);
  return t;
}

bool involution_is_poisson(const BracketTable& ambient, const std::vector<int>& signs) {
  // j acts diagonally: c_k o j = s_k c_k. Condition: s_a s_b T_ab = T_ab o j.
  for (int a = 0; a < ambient.size(); ++a)
    for (int b = 0; b < ambient.size(); ++b) {
      MPoly lhs = MPoly(signs[a] * signs[b]) * ambient.at(a, b);
      if (!(lhs == ambient.at(a, b).rescale(signs))) return false;
    }
  return true;
}

BracketTable dirac_reduce(Flavor f, int n, const UPoly<Rational>& phi, ReductionRoute route) {
  check_phi(f, n, phi);
  if (route == ReductionRoute::ClosedForm) {
    int want = f == Flavor::OddPrym ? 0 : 1;
    if (!phi.has_parity(want))
      throw InvariantViolation("involution is Poisson", std::string("closed form needs phi ") + (want ? "odd" : "even"));
    return table_from_generating(f, n, closed_form(f, n, phi), true);
  }

  int g = ambient_genus(f, n);
  int sign = prym_sign(f);
  Generating amb = mumford_generating(symbolic_triple(Flavor::EvenMumford, g), phi);
  BracketTable amb_table = table_from_generating(Flavor::EvenMumford, g, amb, true);
  if (!involution_is_poisson(amb_table, involution_signs(g, sign)))
    throw InvariantViolation("involution is Poisson", "reduction refused for phi = " + to_string(phi));

  auto vals = ambient_to_prym(f, n);
  if (route == ReductionRoute::TableRestriction) {
    auto amb_coords = coordinates(Flavor::EvenMumford, g);
    auto pry = coordinates(f, n);
    BracketTable red(coordinate_names(f, n));
    for (size_t a = 0; a < pry.size(); ++a)
      for (size_t b = 0; b < pry.size(); ++b) {
        int ia = -1, ib = -1;
        for (size_t k = 0; k < amb_coords.size(); ++k) {
          if (amb_coords[k] == pry[a]) ia = static_cast<int>(k);
          if (amb_coords[k] == pry[b]) ib = static_cast<int>(k);
        }
        red.set(a, b, amb_table.at(ia, ib).compose(vals));
      }
    return red;
  }

  Shape s = shape_of(f, n);
  auto P = [](int p) { return p ? Parity::Odd : Parity::Even; };
  Generating red;
  red.uv = compose_all(parity_project(amb.uv, P(s.par_u), P(s.par_v)), vals);
  red.uw = compose_all(parity_project(amb.uw, P(s.par_u), P(s.par_w)), vals);
  red.vw = compose_all(parity_project(amb.vw, P(s.par_v), P(s.par_w)), vals);
  red.ww = compose_all(parity_project(amb.ww, P(s.par_w), P(s.par_w)), vals);
  return table_from_generating(f, n, red, true);
}

}  // namespace prymlab
