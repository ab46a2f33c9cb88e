#include "prymlab/mumford.hpp"

#include <map>

namespace prymlab {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::OddMumford: return "odd-mumford";
    case Flavor::EvenMumford: return "even-mumford";
    case Flavor::OddPrym: return "odd-prym";
    case Flavor::EvenPrym: return "even-prym";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  static const std::map<std::string, Flavor, std::less<>> table = {
      {"odd-mumford", Flavor::OddMumford}, {"even-mumford", Flavor::EvenMumford},
      {"odd-prym", Flavor::OddPrym},       {"even-prym", Flavor::EvenPrym},
      {"odd", Flavor::OddMumford},         {"even", Flavor::EvenMumford}};
  auto it = table.find(s);
  if (it == table.end()) throw InputError("unknown flavor '" + std::string(s) + "'");
  return it->second;
}

Shape shape_of(Flavor f, int g) {
  if (g < (is_prym(f) ? 0 : 1)) throw InputError("genus/size parameter too small for " + to_string(f));
  switch (f) {
    case Flavor::OddMumford: return {g, g + 1, g};
    case Flavor::EvenMumford: return {g, g + 2, g};
    case Flavor::OddPrym: return {2 * g, 2 * g + 2, 2 * g, 0, 1, 0};
    case Flavor::EvenPrym: return {2 * g + 1, 2 * g + 3, 2 * g + 1, 1, 0, 1};
  }
  return {};
}

int ambient_genus(Flavor f, int n) {
  if (f == Flavor::OddPrym) return 2 * n;
  if (f == Flavor::EvenPrym) return 2 * n + 1;
  return n;
}

std::vector<Coord> coordinates(Flavor f, int g) {
  Shape s = shape_of(f, g);
  std::vector<Coord> out;
  auto ok = [](int par, int i) { return par < 0 || i % 2 == par; };
  for (int i = 0; i < s.deg_u; ++i)
    if (ok(s.par_u, i)) out.push_back({'u', i});
  for (int i = 0; i < s.v_bound; ++i)
    if (ok(s.par_v, i)) out.push_back({'v', i});
  for (int i = 0; i < s.deg_w; ++i)
    if (ok(s.par_w, i)) out.push_back({'w', i});
  return out;
}

std::vector<std::string> coordinate_names(Flavor f, int g) {
  std::vector<std::string> names;
  for (const auto& c : coordinates(f, g)) names.push_back(c.name());
  return names;
}

MumfordTriple<MPoly> symbolic_triple(Flavor f, int g) {
  std::vector<MPoly> vars;
  auto n = coordinates(f, g).size();
  for (size_t k = 0; k < n; ++k) vars.push_back(MPoly::var(static_cast<int>(k)));
  return triple_from_coords<MPoly>(f, g, vars);
}

void validate(const Triple& t) {
  Shape s = shape_of(t.flavor, t.g);
  std::string tag = to_string(t.flavor) + " " + std::to_string(t.g);
  if (t.u.degree() != s.deg_u || t.u.lead() != 1)
    throw InputError(tag + ": u must be monic of degree " + std::to_string(s.deg_u));
  if (t.w.degree() != s.deg_w || t.w.lead() != 1)
    throw InputError(tag + ": w must be monic of degree " + std::to_string(s.deg_w));
  if (t.v.degree() >= s.v_bound) throw InputError(tag + ": v must have degree < " + std::to_string(s.v_bound));
  auto par = [&](const UPoly<Rational>& p, int want, const char* name) {
    if (want >= 0 && !p.has_parity(want))
      throw InputError(tag + ": parity constraint violated, " + name + " must be " + (want ? "odd" : "even"));
  };
  par(t.u, s.par_u, "u");
  par(t.v, s.par_v, "v");
  par(t.w, s.par_w, "w");
}

Generating mumford_generating(const MumfordTriple<MPoly>& t, const UPoly<Rational>& phi_q) {
  using BP = BiPoly<MPoly>;
  UPoly<MPoly> phi = phi_q.map([](const Rational& q) { return MPoly(q); });
  BP A = BP::of_sum(alpha_poly(t));  // alpha(x + x')
  Generating g;
  g.uv = divided_difference(t.u, phi);
  g.uw = MPoly(-2) * divided_difference(t.v, phi);
  g.vw = divided_difference(t.w, phi) - A * BP::outer(t.u, phi);
  g.ww = MPoly(2) * (A * (BP::outer(t.v, phi) - BP::outer(phi, t.v)));
  return g;
}

BracketTable table_from_generating(Flavor f, int g, const Generating& gen, bool check_fixed) {
  auto cs = coordinates(f, g);
  std::vector<std::string> names;
  for (const auto& c : cs) names.push_back(c.name());
  BracketTable table(names);

  auto lookup = [&](char p, char q, int i, int j) -> MPoly {
    // {p_i, q_j}
    if (p == q && p != 'w') return MPoly();
    if (p == 'w' && q == 'w') return gen.ww.coef(i, j);
    const BiPoly<MPoly>* F = nullptr;
    bool flip = false;
    auto pick = [&](char a, char b, const BiPoly<MPoly>& G) {
      if (p == a && q == b) F = &G;
      if (p == b && q == a) {
        F = &G;
        flip = true;
      }
    };
    pick('u', 'v', gen.uv);
    pick('u', 'w', gen.uw);
    pick('v', 'w', gen.vw);
    return flip ? MPoly(-F->coef(j, i)) : F->coef(i, j);
  };
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = 0; b < cs.size(); ++b) table.set(a, b, lookup(cs[a].poly, cs[b].poly, cs[a].index, cs[b].index));

  if (check_fixed) {
    auto is_free = [&](char p, int i) {
      for (const auto& c : cs)
        if (c.poly == p && c.index == i) return true;
      return false;
    };
    auto scan = [&](const BiPoly<MPoly>& F, char p, char q) {
      for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j)
          if (!F.coef(i, j).is_zero() && !(is_free(p, i) && is_free(q, j)))
            throw InvariantViolation("bracket tangency", std::string("{") + p + std::to_string(i) + "," + q +
                                                             std::to_string(j) + "} nonzero on a fixed coefficient");
    };
    scan(gen.uv, 'u', 'v');
    scan(gen.uw, 'u', 'w');
    scan(gen.vw, 'v', 'w');
    scan(gen.ww, 'w', 'w');
  }
  return table;
}

BracketTable mumford_bracket_table(Flavor f, int g, const UPoly<Rational>& phi) {
  if (is_prym(f)) throw InputError("mumford_bracket_table expects a Mumford flavor; Prym tables come from dirac_reduce");
  if (phi.is_zero()) throw InputError("phi must be nonzero");
  if (phi.degree() > g)
    throw InputError("deg phi = " + std::to_string(phi.degree()) + " exceeds g = " + std::to_string(g));
  return table_from_generating(f, g, mumford_generating(symbolic_triple(f, g), phi), true);
}

MPoly H_at(const MumfordTriple<MPoly>& t, const Rational& y) {
  UPoly<MPoly> H = momentum_H(t);
  return H(MPoly(y));
}

std::vector<Rational> hamiltonian_flow_at(const BracketTable& table, Flavor f, int g, const Rational& phi_y,
                                          const Rational& y, const Triple& t) {
  if (sgn(phi_y) == 0) throw InputError("phi(y) = 0");
  auto field = table.hamiltonian_field(H_at(symbolic_triple(f, g), y));
  auto pt = coords_of(t);
  std::vector<Rational> out;
  for (const auto& X : field) out.push_back(X.eval(pt) / phi_y);
  return out;
}

}  // namespace prymlab
