#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "prymlab/bipoly.hpp"
#include "prymlab/bracket.hpp"
#include "prymlab/mpoly.hpp"
#include "prymlab/poly.hpp"

namespace prymlab {

enum class Flavor { OddMumford, EvenMumford, OddPrym, EvenPrym };

std::string to_string(Flavor f);
Flavor parse_flavor(std::string_view s);
inline bool is_prym(Flavor f) { return f == Flavor::OddPrym || f == Flavor::EvenPrym; }

// Degree profile of a flavor. deg v < v_bound. Parities are -1 when unconstrained.
struct Shape {
  int deg_u, deg_w, v_bound;
  int par_u = -1, par_v = -1, par_w = -1;
};
Shape shape_of(Flavor f, int g);
// Genus of the even Mumford space a Prym space sits in (2n or 2n+1).
int ambient_genus(Flavor f, int n);

template <class R>
struct MumfordTriple {
  Flavor flavor = Flavor::OddMumford;
  int g = 1;  // g for Mumford flavors, n for Prym flavors
  UPoly<R> u, v, w;
};
using Triple = MumfordTriple<Rational>;

struct Coord {
  char poly;  // 'u', 'v', 'w'
  int index;  // power of x
  std::string name() const { return std::string(1, poly) + std::to_string(index); }
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Free coordinates in the order u..., v..., w..., ascending powers.
std::vector<Coord> coordinates(Flavor f, int g);
std::vector<std::string> coordinate_names(Flavor f, int g);

template <class R>
MumfordTriple<R> triple_from_coords(Flavor f, int g, const std::vector<R>& c) {
  Shape s = shape_of(f, g);
  auto cs = coordinates(f, g);
  if (c.size() != cs.size()) throw InputError("wrong number of coordinates for " + to_string(f));
  std::vector<R> u(s.deg_u + 1, R(0)), v(s.v_bound, R(0)), w(s.deg_w + 1, R(0));
  u[s.deg_u] = R(1);
  w[s.deg_w] = R(1);
  for (size_t k = 0; k < cs.size(); ++k) {
    auto& target = cs[k].poly == 'u' ? u : (cs[k].poly == 'v' ? v : w);
    target[cs[k].index] = c[k];
  }
  return {f, g, UPoly<R>(std::move(u)), UPoly<R>(std::move(v)), UPoly<R>(std::move(w))};
}

template <class R>
std::vector<R> coords_of(const MumfordTriple<R>& t) {
  std::vector<R> out;
  for (const auto& c : coordinates(t.flavor, t.g)) {
    const auto& p = c.poly == 'u' ? t.u : (c.poly == 'v' ? t.v : t.w);
    out.push_back(p.coef(c.index));
  }
  return out;
}

// Variables numbered as coordinates(f, g).
MumfordTriple<MPoly> symbolic_triple(Flavor f, int g);

// Throws InputError naming the violated constraint (degree, monic, parity).
void validate(const Triple& t);

template <class R>
UPoly<R> momentum_H(const MumfordTriple<R>& t) {
  return t.u * t.w + t.v * t.v;
}

// alpha as a polynomial in its argument s: 1, or s + w_{g+1} - u_{g-1}.
template <class R>
UPoly<R> alpha_poly(const MumfordTriple<R>& t) {
  Shape s = shape_of(t.flavor, t.g);
  if (s.deg_w == s.deg_u + 1) return UPoly<R>::constant(R(1));
  R c = t.w.coef(s.deg_w - 1) - t.u.coef(s.deg_u - 1);
  return UPoly<R>(std::vector<R>{c, R(1)});
}

// Generating functions {u(x),v(x')}, {u(x),w(x')}, {v(x),w(x')}, {w(x),w(x')};
// {u,u} and {v,v} vanish.
struct Generating {
  BiPoly<MPoly> uv, uw, vw, ww;
};

// The phi-bracket generating functions on an arbitrary symbolic triple.
Generating mumford_generating(const MumfordTriple<MPoly>& t, const UPoly<Rational>& phi);
// Reads off {c_a, c_b} for the coordinates of (f, g). With check_fixed, every
// coefficient at a position that is not a free coordinate must vanish.
BracketTable table_from_generating(Flavor f, int g, const Generating& gen, bool check_fixed);

// Linear phi-bracket on a Mumford space (odd or even flavor), deg phi <= g.
BracketTable mumford_bracket_table(Flavor f, int g, const UPoly<Rational>& phi);

// H(y) as a polynomial in the coordinates.
MPoly H_at(const MumfordTriple<MPoly>& t, const Rational& y);

namespace detail {
template <class R>
void expect_exact_zero(const R& rem, const char* what) {
  if constexpr (!std::is_floating_point_v<R>) {
    if (!is_zero(rem)) throw InvariantViolation(what, "division by the Lax denominator was not exact");
  }
}

// [L(x), M] for L = [[v, w], [u, -v]] and traceless M = [[m11, m12], [m21, -m11]];
// returns the (u, v, w) components of the commutator.
template <class R>
MumfordTriple<R> lax_commutator(const MumfordTriple<R>& t, const UPoly<R>& m11, const UPoly<R>& m12,
                                const UPoly<R>& m21) {
  MumfordTriple<R> d;
  d.flavor = t.flavor;
  d.g = t.g;
  R two(2);
  d.u = two * (t.u * m11 - t.v * m21);
  d.v = t.w * m21 - t.u * m12;
  d.w = two * (t.v * m12 - t.w * m11);
  return d;
}

template <class R>
UPoly<R> div_exact_linear(const UPoly<R>& p, const R& y, const char* what) {
  auto [q, rem] = div_linear(p, y);
  expect_exact_zero(rem, what);
  return q;
}
}  // namespace detail

// X_y L(x) = [L(x), L(y) + (x-y) B(x,y)] / (x-y), B_12 = alpha(x+y) u(y).
// Returns the tangent (du, dv, dw) as a triple of polynomials.
template <class R>
MumfordTriple<R> mumford_flow(const MumfordTriple<R>& t, const R& y) {
  if (is_prym(t.flavor)) throw InputError("mumford_flow on a Prym point; use prym_flow");
  UPoly<R> a = alpha_poly(t);
  R uy = t.u(y), vy = t.v(y), wy = t.w(y);
  // alpha(x + y) as a polynomial in x
  UPoly<R> a_shift = a.degree() == 0 ? a : UPoly<R>(std::vector<R>{R(a.coef(0) + y), R(1)});
  UPoly<R> x_minus_y = UPoly<R>::linear_root(y);
  UPoly<R> m11 = UPoly<R>::constant(vy);
  UPoly<R> m12 = UPoly<R>::constant(wy) + uy * (x_minus_y * a_shift);
  UPoly<R> m21 = UPoly<R>::constant(uy);
  MumfordTriple<R> c = detail::lax_commutator(t, m11, m12, m21);
  c.u = detail::div_exact_linear(c.u, y, "mumford_flow");
  c.v = detail::div_exact_linear(c.v, y, "mumford_flow");
  c.w = detail::div_exact_linear(c.w, y, "mumford_flow");
  return c;
}

// Vector field {c_k, H(y)}^phi / phi(y) on the coordinates, evaluated at t.
std::vector<Rational> hamiltonian_flow_at(const BracketTable& table, Flavor f, int g, const Rational& phi_y,
                                          const Rational& y, const Triple& t);

}  // namespace prymlab
