#pragma once

#include <vector>

#include "prymlab/mumford.hpp"

namespace prymlab {

// (u, v, w)(x) -> (u(-x), -v(-x), w(-x)) for sign=+1, and the negative
// (-u(-x), v(-x), -w(-x)) for sign=-1. Acts on even Mumford triples;
// +1 needs g even and -1 needs g odd so that u, w stay monic.
Triple involution_j(const Triple& t, int sign);
// Sign picked up by each even-Mumford coordinate under the involution.
std::vector<int> involution_signs(int g, int sign);
bool is_fixed_by_j(const Triple& t, int sign);
// The involution whose fixed locus is the given Prym flavor (+1 odd, -1 even).
int prym_sign(Flavor f);

// Prym triple <-> ambient even Mumford triple. restrict_to_prym requires
// the forbidden-parity coefficients to vanish.
Triple embed_prym(const Triple& prym);
Triple restrict_to_prym(const Triple& ambient, Flavor f);

// {c_a o j, c_b o j} == {c_a, c_b} o j for all coordinate pairs, symbolically.
bool involution_is_poisson(const BracketTable& ambient, const std::vector<int>& signs);

enum class ReductionRoute {
  GeneratingFunctions,  // parity-project the generating functions, restrict
  TableRestriction,     // restrict the full table to invariant coordinates
  ClosedForm            // the reduced formulas written out directly
};

// Reduced phi-bracket on a Prym space. Refuses (InvariantViolation) when the
// involution is not Poisson for phi.
BracketTable dirac_reduce(Flavor f, int n, const UPoly<Rational>& phi,
                          ReductionRoute route = ReductionRoute::GeneratingFunctions);

// X_y L(x) = [L(x), M(x,y)] / (x^2 - y^2) with
// M = [[y v(y), x w(y) + x (x^2 - y^2) u(y)], [x u(y), -y v(y)]].
template <class R>
MumfordTriple<R> prym_flow(const MumfordTriple<R>& t, const R& y) {
  if (!is_prym(t.flavor)) throw InputError("prym_flow expects a Prym point");
  R uy = t.u(y), vy = t.v(y), wy = t.w(y);
  UPoly<R> x = UPoly<R>::x();
  UPoly<R> x2my2 = UPoly<R>(std::vector<R>{R(-(y * y)), R(0), R(1)});
  UPoly<R> m11 = UPoly<R>::constant(R(y * vy));
  UPoly<R> m12 = wy * x + uy * (x * x2my2);
  UPoly<R> m21 = uy * x;
  MumfordTriple<R> c = detail::lax_commutator(t, m11, m12, m21);
  R my = -y;
  for (auto* p : {&c.u, &c.v, &c.w}) {
    *p = detail::div_exact_linear(*p, y, "prym_flow");
    *p = detail::div_exact_linear(*p, my, "prym_flow");
  }
  return c;
}

}  // namespace prymlab
