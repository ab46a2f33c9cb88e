#include "support.hpp"

#include "prymlab/bipoly.hpp"
#include "prymlab/bracket.hpp"
#include "prymlab/prym.hpp"

using namespace prymlab;
using namespace testing;

TEST_CASE("involution") {
  Triple t{Flavor::EvenMumford, 2, P({-1, 0, 1}), Poly(), P({4, 0, -5, 0, 1})};
  CHECK(is_fixed_by_j(t, +1));
  CHECK(involution_j(t, +1).w == t.w);

  Rng rng(8);
  for (int it = 0; it < 10; ++it) {
    Triple a = random_triple(rng, Flavor::EvenMumford, 2);
    Triple b = involution_j(involution_j(a, +1), +1);
    CHECK(coords_of(b) == coords_of(a));
    Triple c = random_triple(rng, Flavor::EvenMumford, 3);
    CHECK(coords_of(involution_j(involution_j(c, -1), -1)) == coords_of(c));
  }
  CHECK_THROWS_AS(involution_j(t, -1), InputError);
}

TEST_CASE("fixed points are exactly the Prym spaces") {
  Rng rng(9);
  for (Flavor f : {Flavor::OddPrym, Flavor::EvenPrym})
    for (int n = 1; n <= 2; ++n) {
      int s = prym_sign(f);
      for (int it = 0; it < 5; ++it) {
        Triple p = random_triple(rng, f, n);
        Triple amb = embed_prym(p);
        CHECK(amb.flavor == Flavor::EvenMumford);
        CHECK(amb.g == ambient_genus(f, n));
        CHECK(is_fixed_by_j(amb, s));
        CHECK(coords_of(restrict_to_prym(amb, f)) == coords_of(p));

        Triple generic = random_triple(rng, Flavor::EvenMumford, ambient_genus(f, n));
        CHECK_FALSE(is_fixed_by_j(generic, s));
        CHECK_THROWS_AS(restrict_to_prym(generic, f), InputError);
      }
    }
}

TEST_CASE("involution is Poisson for phi of the right parity") {
  auto even_g2 = [](const Poly& ph) { return mumford_bracket_table(Flavor::EvenMumford, 2, ph); };
  CHECK(involution_is_poisson(even_g2(P({1})), involution_signs(2, +1)));
  CHECK(involution_is_poisson(even_g2(P({2, 0, -1})), involution_signs(2, +1)));
  CHECK_FALSE(involution_is_poisson(even_g2(P({0, 1})), involution_signs(2, +1)));

  auto even_g3 = [](const Poly& ph) { return mumford_bracket_table(Flavor::EvenMumford, 3, ph); };
  CHECK(involution_is_poisson(even_g3(P({0, 1})), involution_signs(3, -1)));
  CHECK_FALSE(involution_is_poisson(even_g3(P({1})), involution_signs(3, -1)));

  CHECK_THROWS_AS(dirac_reduce(Flavor::OddPrym, 1, P({0, 1})), InvariantViolation);
}

TEST_CASE("reduced bracket of u and v") {
  // {u(x), v(x')} = x' (u(x) phi(x') - u(x') phi(x)) / (x^2 - x'^2) on odd-Prym
  using BP = BiPoly<MPoly>;
  for (int n = 1; n <= 2; ++n)
    for (const Poly& ph : {P({1}), P({3, 0, -1})}) {
      auto tab = dirac_reduce(Flavor::OddPrym, n, ph);
      auto cs = coordinates(Flavor::OddPrym, n);
      BP lhs, uu;
      for (size_t a = 0; a < cs.size(); ++a)
        for (size_t b = 0; b < cs.size(); ++b) {
          if (cs[a].poly == 'u' && cs[b].poly == 'v') lhs.add_to(cs[a].index, cs[b].index, tab.at(a, b));
          if (cs[a].poly == 'u' && cs[b].poly == 'u') CHECK(tab.at(a, b).is_zero());
        }
      auto u = symbolic_triple(Flavor::OddPrym, n).u;
      auto phm = ph.map([](const Rational& q) { return MPoly(q); });
      BP num = BP::outer(u, phm) - BP::outer(phm, u);
      BP rhs = BP::in_xp(UPoly<MPoly>::x()) * num.divide_diff_squares();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("reduction routes agree") {
  for (int n = 1; n <= 2; ++n) {
    auto g = dirac_reduce(Flavor::EvenPrym, n, P({0, 1}), ReductionRoute::GeneratingFunctions);
    CHECK(g == dirac_reduce(Flavor::EvenPrym, n, P({0, 1}), ReductionRoute::ClosedForm));
    CHECK(g == dirac_reduce(Flavor::EvenPrym, n, P({0, 1}), ReductionRoute::TableRestriction));
    CHECK(g.jacobi());
  }
}

TEST_CASE("Prym flow") {
  for (Flavor f : {Flavor::OddPrym, Flavor::EvenPrym})
    for (int n = 1; n <= 2; ++n) {
      auto t = symbolic_triple(f, n);
      MPoly y = MPoly::var(static_cast<int>(coordinates(f, n).size()));
      auto d = prym_flow(t, y);
      CHECK((d.u * t.w + t.u * d.w + MPoly(2) * (t.v * d.v)).is_zero());
      Shape s = shape_of(f, n);
      for (int i = 0; i <= d.u.degree(); ++i)
        if (i % 2 != s.par_u) CHECK(d.u.coef(i).is_zero());
      for (int i = 0; i <= d.v.degree(); ++i)
        if (i % 2 != s.par_v) CHECK(d.v.coef(i).is_zero());
      for (int i = 0; i <= d.w.degree(); ++i)
        if (i % 2 != s.par_w) CHECK(d.w.coef(i).is_zero());
    }
}

TEST_CASE("Prym flow is the reduced Hamiltonian field") {
  Rng rng(17);
  // odd-Prym carries even phi, even-Prym odd phi
  struct Case {
    Flavor f;
    Poly phi;
  };
  for (const auto& c : {Case{Flavor::OddPrym, P({1})}, Case{Flavor::EvenPrym, P({0, 1})}})
    for (int n = 1; n <= 2; ++n) {
      auto tab = dirac_reduce(c.f, n, c.phi);
      for (int it = 0; it < 4; ++it) {
        Triple t = random_triple(rng, c.f, n);
        Rational y = random_rational(rng, true);
        auto d = prym_flow(t, y);
        d.flavor = c.f;
        d.g = n;
        CHECK(coords_of(d) == hamiltonian_flow_at(tab, c.f, n, c.phi(y), y, t));
      }
    }
}

TEST_CASE("even-Prym curve at the origin") {
  Rng rng(2);
  for (int n = 1; n <= 3; ++n) {
    Triple t = random_triple(rng, Flavor::EvenPrym, n);
    CHECK(momentum_H(t).coef(0) == t.v.coef(0) * t.v.coef(0));
  }
}
