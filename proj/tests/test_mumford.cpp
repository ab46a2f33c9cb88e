#include "support.hpp"

#include <algorithm>

#include "prymlab/bracket.hpp"
#include "prymlab/mumford.hpp"

using namespace prymlab;
using namespace testing;

namespace {

int index_of(const BracketTable& t, const std::string& name) {
  auto it = std::find(t.names().begin(), t.names().end(), name);
  REQUIRE(it != t.names().end());
  return static_cast<int>(it - t.names().begin());
}

const Flavor kMumford[] = {Flavor::OddMumford, Flavor::EvenMumford};

// Components of X_y in coordinate order, with y a constant.
std::vector<MPoly> flow_components(Flavor f, int g, const Rational& y) {
  auto d = mumford_flow(symbolic_triple(f, g), MPoly(y));
  d.flavor = f;
  d.g = g;
  return coords_of(d);
}

}  // namespace

TEST_CASE("bracket table basics") {
  auto t = mumford_bracket_table(Flavor::OddMumford, 1, P({1}));
  CHECK(t.at(index_of(t, "u0"), index_of(t, "v0")) == MPoly(1));
  CHECK(t.at(index_of(t, "v0"), index_of(t, "u0")) == MPoly(-1));

  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g) {
      auto tab = mumford_bracket_table(f, g, P({1}));
      CHECK(tab.antisymmetric());
      for (int i = 0; i < tab.size(); ++i)
        for (int j = 0; j < tab.size(); ++j) {
          char a = tab.names()[i][0], b = tab.names()[j][0];
          if (a == b && a != 'w') CHECK(tab.at(i, j).is_zero());
        }
    }
}

TEST_CASE("phi must have degree at most g") {
  CHECK_THROWS_AS(mumford_bracket_table(Flavor::OddMumford, 1, P({0, 0, 1})), InputError);
  CHECK_NOTHROW(mumford_bracket_table(Flavor::OddMumford, 2, P({0, 0, 1})));
}

TEST_CASE("bracket is linear in phi") {
  for (Flavor f : kMumford) {
    auto a = mumford_bracket_table(f, 2, P({1}));
    auto b = mumford_bracket_table(f, 2, P({0, 1}));
    auto c = mumford_bracket_table(f, 2, P({3, -2}));
    CHECK(c == Rational(3) * a + Rational(-2) * b);
  }
}

TEST_CASE("rank 2g at random points") {
  Rng rng(21);
  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g) {
      auto tab = mumford_bracket_table(f, g, P({1}));
      for (int it = 0; it < 3; ++it) CHECK(tab.rank_at(coords_of(random_triple(rng, f, g))) == 2 * g);
    }
}

TEST_CASE("momentum polynomial") {
  Triple t{Flavor::EvenMumford, 2, P({-1, 0, 1}), Poly(), P({4, 0, -5, 0, 1})};
  CHECK(momentum_H(t) == P({-4, 0, 9, 0, -6, 0, 1}));
  Rng rng(1);
  Triple r = random_triple(rng, Flavor::OddMumford, 2);
  r.v = Poly();
  CHECK(momentum_H(r) == r.u * r.w);
}

TEST_CASE("coefficients of H are in involution") {
  const Rational ys[] = {Q(0), Q(1), Q(-2, 3), Q(5)};
  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g)
      for (int d = 0; d <= g; ++d) {
        std::vector<Rational> ph(d + 1, 0);
        ph[d] = 1;
        auto tab = mumford_bracket_table(f, g, Poly(ph));
        auto sym = symbolic_triple(f, g);
        for (const auto& y1 : ys)
          for (const auto& y2 : ys) CHECK(tab.bracket(H_at(sym, y1), H_at(sym, y2)).is_zero());
      }
}

TEST_CASE("Lax flow conserves H and keeps u monic") {
  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g) {
      auto t = symbolic_triple(f, g);
      MPoly y = MPoly::var(static_cast<int>(coordinates(f, g).size()));
      auto d = mumford_flow(t, y);
      auto dH = d.u * t.w + t.u * d.w + MPoly(2) * (t.v * d.v);
      CHECK(dH.is_zero());
      CHECK(d.u.coef(shape_of(f, g).deg_u).is_zero());
    }
}

TEST_CASE("Lax flow is the Hamiltonian field of H(y)") {
  Rng rng(4);
  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g) {
      auto tab = mumford_bracket_table(f, g, P({1}));
      for (int it = 0; it < 5; ++it) {
        Triple t = random_triple(rng, f, g);
        Rational y = random_rational(rng);
        auto d = mumford_flow(t, y);
        d.flavor = f;
        d.g = g;
        CHECK(coords_of(d) == hamiltonian_flow_at(tab, f, g, 1, y, t));
      }
    }
}

TEST_CASE("Lax flows commute") {
  for (Flavor f : kMumford)
    for (int g = 1; g <= 2; ++g) {
      int N = static_cast<int>(coordinates(f, g).size());
      auto X = flow_components(f, g, Q(2));
      auto Y = flow_components(f, g, Q(-1, 3));
      for (int i = 0; i < N; ++i) {
        MPoly c;
        for (int j = 0; j < N; ++j) c += Y[i].derivative(j) * X[j] - X[i].derivative(j) * Y[j];
        CHECK(c.is_zero());
      }
    }
}

TEST_CASE("triple validation") {
  Triple bad{Flavor::OddMumford, 1, P({0, 2}), Poly(), P({0, 0, 1})};
  CHECK_THROWS_AS(validate(bad), InputError);
  CHECK(parse_flavor("odd-mumford") == Flavor::OddMumford);
  CHECK(to_string(Flavor::EvenPrym) == "even-prym");
  CHECK_THROWS_AS(parse_flavor("mumford"), InputError);
}
