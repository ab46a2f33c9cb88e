#include "support.hpp"

#include "prymlab/bipoly.hpp"
#include "prymlab/mpoly.hpp"
#include "prymlab/series.hpp"
#include "prymlab/tridiag.hpp"

using namespace prymlab;
using namespace testing;

TEST_CASE("polynomial arithmetic and text format") {
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  auto [even, odd] = P({0, 0, 2, 1}).parity_split();
  CHECK(even == P({0, 0, 2}));
  CHECK(odd == P({0, 0, 0, 1}));
  CHECK(parse_poly("-4,0,9,0,-6,0,1") == P({-4, 0, 9, 0, -6, 0, 1}));
  CHECK(to_string(P({-4, 0, 9, 0, -6, 0, 1})) == "-4,0,9,0,-6,0,1");
  CHECK(to_string(parse_poly("1/2,-3/4")) == "1/2,-3/4");
  CHECK_THROWS_AS(parse_poly("1,x"), InputError);
}

TEST_CASE("divrem") {
  auto [q, r] = divrem(P({-4, 0, 9, 0, -6, 0, 1}), P({0, -3, 0, 1}));
  CHECK(q == P({0, -3, 0, 1}));
  CHECK(r == P({-4}));

  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> a(6), b(3);
    for (auto& c : a) c = random_rational(rng);
    for (auto& c : b) c = random_rational(rng);
    b.push_back(random_rational(rng, true));
    Poly A(a), B(b);
    auto [qq, rr] = divrem(A, B);
    CHECK(qq * B + rr == A);
    CHECK(rr.degree() < B.degree());
  }
}

TEST_CASE("divided difference") {
  using BP = BiPoly<Rational>;
  auto one = Poly::constant(1);
  CHECK(divided_difference(P({5, 1}), one) == BP::outer(one, one));
  CHECK(divided_difference(P({1, 2, 3}), P({1, 2, 3})).is_zero());
  BP s;
  s.add_to(1, 0, 1);
  s.add_to(0, 1, 1);
  CHECK(divided_difference(P({0, 0, 1}), one) == s);

  // (p(x)phi(x') - p(x')phi(x)) = (x - x') D, checked at rational sample points
  Rng rng(11);
  Poly p{random_rational(rng), random_rational(rng), random_rational(rng), 1};
  Poly phi{random_rational(rng), random_rational(rng)};
  BP D = divided_difference(p, phi);
  for (int it = 0; it < 10; ++it) {
    Rational x = random_rational(rng), xp = random_rational(rng);
    Rational d = 0;
    for (int i = 0; i < D.rows(); ++i)
      for (int j = 0; j < D.cols(); ++j) {
        Rational m = D.coef(i, j);
        for (int k = 0; k < i; ++k) m *= x;
        for (int k = 0; k < j; ++k) m *= xp;
        d += m;
      }
    CHECK(p(x) * phi(xp) - p(xp) * phi(x) == (x - xp) * d);
  }
}

TEST_CASE("parity projection") {
  using BP = BiPoly<Rational>;
  CHECK(parity_project(BP::in_x(P({0, 1})), Parity::Even, Parity::Even).is_zero());
  BP F;
  F.add_to(1, 1, 1);
  F.add_to(2, 0, 1);
  BP x2;
  x2.add_to(2, 0, 1);
  CHECK(parity_project(F, Parity::Even, Parity::Even) == x2);

  Rng rng(3);
  BP G(4, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) G.add_to(i, j, random_rational(rng));
  BP sum;
  for (auto px : {Parity::Even, Parity::Odd})
    for (auto py : {Parity::Even, Parity::Odd}) sum = sum + parity_project(G, px, py);
  CHECK(sum == G);
}

TEST_CASE("tridiagonal minors") {
  SUBCASE("n = 2") {
    Rational a1 = Q(3, 7), b1 = Q(-2), b2 = Q(5, 3);
    auto T = TridiagSpec<Rational>::from_lax({a1, 1 / a1}, {b1, b2});
    Poly x = Poly::x();
    CHECK(T.minor_det({}) == (x - Poly::constant(b1)) * (x - Poly::constant(b2)) - Poly::constant(a1));
    CHECK(T.minor_det({1}) == Poly::linear_root(b2));
    CHECK(T.minor_det({1, 2}) == Poly::constant(1));
    CHECK(T.minor_det({1}) * T.minor_det({2}) - T.minor_det({}) * T.minor_det({1, 2}) == Poly::constant(a1));
  }
  SUBCASE("n = 3 at a = (1,1,1)") {
    auto T = TridiagSpec<Rational>::from_lax({1, 1, 1}, {0, 0, 0});
    CHECK(T.minor_det({}) == P({0, -2, 0, 1}));
    CHECK(T.minor_det({3}) == P({-1, 0, 1}));
    // wrap-around {3, 4} is {3, 1}
    CHECK(T.minor_det({3, 4}) == T.minor_det({1, 3}));
    CHECK_THROWS_AS(T.minor_det({1, 4}), InputError);
  }
  SUBCASE("determinant lemma against a dense determinant") {
    Rng rng(5);
    for (int n = 2; n <= 6; ++n) {
      TridiagSpec<Rational> T;
      Rational prod = 1;
      for (int i = 0; i < n; ++i) T.diag.push_back(Poly::linear_root(random_rational(rng)));
      for (int i = 0; i + 1 < n; ++i) {
        T.super.push_back(random_rational(rng, true));
        T.sub.push_back(random_rational(rng, true));
        prod *= T.super.back() * T.sub.back();
      }
      CHECK(T.minor_det({1}) * T.minor_det({n}) - T.minor_det({}) * T.minor_det({1, n}) == Poly::constant(prod));

      // full determinant at a sample x via Laplace expansion
      Rational x = random_rational(rng);
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = T.diag[i](x);
      for (int i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = T.super[i];
        m[i + 1][i] = T.sub[i];
      }
      CHECK(laplace_det(m) == T.minor_det({})(x));
    }
  }
}

TEST_CASE("p^2 + r split") {
  auto [p, r] = pr_split(P({-4, 0, 9, 0, -6, 0, 1}), 3);
  CHECK(p == P({0, -3, 0, 1}));
  CHECK(r == P({-4}));
  auto [p2, r2] = pr_split(P({0, 0, 1}), 1);
  CHECK(p2 == P({0, 1}));
  CHECK(r2.is_zero());
  CHECK_THROWS_AS(pr_split(P({0, 0, 2}), 1), InputError);

  Rng rng(13);
  for (int it = 0; it < 10; ++it) {
    Triple t = random_triple(rng, Flavor::EvenMumford, 2);
    Poly H = t.u * t.w + t.v * t.v;
    int half = H.degree() / 2;
    auto [pp, rr] = pr_split(H, half);
    CHECK(pp * pp + rr == H);
    CHECK(rr.degree() < half);
  }
}

TEST_CASE("Laurent series") {
  using S = LaurentSeries;
  S t = S::monomial(1, 1);
  S f = S(1) + t;  // exact
  S g = f.truncated(6).inverse();
  CHECK(g.coef(0) == 1);
  CHECK(g.coef(3) == -1);
  CHECK(g.prec() == 6);
  CHECK((f * g).truncated(6).coef(0) == 1);
  for (int k = 1; k < 6; ++k) CHECK((f * g).coef(k) == 0);
  S inv_t = S::monomial(2, -1);
  CHECK(inv_t.valuation() == -1);
  CHECK(inv_t.pole_order() == 1);
  CHECK(inv_t.derivative().coef(-2) == -2);
}

TEST_CASE("multivariate polynomials") {
  MPoly x = MPoly::var(0), y = MPoly::var(1);
  MPoly f = x * x * y - MPoly(3) * y + MPoly(Q(1, 2));
  CHECK(f.eval({2, 5}) == Q(20 - 15) + Q(1, 2));
  CHECK(f.derivative(0) == MPoly(2) * x * y);
  CHECK(f.derivative(1) == x * x - MPoly(3));
  CHECK(f.compose({y, x}) == y * y * x - MPoly(3) * x + MPoly(Q(1, 2)));
  CHECK((f - f).is_zero());
  CHECK(f.total_degree() == 3);
  CHECK(x.to_string({"a", "b"}) == "a");
}
