#include "support.hpp"

#include "prymlab/bracket.hpp"
#include "prymlab/toda.hpp"

using namespace prymlab;
using namespace testing;

namespace {

std::vector<Rational> point_coords(const TodaPointQ& p, bool km) {
  std::vector<Rational> c = p.a;
  if (!km) c.insert(c.end(), p.b.begin(), p.b.end());
  return c;
}

std::vector<Rational> flow_coords(const TodaPointQ& d) { return point_coords(d, false); }

std::vector<Rational> eval_all(const std::vector<MPoly>& f, const std::vector<Rational>& pt) {
  std::vector<Rational> out;
  for (const auto& x : f) out.push_back(x.eval(pt));
  return out;
}

}  // namespace

TEST_CASE("Lax operator") {
  auto L = lax_matrix(km_point({1, 1, 1}));
  for (int i = 0; i < 3; ++i) CHECK(L[i][i].is_zero());
  CHECK(L[0][1].coef(0) == 1);
  CHECK(L[1][2].coef(0) == 1);
  CHECK(L[1][0].coef(0) == 1);
  CHECK(L[2][1].coef(0) == 1);
  CHECK(L[0][2].coef(-1) == 1);
  CHECK(L[0][2].terms().size() == 1);
  CHECK(L[2][0].coef(1) == 1);
  CHECK(L[2][0].terms().size() == 1);

  Rng rng(1);
  auto p = random_toda_point(rng, 5);
  auto t = trace(lax_matrix(p));
  CHECK(t.h_free());
  Rational s = 0;
  for (const auto& b : p.b) s += b;
  CHECK(t.coef(0) == s);
}

TEST_CASE("point validation and shift") {
  CHECK_THROWS_AS(km_point({1, 2, 1}), InputError);
  CHECK_NOTHROW(km_point({2, Q(1, 2), 1, 1}));
  TodaPointQ p{{2, Q(1, 2), 1}, {1, 2, 3}};
  auto s = shift(p);
  CHECK(s.a == std::vector<Rational>{Q(1, 2), 1, 2});
  CHECK(s.b == std::vector<Rational>{2, 3, 1});
  CHECK(shift(p, 3).a == p.a);
  CHECK(shift(p, -1).b == std::vector<Rational>{3, 1, 2});
}

TEST_CASE("integrals") {
  Rng rng(2);
  for (int n = 2; n <= 8; ++n) {
    auto p = random_toda_point(rng, n);
    auto I = toda_integrals(p);  // throws if h survives
    REQUIRE(static_cast<int>(I.size()) == n);
    Rational s = 0;
    for (const auto& b : p.b) s += b;
    CHECK(I[0] == s);
    CHECK(toda_integrals(shift(p)) == I);

    auto km = random_toda_point(rng, n, true);
    auto J = toda_integrals(km);
    for (int j = 0; j < n; j += 2) CHECK(J[j] == 0);
  }
}

TEST_CASE("n = 5 integrals against K and L") {
  Rng rng(3);
  for (int it = 0; it < 5; ++it) {
    auto p = random_toda_point(rng, 5, true);
    Rational K = 0, L = 0;
    for (int i = 0; i < 5; ++i) {
      K += p.a[i];
      L += p.a[i] * p.a[(i + 2) % 5];
    }
    auto I = toda_integrals(p);
    // tr L^2 / 2 = K and tr L^4 / 4 = K^2/2 - L
    CHECK(I[1] == K);
    CHECK(I[3] == K * K / 2 - L);
  }
}

TEST_CASE("characteristic polynomial") {
  auto K = char_poly_checked(km_point({1, 1, 1}));
  CHECK(K == P({0, -6, 0, 2}));
  auto D = spectral_determinant(km_point({1, 1, 1}));
  CHECK(D.coef(1) == P({-1}));
  CHECK(D.coef(-1) == P({-1}));
  CHECK(D.coef(0) == P({0, -3, 0, 1}));

  Rng rng(4);
  for (int n = 3; n <= 6; ++n) {
    auto p = random_toda_point(rng, n);
    auto k = char_poly_checked(p);
    Rational s = 0;
    for (const auto& b : p.b) s += b;
    CHECK(k.coef(n - 1) / 2 == -s);
    CHECK(k.lead() == 2);
  }
  auto q = km_point({2, Q(1, 2), 1, 1, 1});
  CHECK(char_poly(q) == P({0, 12, 0, -11, 0, 2}));
}

TEST_CASE("bracket values") {
  TodaPointQ p{{Q(3), Q(1, 3), 1}, {Q(1, 2), Q(-1), 2}};
  CHECK(toda_bracket(TodaBracket::Linear, 1, 1, Pair::AB, p) == 3);
  CHECK(toda_bracket(TodaBracket::Linear, 1, 2, Pair::AB, p) == -3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(toda_bracket(TodaBracket::Linear, i, j, Pair::AA, p) == 0);
      CHECK(toda_bracket(TodaBracket::Linear, i, j, Pair::BB, p) == 0);
    }

  auto km4 = km_point({2, Q(1, 2), 1, 1});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(toda_bracket(TodaBracket::KM, i, j, Pair::AA, km4) == -toda_bracket(TodaBracket::KM, j, i, Pair::AA, km4));
  CHECK(abs(toda_bracket(TodaBracket::KM, 1, 2, Pair::AA, km4)) == 1);
  CHECK(toda_bracket(TodaBracket::KM, 1, 3, Pair::AA, km4) == 0);

  for (int n = 2; n <= 4; ++n) {
    CHECK(toda_table(TodaBracket::Linear, n).antisymmetric());
    CHECK(toda_table(TodaBracket::Quadratic, n).antisymmetric());
    auto pencil = Rational(2) * toda_table(TodaBracket::Linear, n) + Rational(-1) * toda_table(TodaBracket::Quadratic, n);
    CHECK(toda_pencil(n, P({2, -1})) == pencil);
  }
}

TEST_CASE("Casimirs") {
  for (int n = 3; n <= 5; ++n) {
    auto sym = toda_symbolic(n);
    auto I = toda_integrals_h0(sym);
    CHECK(toda_table(TodaBracket::Linear, n).non_casimir_witnesses(I[0]).empty());
    MPoly prod(1);
    for (const auto& a : sym.a) prod *= a;
    CHECK(toda_table(TodaBracket::Quadratic, n).non_casimir_witnesses(prod).empty());
    // h-free part of det L
    MPoly det = char_poly(sym).coef(0);
    CHECK(toda_table(TodaBracket::Quadratic, n).non_casimir_witnesses(det).empty());
    // prod a is also central for the linear bracket: {a_i, b_i} = a_i = -{a_i, b_{i+1}}
    CHECK(toda_table(TodaBracket::Linear, n).non_casimir_witnesses(prod).empty());
    CHECK_FALSE(toda_table(TodaBracket::Linear, n).non_casimir_witnesses(I[1]).empty());
  }
}

TEST_CASE("integrals are in involution") {
  for (int n = 3; n <= 4; ++n) {
    auto I = toda_integrals_h0(toda_symbolic(n));
    for (auto kind : {TodaBracket::Linear, TodaBracket::Quadratic}) {
      auto tab = toda_table(kind, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) CHECK(tab.bracket(I[i], I[j]).is_zero());
    }
  }
}

TEST_CASE("hierarchy flows are Hamiltonian") {
  Rng rng(6);
  for (int n = 3; n <= 5; ++n) {
    auto I = toda_integrals_h0(toda_symbolic(n));
    auto lin = toda_table(TodaBracket::Linear, n), quad = toda_table(TodaBracket::Quadratic, n);
    auto p = random_toda_point(rng, n);
    auto pt = point_coords(p, false);
    for (int i = 1; i < n; ++i) CHECK(flow_coords(toda_flow(p, i)) == eval_all(lin.hamiltonian_field(I[i]), pt));
    for (int j = 0; j + 1 < n; ++j)
      CHECK(flow_coords(toda_flow(p, j + 1)) == eval_all(quad.hamiltonian_field(I[j]), pt));
  }
  CHECK_THROWS_AS(toda_flow(km_point({1, 1, 1}), 3), InputError);
}

TEST_CASE("KM field and tangency to the KM locus") {
  CHECK(km_field(std::vector<Rational>{1, 1, 1, 1, 1}) == std::vector<Rational>(5, 0));
  Rng rng(10);
  for (int n = 3; n <= 6; ++n) {
    auto p = random_toda_point(rng, n, true);
    CHECK(toda_flow(p, 2).a == km_field(p.a));
    for (int i = 1; i < n; ++i) {
      auto d = toda_flow(p, i);
      bool b_zero = std::all_of(d.b.begin(), d.b.end(), [](const Rational& q) { return sgn(q) == 0; });
      // even members of the hierarchy are tangent, odd ones leave the locus
      CHECK(b_zero == (i % 2 == 0));
    }
    // KM bracket, Hamiltonian sum a_i
    auto sym = km_symbolic(n);
    MPoly sum;
    for (const auto& a : sym.a) sum += a;
    CHECK(eval_all(toda_table(TodaBracket::KM, n).hamiltonian_field(sum), p.a) == km_field(p.a));
  }
}

TEST_CASE("alternating products for even n") {
  auto [o, e] = km_even_split(std::vector<Rational>{2, Q(1, 2), 1, 1});
  CHECK(o == 2);
  CHECK(e == Q(1, 2));
  auto [o1, e1] = km_even_split(std::vector<Rational>{1, 1, 1, 1});
  CHECK(o1 == 1);
  CHECK(e1 == 1);
  CHECK_THROWS_AS(km_even_split(std::vector<Rational>{1, 1, 1}), InputError);

  auto a = km_symbolic(6).a;
  auto F = km_field(a);
  auto [po, pe] = km_even_split(a);
  MPoly d;
  for (int i = 0; i < 6; ++i) d += po.derivative(i) * F[i];
  CHECK(d.is_zero());
}
