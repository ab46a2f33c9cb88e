#include "support.hpp"

#include <algorithm>
#include <set>

#include "prymlab/painleve.hpp"

using namespace prymlab;
using namespace testing;

namespace {

// Even run lengths, checked on the cyclic 0/1 word directly.
bool even_runs(int n, const std::set<int>& A) {
  if (static_cast<int>(A.size()) == n) return n % 2 == 0;
  int start = 1;
  while (A.count(start)) ++start;  // a gap exists
  int run = 0;
  for (int k = 1; k <= n; ++k) {
    int i = (start + k - 1) % n + 1;
    if (A.count(i)) {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

std::map<std::string, Rational> random_params(Rng& rng, const Balance& b, int N) {
  std::map<std::string, Rational> p;
  for (const auto& s : free_slots(b, N)) p[s] = random_rational(rng);
  return p;
}

}  // namespace

TEST_CASE("Sigma_n") {
  auto s5 = sigma_enum(5);
  CHECK(s5.size() == 11);
  CHECK(s5.front().empty());
  CHECK(std::count_if(s5.begin(), s5.end(), [](const Subset& A) { return A.size() == 2; }) == 5);
  CHECK(std::count_if(s5.begin(), s5.end(), [](const Subset& A) { return A.size() == 4; }) == 5);

  auto s4 = sigma_enum(4);
  CHECK(s4.size() == 6);
  CHECK(std::find(s4.begin(), s4.end(), Subset{1, 2, 3, 4}) != s4.end());

  for (int n = 3; n <= 10; ++n) {
    CHECK(in_sigma(n, {1, 2}));
    auto all = sigma_enum(n);
    std::set<Subset> got(all.begin(), all.end());
    std::set<Subset> want;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<int> A;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) A.insert(i + 1);
      if (even_runs(n, A)) want.insert(Subset(A.begin(), A.end()));
    }
    CHECK(got == want);
  }
  CHECK(in_sigma(6, {6, 1}));
  CHECK_FALSE(in_sigma(6, {1, 3}));
}

TEST_CASE("indicial solutions") {
  CHECK(make_balance(5, {1, 2}).alpha == std::vector<Rational>{-1, 1, 0, 0, 0});
  CHECK(make_balance(6, {1, 2, 3, 4}).alpha == std::vector<Rational>{-2, 1, -1, 2, 0, 0});
  CHECK(make_balance(7, {7, 1}).alpha == std::vector<Rational>{1, 0, 0, 0, 0, 0, -1});
  CHECK_THROWS_AS(make_balance(5, {1, 2, 3}), InputError);
  CHECK_THROWS_AS(make_balance(4, {1, 2, 3, 4}), InputError);

  for (int n = 3; n <= 9; ++n) {
    auto sols = indicial_solutions(n);
    CHECK(sols.size() == sigma_enum(n).size() - (n % 2 == 0 ? 1 : 0));
    for (const auto& b : sols) {
      CHECK(satisfies_indicial(b));
      CHECK(b.order() * 2 == static_cast<int>(b.A.size()));
    }
  }
}

TEST_CASE("Kowalevski spectra") {
  auto r = kowalevski(5, {1, 2});
  CHECK(r.spectrum == std::vector<int>{-1, 1, 1, 2, 2});
  CHECK(r.nonneg_count == 4);
  CHECK(r.float_max_deviation < 1e-9);

  auto r6 = kowalevski(6, {1, 2, 3, 4});
  auto c = std::find_if(r6.blocks.begin(), r6.blocks.end(), [](const KowalevskiBlock& b) { return b.kind == 'C'; });
  REQUIRE(c != r6.blocks.end());
  auto spec = c->spectrum;
  std::sort(spec.begin(), spec.end());
  CHECK(spec == std::vector<int>{-2, -1, 1, 2});

  auto r1 = kowalevski(4, {1, 2});
  auto c1 = std::find_if(r1.blocks.begin(), r1.blocks.end(), [](const KowalevskiBlock& b) { return b.kind == 'C'; });
  REQUIRE(c1 != r1.blocks.end());
  spec = c1->spectrum;
  std::sort(spec.begin(), spec.end());
  CHECK(spec == std::vector<int>{-1, 1});

  for (int l = 1; l <= 5; ++l) {
    auto d = c_block_lambda_diagonal(l);
    REQUIRE(static_cast<int>(d.size()) == l);
    for (int j = 0; j < l; ++j) CHECK(d[j] == (j % 2 ? -(j + 1) : j + 1));
  }

  for (int n = 3; n <= 8; ++n)
    for (const auto& b : indicial_solutions(n)) {
      auto k = kowalevski(n, b.A);
      CHECK(k.nonneg_count == n - b.order());
      CHECK(std::count_if(k.spectrum.begin(), k.spectrum.end(), [](int e) { return e < 0; }) == b.order());
    }
}

TEST_CASE("principal balance for n = 5") {
  auto b = make_balance(5, {1, 2});
  CHECK(free_slots(b, 2) == std::vector<std::string>{"a2_1", "a4_1", "a3_2", "a5_2"});

  Rational al = 1, be = 2, ga = 3, de = Q(1, 6);
  std::map<std::string, Rational> params{{"a2_1", al}, {"a4_1", de}, {"a3_2", ga}, {"a5_2", be}};
  auto a = laurent_balance(b, params, 12);
  CHECK(a[0].coef(-1) == -1);
  CHECK(a[0].coef(0) == al);
  CHECK(a[0].coef(1) == -(al * al + 2 * be + ga) / 3);
  CHECK(a[1].coef(-1) == 1);
  CHECK(a[1].coef(0) == al);
  CHECK(a[1].coef(1) == (al * al - be - 2 * ga) / 3);
  CHECK(a[2].coef(0) == 0);
  CHECK(a[2].coef(1) == ga);
  CHECK(a[3].coef(0) == de);
  CHECK(a[3].coef(1) == 0);
  CHECK(a[4].coef(0) == 0);
  CHECK(a[4].coef(1) == be);

  for (const auto& r : km_residual(a))
    for (int e = -2; e <= 10; ++e) CHECK(r.coef(e) == 0);

  for (const auto& K : km_char_coefficients(a))
    for (int e = K.lo(); e < std::min(K.prec(), 10); ++e)
      if (e != 0) CHECK(K.coef(e) == 0);
}

TEST_CASE("general n: the two poles share their constant term") {
  Rng rng(41);
  for (int n = 3; n <= 8; ++n) {
    auto b = make_balance(n, {1, 2});
    auto a = laurent_balance(b, random_params(rng, b, 4), 4);
    CHECK(a[0].coef(0) == a[1].coef(0));
    for (const auto& r : km_residual(a))
      for (int e = -2; e <= 2; ++e) CHECK(r.coef(e) == 0);
  }
  // a longer run
  auto b = make_balance(7, {2, 3, 4, 5});
  auto a = laurent_balance(b, random_params(rng, b, 6), 6);
  for (const auto& r : km_residual(a))
    for (int e = -2; e <= 4; ++e) CHECK(r.coef(e) == 0);
}

TEST_CASE("parameter errors") {
  auto b = make_balance(5, {1, 2});
  CHECK_THROWS_AS(laurent_balance(b, {{"a2_1", 1}, {"a4_1", 1}, {"a3_2", 1}}, 3), InputError);
  CHECK_THROWS_AS(laurent_balance(b, {{"a2_1", 1}, {"a4_1", 1}, {"a3_2", 1}, {"a5_2", 1}, {"a1_1", 1}}, 3),
                  InputError);
  CHECK(slot_name(3, 2) == "a3_2");
}
