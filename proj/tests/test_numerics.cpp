#include "support.hpp"

#include <cmath>

#include "prymlab/numerics.hpp"

using namespace prymlab;
using namespace testing;

namespace {

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0;
  for (size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

TEST_CASE("RK4 step on a linear field") {
  // x' = x: one step gives the degree-4 Taylor polynomial of e^h
  Field f = [](const std::vector<double>& x) { return x; };
  double h = 0.1;
  auto x = rk4_step(f, {1.0}, h);
  CHECK(x[0] == doctest::Approx(1 + h + h * h / 2 + h * h * h / 6 + h * h * h * h / 24).epsilon(1e-15));
}

TEST_CASE("KM fixed point") {
  Integration cfg{2.0, 1e-2, 10};
  auto tr = integrate_km(std::vector<Rational>(5, 1), cfg);
  for (const auto& s : tr.states)
    for (double v : s) CHECK(v == 1.0);
  CHECK_FALSE(tr.truncated);
}

TEST_CASE("KM n = 5 conservation") {
  Integration cfg{10.0, 1e-3, 100};
  auto tr = integrate_km({2, Q(1, 2), 1, 1, 1}, cfg);
  REQUIRE(tr.integral_names == std::vector<std::string>{"K", "L"});
  CHECK(tr.conserved.front()[0] == doctest::Approx(5.5));
  CHECK(tr.conserved.front()[1] == doctest::Approx(6.0));
  CHECK(tr.drift[0] <= 1e-8);
  CHECK(tr.drift[1] <= 1e-8);
  CHECK(tr.product_drift <= 1e-8);
  CHECK(tr.times.back() == doctest::Approx(10.0));
}

TEST_CASE("fourth-order convergence") {
  auto c = km_convergence({2, Q(1, 2), 1, 1, 1}, 10.0, 0.02);
  REQUIRE(c.ratios.size() == 1);
  CHECK(c.ratios[0] > 14);
  CHECK(c.ratios[0] < 18);
}

TEST_CASE("even n keeps the alternating products") {
  Integration cfg{5.0, 1e-3, 50};
  auto tr = integrate_km({2, Q(1, 2), 3, Q(1, 3)}, cfg);
  auto& names = tr.integral_names;
  REQUIRE(names.size() >= 2);
  CHECK(names[names.size() - 2] == "prod_odd");
  CHECK(names.back() == "prod_even");
  for (double d : tr.drift) CHECK(d <= 1e-9);
}

TEST_CASE("Toda flows conserve the integrals") {
  TodaPointQ p{{2, Q(1, 2), 1}, {Q(1, 3), Q(-1, 2), 0}};
  for (int i = 1; i <= 2; ++i) {
    auto tr = integrate_toda(p, i, Integration{2.0, 1e-3, 100});
    CHECK(tr.integral_names.size() == 3);
    for (double d : tr.drift) CHECK(d <= 1e-9);
  }
}

TEST_CASE("Mumford and Prym flows") {
  Triple t{Flavor::OddMumford, 2, Poly{Q(-1), Q(1, 2), 1}, Poly{Q(1, 4), Q(1, 3)}, Poly{Q(1, 2), Q(-1), 0, 1}};
  validate(t);
  auto tr = integrate_mumford(t, 0.5, Integration{1.0, 1e-3, 100});
  CHECK(tr.integral_names.size() == 5);
  for (double d : tr.drift) CHECK(d <= 1e-8);

  auto ab = mumford_compose(t, 0.5, -0.25, 0.3, 1e-3);
  auto ba = mumford_compose(t, -0.25, 0.5, 0.3, 1e-3);
  CHECK(max_abs_diff(ab, ba) <= 1e-6);

  Triple pr{Flavor::OddPrym, 1, Poly{Q(-1), 0, 1}, Poly{0, Q(1, 2)}, Poly{4, 0, -5, 0, 1}};
  validate(pr);
  auto tp = integrate_mumford(pr, 0.7, Integration{1.0, 1e-3, 100});
  for (double d : tp.drift) CHECK(d <= 1e-8);
}

TEST_CASE("blow-up guard") {
  Field f = [](const std::vector<double>& x) { return std::vector<double>{x[0] * x[0]}; };
  Integrals I = [](const std::vector<double>&) { return std::vector<double>{}; };
  auto tr = integrate(f, I, {1.0}, Integration{2.0, 1e-3, 1, 1e6});
  CHECK(tr.truncated);
  CHECK(tr.times.back() <= 1.0 + 1e-9);
  CHECK_FALSE(tr.diagnostic.empty());
  CHECK(tr.summary()["truncated"] == true);
}

TEST_CASE("CSV and summary") {
  auto tr = integrate_km(std::vector<Rational>(5, 1), Integration{0.1, 0.05, 1});
  std::ostringstream os;
  tr.write_csv(os);
  std::string header = os.str().substr(0, os.str().find('\n'));
  CHECK(header == "t,a1,a2,a3,a4,a5,K,L");
  auto j = tr.summary();
  CHECK(j["system"] == "km");
  CHECK(j["samples"] == tr.times.size());
  CHECK(parse_system("km") == System::KM);
  CHECK_THROWS_AS(parse_system("volterra"), InputError);
}
