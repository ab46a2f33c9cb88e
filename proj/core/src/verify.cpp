#include "prymlab/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "prymlab/casefive.hpp"
#include "prymlab/morphism.hpp"
#include "prymlab/numerics.hpp"
#include "prymlab/painleve.hpp"
#include "prymlab/prym.hpp"

namespace prymlab {

Rational random_rational(Rng& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || sgn(q) != 0) return q;
  }
}

TodaPointQ random_toda_point(Rng& rng, int n, bool km) {
  TodaPointQ p;
  Rational prod = 1;
  for (int i = 0; i + 1 < n; ++i) {
    p.a.push_back(random_rational(rng, true));
    prod *= p.a.back();
  }
  p.a.push_back(1 / prod);
  for (int i = 0; i < n; ++i) p.b.push_back(km ? Rational(0) : random_rational(rng));
  return p;
}

Triple random_triple(Rng& rng, Flavor f, int g) {
  std::vector<Rational> c;
  for (size_t k = 0; k < coordinates(f, g).size(); ++k) c.push_back(random_rational(rng));
  return triple_from_coords(f, g, c);
}

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// 1. u w + v^2 = p^2 - 4 for 200 random points, n in 3..8, every m.
Check fiber(Rng& rng) {
  Check c;
  int tested = 0;
  for (int k = 0; k < 200; ++k) {
    int n = 3 + k % 6;
    TodaPointQ pt = random_toda_point(rng, n);
    for (int m = 1; m <= n; ++m) {
      auto img = phi(pt, m);
      if (!(img.u * img.w + img.v * img.v == img.p * img.p - UPoly<Rational>::constant(4)))
        c.fail("identity fails at n=" + std::to_string(n) + " m=" + std::to_string(m));
      try {
        phi_triple(img, n);
      } catch (const std::exception& e) {
        c.fail(std::string("image not in M'_{n-1}: ") + e.what());
      }
      ++tested;
    }
  }
  if (c.ok) c.detail = std::to_string(tested) + " (point, m) pairs";
  return c;
}

// 2. phi_inverse o phi = id on 100 random points, n <= 6.
Check roundtrip(Rng& rng) {
  Check c;
  for (int k = 0; k < 100; ++k) {
    int n = 3 + k % 4;
    TodaPointQ pt = random_toda_point(rng, n);
    auto img = phi(pt, n);
    TodaPointQ back = phi_inverse(img.u, img.v, img.w, n);
    if (back.a != pt.a || back.b != pt.b) c.fail("round trip differs at n=" + std::to_string(n));
  }
  if (c.ok) c.detail = "100 points, n = 3..6";
  return c;
}

// 3. Delta_1 Delta_n - Delta Delta_{1,n} = prod alpha_i gamma_i, with Delta
// cross-checked against a dense determinant.
Check detlemma(Rng& rng) {
  Check c;
  for (int k = 0; k < 500; ++k) {
    int n = 2 + k % 7;
    TridiagSpec<Rational> T;
    Rational prod = 1;
    for (int i = 0; i < n; ++i) T.diag.push_back(UPoly<Rational>::linear_root(random_rational(rng)));
    for (int i = 0; i + 1 < n; ++i) {
      T.super.push_back(random_rational(rng, true));
      T.sub.push_back(random_rational(rng, true));
      prod *= T.super.back() * T.sub.back();
    }
    UPoly<Rational> lhs = T.minor_det({1}) * T.minor_det({n}) - T.minor_det({}) * T.minor_det({1, n});
    if (!(lhs == UPoly<Rational>::constant(prod))) c.fail("identity fails at n=" + std::to_string(n));
    std::vector<std::vector<UPoly<Rational>>> M(n, std::vector<UPoly<Rational>>(n));
    for (int i = 0; i < n; ++i) M[i][i] = T.diag[i];
    for (int i = 0; i + 1 < n; ++i) {
      M[i][i + 1] = UPoly<Rational>::constant(T.super[i]);
      M[i + 1][i] = UPoly<Rational>::constant(T.sub[i]);
    }
    if (!(laplace_det(M) == T.minor_det({}))) c.fail("continuant disagrees with the dense determinant");
  }
  if (c.ok) c.detail = "500 trials, n = 2..8";
  return c;
}

UPoly<Rational> P(std::vector<Rational> c) { return UPoly<Rational>(std::move(c)); }

// 4. Jacobi for all bracket families.
Check brackets() {
  Check c;
  int count = 0;
  auto expect = [&](const BracketTable& t, const std::string& what) {
    ++count;
    if (!t.jacobi()) c.fail("Jacobi fails: " + what);
  };
  // deg phi <= g; x^2 only enters at g = 2
  for (Flavor f : {Flavor::OddMumford, Flavor::EvenMumford})
    for (int g = 1; g <= 2; ++g)
      for (int d = 0; d <= g; ++d) {
        std::vector<Rational> ph(d + 1, Rational(0));
        ph[d] = 1;
        expect(mumford_bracket_table(f, g, P(ph)), to_string(f) + " g=" + std::to_string(g) + " phi=x^" + std::to_string(d));
      }
  expect(dirac_reduce(Flavor::OddPrym, 1, P({1})), "odd-prym phi=1");
  expect(dirac_reduce(Flavor::OddPrym, 1, P({0, 0, 1})), "odd-prym phi=x^2");
  expect(dirac_reduce(Flavor::EvenPrym, 1, P({0, 1})), "even-prym phi=x");
  expect(dirac_reduce(Flavor::EvenPrym, 1, P({0, 0, 0, 1})), "even-prym phi=x^3");
  for (int n = 2; n <= 4; ++n) {
    auto lin = toda_table(TodaBracket::Linear, n), quad = toda_table(TodaBracket::Quadratic, n);
    expect(lin, "toda linear n=" + std::to_string(n));
    expect(quad, "toda quadratic n=" + std::to_string(n));
    expect(lin + Rational(3) * quad, "toda pencil n=" + std::to_string(n));
    expect(toda_table(TodaBracket::KM, n), "km n=" + std::to_string(n));
  }
  for (const auto& ph : {P({1}), P({0, 1}), P({2, 1})}) expect(quad_mumford_bracket(3, ph), "quadratic phi=" + pretty(ph));
  if (c.ok) c.detail = std::to_string(count) + " tables";
  return c;
}

// 5. generic reduction == closed form == table restriction, n <= 2.
Check reduction() {
  Check c;
  int count = 0;
  auto cmp = [&](Flavor f, int n, const UPoly<Rational>& ph) {
    auto gen = dirac_reduce(f, n, ph, ReductionRoute::GeneratingFunctions);
    auto closed = dirac_reduce(f, n, ph, ReductionRoute::ClosedForm);
    auto restr = dirac_reduce(f, n, ph, ReductionRoute::TableRestriction);
    ++count;
    if (!(gen == closed) || !(gen == restr)) c.fail(to_string(f) + " n=" + std::to_string(n) + " phi=" + pretty(ph));
  };
  for (int n = 1; n <= 2; ++n) {
    cmp(Flavor::OddPrym, n, P({1}));
    cmp(Flavor::OddPrym, n, P({0, 0, 1}));
    cmp(Flavor::OddPrym, n, P({3, 0, -1}));
    cmp(Flavor::EvenPrym, n, P({0, 1}));
    cmp(Flavor::EvenPrym, n, P({0, 2, 0, 1}));
  }
  if (c.ok) c.detail = std::to_string(count) + " (flavor, n, phi) cases";
  return c;
}

// 6. nonneg count = n - ord A and the floating cross-check, n <= 10.
Check kowalevski_counts() {
  Check c;
  int count = 0;
  double worst = 0;
  for (int n = 3; n <= 10; ++n)
    for (const auto& b : indicial_solutions(n)) {
      auto rep = kowalevski(n, b.A);
      ++count;
      worst = std::max(worst, rep.float_max_deviation);
      if (rep.nonneg_count != n - b.order()) c.fail("count fails for n=" + std::to_string(n));
      if (!(rep.float_max_deviation <= 1e-8)) c.fail("floating spectrum deviates for n=" + std::to_string(n));
    }
  std::ostringstream os;
  os << count << " balances, max float deviation " << worst;
  if (c.ok) c.detail = os.str();
  return c;
}

// Independent brute force over bitmasks.
bool runs_even(unsigned mask, int n) {
  unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  if (mask == full) return n % 2 == 0;
  int z = 0;
  while (mask & (1u << z)) ++z;
  int len = 0;
  for (int k = 1; k <= n; ++k) {
    bool in = mask & (1u << ((z + k) % n));
    if (in) {
      ++len;
    } else {
      if (len % 2) return false;
      len = 0;
    }
  }
  return true;
}

Check sigma() {
  Check c;
  for (int n = 2; n <= 16; ++n) {
    std::vector<Subset> brute;
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (!runs_even(m, n)) continue;
      Subset s;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) s.push_back(i + 1);
      brute.push_back(s);
    }
    auto got = sigma_enum(n);
    std::sort(brute.begin(), brute.end());
    std::sort(got.begin(), got.end());
    if (got != brute) c.fail("mismatch at n=" + std::to_string(n));
  }
  size_t five = sigma_enum(5).size();
  if (five != 11) c.fail("#Sigma_5 = " + std::to_string(five));
  if (c.ok) c.detail = "n = 2..16 agree, #Sigma_5 = 11";
  return c;
}

// 8. principal balance, n = 5.
Check balance5(Rng& rng) {
  Check c;
  Balance b = make_balance(5, {1, 2});
  for (int k = 0; k < 20; ++k) {
    Rational al = random_rational(rng), be = random_rational(rng), ga = random_rational(rng), de = random_rational(rng);
    auto a = laurent_balance(b, {{"a2_1", al}, {"a4_1", de}, {"a3_2", ga}, {"a5_2", be}}, 3);
    Rational third(1, 3);
    std::vector<std::array<Rational, 3>> want = {
        {-1, al, -third * (al * al + 2 * be + ga)},
        {1, al, third * (al * al - be - 2 * ga)},
        {0, 0, ga},
        {0, de, 0},
        {0, 0, be},
    };
    for (int i = 0; i < 5; ++i)
      for (int e = -1; e <= 1; ++e)
        if (a[i].coef(e) != want[i][e + 1]) c.fail("a" + std::to_string(i + 1) + " at t^" + std::to_string(e));
  }
  auto a = laurent_balance(b, {{"a2_1", 1}, {"a4_1", Rational(1, 6)}, {"a3_2", 3}, {"a5_2", 2}}, 12);
  for (const auto& r : km_residual(a)) {
    if (r.prec() < 10) c.fail("residual known only through t^" + std::to_string(r.prec()));
    for (int e = -2; e <= 10; ++e)
      if (sgn(r.coef(e)) != 0) c.fail("residual nonzero at t^" + std::to_string(e));
  }
  if (c.ok) c.detail = "20 parameter draws through t^1; order-12 residual zero through t^10";
  return c;
}

// 9. five points, incidence via boundary charts, balance limits.
Check divisor5(Rng& rng) {
  Check c;
  Rational k(3), l(7, 2);
  auto pts = divisor_points_5(k, l);
  using A = std::array<Rational, 9>;
  std::array<A, 5> shown = {A{0, 0, 0, 1, 0, 0, 0, 0, 0}, A{0, 0, 0, 0, 0, 0, 0, 0, 1}, A{1, 0, 0, 0, 0, 0, 1, 0, -3},
                            A{1, 0, 0, 0, 0, 0, -1, 0, 0}, A{0, 0, 0, 0, 0, 0, 0, 1, -1}};
  for (int i = 0; i < 5; ++i) {
    if (!(pts[i] == ProjectivePoint9(shown[i]))) c.fail("p" + std::to_string(i + 1) + " differs");
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) c.fail("points coincide");
  }
  std::vector<std::pair<Rational, Rational>> kl = {{k, l}};
  for (int t = 0; t < 3; ++t) kl.push_back({random_rational(rng), random_rational(rng)});
  for (const auto& [kk, ll] : kl) {
    auto inc = incidence_matrix(kk, ll);
    for (int i = 0; i < 5; ++i) {
      int on = 0;
      for (int j = 0; j < 5; ++j) {
        bool want = j == i || j == (i + 1) % 5 || j == (i + 4) % 5;
        if (inc[i][j] != want) c.fail("incidence Gamma" + std::to_string(i + 1) + " / p" + std::to_string(j + 1));
        on += inc[j][i];
      }
      if (on != 3) c.fail("p" + std::to_string(i + 1) + " lies on " + std::to_string(on) + " curves");
    }
  }
  for (int t = 0; t < 5; ++t) {
    Rational be = random_rational(rng, true), de = random_rational(rng, true), kk = random_rational(rng);
    PrincipalParams pp = principal_params(be, de, kk);
    for (int s = 0; s < 5; ++s) {
      auto a = laurent_balance(principal_balance_5(s), principal_slots(s, pp), 6);
      ProjectivePoint9 lim = balance_to_divisor(a);
      if (!(lim == gamma_param(s + 1, be, de, kk, pp.l))) c.fail("balance shift " + std::to_string(s) + " misses Gamma" + std::to_string(s + 1));
    }
  }
  if (c.ok) c.detail = "points, 5_3 incidence at 4 (k,l), 25 balance limits";
  return c;
}

// 10. KM n = 5 reference run.
Check numerics_check() {
  Check c;
  std::vector<Rational> a = {2, Rational(1, 2), 1, 1, 1};
  Integration cfg;
  cfg.t_end = 10;
  cfg.step = 1e-3;
  cfg.record_every = 10;
  Trajectory tr = integrate_km(a, cfg);
  if (tr.truncated) c.fail(tr.diagnostic);
  for (size_t i = 0; i < tr.drift.size(); ++i)
    if (!(tr.drift[i] <= 1e-8)) c.fail(tr.integral_names[i] + " drift " + std::to_string(tr.drift[i]));
  Convergence conv = km_convergence(a, 10, 0.02, 2);
  double ratio = conv.ratios.at(0);
  if (!(ratio >= 12 && ratio <= 20)) c.fail("convergence ratio " + std::to_string(ratio));
  std::ostringstream os;
  os << "drift K " << tr.drift[0] << ", L " << tr.drift[1] << "; ratio " << ratio << " (h = 0.02, 0.01, 0.005)";
  if (c.ok) c.detail = os.str();
  return c;
}

bool forbidden_zero(const UPoly<MPoly>& p, int parity) {
  for (int i = 0; i <= p.degree(); ++i)
    if (i % 2 != parity && !is_zero(p.coef(i))) return false;
  return true;
}

// 11. KM images are Prym triples; Prym flows keep the parity.
Check parity(Rng& rng) {
  Check c;
  for (int k = 0; k < 100; ++k) {
    int n = 3 + k % 3;
    TodaPointQ pt = random_toda_point(rng, n, true);
    for (int m = 1; m <= n; ++m) {
      auto img = phi(pt, m);
      try {
        phi_prym_triple(img, n);
      } catch (const std::exception& e) {
        c.fail(std::string("n=") + std::to_string(n) + ": " + e.what());
      }
    }
  }
  for (Flavor f : {Flavor::OddPrym, Flavor::EvenPrym})
    for (int n = 1; n <= 2; ++n) {
      auto t = symbolic_triple(f, n);
      MPoly y = MPoly::var(static_cast<int>(coordinates(f, n).size()));
      auto d = prym_flow(t, y);
      Shape s = shape_of(f, n);
      if (!forbidden_zero(d.u, s.par_u) || !forbidden_zero(d.v, s.par_v) || !forbidden_zero(d.w, s.par_w))
        c.fail("prym_flow leaves " + to_string(f) + " n=" + std::to_string(n));
    }
  if (c.ok) c.detail = "100 KM points (n = 3,4,5, all m); symbolic flows n = 1,2";
  return c;
}

// 12. alternating products conserved for n = 4, 6.
Check evensplit() {
  Check c;
  for (int n : {4, 6}) {
    auto a = km_symbolic(n).a;
    auto F = km_field(a);
    auto [po, pe] = km_even_split(a);
    for (const MPoly* P : {&po, &pe}) {
      MPoly d;
      for (int i = 0; i < n; ++i) d += P->derivative(i) * F[i];
      if (!(d == MPoly())) c.fail("derivative nonzero at n=" + std::to_string(n));
    }
  }
  if (c.ok) c.detail = "n = 4, 6 symbolic";
  return c;
}

struct Entry {
  int id;
  std::string suite;
  std::string title;
  std::function<Check(Rng&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {1, "fiber", "fiber identity u w + v^2 = p^2 - 4", fiber},
      {2, "roundtrip", "phi_inverse o phi = id", roundtrip},
      {3, "detlemma", "determinant lemma", detlemma},
      {4, "brackets", "Jacobi identities", [](Rng&) { return brackets(); }},
      {5, "reduction", "reduced brackets: generic = closed form", [](Rng&) { return reduction(); }},
      {6, "kowalevski", "Kowalevski counts n <= 10", [](Rng&) { return kowalevski_counts(); }},
      {7, "sigma", "Sigma_n enumeration n <= 16", [](Rng&) { return sigma(); }},
      {8, "balance5", "n=5 principal balance", balance5},
      {9, "divisor5", "n=5 divisor data", divisor5},
      {10, "numerics", "KM n=5 conservation and convergence", [](Rng&) { return numerics_check(); }},
      {11, "parity", "Prym parity of images and flows", parity},
      {12, "evensplit", "even-n alternating products", [](Rng&) { return evensplit(); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.suite);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(const std::string& name, std::uint64_t seed) {
  bool all = name == "all";
  bool known = all;
  std::vector<CriterionResult> out;
  for (const auto& e : registry()) {
    if (!all && e.suite != name) continue;
    known = true;
    // each criterion gets its own stream so that suites agree with "all"
    Rng rng(seed + static_cast<std::uint64_t>(e.id));
    CriterionResult r;
    r.id = e.id;
    r.name = e.suite + ": " + e.title;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Check c = e.run(rng);
      r.pass = c.ok;
      r.detail = c.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  if (!known) throw InputError("unknown suite '" + name + "'");
  return out;
}

}  // namespace prymlab
