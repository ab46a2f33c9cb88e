#include "prymlab/numerics.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "prymlab/prym.hpp"

namespace prymlab {

std::string to_string(System s) {
  switch (s) {
    case System::KM: return "km";
    case System::Toda: return "toda";
    case System::Mumford: return "mumford";
    case System::Prym: return "prym";
  }
  return "";
}

System parse_system(const std::string& s) {
  if (s == "km") return System::KM;
  if (s == "toda") return System::Toda;
  if (s == "mumford") return System::Mumford;
  if (s == "prym") return System::Prym;
  throw InputError("unknown system '" + s + "' (km, toda, mumford, prym)");
}

std::vector<double> rk4_step(const Field& f, const std::vector<double>& x, double h) {
  size_t n = x.size();
  auto axpy = [n](const std::vector<double>& a, double s, const std::vector<double>& b) {
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  auto k1 = f(x);
  auto k2 = f(axpy(x, h / 2, k1));
  auto k3 = f(axpy(x, h / 2, k2));
  auto k4 = f(axpy(x, h, k3));
  std::vector<double> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = x[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return r;
}

Trajectory integrate(const Field& f, const Integrals& I, std::vector<double> x, const Integration& cfg) {
  if (!(cfg.step > 0)) throw InputError("step must be > 0");
  if (!(cfg.t_end > 0)) throw InputError("t_end must be > 0");
  if (cfg.record_every < 1) throw InputError("record_every must be >= 1");
  Trajectory tr;
  auto I0 = I(x);
  tr.drift.assign(I0.size(), 0.0);
  auto record = [&](double t, const std::vector<double>& s) {
    auto v = I(s);
    for (size_t k = 0; k < v.size(); ++k) tr.drift[k] = std::max(tr.drift[k], std::abs(v[k] - I0[k]));
    tr.times.push_back(t);
    tr.states.push_back(s);
    tr.conserved.push_back(std::move(v));
  };
  record(0, x);
  long steps = std::lround(cfg.t_end / cfg.step);
  for (long k = 1; k <= steps; ++k) {
    x = rk4_step(f, x, cfg.step);
    double t = k * cfg.step;
    bool bad = false;
    for (double c : x)
      if (!std::isfinite(c) || std::abs(c) > cfg.blowup_guard) bad = true;
    if (bad) {
      tr.truncated = true;
      std::ostringstream os;
      os << "state left the guard |x| <= " << cfg.blowup_guard << " near t = " << t;
      tr.diagnostic = os.str();
      break;
    }
    if (k % cfg.record_every == 0 || k == steps) record(t, x);
  }
  return tr;
}

void Trajectory::write_csv(std::ostream& os) const {
  os << "t";
  for (const auto& s : state_names) os << "," << s;
  for (const auto& s : integral_names) os << "," << s;
  os << "\n" << std::setprecision(17);
  for (size_t k = 0; k < times.size(); ++k) {
    os << times[k];
    for (double v : states[k]) os << "," << v;
    for (double v : conserved[k]) os << "," << v;
    os << "\n";
  }
}

nlohmann::json Trajectory::summary() const {
  nlohmann::json j;
  j["system"] = system;
  j["samples"] = times.size();
  j["t_final"] = times.empty() ? 0.0 : times.back();
  nlohmann::json d = nlohmann::json::object();
  for (size_t k = 0; k < drift.size(); ++k) d[integral_names[k]] = drift[k];
  j["drift"] = d;
  if (system == "km" || system == "toda") j["product_drift"] = product_drift;
  j["truncated"] = truncated;
  if (truncated) j["diagnostic"] = diagnostic;
  return j;
}

namespace {

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> r;
  for (const auto& q : v) r.push_back(q.get_d());
  return r;
}

double product(const std::vector<double>& a, size_t n) {
  double p = 1;
  for (size_t i = 0; i < n; ++i) p *= a[i];
  return p;
}

void fill_product_drift(Trajectory& tr, size_t n) {
  for (const auto& s : tr.states) tr.product_drift = std::max(tr.product_drift, std::abs(product(s, n) - 1));
}

}  // namespace

Trajectory integrate_km(const std::vector<Rational>& a, const Integration& cfg) {
  int n = static_cast<int>(a.size());
  validate(TodaPointQ{a, std::vector<Rational>(a.size(), Rational(0))});
  Field f = [](const std::vector<double>& x) { return km_field(x); };
  std::vector<std::string> names;
  std::vector<int> powers;
  for (int k = n - 2; k >= 0; k -= 2) powers.push_back(k);
  if (n == 5) {
    names = {"K", "L"};
  } else {
    for (int k : powers) names.push_back("c" + std::to_string(k));
  }
  if (n % 2 == 0) {
    names.push_back("prod_odd");
    names.push_back("prod_even");
  }
  Integrals I = [n, powers](const std::vector<double>& x) {
    TodaPoint<double> p{x, std::vector<double>(x.size(), 0.0)};
    UPoly<double> K = char_poly(p);
    std::vector<double> v;
    for (int k : powers) v.push_back(K.coef(k) / 2);
    if (n == 5) v[0] = -v[0];  // K(x)/2 = x^5 - K x^3 + L x
    if (n % 2 == 0) {
      auto [o, e] = km_even_split(x);
      v.push_back(o);
      v.push_back(e);
    }
    return v;
  };
  Trajectory tr = integrate(f, I, to_double(a), cfg);
  tr.system = "km";
  tr.state_names = km_names(n);
  tr.integral_names = names;
  fill_product_drift(tr, n);
  return tr;
}

Trajectory integrate_toda(const TodaPointQ& p, int i, const Integration& cfg) {
  validate(p);
  int n = p.n();
  if (i < 1 || i > n - 1) throw InputError("hierarchy index must be in 1.." + std::to_string(n - 1));
  auto split = [n](const std::vector<double>& x) {
    return TodaPoint<double>{std::vector<double>(x.begin(), x.begin() + n), std::vector<double>(x.begin() + n, x.end())};
  };
  Field f = [=](const std::vector<double>& x) {
    auto d = toda_flow(split(x), i);
    std::vector<double> r = d.a;
    r.insert(r.end(), d.b.begin(), d.b.end());
    return r;
  };
  Integrals I = [=](const std::vector<double>& x) { return toda_integrals_h0(split(x)); };
  std::vector<double> x0 = to_double(p.a);
  auto b0 = to_double(p.b);
  x0.insert(x0.end(), b0.begin(), b0.end());
  Trajectory tr = integrate(f, I, x0, cfg);
  tr.system = "toda";
  tr.state_names = toda_names(n);
  for (int k = 0; k < n; ++k) tr.integral_names.push_back("I" + std::to_string(k));
  fill_product_drift(tr, n);
  return tr;
}

namespace {

MumfordTriple<double> to_double(const Triple& t, const std::vector<double>& c) {
  return triple_from_coords<double>(t.flavor, t.g, c);
}

std::vector<double> flow_coords(const Triple& t, const std::vector<double>& x, double y) {
  auto p = to_double(t, x);
  auto d = is_prym(t.flavor) ? prym_flow(p, y) : mumford_flow(p, y);
  d.flavor = t.flavor;
  d.g = t.g;
  return coords_of(d);
}

}  // namespace

Trajectory integrate_mumford(const Triple& t, double y, const Integration& cfg) {
  validate(t);
  Field f = [t, y](const std::vector<double>& x) { return flow_coords(t, x, y); };
  Shape s = shape_of(t.flavor, t.g);
  int degH = s.deg_u + s.deg_w;
  Integrals I = [t, degH](const std::vector<double>& x) {
    auto H = momentum_H(to_double(t, x));
    std::vector<double> v;
    for (int k = 0; k < degH; ++k) v.push_back(H.coef(k));
    return v;
  };
  Trajectory tr = integrate(f, I, to_double(coords_of(t)), cfg);
  tr.system = is_prym(t.flavor) ? "prym" : "mumford";
  tr.state_names = coordinate_names(t.flavor, t.g);
  for (int k = 0; k < degH; ++k) tr.integral_names.push_back("H" + std::to_string(k));
  return tr;
}

std::vector<double> mumford_compose(const Triple& t, double y1, double y2, double s, double step) {
  Integration cfg;
  cfg.t_end = s;
  cfg.step = step;
  Trajectory a = integrate_mumford(t, y1, cfg);
  Field f = [t, y2](const std::vector<double>& x) { return flow_coords(t, x, y2); };
  Integrals none = [](const std::vector<double>&) { return std::vector<double>{}; };
  Trajectory b = integrate(f, none, a.states.back(), cfg);
  return b.states.back();
}

Convergence km_convergence(const std::vector<Rational>& a, double t_end, double h, int levels) {
  Convergence c;
  std::vector<std::vector<double>> ends;
  for (int k = 0; k <= levels; ++k) {
    Integration cfg;
    cfg.t_end = t_end;
    cfg.step = h / std::pow(2.0, k);
    cfg.record_every = 1 << 30;
    Trajectory tr = integrate_km(a, cfg);
    if (tr.truncated) throw InvariantViolation("convergence", tr.diagnostic);
    c.steps.push_back(cfg.step);
    ends.push_back(tr.states.back());
  }
  for (int k = 0; k < levels; ++k) {
    double d = 0;
    for (size_t i = 0; i < ends[k].size(); ++i) d = std::max(d, std::abs(ends[k][i] - ends[k + 1][i]));
    c.diffs.push_back(d);
  }
  for (int k = 0; k + 1 < levels; ++k) c.ratios.push_back(c.diffs[k] / c.diffs[k + 1]);
  return c;
}

}  // namespace prymlab
