#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prymlab/mumford.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

enum class System { KM, Toda, Mumford, Prym };
std::string to_string(System s);
System parse_system(const std::string& s);

struct Trajectory {
  std::string system;
  std::vector<std::string> state_names, integral_names;
  std::vector<double> times;
  std::vector<std::vector<double>> states, conserved;
  std::vector<double> drift;       // max |I(t) - I(0)| per integral
  double product_drift = 0;        // max |prod a - 1| for lattice systems
  bool truncated = false;          // stopped by the blow-up guard
  std::string diagnostic;

  void write_csv(std::ostream& os) const;
  nlohmann::json summary() const;
};

struct Integration {
  double t_end = 1;
  double step = 1e-3;
  int record_every = 1;         // keep every k-th step (the last one is always kept)
  double blowup_guard = 1e12;
};

using Field = std::function<std::vector<double>(const std::vector<double>&)>;
using Integrals = std::function<std::vector<double>(const std::vector<double>&)>;

// Classical fourth-order Runge-Kutta with a fixed step.
std::vector<double> rk4_step(const Field& f, const std::vector<double>& x, double h);
Trajectory integrate(const Field& f, const Integrals& I, std::vector<double> x0, const Integration& cfg);

// System front ends. Exact inputs are converted to double once, at t = 0.
// KM: da_i = a_i(a_{i-1} - a_{i+1}); integrals are the coefficients of K(x)/2
// (K, L for n = 5) and, for n even, the two alternating products.
Trajectory integrate_km(const std::vector<Rational>& a, const Integration& cfg);
// Toda hierarchy field X_i; integrals I_0..I_{n-1}.
Trajectory integrate_toda(const TodaPointQ& p, int i, const Integration& cfg);
// Lax flow X_y on a Mumford space or a Prym space; integrals are the coefficients of H.
Trajectory integrate_mumford(const Triple& t, double y, const Integration& cfg);

// Endpoint state of a flow composed of X_y for time s, then X_{y2} for time s.
std::vector<double> mumford_compose(const Triple& t, double y1, double y2, double s, double step);

// KM endpoints at h, h/2, ..., h/2^levels. diffs[k] = |x(h_k) - x(h_{k+1})|
// (max norm) and ratios[k] = diffs[k] / diffs[k+1], which tends to 16.
struct Convergence {
  std::vector<double> steps, diffs, ratios;
};
Convergence km_convergence(const std::vector<Rational>& a, double t_end, double h, int levels = 2);

}  // namespace prymlab
