#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prymlab/mumford.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

using Rng = std::mt19937_64;

// Numerator in [-100, 100], denominator in [1, 100].
Rational random_rational(Rng& rng, bool nonzero = false);
// Random a_1..a_{n-1} (nonzero), a_n fixed by prod a = 1; b random (zero for km).
TodaPointQ random_toda_point(Rng& rng, int n, bool km = false);
// Random free coordinates of a Mumford or Prym space.
Triple random_triple(Rng& rng, Flavor f, int g);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Suites: fiber roundtrip detlemma brackets reduction kowalevski sigma
// balance5 divisor5 numerics parity evensplit, or "all".
const std::vector<std::string>& suite_names();
std::vector<CriterionResult> run_suite(const std::string& name, std::uint64_t seed = 20240501);

}  // namespace prymlab
