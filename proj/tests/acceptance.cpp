// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "prymlab/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240501;
  int failed = 0;
  for (const auto& r : prymlab::run_suite("all", seed)) {
    std::printf("[%s] %2d %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed;
}
