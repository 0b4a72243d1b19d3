// Standalone property runner: property_tests [seed] [cases]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "property_checks.hpp"

int main(int argc, char** argv) {
  unsigned long seed = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20240611UL;
  int cases = argc > 2 ? std::atoi(argv[2]) : 1000;
  bool ok = true;
  for (auto& run : {props::ring_axioms, props::series_remultiplication, props::projection_independence,
                    props::inversion_length, props::harmonic_product}) {
    auto t0 = std::chrono::steady_clock::now();
    props::Outcome o = run(seed++, cases);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok() ? "PASS " : "FAIL ") << o.name << ": " << o.cases << " cases, " << o.failures
              << " failures (" << secs << " s)";
    if (!o.ok()) std::cout << "  first: " << o.first_failure;
    std::cout << "\n";
    ok = ok && o.ok();
  }
  return ok ? 0 : 1;
}
