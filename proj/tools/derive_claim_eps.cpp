// Searches the perturbation budget for the diagonal claim: start at 1/100 and
// halve until a full run finds no counterexample. The result is frozen as
// kClaimEpsilon.

#include <cstdlib>
#include <iostream>

#include "weaknet/cube.hpp"

int main(int argc, char** argv) {
  using namespace weaknet;
  const long trials = argc > 1 ? std::atol(argv[1]) : 10000;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
  Rational eps(Integer(1), Integer(100));
  for (int round = 0; round < 20; ++round) {
    const DiagClaimReport report = verify_diag_claim(eps, trials, seed);
    std::cout << "eps " << to_string(eps) << ": " << report.counterexamples.size()
              << " counterexamples in " << trials << " trials";
    if (report.worst_depth) std::cout << ", worst depth " << to_double(*report.worst_depth);
    std::cout << "\n";
    if (report.ok()) {
      std::cout << to_string(eps) << "\n";
      return 0;
    }
    eps /= 2;
  }
  return 1;
}
