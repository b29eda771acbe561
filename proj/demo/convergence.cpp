// beta of the k-fold parallel extensions of M_{r,2}, next to alpha, for a
// few ranks. Usage: demo_convergence [k_max]

#include <cstdlib>
#include <iostream>

#include "mcl/mcl.hpp"

int main(int argc, char** argv) {
  const int k_max = argc > 1 ? std::atoi(argv[1]) : 8;
  for (int r = 3; r <= 7; ++r) {
    mcl::Matroid m = mcl::linear_matroid(mcl::build_m_rp(r, 2).matrix);
    auto trace = mcl::beta_parallel_sequence(mcl::count_partition(m, {0, 1}), k_max);
    std::cout << "r=" << r << "  alpha=" << trace.limit.str() << "\n";
    for (const auto& [k, beta] : trace.betas) std::cout << "  k=" << k << "  beta=" << beta.str() << "\n";
  }
}
