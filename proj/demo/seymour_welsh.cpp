// Builds the 8-element binary configuration M_{4,2}, counts its bases by
// enumeration and prints beta and alpha of the distinguished pair.

#include <iostream>

#include "mcl/mcl.hpp"

int main() {
  auto conf = mcl::build_m_rp(4, 2);
  std::cout << mcl::format_matrix(conf.matrix) << "\n";

  mcl::Matroid m = mcl::linear_matroid(conf.matrix);
  mcl::CorrelationReport rep = mcl::correlation_report(m, conf.pair);
  const auto& c = rep.counts;
  std::cout << "b=" << c.b << " b_i=" << c.b_i << " b_j=" << c.b_j << " b_ij=" << c.b_ij << "\n"
            << "beta  = " << rep.beta.str() << "\n"
            << "alpha = " << rep.alpha->str() << "\n"
            << "case  = " << mcl::to_string(rep.label) << "\n";
}
