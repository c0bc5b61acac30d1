#pragma once

#include <vector>

namespace coslt {

/// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace coslt
