#include "coslt/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <stdexcept>

namespace coslt {

GaussLegendre gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
  GaussLegendre out;
  out.x.resize(static_cast<std::size_t>(n));
  out.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &out.x[i], &out.w[i], table);
  }
  gsl_integration_glfixed_table_free(table);
  return out;
}

}  // namespace coslt
