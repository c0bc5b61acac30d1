#pragma once

#include <cstdint>
#include <vector>

#include "coslt/groupops.hpp"
#include "coslt/spectrum.hpp"

namespace coslt {

/// Result of an independent numerical estimate. Monte-Carlo results carry a
/// positive std_error; quadrature results carry an error_bound obtained by
/// grid refinement.
struct OracleResult {
  Cx estimate{0.0, 0.0};
  double std_error{0.0};
  double error_bound{0.0};
  long long n_samples{0};
  std::uint64_t seed{0};
  long long rejected{0};
};

/// Tensor Gauss-Legendre estimate of
///   I(lambda)/I(rho - k),  I(s) = int prod_j |cos t_j|^{s - rho + k} delta(t) dt
/// over the torus, which is the initial eigenvalue eta_{mu0}(lambda). The
/// integrand is folded onto [0, pi/2]^p (ordered for field R) so that every
/// absolute value resolves to a smooth branch. n_points is the fine grid
/// size per axis; the error bound compares against the half-resolution grid.
OracleResult torus_eta_initial(const CaseParams& c, double lambda, int n_points);

/// Haar Monte-Carlo average of cos_kernel(k, h, lambda) f(h); deterministic
/// per (seed); batches of 2^14 are reduced in a fixed pairwise tree.
OracleResult mc_transform_at(const CaseParams& c, double lambda, const SectionFn& f,
                             const GroupElement& k, long long n_samples, std::uint64_t seed);

enum class OracleMethod { MC, Quadrature };

/// Eigenvalue estimate on complex projective space (field C, p = 1): points
/// are unit vectors u in C^{q+1}, sections are F_{a,b}(u) = conj(u_1)^a u_2^b,
/// the kernel is |<u,v>|^{lambda-rho} (<u,v>/|<u,v>|)^l. Returns the estimate
/// of eta_mu(lambda) for mu = (a + b). Requires a - b = l >= 0, b >= 0,
/// lambda >= rho - k. Self-checks phase invariance of the integrand each run
/// and throws ConventionMismatch on failure.
OracleResult projective_eigen_oracle(const CaseParams& c, int a, int b, double lambda,
                                     OracleMethod method, long long budget, std::uint64_t seed);

/// One evaluation point of the intertwining test.
struct EquivariancePoint {
  Cx lhs{0.0, 0.0};       // MC[C^lambda(pi_lambda(g) f)](k)
  double lhs_se{0.0};     // its standard error
  Cx rhs{0.0, 0.0};       // eta_{mu0}(lambda) (pi_{-lambda}(theta(g)) f)(k)
};

struct EquivarianceResult {
  std::vector<EquivariancePoint> points;
  double avg_relative_residual{0.0};
  /// max over points of |lhs - rhs| / (3 * lhs_se)
  double max_residual_over_3se{0.0};
};

/// Tests J(lambda) pi_lambda(g) = pi_{-lambda}(theta(g)) J(lambda) on the
/// smallest-type eigen-section at 5 fixed evaluation points; n_samples is
/// the total Monte-Carlo budget (split across the points).
EquivarianceResult equivariance_check_full(const CaseParams& c, double lambda,
                                           const GroupElement& g, long long n_samples,
                                           std::uint64_t seed);

/// Averaged relative residual, as a single number.
double equivariance_check(const CaseParams& c, double lambda, const GroupElement& g,
                          long long n_samples, std::uint64_t seed);

}  // namespace coslt
