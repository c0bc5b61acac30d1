#pragma once

#include <vector>

#include "coslt/specialfn.hpp"
#include "coslt/weights.hpp"

namespace coslt {

/// Initial eigenvalue at the smallest K-type mu0 = (k,...,k):
///   eta_{mu0}(lambda) = [G_{p,d}(d(n+1)/2) / G_{p,d}(dp/2)]
///                     * [G_{p,d}((lambda - rho + k + dp)/2) / G_{p,d}((lambda + rho + k)/2)]
/// where G_{p,d} is the Siegel Gamma function. eta_{mu0}(rho - k) = 1 falls
/// out of the Gamma structure rather than being imposed.
SpectralValue eta_initial(const CaseParams& c, Cx lambda);

/// The mu-independent factor of the closed-form spectrum (the sign of the
/// closed form is carried entirely by c(mu) = (-1)^{(|mu| - pk)/2}):
///   G(lambda) = [G_{p,d}(d(n+1)/2)/G_{p,d}(dp/2)]
///             * [G_{p,d}((lambda - rho + k + dp)/2) / G_{p,d}((-lambda + rho + k)/2)]
SpectralValue big_g(const CaseParams& c, Cx lambda);

/// Closed-form eigenvalue
///   eta_mu(lambda) = c(mu) G(lambda) * G_{p,d}((-lambda+rho+mu)/2) / G_{p,d}((lambda+rho+mu)/2)
/// assembled as a single Gamma ratio so pole pairs cancel before
/// exponentiation.
SpectralValue eta_closed(const CaseParams& c, const Weight& mu, Cx lambda);

/// One-step ratio eta_{mu + 2 e_j}(lambda) / eta_mu(lambda)
///   = (lambda - mu_j - rho + d(j-1)) / (lambda + mu_j + rho - d(j-1)),
/// j is 1-based. A vanishing denominator yields complex infinity.
Cx step_ratio(const CaseParams& c, const Weight& mu, int j, Cx lambda);

/// Canonical +2e_j path from mu0 to mu: coordinates are raised left to
/// right. Every prefix stays inside the lattice.
std::vector<int> canonical_path(const CaseParams& c, const Weight& mu);

/// An alternative valid path (coordinate increments interleaved round-robin)
/// used to exercise path independence; equals the canonical one when only a
/// single coordinate moves.
std::vector<int> interleaved_path(const CaseParams& c, const Weight& mu);

/// eta_initial(lambda) times the product of step ratios along `path`
/// (canonical_path by default). The path taken is written to *path_out when
/// non-null.
SpectralValue eta_recursive(const CaseParams& c, const Weight& mu, Cx lambda,
                            std::vector<int>* path_out = nullptr);
SpectralValue eta_recursive_along(const CaseParams& c, const Weight& mu, Cx lambda,
                                  const std::vector<int>& path);

/// Spectrum-generating ratio eta_nu / eta_mu for nu in S(mu), with r = lambda:
///   (2 r - omega(nu) + omega(mu)) / (2 r + omega(nu) - omega(mu)).
Cx sg_ratio(const CaseParams& c, const Weight& mu, const Weight& nu, Cx lambda);

}  // namespace coslt
