#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "coslt/rng.hpp"
#include "coslt/rootdata.hpp"

namespace coslt {

using Mat = Eigen::MatrixXcd;

enum class ElementTag { InK, InG };

/// Dense (n+1)x(n+1) matrix over the case field. Field R elements carry
/// zero imaginary parts.
struct GroupElement {
  Mat mat;
  ElementTag tag{ElementTag::InG};
};

/// Factorization data for g = kappa * m * a * n against the block upper
/// triangular parabolic. Under the canonical positive-diagonal gauge the
/// M-part carries no character phase, so chi_phase == 1.
struct KPDecomposition {
  GroupElement kappa;
  double log_a{0.0};  // a(g)^z = exp(z * log_a) = |det_F X_b|^z
  Cx chi_phase{1.0, 0.0};
};

/// Section callback: a function on K with f(k m) = chi(m)^{-1} f(k), m in L.
using SectionFn = std::function<Cx(const GroupElement&)>;

/// Cartan involution: inverse conjugate-transpose. Fixes K pointwise.
GroupElement theta(const CaseParams& c, const GroupElement& g);

/// Haar-distributed element of SO(n+1) (field R) or SU(n+1) (field C):
/// Gaussian matrix, QR with positive-diagonal gauge, determinant corrected
/// to one by a fixed coset translation (R) or an (n+1)-th root phase (C).
GroupElement haar_sample(const CaseParams& c, RngStream& rng);

/// QR-based K (MA) N factorization with the canonical gauge: the triangular
/// factor has positive real diagonal, kappa lands in K with det 1, and
/// log_a = log |det_F X_b| for the leading p x p block X_b of kappa^{-1} g.
KPDecomposition kp_decompose(const CaseParams& c, const Mat& g);
inline KPDecomposition kp_decompose(const CaseParams& c, const GroupElement& g) {
  return kp_decompose(c, g.mat);
}

/// Kernel of the transform: |det_F X|^{lambda - rho} (det_F X/|det_F X|)^{j}
/// with X the leading p x p block of k^{-1} h and j = 1 (R) or l (C).
/// conjugate_weight flips the phase exponent sign (the non-default
/// convention, kept for the convention self-checks).
Cx cos_kernel(const CaseParams& c, const GroupElement& k, const GroupElement& h, Cx lambda,
              bool conjugate_weight = false);

/// Character on block-diagonal L elements diag(A, B): det A (field R),
/// (det_C A)^l (field C). Throws NotInL if off-diagonal blocks exceed 1e-10.
Cx chi_L(const CaseParams& c, const GroupElement& m);

/// The torus element exp Y(t): cos/sin blocks in coordinates (1..p) and
/// (q+1..n+1), identity in between.
GroupElement torus_point(const CaseParams& c, const std::vector<double>& t);

/// KAK density delta(t) = prod_{alpha in Sigma+} |2 sin(alpha(t))|^{m_alpha},
/// accumulated from the root datum.
double delta_density(const CaseParams& c, const std::vector<double>& t);

/// Matrix realization of the smallest-K-type section: det of the leading
/// p x p block (field R); conj(det)^l for l >= 0, det^{|l|} for l < 0
/// (field C). Restricts to prod cos t_j (resp. prod cos^{|l|} t_j) on the
/// torus.
Cx section_smallest(const CaseParams& c, const GroupElement& k);

/// Principal series action
///   (pi_lambda(g) f)(k) = chi(m(g^{-1}k))^{-1} a(g^{-1}k)^{-lambda-rho} f(kappa(g^{-1}k))
/// computed in the canonical gauge (chi_phase == 1).
Cx pi_action(const CaseParams& c, Cx lambda, const GroupElement& g, const SectionFn& f,
             const GroupElement& k);

/// Identity element of K.
GroupElement identity_element(const CaseParams& c);

/// exp of a random traceless (Hermitian-free) matrix, scaled by `scale`;
/// a generic well-conditioned element of SL(n+1, F).
GroupElement random_sl_element(const CaseParams& c, RngStream& rng, double scale);

/// Random element of L = K cap (block-diagonal), Haar on each block with the
/// determinant balanced across blocks.
GroupElement random_l_element(const CaseParams& c, RngStream& rng);

/// Checks tag-defining invariants (orthogonal/unitary + det 1 for InK,
/// det 1 for InG) within tolerance; used by tests.
bool element_invariants_ok(const CaseParams& c, const GroupElement& g, double tol = 1e-10);

}  // namespace coslt
