#include "coslt/groupops.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

namespace coslt {

namespace {

Cx unit_pow(Cx u, int e) {
  Cx base = e >= 0 ? u : std::conj(u);
  int m = e >= 0 ? e : -e;
  Cx out(1.0, 0.0);
  while (m-- > 0) out *= base;
  return out;
}

Cx pow_int(Cx z, int e) {
  // e >= 0; exponent stays small in practice
  Cx out(1.0, 0.0);
  while (e-- > 0) out *= z;
  return out;
}

void strip_imag(Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Cx(m(i, j).real(), 0.0);
  }
}

// QR with the canonical gauge: R has nonnegative real diagonal.
void qr_positive(const Mat& m, Mat& q, Mat& r) {
  Eigen::HouseholderQR<Mat> qr(m);
  q = qr.householderQ();
  r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Cx rii = r(i, i);
    const double a = std::abs(rii);
    if (a == 0.0) continue;
    const Cx phase = rii / a;
    q.col(i) *= phase;
    r.row(i) *= std::conj(phase);
  }
}

Mat gaussian_matrix(const CaseParams& c, RngStream& rng) {
  const int nn = c.dim();
  Mat m(nn, nn);
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) {
      m(i, j) = c.field == Field::R ? Cx(rng.gaussian(), 0.0) : rng.complex_gaussian();
    }
  }
  return m;
}

}  // namespace

GroupElement identity_element(const CaseParams& c) {
  return {Mat::Identity(c.dim(), c.dim()), ElementTag::InK};
}

GroupElement theta(const CaseParams& c, const GroupElement& g) {
  (void)c;
  Mat inv_adj = g.mat.adjoint().partialPivLu().inverse();
  return {std::move(inv_adj), g.tag};
}

GroupElement haar_sample(const CaseParams& c, RngStream& rng) {
  Mat q, r;
  qr_positive(gaussian_matrix(c, rng), q, r);
  const Cx det = q.determinant();
  if (c.field == Field::R) {
    if (det.real() < 0.0) q.col(q.cols() - 1) *= -1.0;  // fixed coset translation
    strip_imag(q);
  } else {
    // scale by an (n+1)-th root of det^{-1}
    const double phi = std::arg(det);
    q *= std::exp(Cx(0.0, -phi / static_cast<double>(q.rows())));
  }
  return {std::move(q), ElementTag::InK};
}

KPDecomposition kp_decompose(const CaseParams& c, const Mat& g) {
  const int nn = c.dim();
  if (g.rows() != nn || g.cols() != nn) {
    throw DimensionMismatch("kp_decompose: matrix has wrong dimension");
  }
  Mat q, r;
  qr_positive(g, q, r);
  double dmin = r(0, 0).real(), dmax = dmin;
  for (int i = 1; i < nn; ++i) {
    const double v = r(i, i).real();
    dmin = std::min(dmin, v);
    dmax = std::max(dmax, v);
  }
  if (!(dmin > 0.0) || dmax / dmin > 1e12) {
    throw SingularBlock("kp_decompose: triangular factor is numerically singular");
  }
  if (c.field == Field::R) strip_imag(q);
  double log_a = 0.0;
  for (int i = 0; i < c.p; ++i) log_a += std::log(r(i, i).real());
  return {GroupElement{std::move(q), ElementTag::InK}, log_a, Cx(1.0, 0.0)};
}

Cx cos_kernel(const CaseParams& c, const GroupElement& k, const GroupElement& h, Cx lambda,
              bool conjugate_weight) {
  const Mat x = (k.mat.adjoint() * h.mat).topLeftCorner(c.p, c.p);
  const Cx det = x.determinant();
  const double a = std::abs(det);
  const Cx expo = lambda - c.rho;
  if (a == 0.0) {
    if (expo.real() > 0.0) return Cx(0.0, 0.0);
    throw KernelSingular("cos_kernel: vanishing block determinant at nonpositive exponent");
  }
  const int j = c.field == Field::R ? 1 : c.l;
  const Cx phase = det / a;
  return std::exp(expo * std::log(a)) * unit_pow(phase, conjugate_weight ? -j : j);
}

Cx chi_L(const CaseParams& c, const GroupElement& m) {
  const int p = c.p, q = c.q;
  const double off = std::max(m.mat.topRightCorner(p, q).cwiseAbs().maxCoeff(),
                              m.mat.bottomLeftCorner(q, p).cwiseAbs().maxCoeff());
  if (off > 1e-10) {
    throw NotInL("chi_L: off-diagonal blocks exceed tolerance");
  }
  const Cx det = m.mat.topLeftCorner(p, p).determinant();
  if (c.field == Field::R) return Cx(det.real(), 0.0);
  return unit_pow(det / std::abs(det), c.l);
}

GroupElement torus_point(const CaseParams& c, const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != c.p) {
    throw DimensionMismatch("torus_point: t has wrong length");
  }
  const int nn = c.dim();
  Mat m = Mat::Identity(nn, nn);
  for (int j = 0; j < c.p; ++j) {
    const double cj = std::cos(t[j]), sj = std::sin(t[j]);
    m(j, j) = cj;
    m(j, c.q + j) = -sj;
    m(c.q + j, j) = sj;
    m(c.q + j, c.q + j) = cj;
  }
  return {std::move(m), ElementTag::InK};
}

double delta_density(const CaseParams& c, const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != c.p) {
    throw DimensionMismatch("delta_density: t has wrong length");
  }
  const RootDatum rd = root_datum(c);
  double prod = 1.0;
  for (const auto& root : rd.positive) {
    if (root.mult == 0) continue;
    double angle = 0.0;
    for (int i = 0; i < c.p; ++i) angle += root.coeff[i] * t[i];
    prod *= std::pow(std::abs(2.0 * std::sin(angle)), root.mult);
  }
  return prod;
}

Cx section_smallest(const CaseParams& c, const GroupElement& k) {
  const Cx det = k.mat.topLeftCorner(c.p, c.p).determinant();
  if (c.field == Field::R) return Cx(det.real(), 0.0);
  return c.l >= 0 ? pow_int(std::conj(det), c.l) : pow_int(det, -c.l);
}

Cx pi_action(const CaseParams& c, Cx lambda, const GroupElement& g, const SectionFn& f,
             const GroupElement& k) {
  const Mat ginv_k = g.mat.partialPivLu().solve(k.mat);
  const KPDecomposition kp = kp_decompose(c, ginv_k);
  return std::exp(-(lambda + c.rho) * kp.log_a) * f(kp.kappa);
}

GroupElement random_sl_element(const CaseParams& c, RngStream& rng, double scale) {
  const int nn = c.dim();
  Mat x = gaussian_matrix(c, rng);
  const Cx tr = x.trace() / static_cast<double>(nn);
  for (int i = 0; i < nn; ++i) x(i, i) -= tr;
  x *= scale;
  Mat g = x.exp();
  if (c.field == Field::R) strip_imag(g);
  return {std::move(g), ElementTag::InG};
}

GroupElement random_l_element(const CaseParams& c, RngStream& rng) {
  CaseParams top = c, bottom = c;
  // Haar blocks of sizes p and q; only the matrix dimension matters here.
  top.n = c.p - 1;
  bottom.n = c.q - 1;
  Mat qa, ra, qb, rb;
  qr_positive(gaussian_matrix(top, rng), qa, ra);
  qr_positive(gaussian_matrix(bottom, rng), qb, rb);
  if (c.field == Field::R) {
    strip_imag(qa);
    strip_imag(qb);
    if ((qa.determinant() * qb.determinant()).real() < 0.0) qb.col(c.q - 1) *= -1.0;
  } else {
    const Cx det = qa.determinant() * qb.determinant();
    qb.col(c.q - 1) *= std::conj(det / std::abs(det));
  }
  Mat m = Mat::Zero(c.dim(), c.dim());
  m.topLeftCorner(c.p, c.p) = qa;
  m.bottomRightCorner(c.q, c.q) = qb;
  return {std::move(m), ElementTag::InK};
}

bool element_invariants_ok(const CaseParams& c, const GroupElement& g, double tol) {
  if (g.mat.rows() != c.dim() || g.mat.cols() != c.dim()) return false;
  const Cx det = g.mat.determinant();
  if (std::abs(det - Cx(1.0, 0.0)) > tol * 100.0) return false;
  if (c.field == Field::R && g.mat.imag().cwiseAbs().maxCoeff() > tol) return false;
  if (g.tag == ElementTag::InK) {
    const Mat gram = g.mat.adjoint() * g.mat;
    if ((gram - Mat::Identity(c.dim(), c.dim())).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace coslt
