#include "coslt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coslt/quadrature.hpp"

namespace coslt {

namespace {

constexpr long long kBatch = 1 << 14;
constexpr double kPi = 3.141592653589793238462643383279502884;

double delta_from(const RootDatum& rd, int p, const double* t) {
  double prod = 1.0;
  for (const auto& root : rd.positive) {
    if (root.mult == 0) continue;
    double angle = 0.0;
    for (int i = 0; i < p; ++i) angle += root.coeff[i] * t[i];
    prod *= std::pow(std::abs(2.0 * std::sin(angle)), root.mult);
  }
  return prod;
}

// Folded torus integral of prod_j cos(t_j)^s * delta(t). Field C uses the
// plain tensor grid on [0, pi/2]^p (the d = 2 density is smooth there);
// field R (p = 2) additionally orders the simplex through (u, uv) to keep
// the odd medium-root factors single-signed.
double torus_integral(const CaseParams& c, const RootDatum& rd, double s, int n_axis) {
  if (c.field == Field::R) {
    const GaussLegendre gu = gauss_legendre(n_axis, 0.0, kPi / 2.0);
    const GaussLegendre gv = gauss_legendre(n_axis, 0.0, 1.0);
    double total = 0.0;
    for (int iu = 0; iu < n_axis; ++iu) {
      const double u = gu.x[iu];
      double inner = 0.0;
      for (int iv = 0; iv < n_axis; ++iv) {
        const double t[2] = {u, u * gv.x[iv]};
        const double f =
            std::pow(std::cos(t[0]), s) * std::pow(std::cos(t[1]), s) * delta_from(rd, 2, t);
        inner += gv.w[iv] * f;
      }
      total += gu.w[iu] * u * inner;
    }
    return total;
  }
  const GaussLegendre g = gauss_legendre(n_axis, 0.0, kPi / 2.0);
  std::vector<double> t(static_cast<std::size_t>(c.p), 0.0);
  double total = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(c.p), 0);
  while (true) {
    double w = 1.0, f = 1.0;
    for (int j = 0; j < c.p; ++j) {
      t[j] = g.x[idx[j]];
      w *= g.w[idx[j]];
      f *= std::pow(std::cos(t[j]), s);
    }
    total += w * f * delta_from(rd, c.p, t.data());
    int j = 0;
    for (; j < c.p; ++j) {
      if (++idx[j] < n_axis) break;
      idx[j] = 0;
    }
    if (j == c.p) break;
  }
  return total;
}

Cx cpow_int(Cx z, int e) {
  Cx out(1.0, 0.0);
  while (e-- > 0) out *= z;
  return out;
}

Cx unit_pow(Cx u, int e) {
  Cx base = e >= 0 ? u : std::conj(u);
  int m = e >= 0 ? e : -e;
  Cx out(1.0, 0.0);
  while (m-- > 0) out *= base;
  return out;
}

}  // namespace

OracleResult torus_eta_initial(const CaseParams& c, double lambda, int n_points) {
  if (!(lambda >= c.rho - c.k - 1e-12)) {
    throw DomainError("torus_eta_initial: requires lambda >= rho - k");
  }
  const double s = lambda - c.rho + c.k;
  const RootDatum rd = root_datum(c);
  const int fine = std::max(8, n_points);
  const int coarse = std::max(4, fine / 2);
  auto ratio = [&](int n_axis) {
    const double num = torus_integral(c, rd, s, n_axis);
    const double den = torus_integral(c, rd, 0.0, n_axis);
    return num / den;
  };
  const double rf = ratio(fine);
  const double rc = ratio(coarse);
  OracleResult out;
  out.estimate = Cx(rf, 0.0);
  out.error_bound = std::abs(rf - rc) + 1e-15 * std::abs(rf);
  long long total = 1;
  for (int j = 0; j < c.p; ++j) total *= fine;
  out.n_samples = total;
  return out;
}

OracleResult mc_transform_at(const CaseParams& c, double lambda, const SectionFn& f,
                             const GroupElement& k, long long n_samples, std::uint64_t seed) {
  if (!(lambda >= c.rho - c.k - 1e-12)) {
    throw DomainError("mc_transform_at: requires lambda >= rho - k");
  }
  OracleResult out;
  out.seed = seed;
  std::vector<MeanVar> batches;
  long long remaining = n_samples;
  std::uint64_t stream = 0;
  while (remaining > 0) {
    const long long chunk = std::min(remaining, kBatch);
    RngStream rng(seed, stream++);
    MeanVar mv;
    for (long long i = 0; i < chunk; ++i) {
      const GroupElement h = haar_sample(c, rng);
      try {
        mv.add(cos_kernel(c, k, h, Cx(lambda, 0.0)) * f(h));
      } catch (const KernelSingular&) {
        ++out.rejected;
      }
    }
    batches.push_back(mv);
    remaining -= chunk;
  }
  const MeanVar total = reduce_tree(std::move(batches));
  out.estimate = total.mean;
  out.std_error = total.std_error();
  out.n_samples = total.n;
  return out;
}

namespace {

struct SphereSetup {
  int a, b, l, qdim;
  double expo;  // lambda - rho
  double f_u0;  // 2^{-(a+b)/2}
};

Cx sphere_integrand(const SphereSetup& s, const Eigen::VectorXcd& v) {
  const Cx z = (v(0) + v(1)) / std::sqrt(2.0);
  const double az = std::abs(z);
  if (az < 1e-300) throw KernelSingular("sphere_integrand: vanishing pairing");
  const Cx kern = std::pow(az, s.expo) * unit_pow(z / az, s.l);
  return kern * cpow_int(std::conj(v(0)), s.a) * cpow_int(v(1), s.b);
}

}  // namespace

OracleResult projective_eigen_oracle(const CaseParams& c, int a, int b, double lambda,
                                     OracleMethod method, long long budget, std::uint64_t seed) {
  if (c.field != Field::C || c.p != 1) {
    throw DomainError("projective_eigen_oracle: needs a field C case with p = 1");
  }
  if (b < 0 || a - b != c.l || c.l < 0) {
    throw DomainError("projective_eigen_oracle: requires a - b = l >= 0 and b >= 0");
  }
  if (!(lambda >= c.rho - c.k - 1e-12)) {
    throw DomainError("projective_eigen_oracle: requires lambda >= rho - k");
  }
  const int dim = c.q + 1;
  SphereSetup setup{a, b, c.l, c.q, lambda - c.rho, std::pow(2.0, -0.5 * (a + b))};

  // well-definedness on projective space: integrand must be invariant under
  // v -> v e^{i theta}
  {
    RngStream rng(seed, 0xFFFFULL);
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXcd v(dim);
      for (int i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
      v.normalize();
      const Cx w0 = sphere_integrand(setup, v);
      const Cx rot = std::exp(Cx(0.0, 0.789 + trial));
      const Cx w1 = sphere_integrand(setup, (v * rot).eval());
      if (std::abs(w1 - w0) > 1e-9 * (1.0 + std::abs(w0))) {
        throw ConventionMismatch("projective_eigen_oracle: integrand is phase dependent");
      }
    }
  }

  OracleResult out;
  out.seed = seed;
  if (method == OracleMethod::MC) {
    std::vector<MeanVar> batches;
    long long remaining = budget;
    std::uint64_t stream = 0;
    Eigen::VectorXcd v(dim);
    while (remaining > 0) {
      const long long chunk = std::min(remaining, kBatch);
      RngStream rng(seed, stream++);
      MeanVar mv;
      for (long long i = 0; i < chunk; ++i) {
        for (int j = 0; j < dim; ++j) v(j) = rng.complex_gaussian();
        v.normalize();
        try {
          mv.add(sphere_integrand(setup, v));
        } catch (const KernelSingular&) {
          ++out.rejected;
        }
      }
      batches.push_back(mv);
      remaining -= chunk;
    }
    const MeanVar total = reduce_tree(std::move(batches));
    out.estimate = total.mean / setup.f_u0;
    out.std_error = total.std_error() / setup.f_u0;
    out.n_samples = total.n;
    return out;
  }

  // Quadrature: rotate so the pairing depends on w1 alone, gauge the global
  // phase away, and integrate the marginal of (w1, w2) = (r1, r2 e^{i psi}).
  // The integrand becomes
  //   r1^{lambda-rho} conj(r1 + r2 e^{i psi})^a (r1 - r2 e^{i psi})^b 2^{-(a+b)/2}
  // against the weight r1 r2 (1 - r1^2 - r2^2)^{q-2} on the quarter disk
  // (a point mass on the arc when q = 1).
  if (!(lambda - c.rho > -2.0 + 1e-9)) {
    throw DomainError("projective_eigen_oracle: quadrature needs lambda > rho - 2");
  }
  auto evaluate = [&](int n_axis) {
    const GaussLegendre gs = gauss_legendre(n_axis, 0.0, 1.0);
    const GaussLegendre ga = gauss_legendre(n_axis, 0.0, kPi / 2.0);
    const int n_psi = 2 * n_axis;
    Cx num(0.0, 0.0);
    double den = 0.0;
    const int n_radial = c.q == 1 ? 1 : n_axis;
    for (int is = 0; is < n_radial; ++is) {
      const double shat = c.q == 1 ? 1.0 : gs.x[is];
      const double ws = c.q == 1 ? 1.0 : gs.w[is];
      const double radial =
          c.q == 1 ? 1.0
                   : shat * shat * shat * std::pow(1.0 - shat * shat, static_cast<double>(c.q - 2));
      for (int ia = 0; ia < n_axis; ++ia) {
        const double alpha = ga.x[ia];
        const double r1 = shat * std::cos(alpha), r2 = shat * std::sin(alpha);
        const double wgt = ws * ga.w[ia] * radial * std::cos(alpha) * std::sin(alpha);
        const double kern = std::pow(r1, setup.expo);
        Cx psi_sum(0.0, 0.0);
        for (int ip = 0; ip < n_psi; ++ip) {
          const double psi = 2.0 * kPi * ip / n_psi;
          const Cx w2 = r2 * std::exp(Cx(0.0, psi));
          psi_sum += cpow_int(std::conj(r1 + w2), a) * cpow_int(r1 - w2, b);
        }
        num += wgt * kern * (psi_sum / static_cast<double>(n_psi));
        den += wgt;
      }
    }
    return num / den * std::pow(2.0, -0.5 * (a + b)) / setup.f_u0;
  };
  const int n_fine = std::max(12, static_cast<int>(std::cbrt(static_cast<double>(budget) / 2.0)));
  const Cx fine = evaluate(n_fine);
  const Cx coarse = evaluate(std::max(6, n_fine / 2));
  out.estimate = fine;
  out.error_bound = std::abs(fine - coarse) + 1e-14 * std::abs(fine);
  out.n_samples = 2LL * n_fine * n_fine * n_fine;
  return out;
}

EquivarianceResult equivariance_check_full(const CaseParams& c, double lambda,
                                           const GroupElement& g, long long n_samples,
                                           std::uint64_t seed) {
  const SectionFn f = [&c](const GroupElement& u) { return section_smallest(c, u); };
  const SpectralValue eta = eta_initial(c, Cx(lambda, 0.0));

  std::vector<GroupElement> points;
  points.push_back(identity_element(c));
  std::vector<double> t1, t2;
  for (int j = 0; j < c.p; ++j) {
    t1.push_back(0.4 + 0.5 * j);
    t2.push_back(1.1 - 0.85 * j);
  }
  points.push_back(torus_point(c, t1));
  {
    RngStream rng(seed, 9001);
    points.push_back(haar_sample(c, rng));
  }
  {
    RngStream rng(seed, 9002);
    points.push_back(haar_sample(c, rng));
  }
  points.push_back(torus_point(c, t2));

  const GroupElement theta_g = theta(c, g);
  const Mat g_inv = g.mat.partialPivLu().inverse();

  EquivarianceResult res;
  const long long n_pp = std::max<long long>(1000, n_samples / static_cast<long long>(points.size()));
  double sum_rel = 0.0;
  for (std::size_t pt = 0; pt < points.size(); ++pt) {
    const GroupElement& kpt = points[pt];
    std::vector<MeanVar> batches;
    long long remaining = n_pp;
    std::uint64_t stream = 0;
    while (remaining > 0) {
      const long long chunk = std::min(remaining, kBatch);
      RngStream rng(seed, 1000 * (pt + 1) + stream++);
      MeanVar mv;
      for (long long i = 0; i < chunk; ++i) {
        const GroupElement h = haar_sample(c, rng);
        const KPDecomposition kp = kp_decompose(c, g_inv * h.mat);
        const Cx pi_f = std::exp(-(Cx(lambda, 0.0) + c.rho) * kp.log_a) * f(kp.kappa);
        mv.add(cos_kernel(c, kpt, h, Cx(lambda, 0.0)) * pi_f);
      }
      batches.push_back(mv);
      remaining -= chunk;
    }
    const MeanVar total = reduce_tree(std::move(batches));
    EquivariancePoint ep;
    ep.lhs = total.mean;
    ep.lhs_se = total.std_error();
    ep.rhs = eta.eta * pi_action(c, Cx(-lambda, 0.0), theta_g, f, kpt);
    res.points.push_back(ep);
    const double resid = std::abs(ep.lhs - ep.rhs);
    sum_rel += resid / std::max(std::abs(ep.rhs), 1e-12);
    res.max_residual_over_3se =
        std::max(res.max_residual_over_3se, resid / std::max(3.0 * ep.lhs_se, 1e-300));
  }
  res.avg_relative_residual = sum_rel / static_cast<double>(points.size());
  return res;
}

double equivariance_check(const CaseParams& c, double lambda, const GroupElement& g,
                          long long n_samples, std::uint64_t seed) {
  return equivariance_check_full(c, lambda, g, n_samples, seed).avg_relative_residual;
}

}  // namespace coslt
