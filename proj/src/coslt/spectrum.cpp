#include "coslt/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace coslt {

namespace {

// Gamma factor arguments of Gamma_{p,d} at the scalar-broadcast value z.
void push_siegel(std::vector<Cx>& args, const CaseParams& c, Cx z) {
  for (int j = 0; j < c.p; ++j) args.push_back(z - 0.5 * c.d * j);
}

// Vector argument with components (z + mu_j)/2.
void push_siegel_mu(std::vector<Cx>& args, const CaseParams& c, Cx z, const Weight& mu) {
  for (int j = 0; j < c.p; ++j) args.push_back(0.5 * (z + static_cast<double>(mu[j])) - 0.5 * c.d * j);
}

SpectralValue from_ratio(const RatioValue& r, double sign = 1.0) {
  return SpectralValue{sign * r.value, r.status};
}

int lattice_sign(const CaseParams& c, const Weight& mu) {
  const long long num = total_degree(mu) - static_cast<long long>(c.p) * c.k;
  // lattice parity makes num even; guarded in eta_closed
  const long long e = num / 2;
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

SpectralValue eta_initial(const CaseParams& c, Cx lambda) {
  std::vector<Cx> num, den;
  push_siegel(num, c, Cx(c.rho, 0.0));                       // Gamma_{p,d}(d(n+1)/2)
  push_siegel(den, c, Cx(0.5 * c.d * c.p, 0.0));             // Gamma_{p,d}(dp/2)
  push_siegel(num, c, 0.5 * (lambda - c.rho + c.k + c.d * c.p));
  push_siegel(den, c, 0.5 * (lambda + c.rho + c.k));
  return from_ratio(gamma_ratio(num, den));
}

SpectralValue big_g(const CaseParams& c, Cx lambda) {
  std::vector<Cx> num, den;
  push_siegel(num, c, Cx(c.rho, 0.0));
  push_siegel(den, c, Cx(0.5 * c.d * c.p, 0.0));
  push_siegel(num, c, 0.5 * (lambda - c.rho + c.k + c.d * c.p));
  push_siegel(den, c, 0.5 * (-lambda + c.rho + c.k));
  return from_ratio(gamma_ratio(num, den));
}

SpectralValue eta_closed(const CaseParams& c, const Weight& mu, Cx lambda) {
  if (!is_member(c, mu)) {
    throw NotInLattice("eta_closed: weight is not a lattice member");
  }
  std::vector<Cx> num, den;
  push_siegel(num, c, Cx(c.rho, 0.0));
  push_siegel(den, c, Cx(0.5 * c.d * c.p, 0.0));
  push_siegel(num, c, 0.5 * (lambda - c.rho + c.k + c.d * c.p));
  push_siegel(den, c, 0.5 * (-lambda + c.rho + c.k));
  push_siegel_mu(num, c, -lambda + c.rho, mu);
  push_siegel_mu(den, c, lambda + c.rho, mu);
  return from_ratio(gamma_ratio(num, den), lattice_sign(c, mu));
}

Cx step_ratio(const CaseParams& c, const Weight& mu, int j, Cx lambda) {
  if (!is_member(c, mu)) {
    throw NotInLattice("step_ratio: weight is not a lattice member");
  }
  if (j < 1 || j > c.p) {
    throw DimensionMismatch("step_ratio: j out of range");
  }
  const double shift = c.d * (j - 1);
  const Cx numv = lambda - static_cast<double>(mu[j - 1]) - c.rho + shift;
  const Cx denv = lambda + static_cast<double>(mu[j - 1]) + c.rho - shift;
  if (denv == Cx(0.0, 0.0)) {
    const double inf = std::numeric_limits<double>::infinity();
    return Cx(inf, 0.0);
  }
  return numv / denv;
}

std::vector<int> canonical_path(const CaseParams& c, const Weight& mu) {
  if (!is_member(c, mu)) {
    throw NotInLattice("canonical_path: weight is not a lattice member");
  }
  std::vector<int> path;
  for (int j = 0; j < c.p; ++j) {
    const int steps = (mu[j] - c.k) / 2;
    for (int s = 0; s < steps; ++s) path.push_back(j + 1);
  }
  return path;
}

std::vector<int> interleaved_path(const CaseParams& c, const Weight& mu) {
  if (!is_member(c, mu)) {
    throw NotInLattice("interleaved_path: weight is not a lattice member");
  }
  Weight cur = mu0(c);
  std::vector<int> path;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < c.p; ++j) {
      if (cur[j] + 2 > mu[j]) continue;
      Weight next = cur;
      next[j] += 2;
      if (!is_member(c, next)) continue;
      cur = next;
      path.push_back(j + 1);
      moved = true;
    }
  }
  if (cur != mu) {
    throw NoPath("interleaved_path: could not reach target weight");
  }
  return path;
}

SpectralValue eta_recursive_along(const CaseParams& c, const Weight& mu, Cx lambda,
                                  const std::vector<int>& path) {
  SpectralValue base = eta_initial(c, lambda);
  if (base.status == EvalStatus::Pole) return base;
  Weight cur = mu0(c);
  Cx acc = base.eta;
  for (int j : path) {
    const Cx r = step_ratio(c, cur, j, lambda);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
      return {Cx(0.0, 0.0), EvalStatus::Pole};
    }
    acc *= r;
    cur[j - 1] += 2;
  }
  if (cur != mu) {
    throw NoPath("eta_recursive: path does not end at the requested weight");
  }
  return {acc, base.status};
}

SpectralValue eta_recursive(const CaseParams& c, const Weight& mu, Cx lambda,
                            std::vector<int>* path_out) {
  const std::vector<int> path = canonical_path(c, mu);
  if (path_out) *path_out = path;
  return eta_recursive_along(c, mu, lambda, path);
}

Cx sg_ratio(const CaseParams& c, const Weight& mu, const Weight& nu, Cx lambda) {
  const auto neighbors = s_set(c, mu);
  bool found = false;
  for (const auto& w : neighbors) {
    if (w == nu) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw NotNeighbors("sg_ratio: nu is not in S(mu)");
  }
  // omega values are exact half-integers; work with doubled differences.
  const long long dtwice = omega(c, nu).twice - omega(c, mu).twice;
  const double delta = static_cast<double>(dtwice);
  return (4.0 * lambda - delta) / (4.0 * lambda + delta);
}

}  // namespace coslt
