#include "coslt/specialfn.hpp"

#include <array>
#include <cmath>

namespace coslt {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)
constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos approximation, g = 607/128 with 15 coefficients. This set keeps
// the relative error of exp(log_gamma) below ~6e-14 on |z| <= 50, which the
// 9-term g = 7 set does not quite reach.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Requires Re z >= 0.5.
Cx lanczos_log_gamma(Cx z) {
  const Cx zm = z - 1.0;
  Cx series(kLanczosC[0], 0.0);
  for (std::size_t i = 1; i < kLanczosC.size(); ++i) {
    series += kLanczosC[i] / (zm + static_cast<double>(i));
  }
  const Cx t = zm + kLanczosG + 0.5;
  return 0.5 * kLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(pi z) for Im z >= 0, factoring out the dominant exponential so
// large imaginary parts do not overflow:
//   sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) * (i/2).
Cx log_sin_pi_upper(Cx z) {
  const Cx i_pi_z(-kPi * z.imag(), kPi * z.real());
  const Cx w = Cx(1.0, 0.0) - std::exp(2.0 * i_pi_z);
  return -i_pi_z + std::log(w) + Cx(-std::log(2.0), kPi / 2.0);
}

Cx log_gamma_unchecked(Cx z) {
  if (z.imag() < 0.0) {
    return std::conj(log_gamma_unchecked(std::conj(z)));
  }
  if (z.real() < 0.5) {
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(kPi) - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

}  // namespace

bool is_gamma_pole(Cx z) {
  if (std::abs(z.imag()) > kPoleTol) return false;
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= kPoleTol;
}

LogGammaValue log_gamma(Cx z) {
  if (is_gamma_pole(z)) {
    return {Cx(0.0, 0.0), EvalStatus::Pole};
  }
  return {log_gamma_unchecked(z), EvalStatus::Finite};
}

LogGammaValue siegel_log_gamma(int p, int d, std::span<const Cx> z) {
  LogGammaValue out;
  for (int j = 0; j < p; ++j) {
    const LogGammaValue f = log_gamma(z[j] - 0.5 * d * j);
    if (f.status == EvalStatus::Pole) return {Cx(0.0, 0.0), EvalStatus::Pole};
    out.value += f.value;
  }
  return out;
}

LogGammaValue siegel_log_gamma(int p, int d, Cx z) {
  std::vector<Cx> v(static_cast<std::size_t>(p), z);
  return siegel_log_gamma(p, d, std::span<const Cx>(v));
}

namespace {

// Sum of log Gamma over shifted arguments; the shift keeps every argument
// off the pole set during removable-limit evaluation.
Cx log_gamma_sum_shifted(std::span<const Cx> args, double eps) {
  Cx s(0.0, 0.0);
  for (const Cx& a : args) s += log_gamma_unchecked(a + eps);
  return s;
}

bool shift_is_safe(std::span<const Cx> num, std::span<const Cx> den, double eps) {
  auto ok = [eps](Cx a) {
    const Cx b = a + eps;
    if (std::abs(b.imag()) > 1e-9) return true;
    const double r = std::round(b.real());
    return !(r <= 0.5 && std::abs(b.real() - r) <= 1e-9);
  };
  for (const Cx& a : num) {
    if (!ok(a)) return false;
  }
  for (const Cx& a : den) {
    if (!ok(a)) return false;
  }
  return true;
}

}  // namespace

RatioValue gamma_ratio(std::span<const Cx> num, std::span<const Cx> den) {
  int num_poles = 0, den_poles = 0;
  for (const Cx& a : num) num_poles += is_gamma_pole(a) ? 1 : 0;
  for (const Cx& a : den) den_poles += is_gamma_pole(a) ? 1 : 0;

  if (num_poles > den_poles) {
    return {Cx(0.0, 0.0), EvalStatus::Pole};
  }
  if (num_poles == 0 && den_poles == 0) {
    const Cx v = std::exp(log_gamma_sum_shifted(num, 0.0) - log_gamma_sum_shifted(den, 0.0));
    return {v, EvalStatus::Finite};
  }
  if (num_poles == 0) {
    // denominator blows up, the ratio has a genuine zero
    return {Cx(0.0, 0.0), EvalStatus::Finite};
  }
  // Paired (or denominator-dominated) poles: resolve by the symmetric limit
  // along a uniform argument shift. Averaging the +-eps evaluations cancels
  // the O(eps) term, leaving an O(eps^2) error.
  double eps = 1e-6;
  while (!shift_is_safe(num, den, eps) || !shift_is_safe(num, den, -eps)) {
    eps *= 1.37;
  }
  const Cx plus = std::exp(log_gamma_sum_shifted(num, eps) - log_gamma_sum_shifted(den, eps));
  const Cx minus = std::exp(log_gamma_sum_shifted(num, -eps) - log_gamma_sum_shifted(den, -eps));
  return {0.5 * (plus + minus), EvalStatus::Removable};
}

RatioValue siegel_ratio(int p, int d, std::span<const Cx> numerators,
                        std::span<const Cx> denominators) {
  std::vector<Cx> num, den;
  num.reserve(numerators.size() * static_cast<std::size_t>(p));
  den.reserve(denominators.size() * static_cast<std::size_t>(p));
  for (const Cx& z : numerators) {
    for (int j = 0; j < p; ++j) num.push_back(z - 0.5 * d * j);
  }
  for (const Cx& z : denominators) {
    for (int j = 0; j < p; ++j) den.push_back(z - 0.5 * d * j);
  }
  return gamma_ratio(num, den);
}

}  // namespace coslt
