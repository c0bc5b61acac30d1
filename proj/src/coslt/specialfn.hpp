#pragma once

#include <span>
#include <vector>

#include "coslt/types.hpp"

namespace coslt {

/// Principal-branch complex log-Gamma with pole flagging.
struct LogGammaValue {
  Cx value{0.0, 0.0};
  EvalStatus status{EvalStatus::Finite};
};

/// status = Pole exactly when z is a nonpositive integer within 1e-12
/// (real and imaginary distance). Away from poles, exp(value) matches
/// Gamma(z) to better than 1e-13 relative for |z| <= 50.
LogGammaValue log_gamma(Cx z);

/// Whether z lies on a Gamma pole within the detection tolerance.
bool is_gamma_pole(Cx z);

/// Siegel Gamma in log space: sum_j log Gamma(z_j - (d/2)(j-1)) for a
/// vector argument of length p. Pole if any factor is a pole.
LogGammaValue siegel_log_gamma(int p, int d, std::span<const Cx> z);

/// Scalar broadcast z -> (z, ..., z).
LogGammaValue siegel_log_gamma(int p, int d, Cx z);

/// Value with pole/removable classification, as produced by gamma_ratio.
struct RatioValue {
  Cx value{0.0, 0.0};
  EvalStatus status{EvalStatus::Finite};
};

/// exp(sum log Gamma(num) - sum log Gamma(den)) over plain Gamma arguments.
/// Unpaired numerator poles give status Pole. When poles appear on both
/// sides (or only in the denominator with some numerator pole present) the
/// value is resolved as a limit: all arguments are shifted by +-eps
/// (eps = 1e-6), the two evaluations are averaged, and the status is
/// Removable. Denominator-only poles give a genuine zero (Finite).
RatioValue gamma_ratio(std::span<const Cx> num, std::span<const Cx> den);

/// Siegel Gamma ratio over scalar-broadcast factor arguments: each entry of
/// numerators/denominators contributes the p Gamma factors of
/// Gamma_{p,d}(z, ..., z).
RatioValue siegel_ratio(int p, int d, std::span<const Cx> numerators,
                        std::span<const Cx> denominators);

}  // namespace coslt
