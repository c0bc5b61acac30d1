#pragma once

#include <vector>

#include "coslt/types.hpp"

namespace coslt {

/// One Grassmannian line-bundle case with all derived scalars.
///
/// field R: K = SO(n+1), L = S(O(p) x O(q)), requires p = 2 and q >= 3;
///          the character of L is the fixed determinant character, l is
///          normalized to 1.
/// field C: K = SU(n+1), L = S(U(p) x U(q)), requires 1 <= p <= q; the
///          character is parametrized by the integer l.
struct CaseParams {
  Field field{Field::R};
  int p{2};
  int q{3};
  int l{1};
  // derived
  int d{1};          // dim_R of the base field
  int n{4};          // n = p + q - 1, so K acts on (n+1)-dim space
  int k{1};          // 1 for R, |l| for C
  double rho{2.5};   // d (n+1) / 2, always a half-integer

  int dim() const { return n + 1; }
};

/// l = 0 (field C) reproduces the scalar theory; it must be requested
/// explicitly via allow_trivial.
CaseParams make_case(Field field, int p, int q, int l, bool allow_trivial = false);

/// Exact half-integer: value() == twice / 2.
struct HalfInt {
  long long twice{0};
  double value() const { return static_cast<double>(twice) / 2.0; }
};

/// Positive restricted roots of BC_p with multiplicities, in the epsilon
/// coordinate basis, plus the rho-vectors (stored exactly, doubled).
struct RootDatum {
  struct Root {
    std::vector<int> coeff;  // length p
    int mult;
  };
  std::vector<Root> positive;
  std::vector<int> twice_rho_k;          // 2 rho_k, integer components
  std::vector<int> twice_rho_s;          // 2 rho_s = (1,...,1)
  std::vector<int> twice_rho_k_shifted;  // 2 (rho_k + 2 k rho_s)

  double rho_k(int j) const { return twice_rho_k[j] / 2.0; }
};

/// Full positive system {e_i}, {e_i +- e_j, i<j}, {2 e_i} with
/// multiplicities d(q-p), d, d-1; rho_k is accumulated from the root list.
RootDatum root_datum(const CaseParams& c);

/// omega(mu) = <mu + 2 rho_k, mu> with the normalization <e_i, e_j> = delta_ij / 2.
HalfInt omega(const CaseParams& c, const std::vector<int>& mu);

}  // namespace coslt
