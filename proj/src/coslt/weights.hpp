#pragma once

#include <vector>

#include "coslt/rootdata.hpp"

namespace coslt {

using Weight = std::vector<int>;

/// Membership in the highest-weight lattice of chi-spherical K-types.
/// field R (p = 2): mu_1 >= mu_2 >= 0 with every mu_j odd.
/// field C: mu_i - mu_j even and >= 0 for i < j, and mu_p - |l| even and >= 0.
bool is_member(const CaseParams& c, const Weight& mu);

/// The smallest lattice element mu0 = (k, ..., k).
Weight mu0(const CaseParams& c);

/// All lattice members with |mu| <= max_total_degree, sorted by
/// (|mu|, lexicographic); deterministic.
std::vector<Weight> enumerate_lattice(const CaseParams& c, int max_total_degree);

/// S(mu) = ({mu +- 2 e_j} u {mu}) intersected with the lattice, in canonical
/// (|mu|, lexicographic) order.
std::vector<Weight> s_set(const CaseParams& c, const Weight& mu);

int total_degree(const Weight& mu);

}  // namespace coslt
