#include "coslt/weights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace coslt {

int total_degree(const Weight& mu) {
  return std::accumulate(mu.begin(), mu.end(), 0);
}

static void check_length(const CaseParams& c, const Weight& mu, const char* who) {
  if (static_cast<int>(mu.size()) != c.p) {
    throw DimensionMismatch(std::string(who) + ": weight has length " +
                            std::to_string(mu.size()) + ", expected " + std::to_string(c.p));
  }
}

bool is_member(const CaseParams& c, const Weight& mu) {
  check_length(c, mu, "is_member");
  if (c.field == Field::R) {
    for (int j = 0; j < c.p; ++j) {
      if (mu[j] < 0 || mu[j] % 2 == 0) return false;
    }
    for (int j = 0; j + 1 < c.p; ++j) {
      if (mu[j] < mu[j + 1]) return false;
    }
    return true;
  }
  // field C: pairwise differences in 2Z^+ (zero included), mu_p in |l| + 2Z^+
  for (int i = 0; i < c.p; ++i) {
    for (int j = i + 1; j < c.p; ++j) {
      const int diff = mu[i] - mu[j];
      if (diff < 0 || diff % 2 != 0) return false;
    }
  }
  const int last = mu[c.p - 1] - c.k;
  return last >= 0 && last % 2 == 0;
}

Weight mu0(const CaseParams& c) { return Weight(c.p, c.k); }

std::vector<Weight> enumerate_lattice(const CaseParams& c, int max_total_degree) {
  std::vector<Weight> out;
  if (max_total_degree < 0) return out;
  // Members are nonincreasing with all coordinates >= k and congruent to k
  // mod 2, so generate nonincreasing tuples in steps of 2 above k.
  Weight cur(c.p, 0);
  auto rec = [&](auto&& self, int pos, int upper, int remaining) -> void {
    if (pos == c.p) {
      out.push_back(cur);
      return;
    }
    for (int v = c.k; v <= std::min(upper, remaining); v += 2) {
      cur[pos] = v;
      self(self, pos + 1, v, remaining - v);
    }
  };
  if (c.k <= max_total_degree || c.p == 0) {
    rec(rec, 0, max_total_degree, max_total_degree);
  }
  // The generator already enforces the lattice shape; filter defensively so
  // the enumeration stays tied to the membership rule.
  std::erase_if(out, [&](const Weight& w) { return !is_member(c, w); });
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<Weight> s_set(const CaseParams& c, const Weight& mu) {
  check_length(c, mu, "s_set");
  if (!is_member(c, mu)) {
    throw NotInLattice("s_set: weight is not a lattice member");
  }
  std::vector<Weight> out{mu};
  for (int sign : {+2, -2}) {
    for (int j = 0; j < c.p; ++j) {
      Weight nu = mu;
      nu[j] += sign;
      if (is_member(c, nu)) out.push_back(nu);
    }
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace coslt
