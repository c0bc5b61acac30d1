#include "coslt/rootdata.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace coslt {

CaseParams make_case(Field field, int p, int q, int l, bool allow_trivial) {
  CaseParams c;
  c.field = field;
  c.p = p;
  c.q = q;
  if (field == Field::R) {
    if (p != 2) {
      throw ConstraintViolation("field R requires p = 2 (got p = " + std::to_string(p) + ")");
    }
    if (q < 3) {
      throw ConstraintViolation("field R requires q >= 3 (got q = " + std::to_string(q) + ")");
    }
    c.l = 1;  // the determinant character; the l argument is ignored
    c.d = 1;
    c.k = 1;
  } else {
    if (p < 1 || p > q) {
      throw ConstraintViolation("field C requires 1 <= p <= q (got p = " + std::to_string(p) +
                                ", q = " + std::to_string(q) + ")");
    }
    if (l == 0 && !allow_trivial) {
      throw TrivialCharacter("l = 0 selects the trivial character; pass allow_trivial to use it");
    }
    c.l = l;
    c.d = 2;
    c.k = std::abs(l);
  }
  c.n = p + q - 1;
  c.rho = c.d * (c.n + 1) / 2.0;
  return c;
}

RootDatum root_datum(const CaseParams& c) {
  const int p = c.p, d = c.d, q = c.q;
  RootDatum rd;
  auto unit = [p](int i) {
    std::vector<int> v(p, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < p; ++i) rd.positive.push_back({unit(i), d * (q - p)});
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      auto plus = unit(i), minus = unit(i);
      plus[j] = 1;
      minus[j] = -1;
      rd.positive.push_back({plus, d});
      rd.positive.push_back({minus, d});
    }
  }
  for (int i = 0; i < p; ++i) {
    auto v = unit(i);
    v[i] = 2;
    rd.positive.push_back({v, d - 1});
  }

  rd.twice_rho_k.assign(p, 0);
  for (const auto& r : rd.positive) {
    for (int j = 0; j < p; ++j) rd.twice_rho_k[j] += r.mult * r.coeff[j];
  }
  rd.twice_rho_s.assign(p, 1);
  rd.twice_rho_k_shifted.resize(p);
  for (int j = 0; j < p; ++j) {
    rd.twice_rho_k_shifted[j] = rd.twice_rho_k[j] + 2 * c.k * rd.twice_rho_s[j];
  }
  return rd;
}

HalfInt omega(const CaseParams& c, const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != c.p) {
    throw DimensionMismatch("omega: weight has length " + std::to_string(mu.size()) +
                            ", expected " + std::to_string(c.p));
  }
  const RootDatum rd = root_datum(c);
  // <mu + 2 rho_k, mu> = (1/2) sum_j mu_j (mu_j + 2 rho_k_j)
  long long twice = 0;
  for (int j = 0; j < c.p; ++j) {
    twice += static_cast<long long>(mu[j]) * (mu[j] + rd.twice_rho_k[j]);
  }
  return HalfInt{twice};
}

}  // namespace coslt
