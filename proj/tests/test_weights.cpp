#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "coslt/weights.hpp"

using namespace coslt;

namespace {
std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("lattice membership, field R") {
  const CaseParams c = make_case(Field::R, 2, 3, 0);
  CHECK(is_member(c, {3, 1}));
  CHECK(is_member(c, {1, 1}));
  CHECK_FALSE(is_member(c, {2, 0}));   // parity
  CHECK_FALSE(is_member(c, {1, 3}));   // ordering
  CHECK_FALSE(is_member(c, {3, -1}));  // negativity
  CHECK_THROWS_AS(is_member(c, {1}), DimensionMismatch);
}

TEST_CASE("lattice membership, field C") {
  const CaseParams c = make_case(Field::C, 2, 3, 1);
  CHECK(is_member(c, {3, 1}));
  CHECK_FALSE(is_member(c, {2, 1}));  // odd difference
  CHECK_FALSE(is_member(c, {3, 0}));  // mu_p below |l| parity class
  CHECK(is_member(c, {1, 1}));
  const CaseParams c2 = make_case(Field::C, 2, 3, -2);
  CHECK(is_member(c2, {4, 2}));
  CHECK_FALSE(is_member(c2, {4, 1}));
  CHECK(is_member(c2, {2, 2}));
}

TEST_CASE("mu0") {
  CHECK(mu0(make_case(Field::R, 2, 3, 0)) == Weight{1, 1});
  CHECK(mu0(make_case(Field::C, 2, 3, 2)) == Weight{2, 2});
  CHECK(mu0(make_case(Field::C, 1, 5, 3)) == Weight{3});
}

TEST_CASE("enumerate at the worked examples") {
  CHECK(enumerate_lattice(make_case(Field::R, 2, 3, 0), 4) ==
        std::vector<Weight>{{1, 1}, {3, 1}});
  CHECK(enumerate_lattice(make_case(Field::C, 2, 2, 1), 6) ==
        std::vector<Weight>{{1, 1}, {3, 1}, {3, 3}, {5, 1}});
  CHECK(enumerate_lattice(make_case(Field::C, 1, 3, 2), 0).empty());
}

TEST_CASE("enumerate agrees with a brute scan of is_member") {
  for (const CaseParams& c : {make_case(Field::R, 2, 4, 0), make_case(Field::C, 2, 3, 2)}) {
    const int degree = 9;
    std::vector<Weight> brute;
    for (int m1 = 0; m1 <= degree; ++m1) {
      for (int m2 = 0; m2 <= degree - m1; ++m2) {
        const Weight mu{m1, m2};
        if (is_member(c, mu)) brute.push_back(mu);
      }
    }
    const auto fast = enumerate_lattice(c, degree);
    CHECK(as_set(fast) == as_set(brute));
    // ordering: (|mu|, lexicographic)
    for (std::size_t i = 1; i < fast.size(); ++i) {
      const int da = total_degree(fast[i - 1]), db = total_degree(fast[i]);
      CHECK((da < db || (da == db && fast[i - 1] < fast[i])));
    }
  }
}

TEST_CASE("mu0 is the unique minimal-norm member") {
  for (const CaseParams& c :
       {make_case(Field::R, 2, 3, 0), make_case(Field::C, 2, 2, 1), make_case(Field::C, 1, 3, 2)}) {
    const auto members = enumerate_lattice(c, c.p * c.k);
    const Weight base = mu0(c);
    REQUIRE(std::find(members.begin(), members.end(), base) != members.end());
    auto norm2 = [](const Weight& w) {
      long long s = 0;
      for (int v : w) s += static_cast<long long>(v) * v;
      return s;
    };
    for (const auto& mu : enumerate_lattice(c, 3 * c.p * c.k)) {
      if (mu != base) CHECK(norm2(mu) > norm2(base));
    }
  }
}

TEST_CASE("s_set at the worked examples") {
  const CaseParams r = make_case(Field::R, 2, 3, 0);
  CHECK(as_set(s_set(r, {1, 1})) == as_set({{1, 1}, {3, 1}}));
  CHECK(as_set(s_set(r, {3, 1})) == as_set({{3, 1}, {1, 1}, {5, 1}, {3, 3}}));
  const CaseParams c = make_case(Field::C, 1, 2, 1);
  CHECK(as_set(s_set(c, {1})) == as_set({{1}, {3}}));
  CHECK_THROWS_AS(s_set(r, {2, 0}), NotInLattice);
}

TEST_CASE("s_set closure: nu in S(mu) iff mu in S(nu)") {
  for (const CaseParams& c : {make_case(Field::R, 2, 5, 0), make_case(Field::C, 2, 3, 3)}) {
    for (const auto& mu : enumerate_lattice(c, 14)) {
      for (const auto& nu : s_set(c, mu)) {
        const auto back = s_set(c, nu);
        CHECK(std::find(back.begin(), back.end(), mu) != back.end());
      }
    }
  }
}

TEST_CASE("field C parity: (|mu| - p k) is even for all members") {
  for (const CaseParams& c : {make_case(Field::C, 2, 3, 1), make_case(Field::C, 2, 3, -2),
                              make_case(Field::C, 1, 2, 1)}) {
    for (const auto& mu : enumerate_lattice(c, 15)) {
      CHECK((total_degree(mu) - c.p * c.k) % 2 == 0);
    }
  }
}
