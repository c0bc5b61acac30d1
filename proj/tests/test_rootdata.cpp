#include <doctest.h>

#include "coslt/rng.hpp"
#include "coslt/rootdata.hpp"

using namespace coslt;

TEST_CASE("make_case derives the Table-1 scalars") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  CHECK(r23.d == 1);
  CHECK(r23.n == 4);
  CHECK(r23.rho == doctest::Approx(2.5).epsilon(0));
  CHECK(r23.k == 1);

  const CaseParams c12 = make_case(Field::C, 1, 2, 1);
  CHECK(c12.d == 2);
  CHECK(c12.n == 2);
  CHECK(c12.rho == doctest::Approx(3.0).epsilon(0));
  CHECK(c12.k == 1);

  const CaseParams c23 = make_case(Field::C, 2, 3, -3);
  CHECK(c23.k == 3);
  CHECK(c23.rho == doctest::Approx(5.0).epsilon(0));
}

TEST_CASE("make_case rejects out-of-table parameters") {
  CHECK_THROWS_AS(make_case(Field::R, 3, 4, 0), ConstraintViolation);
  CHECK_THROWS_AS(make_case(Field::R, 2, 2, 0), ConstraintViolation);
  CHECK_THROWS_AS(make_case(Field::C, 3, 2, 1), ConstraintViolation);
  CHECK_THROWS_AS(make_case(Field::C, 0, 2, 1), ConstraintViolation);
  CHECK_THROWS_AS(make_case(Field::C, 2, 2, 0), TrivialCharacter);
  CHECK_NOTHROW(make_case(Field::C, 2, 2, 0, /*allow_trivial=*/true));
}

TEST_CASE("root datum: multiplicities and rho_k") {
  SUBCASE("(R,2,3): 2 rho_k = (3,1) = (q, q-2)") {
    const RootDatum rd = root_datum(make_case(Field::R, 2, 3, 0));
    CHECK(rd.twice_rho_k == std::vector<int>{3, 1});
  }
  SUBCASE("(C,1,2): short mult 2, long mult 1, no medium roots") {
    const RootDatum rd = root_datum(make_case(Field::C, 1, 2, 1));
    REQUIRE(rd.positive.size() == 2);
    CHECK(rd.positive[0].coeff == std::vector<int>{1});
    CHECK(rd.positive[0].mult == 2);
    CHECK(rd.positive[1].coeff == std::vector<int>{2});
    CHECK(rd.positive[1].mult == 1);
  }
  SUBCASE("(C,2,2): q = p kills the short multiplicity") {
    const RootDatum rd = root_datum(make_case(Field::C, 2, 2, 1));
    for (const auto& root : rd.positive) {
      int ones = 0;
      for (int v : root.coeff) ones += (v == 1 || v == -1) ? 1 : 0;
      const bool is_short = (ones == 1 && root.coeff[0] + root.coeff[1] == 1);
      if (is_short) CHECK(root.mult == 0);
    }
  }
  SUBCASE("shifted rho: rho_k + 2 k rho_s componentwise") {
    const CaseParams c = make_case(Field::C, 2, 3, 3);
    const RootDatum rd = root_datum(c);
    for (int j = 0; j < c.p; ++j) {
      CHECK(rd.twice_rho_k_shifted[j] == rd.twice_rho_k[j] + 2 * c.k);
    }
  }
}

TEST_CASE("rho_k closed component formula and consecutive gaps") {
  RngStream rng(2024, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const bool complex_case = trial % 3 != 0;
    const int p = complex_case ? 1 + static_cast<int>(rng.next_u64() % 4) : 2;
    const int q = p + static_cast<int>(rng.next_u64() % 5) + (complex_case ? 0 : 3);
    const CaseParams c = complex_case ? make_case(Field::C, p, q, 2)
                                      : make_case(Field::R, 2, q, 0);
    const RootDatum rd = root_datum(c);
    for (int j = 0; j < c.p; ++j) {
      // 2 rho_k_j = d(q-p) + 2(d-1) + 2d(p-j-1) with 0-based j
      CHECK(rd.twice_rho_k[j] ==
            c.d * (c.q - c.p) + 2 * (c.d - 1) + 2 * c.d * (c.p - j - 1));
      if (j + 1 < c.p) {
        CHECK(rd.twice_rho_k[j] - rd.twice_rho_k[j + 1] == 2 * c.d);
      }
      // recursion denominator identity: 1 + rho_k_j = rho - d j (0-based)
      CHECK(2 + rd.twice_rho_k[j] == doctest::Approx(2.0 * (c.rho - c.d * j)).epsilon(0));
    }
  }
}

TEST_CASE("omega at the spec values") {
  const CaseParams c = make_case(Field::R, 2, 3, 0);
  CHECK(omega(c, {1, 1}).value() == doctest::Approx(3.0).epsilon(0));
  CHECK(omega(c, {3, 1}).value() == doctest::Approx(10.0).epsilon(0));
  CHECK(omega(c, {0, 0}).value() == doctest::Approx(0.0).epsilon(0));
  CHECK(omega(make_case(Field::C, 2, 3, 3), {0, 0}).value() == doctest::Approx(0.0).epsilon(0));
  CHECK_THROWS_AS(omega(c, {1, 1, 1}), DimensionMismatch);
}

TEST_CASE("omega difference equals twice the recursion numerator shift") {
  RngStream rng(77, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const CaseParams c = trial % 2 ? make_case(Field::C, 2, 4, 2) : make_case(Field::R, 2, 5, 0);
    std::vector<int> mu(static_cast<std::size_t>(c.p));
    for (auto& v : mu) v = static_cast<int>(rng.next_u64() % 15);
    const int j = static_cast<int>(rng.next_u64() % c.p);
    std::vector<int> nu = mu;
    nu[j] += 2;
    const double lhs = omega(c, nu).value() - omega(c, mu).value();
    const double rhs = 2.0 * (mu[j] + c.rho - c.d * j);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}
