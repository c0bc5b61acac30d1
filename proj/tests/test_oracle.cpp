#include <doctest.h>

#include <cmath>

#include "coslt/oracle.hpp"

using namespace coslt;

namespace {
double rel(Cx a, Cx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("torus quadrature reproduces the Gamma closed form") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  SUBCASE("ratio is exactly 1 at the normalization point") {
    const OracleResult o = torus_eta_initial(r23, r23.rho - r23.k, 64);
    CHECK(o.estimate.real() == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("worked values") {
    CHECK(rel(torus_eta_initial(r23, 3.5, 128).estimate, Cx(0.1, 0.0)) < 1e-8);
    const CaseParams c12 = make_case(Field::C, 1, 2, 1);
    CHECK(rel(torus_eta_initial(c12, 4.0, 200).estimate, Cx(1.0 / 3.0, 0.0)) < 1e-8);
  }
  SUBCASE("rejects the divergent range") {
    CHECK_THROWS_AS(torus_eta_initial(r23, r23.rho - r23.k - 0.5, 64), DomainError);
  }
  SUBCASE("error bound brackets the true error") {
    const CaseParams c23 = make_case(Field::C, 2, 3, 3);
    const double lam = c23.rho - c23.k + 3.0;
    const OracleResult o = torus_eta_initial(c23, lam, 96);
    const Cx ref = eta_initial(c23, Cx(lam, 0.0)).eta;
    CHECK(std::abs(o.estimate - ref) < std::max(o.error_bound * 10.0, 1e-12));
  }
}

TEST_CASE("mc_transform_at: seed determinism and eigenvalue match") {
  const CaseParams c = make_case(Field::R, 2, 3, 0);
  const SectionFn f = [&c](const GroupElement& u) { return section_smallest(c, u); };
  const GroupElement e = identity_element(c);
  const OracleResult a = mc_transform_at(c, 4.0, f, e, 60000, 99);
  const OracleResult b = mc_transform_at(c, 4.0, f, e, 60000, 99);
  CHECK(a.estimate.real() == b.estimate.real());
  CHECK(a.estimate.imag() == b.estimate.imag());
  CHECK(a.std_error == b.std_error);
  CHECK(a.std_error > 0.0);
  CHECK(a.rejected < 60);

  const Cx eta = eta_closed(c, mu0(c), Cx(4.0, 0.0)).eta;
  CHECK(std::abs(a.estimate - eta * f(e)) < 3.0 * a.std_error);

  CHECK_THROWS_AS(mc_transform_at(c, 1.0, f, e, 100, 1), DomainError);
}

TEST_CASE("projective oracle (MC) against the closed form") {
  const CaseParams c = make_case(Field::C, 1, 2, 1);
  SUBCASE("eta_(1)(4) = 1/3") {
    const OracleResult o = projective_eigen_oracle(c, 1, 0, 4.0, OracleMethod::MC, 400000, 7);
    CHECK(std::abs(o.estimate - Cx(1.0 / 3.0, 0.0)) < 3.0 * o.std_error);
  }
  SUBCASE("normalization point") {
    const OracleResult o = projective_eigen_oracle(c, 1, 0, 2.0, OracleMethod::MC, 400000, 7);
    CHECK(std::abs(o.estimate - Cx(1.0, 0.0)) < 3.0 * o.std_error);
  }
  SUBCASE("precondition checks") {
    CHECK_THROWS_AS(projective_eigen_oracle(c, 2, 0, 4.0, OracleMethod::MC, 1000, 7),
                    DomainError);
    CHECK_THROWS_AS(projective_eigen_oracle(c, 1, 0, 1.5, OracleMethod::MC, 1000, 7),
                    DomainError);
    CHECK_THROWS_AS(
        projective_eigen_oracle(make_case(Field::R, 2, 3, 0), 1, 0, 4.0, OracleMethod::MC, 10, 7),
        DomainError);
  }
}

TEST_CASE("projective oracle (quadrature) against the closed form") {
  const CaseParams c = make_case(Field::C, 1, 2, 1);
  const OracleResult o =
      projective_eigen_oracle(c, 2, 1, 6.0, OracleMethod::Quadrature, 2000000, 0);
  CHECK(rel(o.estimate, Cx(1.0 / 30.0, 0.0)) < 1e-6);
  const OracleResult o2 =
      projective_eigen_oracle(c, 1, 0, 4.0, OracleMethod::Quadrature, 2000000, 0);
  CHECK(rel(o2.estimate, Cx(1.0 / 3.0, 0.0)) < 1e-8);
}

TEST_CASE("equivariance residual at g = e and g in K is pure noise") {
  const CaseParams c = make_case(Field::C, 1, 2, 1);
  SUBCASE("identity") {
    const EquivarianceResult r = equivariance_check_full(c, 4.0, identity_element(c), 100000, 3);
    CHECK(r.max_residual_over_3se < 1.0);
  }
  SUBCASE("translation by K") {
    RngStream rng(900, 0);
    GroupElement g = haar_sample(c, rng);
    g.tag = ElementTag::InG;
    const EquivarianceResult r = equivariance_check_full(c, 4.0, g, 100000, 4);
    CHECK(r.max_residual_over_3se < 1.0);
  }
}
