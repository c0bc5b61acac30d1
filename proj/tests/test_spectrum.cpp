#include <doctest.h>

#include <cmath>

#include "coslt/rng.hpp"
#include "coslt/spectrum.hpp"

using namespace coslt;

namespace {
double rel(Cx a, Cx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("eta_initial worked values") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  // normalization point rho - k = 1.5
  CHECK(rel(eta_initial(r23, Cx(1.5, 0.0)).eta, Cx(1.0, 0.0)) < 1e-12);
  // 0.75 * Gamma(2) Gamma(1.5) / (Gamma(3.5) Gamma(3)) = 0.1
  CHECK(rel(eta_initial(r23, Cx(3.5, 0.0)).eta, Cx(0.1, 0.0)) < 1e-12);

  const CaseParams c12 = make_case(Field::C, 1, 2, 1);
  // closed form reduces to 8 / (lambda (lambda + 2))
  CHECK(rel(eta_initial(c12, Cx(2.0, 0.0)).eta, Cx(1.0, 0.0)) < 1e-12);
  for (double lam : {2.7, 4.0, 9.25}) {
    CHECK(rel(eta_initial(c12, Cx(lam, 0.0)).eta, Cx(8.0 / (lam * (lam + 2.0)), 0.0)) < 1e-12);
  }
}

TEST_CASE("normalization holds on every matrix case") {
  for (const CaseParams& c :
       {make_case(Field::R, 2, 3, 0), make_case(Field::R, 2, 5, 0), make_case(Field::C, 1, 2, 1),
        make_case(Field::C, 1, 3, 2), make_case(Field::C, 2, 2, 1), make_case(Field::C, 2, 3, 3)}) {
    CHECK(std::abs(eta_initial(c, Cx(c.rho - c.k, 0.0)).eta - Cx(1.0, 0.0)) < 1e-10);
  }
}

TEST_CASE("eta_closed worked values") {
  const CaseParams c12 = make_case(Field::C, 1, 2, 1);
  CHECK(rel(eta_closed(c12, {1}, Cx(4.0, 0.0)).eta, Cx(1.0 / 3.0, 0.0)) < 1e-12);
  // lambda = 6 pairs Gamma poles; resolved as a removable limit (1/30)
  const SpectralValue v = eta_closed(c12, {3}, Cx(6.0, 0.0));
  CHECK(v.status == EvalStatus::Removable);
  CHECK(rel(v.eta, Cx(1.0 / 30.0, 0.0)) < 1e-9);

  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  CHECK(rel(eta_closed(r23, {1, 1}, Cx(4.5, 0.0)).eta, Cx(0.05, 0.0)) < 1e-12);
  CHECK(rel(eta_closed(r23, {3, 1}, Cx(4.5, 0.0)).eta, Cx(0.00625, 0.0)) < 1e-12);
  CHECK_THROWS_AS(eta_closed(r23, {2, 0}, Cx(4.5, 0.0)), NotInLattice);
}

TEST_CASE("eta_closed at mu0 telescopes to eta_initial") {
  RngStream rng(99, 0);
  for (const CaseParams& c :
       {make_case(Field::R, 2, 3, 0), make_case(Field::C, 2, 2, 1), make_case(Field::C, 2, 3, 3)}) {
    for (int i = 0; i < 20; ++i) {
      const Cx lam(-4.0 + 10.0 * rng.uniform01(), 0.2 + 2.0 * rng.uniform01());
      CHECK(rel(eta_closed(c, mu0(c), lam).eta, eta_initial(c, lam).eta) < 1e-12);
    }
  }
}

TEST_CASE("step_ratio worked values") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  CHECK(std::abs(step_ratio(r23, {1, 1}, 1, Cx(3.5, 0.0))) < 1e-15);
  CHECK(rel(step_ratio(r23, {1, 1}, 2, Cx(3.5, 0.0)), Cx(1.0 / 6.0, 0.0)) < 1e-14);
  // lambda -> infinity limit is 1
  CHECK(rel(step_ratio(r23, {3, 1}, 1, Cx(1e9, 0.0)), Cx(1.0, 0.0)) < 1e-8);
}

TEST_CASE("recursive evaluation and paths") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  CHECK(rel(eta_recursive(r23, {3, 1}, Cx(4.5, 0.0)).eta, Cx(0.00625, 0.0)) < 1e-12);

  std::vector<int> path;
  const SpectralValue at_base = eta_recursive(r23, {1, 1}, Cx(2.2, 0.0), &path);
  CHECK(path.empty());
  CHECK(rel(at_base.eta, eta_initial(r23, Cx(2.2, 0.0)).eta) == 0.0);

  const CaseParams c22 = make_case(Field::C, 2, 2, 1);
  for (double lam : {3.3, 5.9, 8.1}) {
    CHECK(rel(eta_recursive(c22, {3, 3}, Cx(lam, 0.0)).eta,
              eta_closed(c22, {3, 3}, Cx(lam, 0.0)).eta) < 1e-9);
  }

  // canonical path raises coordinates left to right
  const auto p2 = canonical_path(r23, {5, 3});
  CHECK(p2 == std::vector<int>{1, 1, 2});
}

TEST_CASE("sg_ratio matches the explicit recursion ratio") {
  const CaseParams r23 = make_case(Field::R, 2, 3, 0);
  // Delta omega = 7 at mu = (1,1), j = 1, so the ratio vanishes at lambda = 3.5
  CHECK(std::abs(sg_ratio(r23, {1, 1}, {3, 1}, Cx(3.5, 0.0))) < 1e-15);
  CHECK(rel(sg_ratio(r23, {3, 1}, {3, 1}, Cx(2.4, 0.0)), Cx(1.0, 0.0)) == 0.0);
  CHECK_THROWS_AS(sg_ratio(r23, {1, 1}, {5, 1}, Cx(2.0, 0.0)), NotNeighbors);

  RngStream rng(4242, 0);
  const CaseParams cases[] = {r23, make_case(Field::C, 2, 3, 3), make_case(Field::C, 1, 3, 2)};
  for (int trial = 0; trial < 200; ++trial) {
    const CaseParams& c = cases[trial % 3];
    const auto lattice = enumerate_lattice(c, 11);
    const Weight mu = lattice[rng.next_u64() % lattice.size()];
    for (int j = 1; j <= c.p; ++j) {
      Weight nu = mu;
      nu[j - 1] += 2;
      if (!is_member(c, nu)) continue;
      const Cx lam(-6.0 + 12.0 * rng.uniform01(), 0.1 + 2.0 * rng.uniform01());
      CHECK(std::abs(sg_ratio(c, mu, nu, lam) - step_ratio(c, mu, j, lam)) < 1e-12);
    }
  }
}

TEST_CASE("pole statuses propagate") {
  const CaseParams c12 = make_case(Field::C, 1, 2, 1);
  // eta_initial has poles where Gamma(lambda/2) does and no cancellation:
  // 8/(lambda(lambda+2)) has poles at 0 and -2
  CHECK(eta_initial(c12, Cx(0.0, 0.0)).status == EvalStatus::Pole);
  CHECK(eta_initial(c12, Cx(-2.0, 0.0)).status == EvalStatus::Pole);
  CHECK(eta_initial(c12, Cx(5.0, 0.0)).status == EvalStatus::Finite);
}

TEST_CASE("conjugation symmetry of the closed form") {
  const CaseParams c = make_case(Field::C, 2, 3, 1);
  for (const Cx lam : {Cx(3.2, 1.1), Cx(-1.7, 0.6), Cx(7.5, 2.3)}) {
    const Cx a = eta_closed(c, {3, 1}, std::conj(lam)).eta;
    const Cx b = std::conj(eta_closed(c, {3, 1}, lam).eta);
    CHECK(rel(a, b) < 1e-13);
  }
}
