#include "coslt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace coslt {

namespace {

std::string case_label(const CaseParams& c) {
  std::string s = std::string(field_name(c.field)) + ",p=" + std::to_string(c.p) + ",q=" +
                  std::to_string(c.q);
  if (c.field == Field::C) s += ",l=" + std::to_string(c.l);
  return s;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void push(std::vector<CheckResult>& out, const std::string& name, double measured,
          double tolerance) {
  out.push_back({name, measured, tolerance, measured < tolerance});
}

std::vector<CaseParams> selected_cases(const VerifyOptions& opt) {
  if (opt.only_case) return {*opt.only_case};
  return test_matrix();
}

double rel_diff(Cx a, Cx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

std::vector<CaseParams> test_matrix() {
  return {
      make_case(Field::R, 2, 3, 1), make_case(Field::R, 2, 5, 1),
      make_case(Field::C, 1, 2, 1), make_case(Field::C, 1, 3, 2),
      make_case(Field::C, 2, 2, 1), make_case(Field::C, 2, 3, 3),
  };
}

std::vector<Cx> lambda_grid(const CaseParams& c, int count, int max_degree) {
  const auto weights = enumerate_lattice(c, max_degree);
  auto safe = [&](Cx lam) {
    // every Gamma argument of eta_closed across the enumerated weights must
    // stay away from the nonpositive integers
    auto arg_ok = [&](Cx z) {
      if (std::abs(z.imag()) > 1e-4) return true;
      const double r = std::round(z.real());
      return !(r <= 0.5 && std::abs(z.real() - r) < 1e-4);
    };
    for (const auto& mu : weights) {
      for (int j = 0; j < c.p; ++j) {
        const double shift = 0.5 * c.d * j;
        if (!arg_ok(0.5 * (lam - c.rho + c.k + c.d * c.p) - shift)) return false;
        if (!arg_ok(0.5 * (-lam + c.rho + c.k) - shift)) return false;
        if (!arg_ok(0.5 * (-lam + c.rho + mu[j]) - shift)) return false;
        if (!arg_ok(0.5 * (lam + c.rho + mu[j]) - shift)) return false;
        if (!arg_ok(0.5 * (lam + c.rho + c.k) - shift)) return false;
      }
    }
    return true;
  };
  static const double imag_cycle[5] = {0.0, 0.0, 0.7, -1.3, 2.1};
  std::vector<Cx> grid;
  for (int m = 0; grid.size() < static_cast<std::size_t>(count) && m < 10 * count; ++m) {
    const Cx cand(-4.1 + 0.83 * m, imag_cycle[m % 5]);
    if (safe(cand)) grid.push_back(cand);
  }
  return grid;
}

std::vector<CheckResult> verify_gamma(const VerifyOptions&) {
  std::vector<CheckResult> out;
  const double sqrt_pi = 1.7724538509055160273;
  const double g_half = std::abs(std::exp(log_gamma(Cx(0.5, 0.0)).value) - sqrt_pi) / sqrt_pi;
  push(out, "gamma.ref.gamma(0.5)", g_half, 1e-13);
  const double g3 = std::abs(std::exp(log_gamma(Cx(3.0, 0.0)).value) - Cx(2.0, 0.0)) / 2.0;
  push(out, "gamma.ref.gamma(3)", g3, 1e-13);
  const double siegel_ref = 2.6586807763582740409;  // Gamma(3) Gamma(2.5)
  const double gs =
      std::abs(std::exp(siegel_log_gamma(2, 1, Cx(3.0, 0.0)).value) - siegel_ref) / siegel_ref;
  push(out, "gamma.ref.siegel_2_1(3)", gs, 1e-13);

  // functional equation on a deterministic complex grid away from poles
  double worst_fe = 0.0;
  for (int m = 0; m < 100; ++m) {
    const Cx z(-9.7 + 0.198 * m, -8.3 + 0.169 * m);
    const double r0 = std::round(z.real()), r1 = std::round(z.real() + 1.0);
    if (std::abs(z.imag()) < 0.1 &&
        (std::abs(z.real() - r0) < 0.1 || std::abs(z.real() + 1.0 - r1) < 0.1)) {
      continue;
    }
    const Cx lhs = std::exp(log_gamma(z + 1.0).value - log_gamma(z).value);
    worst_fe = std::max(worst_fe, std::abs(lhs - z) / std::abs(z));
  }
  push(out, "gamma.functional_equation", worst_fe, 1e-13);

  // conjugate symmetry
  double worst_conj = 0.0;
  for (int m = 0; m < 40; ++m) {
    const Cx z(-6.3 + 0.41 * m, 0.17 + 0.23 * m);
    if (is_gamma_pole(z)) continue;
    const Cx a = log_gamma(std::conj(z)).value;
    const Cx b = std::conj(log_gamma(z).value);
    worst_conj = std::max(worst_conj, std::abs(a - b) / std::max(1.0, std::abs(b)));
  }
  push(out, "gamma.conjugate_symmetry", worst_conj, 1e-14);

  // worked ratio: Gamma_{2,1}(2.5)/Gamma_{2,1}(1) = 0.75
  {
    const Cx num[] = {Cx(2.5, 0.0)};
    const Cx den[] = {Cx(1.0, 0.0)};
    const RatioValue r = siegel_ratio(2, 1, num, den);
    push(out, "gamma.siegel_ratio.(2.5|1)", std::abs(r.value - Cx(0.75, 0.0)) / 0.75, 1e-13);
  }
  return out;
}

std::vector<CheckResult> verify_recursion(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const auto cases = selected_cases(opt);

  for (const auto& c : cases) {
    const std::string tag = case_label(c);

    // eta_{mu0}(rho - k) = 1
    const SpectralValue base = eta_initial(c, Cx(c.rho - c.k, 0.0));
    push(out, "recursion.normalization." + tag, std::abs(base.eta - Cx(1.0, 0.0)), 1e-10);

    const auto weights = enumerate_lattice(c, 20);
    const auto grid = lambda_grid(c, 50, 20);

    double worst_cr = 0.0;      // closed vs recursive
    double worst_path = 0.0;    // canonical vs interleaved path
    double worst_g = 0.0;       // mu-independence of eta / (c(mu) * mu-ratio)
    double worst_conj = 0.0;    // eta(conj lambda) = conj(eta(lambda))
    for (const Cx lam : grid) {
      Cx g_ref(0.0, 0.0);
      bool have_ref = false;
      for (const auto& mu : weights) {
        const SpectralValue closed = eta_closed(c, mu, lam);
        const SpectralValue rec = eta_recursive(c, mu, lam);
        worst_cr = std::max(worst_cr,
                            std::abs(closed.eta - rec.eta) / std::max(std::abs(closed.eta), 1e-300));
        const auto alt = interleaved_path(c, mu);
        const SpectralValue rec2 = eta_recursive_along(c, mu, lam, alt);
        worst_path = std::max(worst_path,
                              std::abs(rec.eta - rec2.eta) / std::max(std::abs(rec.eta), 1e-300));

        // eta / [c(mu) Gamma ratio] should reproduce big_g for every mu
        std::vector<Cx> num, den;
        for (int j = 0; j < c.p; ++j) {
          num.push_back(0.5 * (-lam + c.rho + static_cast<double>(mu[j])) - 0.5 * c.d * j);
          den.push_back(0.5 * (lam + c.rho + static_cast<double>(mu[j])) - 0.5 * c.d * j);
        }
        const RatioValue mu_ratio = gamma_ratio(num, den);
        const long long e2 = (total_degree(mu) - static_cast<long long>(c.p) * c.k) / 2;
        const double sign = (e2 % 2 == 0) ? 1.0 : -1.0;
        const Cx g_val = closed.eta / (sign * mu_ratio.value);
        if (!have_ref) {
          g_ref = g_val;
          have_ref = true;
        } else {
          worst_g = std::max(worst_g, std::abs(g_val - g_ref) / std::max(std::abs(g_ref), 1e-300));
        }
      }
      const SpectralValue bg = big_g(c, lam);
      if (have_ref) {
        worst_g = std::max(worst_g, std::abs(g_ref - bg.eta) / std::max(std::abs(bg.eta), 1e-300));
      }
      // conjugation symmetry of the closed form
      const SpectralValue direct = eta_closed(c, mu0(c), std::conj(lam));
      const SpectralValue conj = eta_closed(c, mu0(c), lam);
      worst_conj = std::max(worst_conj, rel_diff(direct.eta, std::conj(conj.eta)));
    }
    push(out, "recursion.closed_vs_recursive." + tag, worst_cr, 1e-9);
    push(out, "recursion.path_independence." + tag, worst_path, 1e-10);
    push(out, "recursion.big_g_structure." + tag, worst_g, 1e-9);
    push(out, "recursion.conjugation." + tag, worst_conj, 1e-12);
  }

  // eq10 with r = lambda against the explicit step ratio, 100 random draws
  {
    RngStream rng(opt.seed, 424242);
    const auto matrix = selected_cases(opt);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const CaseParams& c = matrix[rng.next_u64() % matrix.size()];
      const auto weights = enumerate_lattice(c, 13);
      const Weight mu = weights[rng.next_u64() % weights.size()];
      std::vector<int> valid_j;
      for (int j = 1; j <= c.p; ++j) {
        Weight nu = mu;
        nu[j - 1] += 2;
        if (is_member(c, nu)) valid_j.push_back(j);
      }
      const int j = valid_j[rng.next_u64() % valid_j.size()];
      const Cx lam(-5.0 + 10.0 * rng.uniform01(), 0.1 + 2.9 * rng.uniform01());
      Weight nu = mu;
      nu[j - 1] += 2;
      const Cx lhs = sg_ratio(c, mu, nu, lam);
      const Cx rhs = step_ratio(c, mu, j, lam);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    push(out, "recursion.sg_ratio_matches_step_ratio", worst, 1e-12);
  }
  return out;
}

std::vector<CheckResult> verify_torus(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& c : selected_cases(opt)) {
    const int n_points = c.p == 1 ? 400 : 256;
    double worst = 0.0;
    for (int i = 0; i <= 5; ++i) {
      const double lam = c.rho - c.k + i;
      const OracleResult o = torus_eta_initial(c, lam, n_points);
      const SpectralValue ref = eta_initial(c, Cx(lam, 0.0));
      worst = std::max(worst, rel_diff(o.estimate, ref.eta));
    }
    push(out, "torus.matches_eta_initial." + case_label(c), worst, 1e-6);
  }
  // grid refinement order at a fractional exponent (algebraic regime)
  {
    const CaseParams c = make_case(Field::R, 2, 3, 1);
    const double lam = c.rho - c.k + 1.5;
    const Cx ref = eta_initial(c, Cx(lam, 0.0)).eta;
    const double e1 = rel_diff(torus_eta_initial(c, lam, 16).estimate, ref);
    const double e2 = rel_diff(torus_eta_initial(c, lam, 32).estimate, ref);
    const double gain = e1 / std::max(e2, 1e-300);
    out.push_back({"torus.refinement_gain", gain, 4.0, gain >= 4.0});
  }
  return out;
}

std::vector<CheckResult> verify_transform(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const long long samples = opt.samples > 0 ? opt.samples : 1000000;

  // section contract f(k m) = chi(m)^{-1} f(k) across the matrix
  for (const auto& c : selected_cases(opt)) {
    RngStream rng(opt.seed, 777);
    double worst = 0.0;
    for (int trial = 0; trial < 17; ++trial) {
      const GroupElement k = haar_sample(c, rng);
      const GroupElement m = random_l_element(c, rng);
      GroupElement km{k.mat * m.mat, ElementTag::InK};
      const Cx lhs = section_smallest(c, km);
      const Cx rhs = section_smallest(c, k) / chi_L(c, m);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    push(out, "transform.section_contract." + case_label(c), worst, 1e-12);
  }

  // smallest section is an eigenvector of the Monte-Carlo transform
  {
    CaseParams c = make_case(Field::R, 2, 3, 1);
    if (opt.only_case) c = *opt.only_case;
    const double lam = 4.0;
    const Cx eta = eta_closed(c, mu0(c), Cx(lam, 0.0)).eta;
    const SectionFn f = [&c](const GroupElement& u) { return section_smallest(c, u); };
    std::vector<double> tvec;
    for (int j = 0; j < c.p; ++j) tvec.push_back(0.3 + 0.4 * j);
    const GroupElement pts[2] = {identity_element(c), torus_point(c, tvec)};
    for (int i = 0; i < 2; ++i) {
      const OracleResult o = mc_transform_at(c, lam, f, pts[i], samples, opt.seed + i);
      const Cx fk = f(pts[i]);
      const double resid = std::abs(o.estimate - eta * fk);
      push(out,
           "transform.mc_eigenvector." + case_label(c) + ".point" + std::to_string(i),
           resid / (3.0 * o.std_error), 1.0);
    }
  }
  return out;
}

std::vector<CheckResult> verify_sphere(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  CaseParams c = make_case(Field::C, 1, 2, 1);
  if (opt.only_case) c = *opt.only_case;
  const long long samples = opt.samples > 0 ? opt.samples : 5000000;
  for (int mu_val : {c.k, c.k + 2, c.k + 4}) {
    const int b = (mu_val - c.k) / 2;
    const int a = b + c.l;
    for (double lam : {c.rho - c.k, c.rho - c.k + 2.0, c.rho - c.k + 4.0}) {
      const OracleResult o =
          projective_eigen_oracle(c, a, b, lam, OracleMethod::MC, samples, opt.seed);
      const Cx ref = eta_closed(c, Weight{mu_val}, Cx(lam, 0.0)).eta;
      const double resid = std::abs(o.estimate - ref);
      push(out,
           "sphere.eigenvalue.mu" + std::to_string(mu_val) + ".lambda" +
               fmt17(lam),
           resid / (3.0 * o.std_error), 1.0);
    }
  }
  return out;
}

std::vector<CheckResult> verify_equivariance(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::vector<CaseParams> cases;
  if (opt.only_case) {
    cases = {*opt.only_case};
  } else {
    cases = {make_case(Field::R, 2, 3, 1), make_case(Field::C, 1, 2, 1)};
  }
  const long long samples = opt.samples > 0 ? opt.samples : 1000000;
  const double lam = 4.0;
  for (const auto& c : cases) {
    for (int i = 0; i < 5; ++i) {
      RngStream rng(opt.seed, 7000 + i);
      const GroupElement g = random_sl_element(c, rng, 0.08);
      const EquivarianceResult r = equivariance_check_full(c, lam, g, samples, opt.seed + i);
      push(out, "equivariance." + case_label(c) + ".g" + std::to_string(i),
           r.max_residual_over_3se, 1.0);
    }
  }
  return out;
}

std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "gamma") return verify_gamma(opt);
  if (suite == "recursion") return verify_recursion(opt);
  if (suite == "torus") return verify_torus(opt);
  if (suite == "transform") return verify_transform(opt);
  if (suite == "sphere") return verify_sphere(opt);
  if (suite == "equivariance") return verify_equivariance(opt);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"gamma", "recursion", "torus", "transform", "sphere", "equivariance"}) {
      const auto part = verify_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown verify suite: " + suite);
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string render_report(const std::string& suite, const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  os << "# verify " << suite << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  measured=" << fmt17(c.measured)
       << "  tol=" << fmt17(c.tolerance) << "\n";
  }
  const long long fails =
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
  os << "# " << checks.size() << " checks, " << fails << " failures\n";
  return os.str();
}

}  // namespace coslt
