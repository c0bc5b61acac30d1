#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coslt/oracle.hpp"

namespace coslt {

struct CheckResult {
  std::string name;
  double measured{0.0};
  double tolerance{0.0};
  bool pass{false};
};

struct VerifyOptions {
  std::optional<CaseParams> only_case;
  std::uint64_t seed{12345};
  long long samples{0};  // 0 = suite default
};

/// The standing six-case verification matrix.
std::vector<CaseParams> test_matrix();

/// 50 deterministic lambda points (real and complex) at a safe distance from
/// every Gamma-argument pole hyperplane of the closed form for |mu| <= max_degree.
std::vector<Cx> lambda_grid(const CaseParams& c, int count, int max_degree);

std::vector<CheckResult> verify_gamma(const VerifyOptions& opt);
std::vector<CheckResult> verify_recursion(const VerifyOptions& opt);
std::vector<CheckResult> verify_torus(const VerifyOptions& opt);
std::vector<CheckResult> verify_transform(const VerifyOptions& opt);
std::vector<CheckResult> verify_sphere(const VerifyOptions& opt);
std::vector<CheckResult> verify_equivariance(const VerifyOptions& opt);
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt);

/// Deterministic plain-text report: one line per check plus a summary.
std::string render_report(const std::string& suite, const std::vector<CheckResult>& checks);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace coslt
