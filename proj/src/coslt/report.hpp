#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coslt/spectrum.hpp"

namespace coslt {

/// Echo of the command-line configuration; serialized verbatim into output
/// metadata so every table is reproducible from its own header.
struct RunConfig {
  std::string command;
  std::string field{"R"};
  int p{2};
  int q{3};
  int l{1};
  bool allow_trivial{false};
  std::optional<std::string> lambda_range;  // "start:stop:step"
  std::optional<std::string> lambda_list_file;
  int max_degree{0};
  long long samples{0};
  std::optional<std::uint64_t> seed;
  std::string format{"csv"};
  std::string out_path;
  bool cross_check{false};
  std::string suite;
};

struct ResultRow {
  std::string field;
  int p{0}, q{0}, l{0};
  std::string mu;  // dash-joined coordinates
  double lambda_re{0.0}, lambda_im{0.0};
  std::optional<double> eta_re, eta_im;  // absent on pole rows
  std::string status;                    // finite | pole | removable
  std::string method;                    // closed | recursive | torus | mc | sphere
};

/// %.17g formatting (round-trip exact for doubles).
std::string fmt_double(double v);

std::string mu_label(const Weight& mu);

/// CSV with the fixed header field,p,q,l,mu,lambda_re,lambda_im,eta_re,eta_im,status,method.
std::string to_csv(const std::vector<ResultRow>& rows);

/// {"metadata": {"config": {...}, "seed": ..., "kernel_phase_sign": 1,
///  "version": ...}, "rows": [...]}
std::string to_json(const RunConfig& cfg, const std::vector<ResultRow>& rows);

/// Lattice tables carry only the case columns and mu.
std::string lattice_to_csv(const std::vector<ResultRow>& rows);
std::string lattice_to_json(const RunConfig& cfg, const std::vector<ResultRow>& rows);

extern const char* const kVersion;
extern const int kKernelPhaseSign;

}  // namespace coslt
