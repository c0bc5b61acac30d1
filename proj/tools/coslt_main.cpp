// coslt: spectra of the Cos^lambda transform on line bundles over real and
// complex Grassmannians, with built-in numerical verification suites.
//
// Exit codes: 0 success, 1 configuration/validation error, 2 verification
// failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coslt/report.hpp"
#include "coslt/verify.hpp"

namespace {

using namespace coslt;

struct CliArgs {
  std::string field{"R"};
  int p{2};
  int q{3};
  int l{1};
  bool allow_trivial{false};
  std::string lambda_range;
  std::string lambda_list_file;
  int max_degree{0};
  long long samples{0};
  std::optional<std::uint64_t> seed;
  std::string format{"csv"};
  std::string out_path;
  bool cross_check{false};
};

void add_case_flags(CLI::App* cmd, CliArgs& a) {
  cmd->add_option("--field", a.field, "base field: R or C")
      ->check(CLI::IsMember({"R", "C"}));
  cmd->add_option("--p", a.p, "rank (subspace dimension)");
  cmd->add_option("--q", a.q, "complementary dimension");
  cmd->add_option("--l", a.l, "line-bundle character parameter (field C)");
  cmd->add_flag("--allow-trivial", a.allow_trivial, "accept l = 0 (scalar regression)");
}

void add_output_flags(CLI::App* cmd, CliArgs& a) {
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", a.out_path, "write output to this path instead of stdout");
}

CaseParams case_from(const CliArgs& a) {
  return make_case(a.field == "R" ? Field::R : Field::C, a.p, a.q, a.l, a.allow_trivial);
}

RunConfig config_from(const CliArgs& a, const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.field = a.field;
  cfg.p = a.p;
  cfg.q = a.q;
  cfg.l = a.l;
  cfg.allow_trivial = a.allow_trivial;
  if (!a.lambda_range.empty()) cfg.lambda_range = a.lambda_range;
  if (!a.lambda_list_file.empty()) cfg.lambda_list_file = a.lambda_list_file;
  cfg.max_degree = a.max_degree;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.format = a.format;
  cfg.out_path = a.out_path;
  cfg.cross_check = a.cross_check;
  return cfg;
}

std::vector<Cx> parse_lambdas(const CliArgs& a) {
  std::vector<Cx> lambdas;
  if (!a.lambda_range.empty()) {
    double start = 0, stop = 0, step = 0;
    const auto c1 = a.lambda_range.find(':');
    const auto c2 = a.lambda_range.rfind(':');
    if (c1 == std::string::npos || c2 == c1) {
      throw DomainError("--lambda expects START:STOP:STEP");
    }
    start = std::stod(a.lambda_range.substr(0, c1));
    stop = std::stod(a.lambda_range.substr(c1 + 1, c2 - c1 - 1));
    step = std::stod(a.lambda_range.substr(c2 + 1));
    if (step <= 0) throw DomainError("--lambda step must be positive");
    for (double v = start; v <= stop + 1e-12; v += step) lambdas.emplace_back(v, 0.0);
  }
  if (!a.lambda_list_file.empty()) {
    std::ifstream in(a.lambda_list_file);
    if (!in) throw DomainError("cannot read --lambda-list file " + a.lambda_list_file);
    nlohmann::json doc;
    in >> doc;
    if (!doc.is_array()) throw DomainError("--lambda-list file must hold a JSON array");
    for (const auto& item : doc) {
      if (item.is_number()) {
        lambdas.emplace_back(item.get<double>(), 0.0);
      } else if (item.is_array() && item.size() == 2) {
        lambdas.emplace_back(item[0].get<double>(), item[1].get<double>());
      } else {
        throw DomainError("--lambda-list entries must be numbers or [re, im] pairs");
      }
    }
  }
  if (lambdas.empty()) throw DomainError("no lambda values given (--lambda or --lambda-list)");
  return lambdas;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DomainError("cannot write to " + out_path);
  out << text;
}

ResultRow base_row(const CaseParams& c) {
  ResultRow r;
  r.field = field_name(c.field);
  r.p = c.p;
  r.q = c.q;
  r.l = c.l;
  return r;
}

int run_lattice(const CliArgs& a) {
  const CaseParams c = case_from(a);
  const auto weights = enumerate_lattice(c, a.max_degree);
  std::vector<ResultRow> rows;
  for (const auto& mu : weights) {
    ResultRow r = base_row(c);
    r.mu = mu_label(mu);
    rows.push_back(r);
  }
  const RunConfig cfg = config_from(a, "lattice");
  emit(a.format == "json" ? lattice_to_json(cfg, rows) : lattice_to_csv(rows), a.out_path);
  return 0;
}

void append_spectrum_rows(std::vector<ResultRow>& rows, const CaseParams& c, const Weight& mu,
                          Cx lambda, const SpectralValue& v, const char* method) {
  ResultRow r = base_row(c);
  r.mu = mu_label(mu);
  r.lambda_re = lambda.real();
  r.lambda_im = lambda.imag();
  r.status = status_name(v.status);
  r.method = method;
  if (v.status != EvalStatus::Pole) {
    r.eta_re = v.eta.real();
    r.eta_im = v.eta.imag();
  }
  rows.push_back(r);
}

int run_spectrum(const CliArgs& a) {
  const CaseParams c = case_from(a);
  const auto lambdas = parse_lambdas(a);
  const auto weights = enumerate_lattice(c, a.max_degree);
  std::vector<ResultRow> rows;
  for (const auto& mu : weights) {
    for (const Cx lam : lambdas) {
      append_spectrum_rows(rows, c, mu, lam, eta_closed(c, mu, lam), "closed");
    }
  }
  if (a.cross_check) {
    for (const auto& mu : weights) {
      for (const Cx lam : lambdas) {
        append_spectrum_rows(rows, c, mu, lam, eta_recursive(c, mu, lam), "recursive");
      }
    }
  }
  const RunConfig cfg = config_from(a, "spectrum");
  emit(a.format == "json" ? to_json(cfg, rows) : to_csv(rows), a.out_path);
  return 0;
}

int run_verify(const CliArgs& a, const std::string& suite, bool case_given) {
  const bool needs_seed = suite == "transform" || suite == "sphere" ||
                          suite == "equivariance" || suite == "all";
  if (needs_seed && !a.seed) {
    throw DomainError("verify " + suite + " runs Monte Carlo and requires --seed");
  }
  VerifyOptions opt;
  if (case_given) opt.only_case = case_from(a);
  if (a.seed) opt.seed = *a.seed;
  opt.samples = a.samples;
  const auto checks = verify_suite(suite, opt);
  emit(render_report(suite, checks), a.out_path);
  return all_pass(checks) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-spectrum of the Cos^lambda transform on Grassmannian line bundles"};
  app.require_subcommand(1);

  CliArgs a;

  CLI::App* lattice = app.add_subcommand("lattice", "enumerate the highest-weight lattice");
  add_case_flags(lattice, a);
  lattice->add_option("--max-degree", a.max_degree, "maximum total degree |mu|")->required();
  add_output_flags(lattice, a);

  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate eigenvalues eta_mu(lambda)");
  add_case_flags(spectrum, a);
  spectrum->add_option("--max-degree", a.max_degree, "maximum total degree |mu|")->required();
  spectrum->add_option("--lambda", a.lambda_range, "real lambda grid START:STOP:STEP");
  spectrum->add_option("--lambda-list", a.lambda_list_file,
                       "JSON file with lambda values (numbers or [re, im] pairs)");
  spectrum->add_flag("--cross-check", a.cross_check, "also emit recursive-evaluation rows");
  std::optional<std::uint64_t> seed_opt;
  spectrum->add_option("--seed", seed_opt, "seed echoed into metadata");
  add_output_flags(spectrum, a);

  CLI::App* verify = app.add_subcommand("verify", "run numerical verification suites");
  std::string suite;
  verify->add_option("suite", suite, "gamma|recursion|torus|transform|sphere|equivariance|all")
      ->required()
      ->check(CLI::IsMember({"gamma", "recursion", "torus", "transform", "sphere",
                             "equivariance", "all"}));
  add_case_flags(verify, a);
  verify->add_option("--samples", a.samples, "Monte-Carlo sample budget");
  verify->add_option("--seed", seed_opt, "Monte-Carlo seed (required for MC suites)");
  add_output_flags(verify, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  a.seed = seed_opt;
  try {
    if (lattice->parsed()) return run_lattice(a);
    if (spectrum->parsed()) return run_spectrum(a);
    const bool case_given =
        verify->count("--field") || verify->count("--p") || verify->count("--q") ||
        verify->count("--l");
    return run_verify(a, suite, case_given != 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
