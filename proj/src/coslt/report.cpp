#include "coslt/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace coslt {

const char* const kVersion = "0.1.0";
// Phase exponent sign of the kernel character factor; +1 is the convention
// validated by the transform/sphere oracles (see groupops::cos_kernel).
const int kKernelPhaseSign = +1;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string mu_label(const Weight& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(mu[i]);
  }
  return s;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "field,p,q,l,mu,lambda_re,lambda_im,eta_re,eta_im,status,method\n";
  for (const auto& r : rows) {
    os << r.field << ',' << r.p << ',' << r.q << ',' << r.l << ',' << r.mu << ','
       << fmt_double(r.lambda_re) << ',' << fmt_double(r.lambda_im) << ','
       << (r.eta_re ? fmt_double(*r.eta_re) : "") << ','
       << (r.eta_im ? fmt_double(*r.eta_im) : "") << ',' << r.status << ',' << r.method << '\n';
  }
  return os.str();
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["field"] = cfg.field;
  j["p"] = cfg.p;
  j["q"] = cfg.q;
  j["l"] = cfg.l;
  if (cfg.allow_trivial) j["allow_trivial"] = true;
  if (cfg.lambda_range) j["lambda"] = *cfg.lambda_range;
  if (cfg.lambda_list_file) j["lambda_list"] = *cfg.lambda_list_file;
  j["max_degree"] = cfg.max_degree;
  if (cfg.samples > 0) j["samples"] = cfg.samples;
  j["format"] = cfg.format;
  if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
  if (cfg.cross_check) j["cross_check"] = true;
  if (!cfg.suite.empty()) j["suite"] = cfg.suite;
  return j;
}

nlohmann::ordered_json metadata_json(const RunConfig& cfg) {
  nlohmann::ordered_json meta;
  meta["config"] = config_json(cfg);
  if (cfg.seed) {
    meta["seed"] = *cfg.seed;
  } else {
    meta["seed"] = nullptr;
  }
  meta["kernel_phase_sign"] = kKernelPhaseSign;
  meta["version"] = kVersion;
  return meta;
}

nlohmann::ordered_json row_json(const ResultRow& r, bool lattice_only) {
  nlohmann::ordered_json j;
  j["field"] = r.field;
  j["p"] = r.p;
  j["q"] = r.q;
  j["l"] = r.l;
  j["mu"] = r.mu;
  if (!lattice_only) {
    j["lambda_re"] = r.lambda_re;
    j["lambda_im"] = r.lambda_im;
    if (r.eta_re) {
      j["eta_re"] = *r.eta_re;
      j["eta_im"] = *r.eta_im;
    } else {
      j["eta_re"] = nullptr;
      j["eta_im"] = nullptr;
    }
    j["status"] = r.status;
    j["method"] = r.method;
  }
  return j;
}

}  // namespace

std::string to_json(const RunConfig& cfg, const std::vector<ResultRow>& rows) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata_json(cfg);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) doc["rows"].push_back(row_json(r, false));
  return doc.dump(2) + "\n";
}

std::string lattice_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "field,p,q,l,mu\n";
  for (const auto& r : rows) {
    os << r.field << ',' << r.p << ',' << r.q << ',' << r.l << ',' << r.mu << '\n';
  }
  return os.str();
}

std::string lattice_to_json(const RunConfig& cfg, const std::vector<ResultRow>& rows) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata_json(cfg);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) doc["rows"].push_back(row_json(r, true));
  return doc.dump(2) + "\n";
}

}  // namespace coslt
