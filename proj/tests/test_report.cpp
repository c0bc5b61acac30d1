#include <doctest.h>

#include <nlohmann/json.hpp>

#include "coslt/report.hpp"
#include "coslt/verify.hpp"

using namespace coslt;

TEST_CASE("csv layout") {
  ResultRow r;
  r.field = "C";
  r.p = 1;
  r.q = 2;
  r.l = 1;
  r.mu = "3";
  r.lambda_re = 4.0;
  r.lambda_im = 0.0;
  r.eta_re = 1.0 / 3.0;
  r.eta_im = 0.0;
  r.status = "finite";
  r.method = "closed";
  ResultRow pole = r;
  pole.eta_re.reset();
  pole.eta_im.reset();
  pole.status = "pole";
  const std::string csv = to_csv({r, pole});
  CHECK(csv.starts_with("field,p,q,l,mu,lambda_re,lambda_im,eta_re,eta_im,status,method\n"));
  CHECK(csv.find("C,1,2,1,3,4,0,0.33333333333333331,0,finite,closed\n") != std::string::npos);
  // pole rows carry empty eta fields
  CHECK(csv.find("C,1,2,1,3,4,0,,,pole,closed\n") != std::string::npos);
}

TEST_CASE("json structure and metadata echo") {
  RunConfig cfg;
  cfg.command = "spectrum";
  cfg.field = "C";
  cfg.p = 1;
  cfg.q = 2;
  cfg.l = 1;
  cfg.lambda_range = "2:6:2";
  cfg.max_degree = 5;
  cfg.seed = 42;
  cfg.format = "json";
  ResultRow r;
  r.field = "C";
  r.p = 1;
  r.q = 2;
  r.l = 1;
  r.mu = "1";
  r.lambda_re = 4.0;
  r.eta_re = 1.0 / 3.0;
  r.eta_im = 0.0;
  r.status = "finite";
  r.method = "closed";
  const auto doc = nlohmann::json::parse(to_json(cfg, {r}));
  CHECK(doc["metadata"]["config"]["field"] == "C");
  CHECK(doc["metadata"]["config"]["lambda"] == "2:6:2");
  CHECK(doc["metadata"]["seed"] == 42);
  CHECK(doc["metadata"]["kernel_phase_sign"] == 1);
  CHECK(doc["metadata"].contains("version"));
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["mu"] == "1");
  // round-trip exactness of the serialized double
  CHECK(doc["rows"][0]["eta_re"].get<double>() == 1.0 / 3.0);
}

TEST_CASE("report rendering is stable") {
  const std::vector<CheckResult> checks = {{"alpha", 1e-12, 1e-9, true},
                                           {"beta", 2.0, 1.0, false}};
  const std::string text = render_report("demo", checks);
  CHECK(text == "# verify demo\n"
                "PASS  alpha  measured=9.9999999999999998e-13  tol=1.0000000000000001e-09\n"
                "FAIL  beta  measured=2  tol=1\n"
                "# 2 checks, 1 failures\n");
}

TEST_CASE("verify gamma suite goes green") {
  VerifyOptions opt;
  const auto checks = verify_gamma(opt);
  CHECK(all_pass(checks));
}
