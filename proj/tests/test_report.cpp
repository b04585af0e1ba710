#include <doctest.h>

#include <json.hpp>

#include "errors.hpp"
#include "report.hpp"

using namespace fracmeas;

TEST_CASE("dims rendering") {
  Params p = params_from(RunConfig{});
  std::string text = render_dims(p, 50, OutputFormat::text);
  CHECK(text.find("r = 1/2") != std::string::npos);
  CHECK(text.find("0.64576011716509760327") != std::string::npos);
  CHECK(text.find("1.54856265263024290726") != std::string::npos);

  std::string js = render_dims(p, 50, OutputFormat::json);
  auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["n"] == 2);
  CHECK(parsed["r"] == "1/2");
  auto br = parsed["hausdorff_measure"]["decimal_bracket"];
  CHECK(br.size() == 2);
  CHECK(br[0].get<std::string>().substr(0, 10) == "0.64576011");
}

TEST_CASE("gap table CSV") {
  Params p(2, 3);
  std::string csv = render_gaps(p, 2, OutputFormat::csv);
  CHECK(csv ==
        "left,right,length,type_i,level\n"
        "2/9,1/3,1/9,1,2\n"
        "5/9,1,4/9,2,2\n");
}

TEST_CASE("cdf and density rendering") {
  Params p(2, 3);
  CHECK(render_cdf(p, Rational(1, 3), OutputFormat::text) == "1/2\n");
  std::string density = render_density(p, 2, 0, 3, 12, OutputFormat::text);
  CHECK(density.find("p = 4, L = 5") != std::string::npos);
  CHECK(density.find("1.448968748740") != std::string::npos);
  CHECK_THROWS_AS(render_density(p, 2, 0, 4, 12, OutputFormat::text),
                  InvalidArgument);
}

TEST_CASE("verify battery on a small configuration") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 3;
  cfg.max_level = 4;
  cfg.center_level = 3;
  cfg.radius_grid = 16;
  cfg.digits = 30;
  VerifyOutcome out = run_verify(cfg);
  CHECK(out.all_passed);
  CHECK(!out.precision_exhausted);
  CHECK(out.report["pass"] == true);

  // reports are byte-stable for a fixed config
  VerifyOutcome again = run_verify(cfg);
  CHECK(out.report.dump(2) == again.report.dump(2));

  // and round-trip through the serializer
  auto reparsed = nlohmann::ordered_json::parse(out.report.dump(2));
  CHECK(reparsed == out.report);

  std::string text = render_verify(out, OutputFormat::text);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(text.find("[PASS] packing_scan") != std::string::npos);
}

TEST_CASE("changing the seed changes only the sampled details") {
  RunConfig a;
  a.max_level = 3;
  a.center_level = 2;
  a.radius_grid = 8;
  a.digits = 20;
  RunConfig b = a;
  b.seed = 1234567;
  VerifyOutcome oa = run_verify(a);
  VerifyOutcome ob = run_verify(b);
  CHECK(oa.all_passed);
  CHECK(ob.all_passed);
  CHECK(oa.report["targets"] == ob.report["targets"]);
  CHECK(oa.report["hausdorff_table"] == ob.report["hausdorff_table"]);
}

TEST_CASE("a tiny precision cap surfaces as exhaustion, not as a tie") {
  RunConfig cfg;
  cfg.max_level = 3;
  cfg.center_level = 2;
  cfg.radius_grid = 8;
  cfg.precision_cap_bits = 8;
  cfg.digits = 20;
  VerifyOutcome out = run_verify(cfg);
  CHECK(out.precision_exhausted);
  CHECK(!out.all_passed);
  bool kernel_failed = false;
  for (const auto& check : out.report["checks"]) {
    if (check["name"] == "comparison_kernel") kernel_failed = !check["pass"].get<bool>();
  }
  CHECK(kernel_failed);
}

TEST_CASE("invalid configurations are rejected") {
  RunConfig bad;
  bad.n = 3;
  bad.l = 2;
  CHECK_THROWS_AS(params_from(bad), InvalidArgument);
  CHECK_THROWS_AS(render_dims(Params(2, 3), 50, OutputFormat::csv),
                  InvalidArgument);
}
