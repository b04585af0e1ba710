// The C API exercised purely through the shared-library surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "fracmeas/fracmeas.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fm_string_free(s);
  return out;
}

struct Handle {
  fm_params* p = nullptr;
  ~Handle() { fm_params_destroy(p); }
};

}  // namespace

TEST_CASE("parameter handle lifecycle and validation") {
  Handle h;
  CHECK(fm_params_create(2, 3, &h.p) == FM_OK);
  REQUIRE(h.p != nullptr);

  fm_params* bad = nullptr;
  CHECK(fm_params_create(3, 2, &bad) == FM_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(fm_last_error_message()).find("l > n >= 2") !=
        std::string::npos);
  CHECK(fm_params_create(2, 3, nullptr) == FM_ERR_INVALID_ARGUMENT);
  fm_params_destroy(nullptr);  // no-op
  fm_string_free(nullptr);     // no-op
  CHECK(std::string(fm_version()) == "1.0.0");
  CHECK(std::string(fm_status_name(FM_OK)) == "FM_OK");
}

TEST_CASE("dims emits certified brackets") {
  Handle h;
  REQUIRE(fm_params_create(2, 3, &h.p) == FM_OK);
  char* out = nullptr;
  REQUIRE(fm_dims(h.p, 30, FM_FORMAT_JSON, &out) == FM_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["r"] == "1/2");
  std::string lo = j["hausdorff_measure"]["decimal_bracket"][0];
  std::string hi = j["hausdorff_measure"]["decimal_bracket"][1];
  CHECK(lo.substr(0, 12) == "0.6457601171");
  CHECK(hi.substr(0, 12) == "0.6457601171");
  CHECK(j["packing_measure"]["decimal_bracket"][0].get<std::string>().substr(
            0, 12) == "1.5485626526");
}

TEST_CASE("cdf, measure and density calls") {
  Handle h;
  REQUIRE(fm_params_create(2, 3, &h.p) == FM_OK);
  char* out = nullptr;

  REQUIRE(fm_cdf(h.p, "1/3", &out) == FM_OK);
  CHECK(take(out) == "1/2");
  REQUIRE(fm_cdf(h.p, "0.25", &out) == FM_OK);
  CHECK(take(out) == "1/2");
  CHECK(fm_cdf(h.p, "5/3", &out) == FM_ERR_INVALID_ARGUMENT);
  CHECK(fm_cdf(h.p, "zebra", &out) == FM_ERR_INVALID_ARGUMENT);

  REQUIRE(fm_measure(h.p, "1/6", "1/2", &out) == FM_OK);
  CHECK(take(out) == "1/2");
  CHECK(fm_measure(h.p, "1/2", "1/3", &out) == FM_ERR_INVALID_ARGUMENT);

  REQUIRE(fm_density(h.p, 2, 0, 3, 12, FM_FORMAT_JSON, &out) == FM_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["density"]["p"] == "4");
  CHECK(j["density"]["L"] == "5");
  CHECK(fm_density(h.p, 2, 0, 7, 12, FM_FORMAT_JSON, &out) ==
        FM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("gap table in CSV form") {
  Handle h;
  REQUIRE(fm_params_create(2, 3, &h.p) == FM_OK);
  char* out = nullptr;
  REQUIRE(fm_gaps(h.p, 2, FM_FORMAT_CSV, &out) == FM_OK);
  CHECK(take(out) ==
        "left,right,length,type_i,level\n"
        "2/9,1/3,1/9,1,2\n"
        "5/9,1,4/9,2,2\n");
}

TEST_CASE("enumeration limit is enforced through the handle") {
  Handle h;
  REQUIRE(fm_params_create(2, 3, &h.p) == FM_OK);
  REQUIRE(fm_params_set_enumeration_limit(h.p, 1 << 8) == FM_OK);
  char* out = nullptr;
  CHECK(fm_gaps(h.p, 12, FM_FORMAT_CSV, &out) == FM_ERR_RESOURCE_LIMIT);
}

TEST_CASE("verify runs and reports through the C surface") {
  Handle h;
  REQUIRE(fm_params_create(2, 3, &h.p) == FM_OK);
  fm_verify_options opts;
  fm_verify_options_init(&opts);
  CHECK(opts.max_level == 8);
  CHECK(opts.precision_cap_bits == 4096);
  opts.max_level = 3;
  opts.center_level = 2;
  opts.radius_grid = 8;
  opts.digits = 20;

  char* out = nullptr;
  std::int32_t passed = 0;
  REQUIRE(fm_verify(h.p, &opts, FM_FORMAT_JSON, &out, &passed) == FM_OK);
  CHECK(passed == 1);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["schema"] == "fracmeas/verification-report/v1");
  CHECK(j["pass"] == true);

  // a starved precision cap must surface as exhaustion
  opts.precision_cap_bits = 8;
  out = nullptr;
  passed = -1;
  CHECK(fm_verify(h.p, &opts, FM_FORMAT_JSON, &out, &passed) ==
        FM_ERR_PRECISION_EXHAUSTED);
  CHECK(passed == 0);
  CHECK(!take(out).empty());
}
