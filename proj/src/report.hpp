#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "extremal.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace fracmeas {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::int64_t n = 2;
  std::int64_t l = 3;
  int max_level = 8;
  int precision_cap_bits = 4096;
  int center_level = 6;
  int radius_grid = 512;
  std::uint64_t seed = 1;
  int digits = 50;
};

Params params_from(const RunConfig& config);

// Rendered command outputs; every numeric is exact or a certified decimal
// bracket, so output bytes depend only on the inputs.
std::string render_dims(const Params& params, int digits, OutputFormat fmt);
std::string render_gaps(const Params& params, int level, OutputFormat fmt);
std::string render_cdf(const Params& params, const Rational& x,
                       OutputFormat fmt);
std::string render_density(const Params& params, int level, Index left,
                           Index right, int digits, OutputFormat fmt);

struct VerifyOutcome {
  bool all_passed = false;
  bool precision_exhausted = false;
  nlohmann::ordered_json report;
};

// Runs the whole battery: gap/cluster audit, consecutive-range search with
// the exhaustive oracle at tiny sizes, measure identities, absorption
// chains, boundary scan, packing scan, and (for n=2, l=3) the published
// cross-checks.
VerifyOutcome run_verify(const RunConfig& config);

std::string render_verify(const VerifyOutcome& outcome, OutputFormat fmt);

}  // namespace fracmeas
