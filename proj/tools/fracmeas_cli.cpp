// Command-line front end over the fracmeas C API.
//
// Exit codes: 0 success / all checks passed, 1 check failure or
// falsification, 2 precision exhaustion, 64 usage or invalid parameters.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracmeas/fracmeas.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitPrecision = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::int64_t n = 2;
  std::int64_t l = 3;
  bool json = false;
  bool csv = false;
  std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n", opts.n, "number of admissible digits")
      ->envname("FRACMEAS_N");
  cmd->add_option("--l", opts.l, "expansion base")->envname("FRACMEAS_L");
  cmd->add_flag("--json", opts.json, "emit JSON");
  cmd->add_flag("--csv", opts.csv, "emit CSV");
  cmd->add_option("--out", opts.out_file, "write output to a file")
      ->envname("FRACMEAS_OUT");
}

fm_format pick_format(const CommonOpts& opts, fm_format fallback) {
  if (opts.json) return FM_FORMAT_JSON;
  if (opts.csv) return FM_FORMAT_CSV;
  return fallback;
}

int status_exit(fm_status st) {
  switch (st) {
    case FM_OK:
      return kExitOk;
    case FM_ERR_PRECISION_EXHAUSTED:
      return kExitPrecision;
    case FM_ERR_INVALID_ARGUMENT:
    case FM_ERR_RESOURCE_LIMIT:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

int report_error(fm_status st) {
  std::cerr << "error: " << fm_last_error_message() << " ["
            << fm_status_name(st) << "]\n";
  return status_exit(st);
}

int deliver(const CommonOpts& opts, const std::string& text) {
  if (!opts.out_file.empty()) {
    std::ofstream file(opts.out_file, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << opts.out_file << "\n";
      return kExitUsage;
    }
    file << text;
    return kExitOk;
  }
  std::cout << text;
  return kExitOk;
}

struct ParamsHandle {
  fm_params* p = nullptr;
  ~ParamsHandle() { fm_params_destroy(p); }
};

// Takes ownership of a C string result.
std::string take(char* s) {
  std::string out = s ? s : "";
  fm_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Hausdorff/packing measure toolkit for digit-restricted sets"};
  app.require_subcommand(1);

  CommonOpts dims_opts, gaps_opts, cdf_opts, density_opts, verify_opts,
      report_opts;

  auto* dims = app.add_subcommand(
      "dims", "dimension s, diameter r, and both measure constants");
  int dims_digits = 50;
  add_common(dims, dims_opts);
  dims->add_option("--digits", dims_digits,
                   "bracket precision in decimal digits");

  auto* gaps =
      app.add_subcommand("gaps", "enumerate complement gaps at a level");
  int gaps_level = 2;
  add_common(gaps, gaps_opts);
  gaps->add_option("--level", gaps_level, "construction level k")
      ->envname("FRACMEAS_LEVEL");

  auto* cdfc = app.add_subcommand("cdf", "exact measure of [0, x]");
  std::string cdf_x;
  add_common(cdfc, cdf_opts);
  cdfc->add_option("--x", cdf_x, "rational point, e.g. 1/3")->required();

  auto* density = app.add_subcommand(
      "density", "exact density of a consecutive union of basic intervals");
  int density_level = 2;
  std::int64_t density_left = 0, density_right = 0;
  int density_digits = 12;
  add_common(density, density_opts);
  density->add_option("--level", density_level, "construction level k");
  density->add_option("--left", density_left, "first interval index")
      ->required();
  density->add_option("--right", density_right, "last interval index")
      ->required();
  density->add_option("--digits", density_digits, "bracket precision");

  fm_verify_options vopts;
  fm_verify_options_init(&vopts);
  int max_level = vopts.max_level;
  int precision_cap = vopts.precision_cap_bits;
  int center_level = vopts.center_level;
  int radius_grid = vopts.radius_grid;
  std::uint64_t seed = vopts.seed;
  int digits = vopts.digits;
  auto add_battery = [&](CLI::App* cmd) {
    cmd->add_option("--max-level", max_level, "density table depth")
        ->envname("FRACMEAS_MAX_LEVEL");
    cmd->add_option("--precision-cap", precision_cap,
                    "bit cap for adaptive comparisons")
        ->envname("FRACMEAS_PRECISION_CAP");
    cmd->add_option("--center-level", center_level,
                    "packing scan center depth")
        ->envname("FRACMEAS_CENTER_LEVEL");
    cmd->add_option("--radius-grid", radius_grid, "packing scan radius grid")
        ->envname("FRACMEAS_RADIUS_GRID");
    cmd->add_option("--seed", seed, "seed for randomized samples")
        ->envname("FRACMEAS_SEED");
    cmd->add_option("--digits", digits, "decimal digits in brackets");
  };

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  add_common(verify, verify_opts);
  add_battery(verify);

  auto* report = app.add_subcommand(
      "report", "machine-readable verification report (JSON)");
  add_common(report, report_opts);
  add_battery(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (dims->parsed()) {
    ParamsHandle h;
    fm_status st = fm_params_create(dims_opts.n, dims_opts.l, &h.p);
    if (st != FM_OK) return report_error(st);
    char* text = nullptr;
    st = fm_dims(h.p, dims_digits, pick_format(dims_opts, FM_FORMAT_TEXT),
                 &text);
    if (st != FM_OK) return report_error(st);
    return deliver(dims_opts, take(text));
  }

  if (gaps->parsed()) {
    ParamsHandle h;
    fm_status st = fm_params_create(gaps_opts.n, gaps_opts.l, &h.p);
    if (st != FM_OK) return report_error(st);
    char* text = nullptr;
    st = fm_gaps(h.p, gaps_level, pick_format(gaps_opts, FM_FORMAT_TEXT),
                 &text);
    if (st != FM_OK) return report_error(st);
    return deliver(gaps_opts, take(text));
  }

  if (cdfc->parsed()) {
    ParamsHandle h;
    fm_status st = fm_params_create(cdf_opts.n, cdf_opts.l, &h.p);
    if (st != FM_OK) return report_error(st);
    char* value = nullptr;
    st = fm_cdf(h.p, cdf_x.c_str(), &value);
    if (st != FM_OK) return report_error(st);
    std::string v = take(value);
    std::string body;
    if (cdf_opts.json) {
      body = "{\n  \"x\": \"" + cdf_x + "\",\n  \"cdf\": \"" + v + "\"\n}\n";
    } else if (cdf_opts.csv) {
      body = "x,cdf\n" + cdf_x + "," + v + "\n";
    } else {
      body = v + "\n";
    }
    return deliver(cdf_opts, body);
  }

  if (density->parsed()) {
    ParamsHandle h;
    fm_status st = fm_params_create(density_opts.n, density_opts.l, &h.p);
    if (st != FM_OK) return report_error(st);
    char* text = nullptr;
    st = fm_density(h.p, density_level, density_left, density_right,
                    density_digits, pick_format(density_opts, FM_FORMAT_TEXT),
                    &text);
    if (st != FM_OK) return report_error(st);
    return deliver(density_opts, take(text));
  }

  if (verify->parsed() || report->parsed()) {
    const CommonOpts& opts = verify->parsed() ? verify_opts : report_opts;
    fm_format fmt =
        verify->parsed() ? pick_format(opts, FM_FORMAT_TEXT) : FM_FORMAT_JSON;
    ParamsHandle h;
    fm_status st = fm_params_create(opts.n, opts.l, &h.p);
    if (st != FM_OK) return report_error(st);
    vopts.max_level = max_level;
    vopts.precision_cap_bits = precision_cap;
    vopts.center_level = center_level;
    vopts.radius_grid = radius_grid;
    vopts.seed = seed;
    vopts.digits = digits;
    char* text = nullptr;
    std::int32_t passed = 0;
    st = fm_verify(h.p, &vopts, fmt, &text, &passed);
    if (text == nullptr) return report_error(st);
    int rc = deliver(opts, take(text));
    if (rc != kExitOk) return rc;
    if (st == FM_ERR_PRECISION_EXHAUSTED) return kExitPrecision;
    if (st != FM_OK) return report_error(st);
    return passed ? kExitOk : kExitCheckFailed;
  }
  return kExitUsage;
}
