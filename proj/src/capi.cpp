#include "fracmeas/fracmeas.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "measure.hpp"
#include "params.hpp"
#include "report.hpp"

using namespace fracmeas;

struct fm_params {
  Params impl;
};

namespace {

thread_local std::string g_last_error;

fm_status fail(fm_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OutputFormat to_format(fm_format f) {
  switch (f) {
    case FM_FORMAT_TEXT:
      return OutputFormat::text;
    case FM_FORMAT_JSON:
      return OutputFormat::json;
    case FM_FORMAT_CSV:
      return OutputFormat::csv;
  }
  throw InvalidArgument("unknown output format");
}

// Maps the C++ error taxonomy onto status codes and stashes the message.
template <typename Fn>
fm_status guarded(Fn&& fn) {
  try {
    fn();
    return FM_OK;
  } catch (const InvalidArgument& e) {
    return fail(FM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ResourceLimit& e) {
    return fail(FM_ERR_RESOURCE_LIMIT, e.what());
  } catch (const PrecisionExhausted& e) {
    return fail(FM_ERR_PRECISION_EXHAUSTED, e.what());
  } catch (const CheckFailed& e) {
    return fail(FM_ERR_CHECK_FAILED, e.what());
  } catch (const std::exception& e) {
    return fail(FM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FM_ERR_INTERNAL, "unknown error");
  }
}

fm_status emit(const std::string& text, char** out) {
  if (!out) return fail(FM_ERR_INVALID_ARGUMENT, "null output pointer");
  char* s = dup_string(text);
  if (!s) return fail(FM_ERR_INTERNAL, "allocation failed");
  *out = s;
  return FM_OK;
}

}  // namespace

extern "C" {

fm_status fm_params_create(int64_t n, int64_t l, fm_params** out_params) {
  if (!out_params) return fail(FM_ERR_INVALID_ARGUMENT, "null output pointer");
  fm_params* handle = nullptr;
  fm_status st = guarded([&] { handle = new fm_params{Params(n, l)}; });
  if (st == FM_OK) *out_params = handle;
  return st;
}

void fm_params_destroy(fm_params* params) { delete params; }

fm_status fm_params_set_precision_cap(fm_params* params, int32_t bits) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  return guarded([&] { params->impl.set_precision_cap(bits); });
}

fm_status fm_params_set_enumeration_limit(fm_params* params,
                                          int64_t max_intervals) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  return guarded([&] { params->impl.set_enumeration_limit(max_intervals); });
}

void fm_verify_options_init(fm_verify_options* options) {
  if (!options) return;
  RunConfig defaults;
  options->max_level = defaults.max_level;
  options->precision_cap_bits = defaults.precision_cap_bits;
  options->center_level = defaults.center_level;
  options->radius_grid = defaults.radius_grid;
  options->seed = defaults.seed;
  options->digits = defaults.digits;
}

fm_status fm_dims(const fm_params* params, int32_t digits, fm_format format,
                  char** out) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  std::string text;
  fm_status st = guarded(
      [&] { text = render_dims(params->impl, digits, to_format(format)); });
  return st == FM_OK ? emit(text, out) : st;
}

fm_status fm_cdf(const fm_params* params, const char* x, char** out) {
  if (!params || !x) return fail(FM_ERR_INVALID_ARGUMENT, "null argument");
  std::string text;
  fm_status st = guarded([&] {
    Rational q = parse_rational(x);
    text = rational_string(cdf(params->impl, q));
  });
  return st == FM_OK ? emit(text, out) : st;
}

fm_status fm_measure(const fm_params* params, const char* a, const char* b,
                     char** out) {
  if (!params || !a || !b)
    return fail(FM_ERR_INVALID_ARGUMENT, "null argument");
  std::string text;
  fm_status st = guarded([&] {
    Rational qa = parse_rational(a);
    Rational qb = parse_rational(b);
    if (qa < 0 || qb > 1 || qa > qb)
      throw InvalidArgument("need 0 <= a <= b <= 1");
    text = rational_string(measure_interval(params->impl, qa, qb));
  });
  return st == FM_OK ? emit(text, out) : st;
}

fm_status fm_gaps(const fm_params* params, int32_t level, fm_format format,
                  char** out) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  std::string text;
  fm_status st = guarded(
      [&] { text = render_gaps(params->impl, level, to_format(format)); });
  return st == FM_OK ? emit(text, out) : st;
}

fm_status fm_density(const fm_params* params, int32_t level, int64_t left,
                     int64_t right, int32_t digits, fm_format format,
                     char** out) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  std::string text;
  fm_status st = guarded([&] {
    text = render_density(params->impl, level, left, right, digits,
                          to_format(format));
  });
  return st == FM_OK ? emit(text, out) : st;
}

fm_status fm_verify(const fm_params* params, const fm_verify_options* options,
                    fm_format format, char** out_report, int32_t* out_passed) {
  if (!params) return fail(FM_ERR_INVALID_ARGUMENT, "null params");
  std::string text;
  bool passed = false;
  bool exhausted = false;
  fm_status st = guarded([&] {
    RunConfig config;
    config.n = params->impl.n();
    config.l = params->impl.l();
    config.precision_cap_bits = params->impl.precision().cap_bits;
    if (options) {
      config.max_level = options->max_level;
      config.precision_cap_bits = options->precision_cap_bits;
      config.center_level = options->center_level;
      config.radius_grid = options->radius_grid;
      config.seed = options->seed;
      config.digits = options->digits;
    }
    VerifyOutcome outcome = run_verify(config);
    passed = outcome.all_passed;
    exhausted = outcome.precision_exhausted;
    text = render_verify(outcome, to_format(format));
  });
  if (st != FM_OK) return st;
  st = emit(text, out_report);
  if (st != FM_OK) return st;
  if (out_passed) *out_passed = passed ? 1 : 0;
  if (exhausted) return fail(FM_ERR_PRECISION_EXHAUSTED,
                             "one or more checks exhausted precision");
  return FM_OK;
}

const char* fm_status_name(fm_status status) {
  switch (status) {
    case FM_OK:
      return "FM_OK";
    case FM_ERR_INVALID_ARGUMENT:
      return "FM_ERR_INVALID_ARGUMENT";
    case FM_ERR_RESOURCE_LIMIT:
      return "FM_ERR_RESOURCE_LIMIT";
    case FM_ERR_PRECISION_EXHAUSTED:
      return "FM_ERR_PRECISION_EXHAUSTED";
    case FM_ERR_CHECK_FAILED:
      return "FM_ERR_CHECK_FAILED";
    case FM_ERR_INTERNAL:
      return "FM_ERR_INTERNAL";
  }
  return "FM_UNKNOWN";
}

const char* fm_last_error_message(void) { return g_last_error.c_str(); }

void fm_string_free(char* s) { ::operator delete(s); }

const char* fm_version(void) { return "1.0.0"; }

}  // extern "C"
