#include "report.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "measure.hpp"

namespace fracmeas {

namespace {

using nlohmann::ordered_json;

constexpr const char* kReportSchema = "fracmeas/verification-report/v1";
constexpr std::int64_t kSearchBudget = 4096;  // n^k cap for exact searches
constexpr std::int64_t kOracleBudget = 16;    // n^k cap for subset oracle
constexpr int kGapAuditMaxLevel = 8;
constexpr int kAbsorptionMaxLevel = 6;
constexpr int kAbsorptionChains = 200;
constexpr int kSelfSimilarityPoints = 1000;
constexpr int kBoundarySamplesPerBranch = 500;

ordered_json bracket_json(const std::pair<Rational, Rational>& br, int digits,
                          int bits) {
  ordered_json j;
  j["decimal_bracket"] = {decimal_string(br.first, digits, RoundDir::down),
                          decimal_string(br.second, digits, RoundDir::up)};
  j["bits"] = bits;
  return j;
}

ordered_json density_json(const Params& params, const Density& d, int digits) {
  const int bits = bits_for_digits(digits);
  auto br = density_value_bracket(params, d, bits);
  ordered_json j;
  j["p"] = d.p.get_str();
  j["L"] = d.L.get_str();
  j["decimal_bracket"] = {decimal_string(br.first, digits, RoundDir::down),
                          decimal_string(br.second, digits, RoundDir::up)};
  j["bits"] = bits;
  return j;
}

ordered_json dims_json(const Params& params, int digits) {
  const int bits = bits_for_digits(digits);
  ordered_json j;
  j["n"] = params.n();
  j["l"] = params.l();
  ordered_json s = bracket_json(s_bracket(params, bits), digits, bits);
  s["closed_form"] = "log(n)/log(l)";
  j["s"] = s;
  j["r"] = rational_string(params.r());
  ordered_json h =
      bracket_json(pow_s_bracket(params, params.r(), bits), digits, bits);
  h["closed_form"] = "((n-1)/(l-1))^s";
  j["hausdorff_measure"] = h;
  ordered_json p =
      bracket_json(pow_s_bracket(params, Rational(2), bits), digits, bits);
  p["closed_form"] = "2^s";
  j["packing_measure"] = p;
  return j;
}

std::string dims_text(const Params& params, int digits) {
  const int bits = bits_for_digits(digits);
  auto s = s_bracket(params, bits);
  auto h = pow_s_bracket(params, params.r(), bits);
  auto p = pow_s_bracket(params, Rational(2), bits);
  std::ostringstream out;
  out << "C(" << params.n() << "," << params.l() << ")\n";
  out << "  s = log(" << params.n() << ")/log(" << params.l() << ") in ["
      << decimal_string(s.first, digits, RoundDir::down) << ", "
      << decimal_string(s.second, digits, RoundDir::up) << "]\n";
  out << "  r = " << rational_string(params.r()) << "\n";
  out << "  Hausdorff measure = r^s in ["
      << decimal_string(h.first, digits, RoundDir::down) << ", "
      << decimal_string(h.second, digits, RoundDir::up) << "]\n";
  out << "  packing measure = 2^s in ["
      << decimal_string(p.first, digits, RoundDir::down) << ", "
      << decimal_string(p.second, digits, RoundDir::up) << "]\n";
  return out.str();
}

}  // namespace

Params params_from(const RunConfig& config) {
  Params p(config.n, config.l);
  p.set_precision_cap(config.precision_cap_bits);
  return p;
}

std::string render_dims(const Params& params, int digits, OutputFormat fmt) {
  if (fmt == OutputFormat::json) return dims_json(params, digits).dump(2) + "\n";
  if (fmt == OutputFormat::csv)
    throw InvalidArgument("dims has no CSV form");
  return dims_text(params, digits);
}

std::string render_gaps(const Params& params, int level, OutputFormat fmt) {
  std::vector<GapRecord> gaps = enumerate_gaps(params, level);
  if (fmt == OutputFormat::csv) {
    std::ostringstream out;
    out << "left,right,length,type_i,level\n";
    for (const GapRecord& g : gaps) {
      out << rational_string(g.left) << "," << rational_string(g.right) << ","
          << rational_string(g.right - g.left) << "," << g.type_i << ","
          << g.level << "\n";
    }
    return out.str();
  }
  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["n"] = params.n();
    j["l"] = params.l();
    j["level"] = level;
    j["gaps"] = ordered_json::array();
    for (const GapRecord& g : gaps) {
      ordered_json e;
      e["left"] = rational_string(g.left);
      e["right"] = rational_string(g.right);
      e["length"] = rational_string(g.right - g.left);
      e["type_i"] = g.type_i;
      j["gaps"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << gaps.size() << " gap(s) at level " << level << "\n";
  for (const GapRecord& g : gaps) {
    out << "  (" << rational_string(g.left) << ", " << rational_string(g.right)
        << ")  length " << rational_string(g.right - g.left) << "  type ("
        << g.type_i << "," << g.level << ")\n";
  }
  return out.str();
}

std::string render_cdf(const Params& params, const Rational& x,
                       OutputFormat fmt) {
  Rational f = cdf(params, x);
  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["n"] = params.n();
    j["l"] = params.l();
    j["x"] = rational_string(x);
    j["cdf"] = rational_string(f);
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    std::ostringstream out;
    out << "x,cdf\n" << rational_string(x) << "," << rational_string(f) << "\n";
    return out.str();
  }
  return rational_string(f) + "\n";
}

std::string render_density(const Params& params, int level, Index left,
                           Index right, int digits, OutputFormat fmt) {
  std::int64_t count = params.level_count(level);
  if (left < 0 || right >= count || left > right)
    throw InvalidArgument("index range out of bounds for the level");
  ConsecutiveUnion range{level, left, right};
  DensityQuery q = density_of(params, to_union(params, range));
  const Density& d = *q.exact;
  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["n"] = params.n();
    j["l"] = params.l();
    j["level"] = level;
    j["left"] = left;
    j["right"] = right;
    j["measure"] = rational_string(q.measure);
    j["length"] = rational_string(q.length);
    j["density"] = density_json(params, d, digits);
    return j.dump(2) + "\n";
  }
  const int bits = bits_for_digits(digits);
  auto br = density_value_bracket(params, d, bits);
  std::ostringstream out;
  out << "indices [" << left << ", " << right << "] at level " << level << "\n";
  out << "  measure = " << rational_string(q.measure) << "\n";
  out << "  length  = " << rational_string(q.length) << "\n";
  out << "  p = " << d.p.get_str() << ", L = " << d.L.get_str() << "\n";
  out << "  density in [" << decimal_string(br.first, digits, RoundDir::down)
      << ", " << decimal_string(br.second, digits, RoundDir::up) << "]\n";
  return out.str();
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}
  std::int64_t below(std::int64_t m) {
    return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(m));
  }
  Rational unit(std::int64_t max_den) {
    std::int64_t den = 1 + below(max_den);
    std::int64_t num = below(den + 1);
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 eng_;
};

struct CheckContext {
  const RunConfig& config;
  const Params& params;
  ordered_json& report;
  bool all_passed = true;
  bool precision_exhausted = false;

  void run(const std::string& name,
           const std::function<std::string(ordered_json&)>& body) {
    ordered_json entry;
    entry["name"] = name;
    ordered_json detail = ordered_json::object();
    try {
      std::string note = body(detail);
      entry["pass"] = true;
      if (!note.empty()) entry["note"] = note;
    } catch (const PrecisionExhausted& e) {
      entry["pass"] = false;
      entry["error"] = std::string("precision exhausted: ") + e.what();
      precision_exhausted = true;
      all_passed = false;
    } catch (const Error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
      all_passed = false;
    } catch (const std::exception& e) {
      entry["pass"] = false;
      entry["error"] = std::string("unexpected: ") + e.what();
      all_passed = false;
    }
    if (!detail.empty()) entry["detail"] = std::move(detail);
    report["checks"].push_back(std::move(entry));
  }
};

void require(bool cond, const std::string& message) {
  if (!cond) throw CheckFailed(message);
}

// ---- individual checks ------------------------------------------------

std::string check_closed_forms(CheckContext& ctx, ordered_json& detail) {
  const int digits = ctx.config.digits;
  const int bits = bits_for_digits(digits);
  auto h = pow_s_bracket(ctx.params, ctx.params.r(), bits);
  auto p = pow_s_bracket(ctx.params, Rational(2), bits);
  require(h.first <= h.second && p.first <= p.second, "malformed bracket");
  ordered_json targets;
  ordered_json hj = bracket_json(h, digits, bits);
  hj["closed_form"] = "((n-1)/(l-1))^s";
  targets["hausdorff_measure"] = hj;
  ordered_json pj = bracket_json(p, digits, bits);
  pj["closed_form"] = "2^s";
  targets["packing_measure"] = pj;
  ctx.report["targets"] = targets;
  detail["digits"] = digits;
  return "";
}

// A comparison that genuinely needs the adaptive escalation: p1/p2 is a
// floor-rounded approximation of (l+1)^s, putting the two densities within
// ~1e-6 of each other.  Decided well under the default cap; guaranteed to
// exhaust a single-digit cap, which is what makes tiny caps fail loudly
// rather than silently.
std::string check_comparison_kernel(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  if (P.mult_dep()) {
    detail["applicable"] = false;
    return "all comparisons are exact under multiplicative dependence";
  }
  const Integer scale = 1000000;
  auto near = pow_s_bracket(P, Rational(static_cast<long>(P.l() + 1)), 64);
  Rational scaled = near.first * Rational(scale);
  Integer p1;
  mpz_fdiv_q(p1.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  require(p1 >= 1, "degenerate kernel candidate");
  ComparisonOutcome oc =
      density_compare(P, Density{p1, Integer(static_cast<long>(P.l() + 1))},
                      Density{scale, 1});
  require(oc.certified, "kernel comparison not certified");
  detail["bits_used"] = oc.precision_bits_used;
  detail["ordering"] = oc.ordering == Order::less      ? "less"
                       : oc.ordering == Order::greater ? "greater"
                                                       : "equal";
  return "";
}

std::string check_gap_cluster_audit(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  const int k_max = std::min(
      {ctx.config.max_level, kGapAuditMaxLevel, P.max_level_within(kSearchBudget)});
  std::int64_t gaps_checked = 0;
  std::int64_t clusters_checked = 0;
  for (int k = 1; k <= k_max; ++k) {
    const std::int64_t count = P.level_count(k);
    std::vector<GapRecord> gaps = enumerate_gaps(P, k);

    // Count per type: n^(k-i-1)(n-1) internal gaps of type i < k, one of
    // type k; the enumeration classified each by exact length already.
    std::vector<std::int64_t> per_type(static_cast<size_t>(k) + 1, 0);
    for (const GapRecord& g : gaps) ++per_type[static_cast<size_t>(g.type_i)];
    std::int64_t expected_total = count / P.n();
    require(static_cast<std::int64_t>(gaps.size()) == expected_total,
            "gap count != n^(k-1) at level " + std::to_string(k));
    for (int i = 1; i <= k - 1; ++i) {
      std::int64_t expect = P.level_count(k - i - 1) * (P.n() - 1);
      require(per_type[static_cast<size_t>(i)] == expect,
              "gap count of type " + std::to_string(i) + " wrong at level " +
                  std::to_string(k));
    }
    require(per_type[static_cast<size_t>(k)] == 1, "expected one outer gap");

    // Cross-check classification against index arithmetic: the j-th
    // internal gap sits right of some index v and must have type equal to
    // the trailing top-digit count of v.
    size_t gi = 0;
    const Integer lk = ipow(P.l(), static_cast<unsigned long>(k));
    for (Index v = 0; v + 1 < count; ++v) {
      int t = trailing_top_digits(P, v, k);
      if (t == 0) continue;
      require(gi < gaps.size() && gaps[gi].type_i == t,
              "length classification disagrees with index arithmetic");
      ++gi;
    }
    require(gi + 1 == gaps.size(), "internal gap enumeration out of sync");
    gaps_checked += static_cast<std::int64_t>(gaps.size());

    // Every cluster hull must equal the closed-form diameter.
    for (int i = 0; i <= k; ++i) {
      const std::int64_t prefixes = count / P.level_count(i);
      const Rational want = cluster_diameter(P, i, k);
      for (Index v = 0; v < prefixes; ++v) {
        Word prefix = word_from_index(P, v, k - i);
        ConsecutiveUnion c = cluster(P, i, k, prefix);
        Rational got(hull_scaled(P, c), lk);
        got.canonicalize();
        require(got == want, "cluster diameter formula mismatch at (i,k)=(" +
                                 std::to_string(i) + "," + std::to_string(k) +
                                 ")");
        ++clusters_checked;
      }
    }

    // Within one type-(i+1) cluster the n type-i children are separated by
    // gaps of exactly type i.
    for (int i = 0; i + 1 <= k; ++i) {
      const std::int64_t span = P.level_count(i);
      const std::int64_t parents = count / (span * P.n());
      for (Index parent = 0; parent < parents; ++parent) {
        for (std::int64_t j = 0; j + 1 < P.n(); ++j) {
          Index boundary = parent * span * P.n() + (j + 1) * span - 1;
          require(trailing_top_digits(P, boundary, k) == i,
                  "separation rule violated");
        }
      }
    }
  }
  for (int i = 1; i <= 12; ++i)
    require(verify_identity_h1(ctx.params, i),
            "geometric-sum identity failed at i = " + std::to_string(i));
  detail["levels"] = k_max;
  detail["gaps_checked"] = gaps_checked;
  detail["clusters_checked"] = clusters_checked;
  return "";
}

std::string check_measure_self_similarity(CheckContext& ctx,
                                          ordered_json& detail) {
  const Params& P = ctx.params;
  Sampler rng(ctx.config.seed);
  for (int t = 0; t < kSelfSimilarityPoints; ++t) {
    Rational x = rng.unit(2000);
    Rational fx = cdf(P, x);
    for (std::int64_t i = 0; i < P.n(); ++i) {
      Rational lhs = cdf(P, apply_map(P, i, x));
      Rational rhs = (Rational(static_cast<long>(i)) + fx) /
                     Rational(static_cast<long>(P.n()));
      rhs.canonicalize();
      require(lhs == rhs, "self-similarity identity failed at x = " +
                              rational_string(x) + ", i = " + std::to_string(i));
    }
  }
  require(cdf(P, P.r()) == 1, "F(r) != 1");
  require(cdf(P, Rational(1)) == 1, "F(1) != 1");
  require(cdf(P, Rational(0)) == 0, "F(0) != 0");
  detail["points"] = kSelfSimilarityPoints;
  return "";
}

std::string check_gap_plateaus(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  const int k_max = std::min(
      {ctx.config.max_level, kGapAuditMaxLevel, P.max_level_within(kSearchBudget)});
  std::int64_t checked = 0;
  for (int k = 1; k <= k_max; ++k) {
    for (const GapRecord& g : enumerate_gaps(P, k)) {
      require(cdf(P, g.left) == cdf(P, g.right),
              "cdf not constant across a gap at level " + std::to_string(k));
      ++checked;
    }
  }
  detail["gaps_checked"] = checked;
  return "";
}

std::string check_hausdorff_search(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  const int k_search = P.max_level_within(kSearchBudget);
  std::optional<Density> prev;
  for (int k = 1; k <= k_search; ++k) {
    MaxDensityResult res = max_density_consecutive(P, k);
    require(res.equals_Ok,
            "full level set not maximal at level " + std::to_string(k));
    require(res.argmax.size() == 1,
            "unexpected maximizer tie at level " + std::to_string(k));
    if (prev) {
      require(density_compare(P, *prev, res.max_density).ordering == Order::less,
              "max density not strictly increasing at level " +
                  std::to_string(k));
    }
    prev = res.max_density;
  }
  detail["levels"] = k_search;
  return "";
}

std::string check_exhaustive_oracle(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  int levels = 0;
  std::uint64_t subsets = 0;
  for (int k = 1;; ++k) {
    std::int64_t count;
    try {
      count = P.level_count(k);
    } catch (const ResourceLimit&) {
      break;
    }
    if (count > kOracleBudget) break;
    ExhaustiveResult ex = exhaustive_union_oracle(P, k);
    MaxDensityResult cons = max_density_consecutive(P, k);
    require(density_compare(P, ex.max_density, cons.max_density).ordering ==
                Order::equal,
            "subset oracle disagrees with the consecutive search at level " +
                std::to_string(k));
    Density ok = make_density(
        P, ipow(P.n(), static_cast<unsigned long>(k)),
        hull_scaled(P, ConsecutiveUnion{k, 0, count - 1}));
    require(density_compare(P, ex.max_density, ok).ordering == Order::equal,
            "subset oracle maximum differs from the full level set");
    require(ex.argmax.size() == 1 &&
                static_cast<std::int64_t>(ex.argmax[0].size()) == count,
            "subset oracle found an unexpected maximizer");
    subsets += ex.subsets_checked;
    ++levels;
  }
  detail["levels"] = levels;
  detail["subsets_checked"] = subsets;
  if (levels == 0) return "skipped: n alone exceeds the subset budget";
  return "";
}

std::string check_absorption_chains(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  Sampler rng(ctx.config.seed ^ 0x9e3779b97f4a7c15ULL);
  const int k_max = std::min(kAbsorptionMaxLevel, P.max_level_within(kSearchBudget));
  std::int64_t chains = 0, steps = 0, blow_downs = 0;
  for (int t = 0; t < kAbsorptionChains; ++t) {
    const int k = 1 + static_cast<int>(rng.below(k_max));
    const std::int64_t count = P.level_count(k);
    Index left = rng.below(count);
    Index right = left + rng.below(count - left);
    AbsorptionChain chain = absorb_clusters(P, ConsecutiveUnion{k, left, right});
    // Monotone by construction (absorb_clusters throws otherwise); the
    // final full level set must not exceed d(O_k).
    Density final_density = make_density(
        P, ipow(P.n(), static_cast<unsigned long>(chain.final_level)),
        hull_scaled(P, ConsecutiveUnion{chain.final_level, 0,
                                        P.level_count(chain.final_level) - 1}));
    Density ok_density = make_density(
        P, ipow(P.n(), static_cast<unsigned long>(k)),
        hull_scaled(P, ConsecutiveUnion{k, 0, count - 1}));
    require(density_compare(P, final_density, ok_density).ordering !=
                Order::greater,
            "chain endpoint exceeds the level maximum");
    ++chains;
    steps += static_cast<std::int64_t>(chain.steps.size());
    blow_downs += chain.blow_downs;
  }
  detail["chains"] = chains;
  detail["steps"] = steps;
  detail["blow_downs"] = blow_downs;
  return "";
}

std::string check_boundary_density(CheckContext& ctx, ordered_json& detail) {
  BoundaryScanReport rep = boundary_density_scan(
      ctx.params, kBoundarySamplesPerBranch, ctx.config.seed ^ 0xb5ad4eceda1ce2a9ULL);
  detail["critical_points"] = rep.critical_points;
  detail["random_points"] = rep.random_points;
  detail["exact_unit_hits"] = rep.exact_unit_hits;
  detail["max_bits_used"] = rep.max_bits_used;
  return "";
}

std::string check_packing_scan(CheckContext& ctx, ordered_json& detail) {
  PackingScanResult res =
      packing_scan(ctx.params, ctx.config.center_level, ctx.config.radius_grid,
                   std::min(ctx.config.digits, 30));
  require(res.candidate_exact, "half-in candidate density is not exactly 2^-s");
  require(res.argmin_attains_target, "argmin density does not attain 2^-s");
  detail["scanned"] = res.scanned;
  detail["flagged"] = res.flagged;
  detail["normalized"] = res.normalized;
  detail["effective_center_level"] = res.effective_center_level;
  detail["argmin"] = {{"center", rational_string(res.argmin.center)},
                      {"radius", rational_string(res.argmin.radius)}};
  detail["min_density_bracket"] = {
      decimal_string(res.min_bracket.first, 30, RoundDir::down),
      decimal_string(res.min_bracket.second, 30, RoundDir::up)};
  ctx.report["packing"] = detail;
  return "";
}

std::string check_literature(CheckContext& ctx, ordered_json& detail) {
  const Params& P = ctx.params;
  if (P.n() != 2 || P.l() != 3) {
    detail["applicable"] = false;
    return "published values only known for n=2, l=3";
  }
  const int bits = bits_for_digits(40);
  auto h = pow_s_bracket(P, P.r(), bits);
  auto two_s = pow_s_bracket(P, Rational(2), bits);
  // Rescaling by the factor 2 carries this set onto the middle-thirds set,
  // whose Hausdorff measure is 1 and packing measure 4^s ~ 2.398.
  Rational prod_lo = h.first * two_s.first;
  Rational prod_hi = h.second * two_s.second;
  require(prod_lo <= 1 && 1 <= prod_hi, "r^s * 2^s bracket misses 1");
  Rational pack_lo = two_s.first * two_s.first;
  Rational pack_hi = two_s.second * two_s.second;
  auto four_s = pow_s_bracket(P, Rational(4), bits);
  require(pack_lo <= four_s.second && four_s.first <= pack_hi,
          "2^s * 2^s bracket misses 4^s");
  Rational band_lo(23975, 10000), band_hi(23985, 10000);
  band_lo.canonicalize();
  band_hi.canonicalize();
  require(band_lo < pack_lo && pack_hi < band_hi,
          "4^s does not match 2.398 to three decimals");
  detail["applicable"] = true;
  detail["hausdorff_times_2_to_s"] = {
      decimal_string(prod_lo, 12, RoundDir::down),
      decimal_string(prod_hi, 12, RoundDir::up)};
  detail["packing_times_2_to_s"] = {decimal_string(pack_lo, 12, RoundDir::down),
                                    decimal_string(pack_hi, 12, RoundDir::up)};
  return "";
}

}  // namespace

VerifyOutcome run_verify(const RunConfig& config) {
  Params params = params_from(config);
  if (config.max_level < 1) throw InvalidArgument("max_level must be >= 1");

  VerifyOutcome out;
  ordered_json& report = out.report;
  report["schema"] = kReportSchema;
  report["params"] = dims_json(params, config.digits);
  report["config"] = {{"n", config.n},
                      {"l", config.l},
                      {"max_level", config.max_level},
                      {"precision_cap_bits", config.precision_cap_bits},
                      {"center_level", config.center_level},
                      {"radius_grid", config.radius_grid},
                      {"seed", config.seed},
                      {"digits", config.digits}};
  report["checks"] = ordered_json::array();

  CheckContext ctx{config, params, report};

  ctx.run("closed_forms",
          [&](ordered_json& d) { return check_closed_forms(ctx, d); });
  ctx.run("comparison_kernel",
          [&](ordered_json& d) { return check_comparison_kernel(ctx, d); });

  // Per-level table of |O_k| and d(O_k); strict growth enforced inside.
  ctx.run("hausdorff_table", [&](ordered_json& d) {
    HausdorffReport rep = hausdorff_report(params, config.max_level,
                                           std::min(config.digits, 30));
    ordered_json rows = ordered_json::array();
    for (const HausdorffRow& row : rep.rows) {
      ordered_json e;
      e["k"] = row.k;
      e["diameter"] = rational_string(row.diameter);
      e["p"] = row.density.p.get_str();
      e["L"] = row.density.L.get_str();
      e["decimal_bracket"] = {
          decimal_string(row.bracket.first, 30, RoundDir::down),
          decimal_string(row.bracket.second, 30, RoundDir::up)};
      rows.push_back(std::move(e));
    }
    ctx.report["hausdorff_table"] = std::move(rows);
    ctx.report["dmax_bracket"] = {
        decimal_string(rep.dmax_bracket.first, 30, RoundDir::down),
        decimal_string(rep.dmax_bracket.second, 30, RoundDir::up)};
    d["rows"] = static_cast<int>(rep.rows.size());
    return std::string();
  });

  ctx.run("gap_cluster_audit",
          [&](ordered_json& d) { return check_gap_cluster_audit(ctx, d); });
  ctx.run("measure_self_similarity", [&](ordered_json& d) {
    return check_measure_self_similarity(ctx, d);
  });
  ctx.run("gap_plateaus",
          [&](ordered_json& d) { return check_gap_plateaus(ctx, d); });
  ctx.run("hausdorff_search",
          [&](ordered_json& d) { return check_hausdorff_search(ctx, d); });
  ctx.run("exhaustive_oracle",
          [&](ordered_json& d) { return check_exhaustive_oracle(ctx, d); });
  ctx.run("absorption_chains",
          [&](ordered_json& d) { return check_absorption_chains(ctx, d); });
  ctx.run("boundary_density",
          [&](ordered_json& d) { return check_boundary_density(ctx, d); });
  ctx.run("packing_scan",
          [&](ordered_json& d) { return check_packing_scan(ctx, d); });
  ctx.run("literature_cross_check",
          [&](ordered_json& d) { return check_literature(ctx, d); });

  out.all_passed = ctx.all_passed;
  out.precision_exhausted = ctx.precision_exhausted;
  report["pass"] = out.all_passed;
  return out;
}

std::string render_verify(const VerifyOutcome& outcome, OutputFormat fmt) {
  if (fmt == OutputFormat::json) return outcome.report.dump(2) + "\n";
  if (fmt == OutputFormat::csv)
    throw InvalidArgument("verify has no CSV form");
  std::ostringstream out;
  const auto& rep = outcome.report;
  out << "verify C(" << rep["config"]["n"].get<std::int64_t>() << ","
      << rep["config"]["l"].get<std::int64_t>() << ")\n";
  for (const auto& check : rep["checks"]) {
    out << "  [" << (check["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
        << check["name"].get<std::string>();
    if (check.contains("note")) out << "  (" << check["note"].get<std::string>() << ")";
    if (check.contains("error")) out << "  " << check["error"].get<std::string>();
    out << "\n";
  }
  out << (outcome.all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace fracmeas
