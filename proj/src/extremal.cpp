#include "extremal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "errors.hpp"

namespace fracmeas {

int bits_for_digits(int digits) {
  if (digits < 1) throw InvalidArgument("digit count must be >= 1");
  return (digits * 3322 + 999) / 1000 + 16;
}

namespace {

std::optional<std::int64_t> pow_checked(std::int64_t base, int exp) {
  std::int64_t acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (acc > std::numeric_limits<std::int64_t>::max() / base)
      return std::nullopt;
    acc *= base;
  }
  return acc;
}

// Minimum hull per interval count over all ranges [a, a+p-1].
template <typename IntT>
std::vector<IntT> min_hull_per_count(const std::vector<IntT>& lefts) {
  const std::int64_t m = static_cast<std::int64_t>(lefts.size());
  std::vector<IntT> min_hull(static_cast<size_t>(m) + 1);
  for (std::int64_t p = 1; p <= m; ++p) {
    IntT best = lefts[static_cast<size_t>(p - 1)] + 1 - lefts[0];
    for (std::int64_t a = 1; a + p <= m; ++a) {
      IntT hull = lefts[static_cast<size_t>(a + p - 1)] + 1 -
                  lefts[static_cast<size_t>(a)];
      if (hull < best) best = hull;
    }
    min_hull[static_cast<size_t>(p)] = best;
  }
  return min_hull;
}

template <typename IntT>
std::vector<Index> argmin_hulls(const std::vector<IntT>& lefts, std::int64_t p,
                                const IntT& target) {
  std::vector<Index> starts;
  const std::int64_t m = static_cast<std::int64_t>(lefts.size());
  for (std::int64_t a = 0; a + p <= m; ++a) {
    IntT hull = lefts[static_cast<size_t>(a + p - 1)] + 1 -
                lefts[static_cast<size_t>(a)];
    if (hull == target) starts.push_back(a);
  }
  return starts;
}

struct ScaledLefts {
  std::vector<std::int64_t> small;  // used when l^k fits in int64
  std::vector<Integer> big;
  bool use_small = false;
};

ScaledLefts scaled_lefts(const Params& params, int k, std::int64_t count) {
  ScaledLefts out;
  out.use_small = pow_checked(params.l(), k).has_value();
  if (out.use_small) {
    out.small.reserve(static_cast<size_t>(count));
    for (Index v = 0; v < count; ++v)
      out.small.push_back(left_scaled(params, v, k).get_si());
  } else {
    out.big.reserve(static_cast<size_t>(count));
    for (Index v = 0; v < count; ++v)
      out.big.push_back(left_scaled(params, v, k));
  }
  return out;
}

}  // namespace

MaxDensityResult max_density_consecutive(const Params& params, int k) {
  const std::int64_t count = params.level_count(k);
  ScaledLefts lefts = scaled_lefts(params, k, count);

  std::vector<Integer> min_hull(static_cast<size_t>(count) + 1);
  if (lefts.use_small) {
    auto mh = min_hull_per_count(lefts.small);
    for (std::int64_t p = 1; p <= count; ++p)
      min_hull[static_cast<size_t>(p)] = mh[static_cast<size_t>(p)];
  } else {
    auto mh = min_hull_per_count(lefts.big);
    for (std::int64_t p = 1; p <= count; ++p)
      min_hull[static_cast<size_t>(p)] = mh[static_cast<size_t>(p)];
  }

  // One candidate per interval count; exact comparisons pick the winners.
  std::vector<std::int64_t> tied{count};
  Density best = make_density(params, Integer(count),
                              min_hull[static_cast<size_t>(count)]);
  for (std::int64_t p = count - 1; p >= 1; --p) {
    Density cand =
        make_density(params, Integer(p), min_hull[static_cast<size_t>(p)]);
    ComparisonOutcome oc = density_compare(params, cand, best);
    if (oc.ordering == Order::greater) {
      best = cand;
      tied.assign(1, p);
    } else if (oc.ordering == Order::equal) {
      tied.push_back(p);
    }
  }

  MaxDensityResult result;
  result.level = k;
  result.max_density = best;
  for (std::int64_t p : tied) {
    std::vector<Index> starts =
        lefts.use_small
            ? argmin_hulls(lefts.small, p,
                           min_hull[static_cast<size_t>(p)].get_si())
            : argmin_hulls(lefts.big, p, min_hull[static_cast<size_t>(p)]);
    for (Index a : starts)
      result.argmax.push_back(ConsecutiveUnion{k, a, a + p - 1});
  }
  std::sort(result.argmax.begin(), result.argmax.end(),
            [](const ConsecutiveUnion& a, const ConsecutiveUnion& b) {
              return a.left != b.left ? a.left < b.left : a.right < b.right;
            });
  result.equals_Ok =
      std::any_of(result.argmax.begin(), result.argmax.end(),
                  [&](const ConsecutiveUnion& u) {
                    return u.left == 0 && u.right == count - 1;
                  });
  return result;
}

ExhaustiveResult exhaustive_union_oracle(const Params& params, int k) {
  const std::int64_t count = params.level_count(k);
  if (count > 16)
    throw ResourceLimit("exhaustive oracle needs n^k <= 16, got " +
                        std::to_string(count));
  std::vector<std::int64_t> lefts;
  lefts.reserve(static_cast<size_t>(count));
  for (Index v = 0; v < count; ++v)
    lefts.push_back(left_scaled(params, v, k).get_si());

  ExhaustiveResult result;
  std::vector<std::uint32_t> arg_masks;
  std::optional<Density> best;
  const std::uint32_t all = static_cast<std::uint32_t>((1u << count) - 1);
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    int p = std::popcount(mask);
    int lo = std::countr_zero(mask);
    int hi = 31 - std::countl_zero(mask);
    Integer hull(lefts[static_cast<size_t>(hi)] + 1 -
                 lefts[static_cast<size_t>(lo)]);
    Density d = make_density(params, Integer(p), hull);
    if (!best) {
      best = d;
      arg_masks.assign(1, mask);
      continue;
    }
    ComparisonOutcome oc = density_compare(params, d, *best);
    if (oc.ordering == Order::greater) {
      best = d;
      arg_masks.assign(1, mask);
    } else if (oc.ordering == Order::equal) {
      arg_masks.push_back(mask);
    }
  }
  result.subsets_checked = all;
  result.max_density = *best;
  for (std::uint32_t mask : arg_masks) {
    std::vector<Index> idx;
    for (int v = 0; v < count; ++v)
      if (mask & (1u << v)) idx.push_back(v);
    result.argmax.push_back(std::move(idx));
  }
  return result;
}

AbsorptionChain absorb_clusters(const Params& params,
                                const ConsecutiveUnion& start) {
  std::int64_t count = params.level_count(start.level);
  if (start.left < 0 || start.right >= count || start.left > start.right)
    throw InvalidArgument("consecutive union out of range");

  AbsorptionChain chain;
  chain.start_level = start.level;
  ConsecutiveUnion u = start;

  // Scaled left endpoints of the current level, rebuilt after blow-downs.
  std::vector<Integer> lefts;
  int lefts_level = -1;
  auto refresh = [&](int level) {
    if (lefts_level == level) return;
    std::int64_t c = params.level_count(level);
    lefts.clear();
    lefts.reserve(static_cast<size_t>(c));
    for (Index v = 0; v < c; ++v) lefts.push_back(left_scaled(params, v, level));
    lefts_level = level;
  };
  auto hull = [&](const ConsecutiveUnion& range) -> Integer {
    return lefts[static_cast<size_t>(range.right)] + 1 -
           lefts[static_cast<size_t>(range.left)];
  };

  for (;;) {
    count = params.level_count(u.level);
    if (u.left == 0 && u.right == count - 1) break;  // full level set

    // Inside one level-one branch: strip the shared digit.  Density is
    // unchanged, so the chain stays nondecreasing for free.
    const std::int64_t stride = count / params.n();
    if (u.left / stride == u.right / stride) {
      const Index lead = u.left / stride;
      u = ConsecutiveUnion{u.level - 1, u.left - lead * stride,
                           u.right - lead * stride};
      ++chain.blow_downs;
      continue;
    }
    refresh(u.level);

    const int left_type =
        u.left == 0 ? std::numeric_limits<int>::max()
                    : trailing_top_digits(params, u.left - 1, u.level);
    const int right_type =
        u.right == count - 1
            ? std::numeric_limits<int>::max()
            : trailing_top_digits(params, u.right, u.level);
    const int i1 = std::min(left_type, right_type);
    const bool absorb_left = left_type <= right_type;

    std::int64_t span = 1;
    for (int j = 0; j < i1; ++j) span *= params.n();

    ConsecutiveUnion absorbed_range, merged;
    if (absorb_left) {
      absorbed_range = ConsecutiveUnion{u.level, u.left - span, u.left - 1};
      merged = ConsecutiveUnion{u.level, u.left - span, u.right};
    } else {
      absorbed_range = ConsecutiveUnion{u.level, u.right + 1, u.right + span};
      merged = ConsecutiveUnion{u.level, u.left, u.right + span};
    }

    if ((u.right - u.left + 1) % span != 0)
      throw CheckFailed("union is not a whole number of type-" +
                        std::to_string(i1) + " clusters");
    const Integer p_count((u.right - u.left + 1) / span);
    if (p_count < 2)
      throw CheckFailed("absorption reached a single-cluster state");

    // lambda = (|merged| - |u|) / (|merged| - |absorbed|), from the exact
    // hull geometry; its reciprocal must be the integer p + (l-n) N.
    const Integer h_merged = hull(merged);
    const Integer h_before = hull(u);
    const Integer h_absorbed = hull(absorbed_range);
    Rational lambda(h_merged - h_before, h_merged - h_absorbed);
    lambda.canonicalize();
    if (lambda.get_num() != 1)
      throw CheckFailed("absorption ratio is not an integer reciprocal");
    Integer lambda_inv = lambda.get_den();
    Integer excess = lambda_inv - p_count;
    if (excess < 0 || excess % (params.l() - params.n()) != 0)
      throw CheckFailed("lambda^-1 != p + (l-n) N at an absorption step");
    Integer big_n = excess / (params.l() - params.n());

    Density before_density = make_density(
        params, Integer(static_cast<long>(u.right - u.left + 1)), h_before);
    Density after_density = make_density(
        params, Integer(static_cast<long>(merged.right - merged.left + 1)),
        h_merged);
    ComparisonOutcome oc = density_compare(params, before_density, after_density);
    if (oc.ordering == Order::greater)
      throw CheckFailed("absorption step decreased the density");

    AbsorptionStep step;
    step.before = u;
    step.absorbed.i = i1;
    step.absorbed.level = u.level;
    step.absorbed.prefix =
        word_from_index(params, absorbed_range.left / span, u.level - i1);
    step.gap_type = i1;
    step.lambda_inv = std::move(lambda_inv);
    step.p = p_count;
    step.N = std::move(big_n);
    chain.steps.push_back(std::move(step));

    u = merged;
  }
  chain.final_level = u.level;
  return chain;
}

HausdorffReport hausdorff_report(const Params& params, int k_max, int digits) {
  if (k_max < 1) throw InvalidArgument("k_max must be >= 1");
  const int bits = bits_for_digits(digits);
  HausdorffReport report;
  std::optional<Density> prev;
  for (int k = 1; k <= k_max; ++k) {
    // l^k |O_k| = (n-1)(l^k - 1)/(l-1) + 1; no enumeration needed.
    Integer lk = ipow(params.l(), static_cast<unsigned long>(k));
    Integer hull = (params.n() - 1) * (lk - 1) / (params.l() - 1) + 1;
    HausdorffRow row;
    row.k = k;
    row.diameter = Rational(hull, lk);
    row.diameter.canonicalize();
    row.density = make_density(params, ipow(params.n(), static_cast<unsigned long>(k)), hull);
    row.bracket = density_value_bracket(params, row.density, bits);
    if (prev) {
      ComparisonOutcome oc = density_compare(params, *prev, row.density);
      if (oc.ordering != Order::less)
        throw CheckFailed("d(O_k) failed to increase strictly at k = " +
                          std::to_string(k));
    }
    prev = row.density;
    report.rows.push_back(std::move(row));
  }
  report.dmax_bracket = pow_s_bracket(params, 1 / params.r(), bits);
  report.hausdorff_bracket = pow_s_bracket(params, params.r(), bits);
  return report;
}

namespace {

// Deterministic sampler; draws are reproducible for a fixed seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::int64_t below(std::int64_t m) {
    return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(m));
  }

  // Uniform-ish rational in [0, 1] with denominator <= max_den.
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

// Certifies mass/len^s >= 1, i.e. mass >= len^s.  Returns the outcome.
ComparisonOutcome certify_at_least_unit(const Params& params,
                                        const Rational& mass,
                                        const Rational& len,
                                        const char* where) {
  ComparisonOutcome oc =
      density_value_compare(params, mass, len, Rational(1), Rational(1));
  if (oc.ordering == Order::less)
    throw CheckFailed(std::string("boundary density below one at ") + where);
  return oc;
}

}  // namespace

BoundaryScanReport boundary_density_scan(const Params& params,
                                         int samples_per_branch,
                                         std::uint64_t seed) {
  if (samples_per_branch < 1)
    throw InvalidArgument("samples_per_branch must be >= 1");
  BoundaryScanReport report;
  const Rational r = params.r();
  const long n = static_cast<long>(params.n());
  const long l = static_cast<long>(params.l());

  auto note = [&](const ComparisonOutcome& oc) {
    report.max_bits_used = std::max(report.max_bits_used, oc.precision_bits_used);
    if (oc.ordering == Order::equal) ++report.exact_unit_hits;
  };

  // d([0, i/l]) = i^(1-s): exactly 1 at i = 1, strictly above otherwise.
  for (long i = 1; i < n; ++i) {
    Rational y(i, l);
    y.canonicalize();
    Rational mass = cdf(params, y);
    Rational want(i, n);
    want.canonicalize();
    if (mass != want)
      throw CheckFailed("F(i/l) != i/n at i = " + std::to_string(i));
    ComparisonOutcome oc = certify_at_least_unit(params, mass, y, "[0, i/l]");
    if ((i == 1) != (oc.ordering == Order::equal))
      throw CheckFailed("unit density misplaced on the left branch");
    note(oc);
    ++report.critical_points;
  }
  // d([phi_i(r), r]) = (n-1-i)^(1-s): exactly 1 at i = n-2.
  for (long i = 0; i + 1 < n; ++i) {
    Rational x = apply_map(params, i, r);
    Rational mass = 1 - cdf(params, x);
    Rational want_mass(n - 1 - i, n);
    want_mass.canonicalize();
    if (mass != want_mass)
      throw CheckFailed("right-tail mass wrong at i = " + std::to_string(i));
    Rational len = r - x;
    Rational want_len(n - 1 - i, l);
    want_len.canonicalize();
    if (len != want_len)
      throw CheckFailed("right-tail length wrong at i = " + std::to_string(i));
    ComparisonOutcome oc = certify_at_least_unit(params, mass, len, "[phi_i(r), r]");
    if ((i == n - 2) != (oc.ordering == Order::equal))
      throw CheckFailed("unit density misplaced on the right branch");
    note(oc);
    ++report.critical_points;
  }
  // d([0, r]) = r^-s > 1.
  {
    ComparisonOutcome oc = certify_at_least_unit(params, Rational(1), r, "[0, r]");
    note(oc);
    ++report.critical_points;
  }

  Sampler rng(seed);
  for (int t = 0; t < samples_per_branch; ++t) {
    // y in (0, r]
    Rational u = rng.unit(2000);
    Rational y = r * u;
    if (sgn(y) == 0) y = r;
    y.canonicalize();
    ComparisonOutcome oc =
        certify_at_least_unit(params, cdf(params, y), y, "[0, y] sample");
    note(oc);
    ++report.random_points;
  }
  for (int t = 0; t < samples_per_branch; ++t) {
    // x in [0, r)
    Rational u = rng.unit(2000);
    Rational x = r * u;
    if (x >= r) x = 0;
    x.canonicalize();
    Rational mass = 1 - cdf(params, x);
    Rational len = r - x;
    ComparisonOutcome oc = certify_at_least_unit(params, mass, len, "[x, r] sample");
    note(oc);
    ++report.random_points;
  }
  return report;
}

PackingScanResult packing_scan(const Params& params, int center_level,
                               int radius_grid, int digits) {
  if (center_level < 1) throw InvalidArgument("center_level must be >= 1");
  if (radius_grid < 1) throw InvalidArgument("radius_grid must be >= 1");

  PackingScanResult result;
  const int eff = std::max(1, std::min(center_level,
                                       params.max_level_within(2048)));
  result.effective_center_level = eff;
  const std::int64_t count = params.level_count(eff);
  const Integer lke = ipow(params.l(), static_cast<unsigned long>(eff));
  const long n = static_cast<long>(params.n());
  const long l = static_cast<long>(params.l());

  std::set<Rational> center_set;
  for (Index v = 0; v < count; ++v) {
    Rational c(left_scaled(params, v, eff), lke);
    c.canonicalize();
    center_set.insert(std::move(c));
  }
  center_set.insert(params.r());

  // Radii shared by all centers: structural powers of 1/l plus a uniform
  // grid snapped onto the l-adic lattice of at least 4x finer resolution
  // (endpoints then have terminating base-l expansions, keeping the mass
  // evaluations cheap for every pair).  Alignment radii (interval endpoint
  // meets gap endpoint) are added per center below.
  std::vector<Rational> base_radii;
  for (int j = 1; j <= eff + 2; ++j) {
    base_radii.emplace_back(Integer(1), ipow(params.l(), static_cast<unsigned long>(j)));
  }
  {
    Integer lattice(1);
    while (lattice < 4 * radius_grid) lattice *= params.l();
    for (int t = 1; t <= radius_grid; ++t) {
      // round(t * lattice / grid) on the lattice
      Integer num = Integer(t) * lattice * 2 + radius_grid;
      Integer snapped = num / (2 * radius_grid);
      if (snapped == 0) continue;
      Rational g(snapped, lattice);
      g.canonicalize();
      base_radii.push_back(std::move(g));
    }
  }
  std::vector<Rational> gap_points{Rational(1)};
  for (const GapRecord& g : enumerate_gaps(params, eff)) {
    gap_points.push_back(g.left);
    gap_points.push_back(g.right);
  }

  struct Best {
    Rational mass, len;     // density value of the current minimum
    Rational left, width;   // tie-break key
    CenteredInterval where;
    bool is_target = false;  // proven equal to 2^-s
  };
  std::optional<Best> best;
  bool saw_candidate = false;

  const Rational target_mass(1);
  const Rational target_len(2);
  const Rational candidate_radius = params.contraction();

  for (const Rational& c : center_set) {
    std::vector<Rational> radii = base_radii;
    if (sgn(c) > 0) radii.push_back(c);  // aligns the left endpoint with 0
    for (const Rational& g : gap_points) {
      Rational d = g - c;
      if (sgn(d) < 0) d = -d;
      if (sgn(d) > 0) radii.push_back(std::move(d));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    for (const Rational& rho : radii) {
      Rational a = c - rho;
      Rational b = c + rho;
      if (sgn(a) < 0 || b > 1) {
        ++result.flagged;  // clipped; excluded from the statistic
        continue;
      }
      ++result.scanned;

      // Blow up while the interval sits inside one level-one branch.
      while (true) {
        Rational al = a * l;
        Integer ia;
        mpz_fdiv_q(ia.get_mpz_t(), al.get_num().get_mpz_t(),
                   al.get_den().get_mpz_t());
        if (ia >= n) break;  // cannot happen for centered intervals; guard
        Rational branch_hi(Integer(ia + 1), Integer(l));
        branch_hi.canonicalize();
        if (b > branch_hi) break;
        a = a * l - Rational(ia);
        b = b * l - Rational(ia);
        a.canonicalize();
        b.canonicalize();
        ++result.normalized;
      }

      Rational mass = measure_interval(params, a, b);
      if (sgn(mass) <= 0)
        throw CheckFailed("centered interval with zero mass in the scan");
      Rational len = b - a;
      len.canonicalize();

      const bool is_candidate = (c == params.r() && rho == candidate_radius);
      if (is_candidate) {
        saw_candidate = true;
        auto exact = exact_density_from(params, mass, len);
        result.candidate_exact =
            exact && exact->p == 1 && exact->L == 2;
        if (!result.candidate_exact)
          throw CheckFailed("half-in half-out candidate is not exactly 2^-s");
      }

      ComparisonOutcome vs_target =
          density_value_compare(params, mass, len, target_mass, target_len);
      if (vs_target.ordering == Order::less)
        throw CheckFailed("scan found a centered density certifiably below 2^-s");

      Rational left = c - rho;  // report the un-normalized interval
      Rational width = len;
      auto lex_better = [&](const Best& cur) {
        int cl = cmp(left, cur.left);
        if (cl != 0) return cl < 0;
        return cmp(width, cur.width) < 0;
      };

      if (vs_target.ordering == Order::equal) {
        if (!best || !best->is_target || lex_better(*best)) {
          best = Best{mass, len, left, width, CenteredInterval{c, rho}, true};
        }
        continue;
      }
      // Strictly above the target: can only matter while no target-equal
      // interval has been found.
      if (best && best->is_target) continue;
      if (!best) {
        best = Best{mass, len, left, width, CenteredInterval{c, rho}, false};
        continue;
      }
      ComparisonOutcome vs_best =
          density_value_compare(params, mass, len, best->mass, best->len);
      if (vs_best.ordering == Order::less ||
          (vs_best.ordering == Order::equal && lex_better(*best))) {
        best = Best{mass, len, left, width, CenteredInterval{c, rho}, false};
      }
    }
  }

  if (!saw_candidate)
    throw CheckFailed("radius set failed to include the half-in candidate");
  if (!best) throw CheckFailed("packing scan evaluated no intervals");

  const int bits = bits_for_digits(digits);
  result.min_bracket = density_value_bracket(params, best->mass, best->len, bits);
  result.target_bracket =
      density_value_bracket(params, target_mass, target_len, bits);
  result.argmin = best->where;
  result.argmin_attains_target = best->is_target;
  return result;
}

}  // namespace fracmeas
