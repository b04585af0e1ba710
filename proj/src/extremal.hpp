#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cluster_gap.hpp"
#include "density.hpp"
#include "ifs.hpp"
#include "measure.hpp"
#include "params.hpp"

namespace fracmeas {

// Result of maximizing density over all consecutive unions at one level.
struct MaxDensityResult {
  int level = 0;
  std::vector<ConsecutiveUnion> argmax;  // all maximizers, sorted
  Density max_density;
  bool equals_Ok = false;  // the full level set is among the maximizers
};

// Exact maximum of d over all consecutive index ranges at level k.  For a
// fixed interval count p the density is strictly decreasing in the hull, so
// the search reduces to a minimum-hull scan per p followed by exact
// comparisons across the n^k candidates.
MaxDensityResult max_density_consecutive(const Params& params, int k);

// Brute-force maximum over ALL subsets of level-k basic intervals; only
// feasible for n^k <= 16.  Certifies that restricting to consecutive
// unions loses nothing.
struct ExhaustiveResult {
  Density max_density;
  std::vector<std::vector<Index>> argmax;
  std::uint64_t subsets_checked = 0;
};

ExhaustiveResult exhaustive_union_oracle(const Params& params, int k);

// One absorption step: a consecutive union of p type-i clusters swallows
// the neighbouring cluster across its minimal-type endpoint gap.  The
// interpolation ratio lambda always satisfies lambda^-1 = p + (l-n) N with
// N a nonnegative integer, which forces the density to be nondecreasing.
struct AbsorptionStep {
  ConsecutiveUnion before;
  ClusterId absorbed;
  int gap_type = 0;
  Integer lambda_inv;
  Integer p;
  Integer N;
};

// Chain from an arbitrary consecutive union up to a full level set.  While
// the union sits inside a single level-one branch the common digit is
// stripped (a density-preserving normalization); once it spans at least
// two branches every absorption step has p >= 2 and is verified monotone.
struct AbsorptionChain {
  std::vector<AbsorptionStep> steps;
  int blow_downs = 0;
  int start_level = 0;
  int final_level = 0;
};

AbsorptionChain absorb_clusters(const Params& params,
                                const ConsecutiveUnion& start);

struct HausdorffRow {
  int k = 0;
  Rational diameter;  // |O_k| = r + (1-r) l^-k
  Density density;    // d(O_k) as the canonical pair (n^k, l^k |O_k|)
  std::pair<Rational, Rational> bracket;
};

// Per-level table of d(O_k) (verified strictly increasing) plus brackets of
// the limit r^-s and of its reciprocal r^s.
struct HausdorffReport {
  std::vector<HausdorffRow> rows;
  std::pair<Rational, Rational> dmax_bracket;       // r^-s
  std::pair<Rational, Rational> hausdorff_bracket;  // r^s
};

HausdorffReport hausdorff_report(const Params& params, int k_max, int digits);

// Certified confirmation that d([0,y]) >= 1 on (0, r] and d([x,r]) >= 1 on
// [0, r): exact equality at the unit-density corner points y = 1/l and
// x = (r + n - 2)/l, strict inequality certified elsewhere.
struct BoundaryScanReport {
  int critical_points = 0;
  int random_points = 0;
  int exact_unit_hits = 0;
  int max_bits_used = 0;
};

BoundaryScanReport boundary_density_scan(const Params& params,
                                         int samples_per_branch,
                                         std::uint64_t seed);

struct CenteredInterval {
  Rational center;
  Rational radius;
};

struct PackingScanResult {
  std::pair<Rational, Rational> min_bracket;     // density of the argmin
  CenteredInterval argmin;
  std::pair<Rational, Rational> target_bracket;  // 2^-s
  bool argmin_attains_target = false;
  bool candidate_exact = false;  // [r-1/l, r+1/l] has canonical pair (1,2)
  std::int64_t scanned = 0;
  std::int64_t flagged = 0;
  std::int64_t normalized = 0;
  int effective_center_level = 0;
};

// Scans closed intervals centered at points of the set (all level-j left
// endpoints plus r) over structural, alignment and grid radii, certifying
// that no centered interval has density below 2^-s and that the minimum is
// attained.  Intervals leaving [0,1] are clipped conceptually but excluded
// from the statistic; intervals inside a single level-one branch are blown
// up first.  Ties resolve to the leftmost-then-shortest interval.
PackingScanResult packing_scan(const Params& params, int center_level,
                               int radius_grid, int digits);

// Working precision needed to print `digits` decimal digits.
int bits_for_digits(int digits);

}  // namespace fracmeas
