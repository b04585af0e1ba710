#pragma once

#include <optional>

#include "density.hpp"
#include "ifs.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace fracmeas {

// F(x) = mu([0, x]) for the natural self-similar probability measure: each
// of the n branches carries mass 1/n.  Exact for every rational x in [0,1];
// eventually periodic digit states are resolved by solving the one-variable
// cycle equation in rationals.
Rational cdf(const Params& params, const Rational& x);

// mu([a, b]) = F(b) - F(a); the measure is non-atomic, so endpoint
// open/closedness is immaterial.
Rational measure_interval(const Params& params, const Rational& a,
                          const Rational& b);

// Mass of a union of level-k basic intervals: (#indices) / n^k.
Rational measure_union(const Params& params, const IntervalUnion& u);

// A set together with its exact mass, exact diameter, and - whenever the
// diameter is c/l^j with mass m/n^j - the exact canonical density pair.
struct DensityQuery {
  Rational measure;
  Rational length;
  std::optional<Density> exact;
};

// Exact (p, L) pair for mass/diameter when one exists: the smallest j with
// length * l^j and measure * n^j both integral.
std::optional<Density> exact_density_from(const Params& params,
                                          const Rational& measure,
                                          const Rational& length);

DensityQuery density_of(const Params& params, const IntervalUnion& u);
DensityQuery density_of(const Params& params, const Rational& a,
                        const Rational& b);

}  // namespace fracmeas
