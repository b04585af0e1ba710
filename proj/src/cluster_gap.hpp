#pragma once

#include <vector>

#include "ifs.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace fracmeas {

// a_i = l + l^2 + ... + l^{i-1}; a_1 = 0.  Satisfies l(1 + a_i) = a_i + l^i.
Integer geom_sum(const Params& params, int i);

// Length of a level-k gap of type i: (l-n)(1 + l + ... + l^{i-1}) / l^k.
Rational gap_length(const Params& params, int i, int k);

// Hull diameter of a type-(i,k) cluster.  A type-0 cluster is a single
// basic interval (l^-k); a type-1 cluster is n touching intervals (n/l^k);
// for i >= 2 the diameter is (n + (n-1)(l + ... + l^{i-1})) / l^k.
Rational cluster_diameter(const Params& params, int i, int k);

// A maximal connected component of [0,1] minus the level-k intervals,
// classified by matching its exact length against the type table.
struct GapRecord {
  Rational left;
  Rational right;
  int type_i = 0;
  int level = 0;
};

// All positive-length level-k gaps, left to right.  A length that matches
// no type aborts loudly: it would mean the length formula is wrong.
std::vector<GapRecord> enumerate_gaps(const Params& params, int k);

// Cluster of type (i,k): the n^i basic intervals whose words extend the
// given prefix of length k-i.
struct ClusterId {
  int i = 0;
  int level = 0;
  Word prefix;
};

ConsecutiveUnion cluster(const Params& params, int i, int k,
                         const Word& prefix);

// Integer identity n + (n-1) a_i + (l-n)(1 + a_i) = l^i.
bool verify_identity_h1(const Params& params, int i);

}  // namespace fracmeas
