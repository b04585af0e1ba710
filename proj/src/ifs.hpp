#pragma once

#include <cstdint>
#include <vector>

#include "params.hpp"
#include "rational.hpp"

namespace fracmeas {

using Index = std::int64_t;

// A finite admissible digit string; digits in {0, ..., n-1}, most
// significant first.  The empty word codes the whole interval [0,1].
struct Word {
  std::vector<std::int64_t> digits;
  int level() const { return static_cast<int>(digits.size()); }
  bool operator==(const Word&) const = default;
};

struct BasicInterval {
  Word word;
  Rational left;
  Rational right;  // left + l^-k
};

// The map x -> (x + digit) / l, evaluated exactly.
Rational apply_map(const Params& params, std::int64_t digit, const Rational& x);

// Words are indexed by their base-n value, so consecutive indices are
// adjacent basic intervals in left-to-right order.
Word word_from_index(const Params& params, Index v, int level);
Index index_from_word(const Params& params, const Word& w);

// Left endpoint of basic interval `v` scaled by l^k: the word's digits read
// as a base-l numeral.  The right endpoint is this plus one.
Integer left_scaled(const Params& params, Index v, int level);

BasicInterval basic_interval(const Params& params, const Word& w);

// A union of level-k basic intervals, stored as strictly increasing indices
// with the convex-hull endpoints cached.  Adjacent intervals may share an
// endpoint; the index set keeps them distinct.
struct IntervalUnion {
  int level = 0;
  std::vector<Index> indices;
  Rational left;
  Rational right;
};

IntervalUnion make_union(const Params& params, int level,
                         std::vector<Index> indices);

// O_k, the union of all n^k level-k basic intervals.
IntervalUnion level_set(const Params& params, int k);

// Strips the common leading digit of a union contained in a single
// level-one branch; density is unchanged downstream.  Throws on mixed
// leading digits.
IntervalUnion blow_down(const Params& params, const IntervalUnion& u);

// The union of all basic intervals with index in [left, right].
struct ConsecutiveUnion {
  int level = 0;
  Index left = 0;
  Index right = 0;
  bool operator==(const ConsecutiveUnion&) const = default;
};

IntervalUnion to_union(const Params& params, const ConsecutiveUnion& range);

// Number of trailing digits equal to n-1 in the base-n expansion of v at
// the given level.  The gap immediately right of basic interval v has
// exactly this type (zero meaning the neighbour touches), and v = n^k - 1
// gives k, the type of the outermost gap.
int trailing_top_digits(const Params& params, Index v, int level);

// Hull diameter of [left..right] scaled by l^k.
Integer hull_scaled(const Params& params, const ConsecutiveUnion& range);

}  // namespace fracmeas
