#include "cluster_gap.hpp"

#include <string>

#include "errors.hpp"

namespace fracmeas {

Integer geom_sum(const Params& params, int i) {
  if (i < 1) throw InvalidArgument("geom_sum requires i >= 1");
  Integer acc = 0;
  Integer term(static_cast<long>(params.l()));
  for (int j = 1; j < i; ++j) {
    acc += term;
    term *= params.l();
  }
  return acc;
}

Rational gap_length(const Params& params, int i, int k) {
  if (i < 1 || i > k)
    throw InvalidArgument("gap type requires 1 <= i <= k");
  Integer units = (params.l() - params.n()) * (1 + geom_sum(params, i));
  Rational g(units, ipow(params.l(), static_cast<unsigned long>(k)));
  g.canonicalize();
  return g;
}

Rational cluster_diameter(const Params& params, int i, int k) {
  if (i < 0 || i > k)
    throw InvalidArgument("cluster type requires 0 <= i <= k");
  Integer units;
  if (i == 0) {
    units = 1;
  } else {
    units = params.n() + (params.n() - 1) * geom_sum(params, i);
  }
  Rational d(units, ipow(params.l(), static_cast<unsigned long>(k)));
  d.canonicalize();
  return d;
}

std::vector<GapRecord> enumerate_gaps(const Params& params, int k) {
  if (k < 0) throw InvalidArgument("negative level");
  std::vector<GapRecord> gaps;
  if (k == 0) return gaps;
  const std::int64_t count = params.level_count(k);
  const Integer lk = ipow(params.l(), static_cast<unsigned long>(k));

  // Type table for classification by exact length.
  std::vector<Rational> type_length(static_cast<size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) type_length[static_cast<size_t>(i)] = gap_length(params, i, k);

  auto classify = [&](const Rational& len) {
    for (int i = 1; i <= k; ++i) {
      if (len == type_length[static_cast<size_t>(i)]) return i;
    }
    throw CheckFailed("gap of length " + rational_string(len) +
                      " matches no type at level " + std::to_string(k));
  };

  Integer prev_right = left_scaled(params, 0, k) + 1;
  for (Index v = 1; v < count; ++v) {
    Integer lft = left_scaled(params, v, k);
    if (lft > prev_right) {
      GapRecord g;
      g.left = Rational(prev_right, lk);
      g.left.canonicalize();
      g.right = Rational(lft, lk);
      g.right.canonicalize();
      g.level = k;
      g.type_i = classify(g.right - g.left);
      gaps.push_back(std::move(g));
    }
    prev_right = lft + 1;
  }
  // The outermost gap, between the level set and the right endpoint of [0,1].
  GapRecord last;
  last.left = Rational(prev_right, lk);
  last.left.canonicalize();
  last.right = Rational(1);
  last.level = k;
  last.type_i = classify(last.right - last.left);
  gaps.push_back(std::move(last));
  return gaps;
}

ConsecutiveUnion cluster(const Params& params, int i, int k,
                         const Word& prefix) {
  if (i < 0 || i > k)
    throw InvalidArgument("cluster type requires 0 <= i <= k");
  if (prefix.level() != k - i)
    throw InvalidArgument("cluster prefix must have length k - i");
  Index base = index_from_word(params, prefix);
  std::int64_t span = 1;
  for (int j = 0; j < i; ++j) span *= params.n();
  ConsecutiveUnion c;
  c.level = k;
  c.left = base * span;
  c.right = c.left + span - 1;
  return c;
}

bool verify_identity_h1(const Params& params, int i) {
  if (i < 1) throw InvalidArgument("identity requires i >= 1");
  Integer a = geom_sum(params, i);
  Integer lhs = params.n() + (params.n() - 1) * a +
                (params.l() - params.n()) * (1 + a);
  return lhs == ipow(params.l(), static_cast<unsigned long>(i));
}

}  // namespace fracmeas
