#include "ifs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace fracmeas {

Rational apply_map(const Params& params, std::int64_t digit,
                   const Rational& x) {
  if (digit < 0 || digit >= params.n())
    throw InvalidArgument("digit out of range: " + std::to_string(digit));
  Rational r = (x + Rational(static_cast<long>(digit))) /
               Rational(static_cast<long>(params.l()));
  r.canonicalize();
  return r;
}

Word word_from_index(const Params& params, Index v, int level) {
  if (level < 0) throw InvalidArgument("negative level");
  Word w;
  w.digits.assign(static_cast<size_t>(level), 0);
  Index rest = v;
  for (int j = level - 1; j >= 0; --j) {
    w.digits[static_cast<size_t>(j)] = rest % params.n();
    rest /= params.n();
  }
  if (rest != 0 || v < 0)
    throw InvalidArgument("index out of range for level " +
                          std::to_string(level));
  return w;
}

Index index_from_word(const Params& params, const Word& w) {
  Index v = 0;
  for (std::int64_t d : w.digits) {
    if (d < 0 || d >= params.n()) throw InvalidArgument("digit out of range");
    v = v * params.n() + d;
  }
  return v;
}

Integer left_scaled(const Params& params, Index v, int level) {
  Word w = word_from_index(params, v, level);
  Integer acc = 0;
  for (std::int64_t d : w.digits) {
    acc = acc * params.l() + static_cast<long>(d);
  }
  return acc;
}

BasicInterval basic_interval(const Params& params, const Word& w) {
  Integer lk = ipow(params.l(), static_cast<unsigned long>(w.level()));
  Integer left = 0;
  for (std::int64_t d : w.digits) {
    if (d < 0 || d >= params.n()) throw InvalidArgument("digit out of range");
    left = left * params.l() + static_cast<long>(d);
  }
  BasicInterval b;
  b.word = w;
  b.left = Rational(left, lk);
  b.left.canonicalize();
  b.right = Rational(left + 1, lk);
  b.right.canonicalize();
  return b;
}

IntervalUnion make_union(const Params& params, int level,
                         std::vector<Index> indices) {
  if (indices.empty()) throw InvalidArgument("empty interval union");
  std::int64_t count = params.level_count(level);
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= count)
      throw InvalidArgument("union index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw InvalidArgument("union indices must be strictly increasing");
  }
  IntervalUnion u;
  u.level = level;
  Integer lk = ipow(params.l(), static_cast<unsigned long>(level));
  u.left = Rational(left_scaled(params, indices.front(), level), lk);
  u.left.canonicalize();
  u.right = Rational(left_scaled(params, indices.back(), level) + 1, lk);
  u.right.canonicalize();
  u.indices = std::move(indices);
  return u;
}

IntervalUnion level_set(const Params& params, int k) {
  std::int64_t count = params.level_count(k);
  std::vector<Index> idx(static_cast<size_t>(count));
  std::iota(idx.begin(), idx.end(), Index{0});
  return make_union(params, k, std::move(idx));
}

IntervalUnion blow_down(const Params& params, const IntervalUnion& u) {
  if (u.level < 1) throw InvalidArgument("cannot blow down level 0");
  std::int64_t stride = params.level_count(u.level - 1);
  Index lead = u.indices.front() / stride;
  std::vector<Index> idx;
  idx.reserve(u.indices.size());
  for (Index v : u.indices) {
    if (v / stride != lead)
      throw InvalidArgument("union spans more than one level-one branch");
    idx.push_back(v - lead * stride);
  }
  return make_union(params, u.level - 1, std::move(idx));
}

IntervalUnion to_union(const Params& params, const ConsecutiveUnion& range) {
  if (range.left > range.right)
    throw InvalidArgument("empty consecutive union");
  std::vector<Index> idx(static_cast<size_t>(range.right - range.left + 1));
  std::iota(idx.begin(), idx.end(), range.left);
  return make_union(params, range.level, std::move(idx));
}

int trailing_top_digits(const Params& params, Index v, int level) {
  int t = 0;
  while (t < level && v % params.n() == params.n() - 1) {
    v /= params.n();
    ++t;
  }
  return t;
}

Integer hull_scaled(const Params& params, const ConsecutiveUnion& range) {
  if (range.left > range.right)
    throw InvalidArgument("empty consecutive union");
  return left_scaled(params, range.right, range.level) + 1 -
         left_scaled(params, range.left, range.level);
}

}  // namespace fracmeas
