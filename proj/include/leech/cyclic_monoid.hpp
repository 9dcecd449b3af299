#pragma once

#include <numeric>
#include <vector>

#include "leech/error.hpp"

namespace leech {

/// The finite cyclic monoid of index m and period q, on the canonical
/// representatives {0, 1, ..., m+q-1}. Addition is truncated-then-wrapped:
/// values at or above the index fold back by the period.
class CyclicMonoid {
public:
  CyclicMonoid(int index, int period) : index_(index), period_(period) {
    if (index < 0) raise(Errc::invalid_argument, "index must be nonnegative");
    if (period < 1) raise(Errc::invalid_argument, "period must be positive");
    if (index + period < 2) raise(Errc::invalid_argument, "zero monoid rejected: index + period < 2");
  }

  int index() const { return index_; }
  int period() const { return period_; }
  int size() const { return index_ + period_; }

  /// The projection of a natural number onto its canonical representative.
  int project(long long x) const {
    if (x < 0) raise(Errc::invalid_argument, "project: negative input");
    if (x < size()) return static_cast<int>(x);
    return static_cast<int>(index_ + (x - index_) % period_);
  }

  int add(int x, int y) const {
    check_element(x);
    check_element(y);
    return project(static_cast<long long>(x) + y);
  }

  /// r-fold sum of x with itself.
  int scalar(long long r, int x) const {
    if (r < 0) raise(Errc::invalid_argument, "scalar: negative multiplier");
    check_element(x);
    return project(r * x);
  }

  std::vector<int> elements() const {
    std::vector<int> out(size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  bool is_element(int x) const { return 0 <= x && x < size(); }

  bool operator==(const CyclicMonoid& o) const {
    return index_ == o.index_ && period_ == o.period_;
  }
  bool operator!=(const CyclicMonoid& o) const { return !(*this == o); }

private:
  void check_element(int x) const {
    if (!is_element(x)) raise(Errc::invalid_argument, "not a canonical element");
  }

  int index_;
  int period_;
};

/// Two-sided factorization arrow (u, y, v): y -> u + y + v.
struct Arrow {
  int left;
  int center;
  int right;

  bool operator==(const Arrow& o) const {
    return left == o.left && center == o.center && right == o.right;
  }
};

inline int arrow_source(const Arrow& a) { return a.center; }

inline int arrow_target(const CyclicMonoid& m, const Arrow& a) {
  return m.add(m.add(a.left, a.center), a.right);
}

inline Arrow identity_arrow(int x) { return Arrow{0, x, 0}; }

/// (u, x+y+z, v)(x, y, z) = (u+x, y, z+v); the center of g must equal the
/// target of f.
inline Arrow compose_arrows(const CyclicMonoid& m, const Arrow& g, const Arrow& f) {
  if (g.center != arrow_target(m, f))
    raise(Errc::not_composable, "compose_arrows: center/target mismatch");
  return Arrow{m.add(g.left, f.left), f.center, m.add(f.right, g.right)};
}

}  // namespace leech
