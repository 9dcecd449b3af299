#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "leech/abelian.hpp"
#include "leech/cyclic_monoid.hpp"
#include "leech/validation.hpp"

namespace leech {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

namespace detail {

inline std::string first_matrix_diff(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): " << a.at(i, j) << " vs " << b.at(i, j);
        return os.str();
      }
  return "";
}

}  // namespace detail

/// Module over the factorization category of a cyclic monoid: one abelian
/// group per element plus the two generating translation maps. Everything
/// else (the action of a general element) is an iterate of these, because the
/// monoid is generated by 1 subject to one congruence.
///
/// Orientation of the generators:
///   left side:  push1(x), pull1(x) : group(x)   -> group(x+1)
///   right side: push1(x), pull1(x) : group(x+1) -> group(x)
class LeechModule {
public:
  LeechModule(CyclicMonoid monoid, Side side, std::vector<AbGroup> groups,
              std::vector<AbHom> push1, std::vector<AbHom> pull1)
      : monoid_(monoid),
        side_(side),
        groups_(std::move(groups)),
        push1_(std::move(push1)),
        pull1_(std::move(pull1)) {
    const int n = monoid_.size();
    if (groups_.size() != static_cast<std::size_t>(n) ||
        push1_.size() != static_cast<std::size_t>(n) ||
        pull1_.size() != static_cast<std::size_t>(n))
      raise(Errc::dimension_mismatch, "module needs one group and two maps per element");
    for (int x = 0; x < n; ++x) {
      const AbGroup& src = side_ == Side::left ? groups_[x] : groups_[monoid_.add(x, 1)];
      const AbGroup& dst = side_ == Side::left ? groups_[monoid_.add(x, 1)] : groups_[x];
      if (push1_[x].source() != src || push1_[x].target() != dst ||
          pull1_[x].source() != src || pull1_[x].target() != dst)
        raise(Errc::dimension_mismatch, "generating map endpoints disagree with groups");
    }
    build_tables();
  }

  const CyclicMonoid& monoid() const { return monoid_; }
  Side side() const { return side_; }
  int size() const { return monoid_.size(); }

  const AbGroup& group(int x) const { return groups_.at(x); }
  const std::vector<AbGroup>& groups() const { return groups_; }
  const AbHom& push1(int x) const { return push1_.at(x); }
  const AbHom& pull1(int x) const { return pull1_.at(x); }

  /// Iterated translation x_* based at the object `at`:
  ///   left:  group(at) -> group(at + x);  right: group(at + x) -> group(at).
  const AbHom& push(int x, int at) const { return push_tab_.at(x).at(at); }
  /// Iterated translation x^*, same endpoints as push.
  const AbHom& pull(int x, int at) const { return pull_tab_.at(x).at(at); }

  bool is_ordinary() const { return ordinary_action_.has_value(); }
  const AbHom& ordinary_action() const {
    if (!ordinary_action_) raise(Errc::not_ordinary, "module was not built from a monoid action");
    return *ordinary_action_;
  }

  /// True when the two generating maps agree at every element.
  bool is_symmetric() const {
    for (int x = 0; x < size(); ++x)
      if (push1_[x] != pull1_[x]) return false;
    return true;
  }

  /// Checks the three module axioms:
  ///   (A) the (m+q)-fold iterate of each generator equals the m-fold iterate,
  ///   (B) the generators commute,
  ///   (C) every stored matrix is well defined on torsion coordinates.
  ValidationReport validate() const {
    ValidationReport report;
    const int n = size();
    for (int x = 0; x < n; ++x) {
      if (!push1_[x].well_defined())
        report.fail("C", x, "push matrix breaks a torsion coordinate");
      if (!pull1_[x].well_defined())
        report.fail("C", x, "pull matrix breaks a torsion coordinate");
    }
    const int m = monoid_.index(), q = monoid_.period();
    for (int y = 0; y < n; ++y) {
      AbHom full = iterate(push1_, m + q, y);
      AbHom part = iterate(push1_, m, y);
      if (full != part)
        report.fail("A", y, "push iterates: " + detail::first_matrix_diff(full.matrix(), part.matrix()));
      AbHom fullp = iterate(pull1_, m + q, y);
      AbHom partp = iterate(pull1_, m, y);
      if (fullp != partp)
        report.fail("A", y, "pull iterates: " + detail::first_matrix_diff(fullp.matrix(), partp.matrix()));
    }
    for (int x = 0; x < n; ++x) {
      const int x1 = monoid_.add(x, 1);
      AbHom lhs = side_ == Side::left ? compose(push1_[x1], pull1_[x])
                                      : compose(push1_[x], pull1_[x1]);
      AbHom rhs = side_ == Side::left ? compose(pull1_[x1], push1_[x])
                                      : compose(pull1_[x], push1_[x1]);
      if (lhs != rhs)
        report.fail("B", x, detail::first_matrix_diff(lhs.matrix(), rhs.matrix()));
    }
    return report;
  }

private:
  friend LeechModule from_ordinary(const CyclicMonoid&, Side, const AbGroup&, const AbHom&);

  AbHom iterate(const std::vector<AbHom>& gen, int count, int base) const {
    AbHom acc = AbHom::identity(groups_[base]);
    for (int c = 0; c < count; ++c) {
      int step = monoid_.project(static_cast<long long>(base) + c);
      acc = side_ == Side::left ? compose(gen[step], acc) : compose(acc, gen[step]);
    }
    return acc;
  }

  void build_tables() {
    const int n = size();
    push_tab_.resize(n);
    pull_tab_.resize(n);
    for (int base = 0; base < n; ++base) {
      push_tab_[0].push_back(AbHom::identity(groups_[base]));
      pull_tab_[0].push_back(AbHom::identity(groups_[base]));
    }
    for (int c = 1; c < n; ++c) {
      for (int base = 0; base < n; ++base) {
        int step = monoid_.project(static_cast<long long>(base) + c - 1);
        if (side_ == Side::left) {
          push_tab_[c].push_back(compose(push1_[step], push_tab_[c - 1][base]));
          pull_tab_[c].push_back(compose(pull1_[step], pull_tab_[c - 1][base]));
        } else {
          push_tab_[c].push_back(compose(push_tab_[c - 1][base], push1_[step]));
          pull_tab_[c].push_back(compose(pull_tab_[c - 1][base], pull1_[step]));
        }
      }
    }
  }

  CyclicMonoid monoid_;
  Side side_;
  std::vector<AbGroup> groups_;
  std::vector<AbHom> push1_, pull1_;
  std::vector<std::vector<AbHom>> push_tab_, pull_tab_;
  std::optional<AbHom> ordinary_action_;
};

/// The constant module Z: every group is Z and both generators are the
/// identity.
inline LeechModule constant_z(const CyclicMonoid& monoid, Side side) {
  const int n = monoid.size();
  std::vector<AbGroup> groups(n, AbGroup::free(1));
  std::vector<AbHom> ones(n, AbHom::identity(AbGroup::free(1)));
  return LeechModule(monoid, side, std::move(groups), ones, ones);
}

/// Embeds an ordinary monoid action on a single group A: constant on
/// objects, with the action as 1_* (left) or 1^* (right) and the identity as
/// the other generator. The action must satisfy the monoid congruence:
/// its (m+q)-th power must equal its m-th power.
inline LeechModule from_ordinary(const CyclicMonoid& monoid, Side side, const AbGroup& a,
                                 const AbHom& action) {
  if (action.source() != a || action.target() != a)
    raise(Errc::dimension_mismatch, "from_ordinary: action must be an endomorphism of a");
  AbHom pm = AbHom::identity(a);
  for (int i = 0; i < monoid.index(); ++i) pm = compose(action, pm);
  AbHom pmq = pm;
  for (int i = 0; i < monoid.period(); ++i) pmq = compose(action, pmq);
  if (pm != pmq)
    raise(Errc::action_violates_congruence,
          "from_ordinary: action power m+q differs from power m");
  const int n = monoid.size();
  std::vector<AbGroup> groups(n, a);
  std::vector<AbHom> acts(n, action);
  std::vector<AbHom> ids(n, AbHom::identity(a));
  LeechModule mod = side == Side::left
                        ? LeechModule(monoid, side, std::move(groups), acts, ids)
                        : LeechModule(monoid, side, std::move(groups), ids, acts);
  mod.ordinary_action_ = action;
  return mod;
}

namespace detail {

/// Basis triples (u, point, v) with u + pi(point) + v = x, ordered
/// lexicographically by (u, point, v).
inline std::vector<std::tuple<int, int, int>> free_basis(const CyclicMonoid& monoid,
                                                         const std::vector<int>& points, int x) {
  std::vector<std::tuple<int, int, int>> basis;
  for (int u = 0; u < monoid.size(); ++u)
    for (std::size_t s = 0; s < points.size(); ++s)
      for (int v = 0; v < monoid.size(); ++v)
        if (monoid.add(monoid.add(u, points[s]), v) == x)
          basis.emplace_back(u, static_cast<int>(s), v);
  return basis;
}

inline std::size_t basis_index(const std::vector<std::tuple<int, int, int>>& basis,
                               const std::tuple<int, int, int>& key) {
  auto it = std::find(basis.begin(), basis.end(), key);
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace detail

/// Free left module on points of the monoid: at each element x, the free
/// abelian group on the factorizations (u, s, v) with u + pi(s) + v = x.
/// 1_* shifts the left slot, 1^* the right slot.
inline LeechModule free_module(const CyclicMonoid& monoid, const std::vector<int>& points) {
  for (int p : points)
    if (!monoid.is_element(p)) raise(Errc::invalid_argument, "free_module: point not canonical");
  const int n = monoid.size();
  std::vector<std::vector<std::tuple<int, int, int>>> basis;
  basis.reserve(n);
  for (int x = 0; x < n; ++x) basis.push_back(detail::free_basis(monoid, points, x));
  std::vector<AbGroup> groups;
  groups.reserve(n);
  for (int x = 0; x < n; ++x) groups.push_back(AbGroup::free(basis[x].size()));
  std::vector<AbHom> push1, pull1;
  for (int x = 0; x < n; ++x) {
    const int x1 = monoid.add(x, 1);
    IntMatrix mp(basis[x1].size(), basis[x].size());
    IntMatrix ml(basis[x1].size(), basis[x].size());
    for (std::size_t j = 0; j < basis[x].size(); ++j) {
      auto [u, s, v] = basis[x][j];
      mp.at(detail::basis_index(basis[x1], {monoid.add(1, u), s, v}), j) += 1;
      ml.at(detail::basis_index(basis[x1], {u, s, monoid.add(v, 1)}), j) += 1;
    }
    push1.push_back(AbHom::unchecked(groups[x], groups[x1], std::move(mp)));
    pull1.push_back(AbHom::unchecked(groups[x], groups[x1], std::move(ml)));
  }
  return LeechModule(monoid, Side::left, std::move(groups), std::move(push1), std::move(pull1));
}

/// Direct sum of two modules over the same monoid and side.
inline LeechModule direct_sum(const LeechModule& a, const LeechModule& b) {
  if (a.monoid() != b.monoid() || a.side() != b.side())
    raise(Errc::dimension_mismatch, "direct_sum: modules live over different data");
  const int n = a.size();
  auto block = [](const AbHom& f, const AbHom& g) {
    AbGroup src = direct_sum(f.source(), g.source());
    AbGroup dst = direct_sum(f.target(), g.target());
    IntMatrix m(dst.dim(), src.dim());
    for (std::size_t i = 0; i < f.target().dim(); ++i)
      for (std::size_t j = 0; j < f.source().dim(); ++j) m.at(i, j) = f.matrix().at(i, j);
    for (std::size_t i = 0; i < g.target().dim(); ++i)
      for (std::size_t j = 0; j < g.source().dim(); ++j)
        m.at(f.target().dim() + i, f.source().dim() + j) = g.matrix().at(i, j);
    return AbHom::unchecked(std::move(src), std::move(dst), std::move(m));
  };
  std::vector<AbGroup> groups;
  std::vector<AbHom> push1, pull1;
  for (int x = 0; x < n; ++x) {
    groups.push_back(direct_sum(a.group(x), b.group(x)));
    push1.push_back(block(a.push1(x), b.push1(x)));
    pull1.push_back(block(a.pull1(x), b.pull1(x)));
  }
  return LeechModule(a.monoid(), a.side(), std::move(groups), std::move(push1), std::move(pull1));
}

struct RandomBounds {
  int max_free_points = 0;    // free-module summands (left side only)
  int max_free_rank = 2;      // rank of the ordinary part
  int max_torsion_coords = 1; // torsion coordinates of the ordinary part
  long max_torsion_order = 6;
};

namespace detail {

/// Deterministic helper; distributions from <random> are not portable.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? g_() % n : 0; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool coin() { return (g_() & 1) != 0; }

private:
  std::mt19937_64 g_;
};

/// A random automorphism of g together with its inverse, assembled from
/// elementary operations that the torsion structure admits.
inline std::pair<AbHom, AbHom> random_automorphism(const AbGroup& g, Rng& rng) {
  AbHom v = AbHom::identity(g);
  AbHom w = AbHom::identity(g);
  const std::size_t dim = g.dim();
  if (dim == 0) return {v, w};
  const int rounds = static_cast<int>(2 * dim + 2);
  for (int r = 0; r < rounds; ++r) {
    int type = rng.range(0, 3);
    std::size_t i = rng.below(dim), j = rng.below(dim);
    IntMatrix e = IntMatrix::identity(dim), einv = IntMatrix::identity(dim);
    if (type == 0) {
      if (i == j) continue;
      Int c = rng.coin() ? 1 : -1;
      if (rng.coin()) c *= 2;
      if (g.order(i) != 0 && g.order(j) != 0) c *= g.order(i) / gcd(g.order(i), g.order(j));
      e.at(i, j) = c;
      einv.at(i, j) = -c;
    } else if (type == 1) {
      if (i == j) continue;
      e.at(i, i) = 0;
      e.at(j, j) = 0;
      e.at(i, j) = 1;
      e.at(j, i) = 1;
      einv = e;
    } else if (type == 2) {
      e.at(i, i) = -1;
      einv = e;
    } else {
      if (g.order(i) < 3) continue;
      Int u = 1 + Int(rng.below(static_cast<std::uint64_t>(g.order(i)) - 1));
      if (gcd(u, g.order(i)) != 1) continue;
      e.at(i, i) = u;
      einv.at(i, i) = mod_inverse(u, g.order(i));
    }
    try {
      AbHom eh(g, g, std::move(e));
      AbHom ehinv(g, g, std::move(einv));
      v = compose(eh, v);
      w = compose(w, ehinv);
    } catch (const Error&) {
      // the torsion layout rejects this operation; draw another
    }
  }
  return {v, w};
}

}  // namespace detail

/// Seed-deterministic lawful module: a direct sum of blocks that satisfy the
/// axioms by construction (free summands, monoid actions made of permutation
/// cycles dividing the period and nilpotent shifts killed by the index, and
/// trivially-acted torsion), then conjugated at every element by a random
/// automorphism.
inline LeechModule random_module(const CyclicMonoid& monoid, Side side, std::uint64_t seed,
                                 const RandomBounds& bounds = {}) {
  detail::Rng rng(seed);
  const int n = monoid.size();
  const int m = monoid.index(), q = monoid.period();

  std::vector<LeechModule> parts;
  if (side == Side::left && bounds.max_free_points > 0) {
    int npts = rng.range(0, bounds.max_free_points);
    if (npts > 0) {
      std::vector<int> pts;
      for (int k = 0; k < npts; ++k) pts.push_back(rng.range(0, n - 1));
      parts.push_back(free_module(monoid, pts));
    }
  }

  int free_dim = rng.range(0, bounds.max_free_rank);
  int ntor = rng.range(0, bounds.max_torsion_coords);
  if (parts.empty() && free_dim + ntor == 0) free_dim = 1;

  if (free_dim + ntor > 0) {
    std::vector<Int> chain;
    long d = 0;
    for (int k = 0; k < ntor; ++k) {
      if (k == 0)
        d = rng.range(2, static_cast<int>(bounds.max_torsion_order));
      else
        d *= rng.range(1, std::max(1, static_cast<int>(bounds.max_torsion_order / d)));
      chain.push_back(Int(d));
    }
    AbGroup a = AbGroup::mixed(free_dim, chain);
    IntMatrix p = IntMatrix::identity(a.dim());
    int pos = 0;
    while (pos < free_dim) {
      int room = free_dim - pos;
      std::vector<std::pair<char, int>> options;
      for (int len = 1; len <= room; ++len)
        if (q % len == 0) options.emplace_back('p', len);
      for (int s = 1; s <= std::min(m, room); ++s) options.emplace_back('n', s);
      auto [kind, len] = options[rng.below(options.size())];
      if (kind == 'p') {
        for (int k = 0; k < len; ++k) {
          p.at(pos + k, pos + k) = 0;
          p.at(pos + (k + 1) % len, pos + k) = 1;
        }
      } else {
        for (int k = 0; k < len; ++k) p.at(pos + k, pos + k) = 0;
        for (int k = 0; k + 1 < len; ++k) p.at(pos + k, pos + k + 1) = 1;
      }
      pos += len;
    }
    parts.push_back(from_ordinary(monoid, side, a, AbHom(a, a, std::move(p))));
  }

  LeechModule mod = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) mod = direct_sum(mod, parts[k]);

  std::vector<AbHom> conj, conj_inv;
  for (int x = 0; x < n; ++x) {
    auto [v, w] = detail::random_automorphism(mod.group(x), rng);
    conj.push_back(std::move(v));
    conj_inv.push_back(std::move(w));
  }
  std::vector<AbGroup> groups = mod.groups();
  std::vector<AbHom> push1, pull1;
  for (int x = 0; x < n; ++x) {
    const int x1 = monoid.add(x, 1);
    if (side == Side::left) {
      push1.push_back(compose(conj[x1], compose(mod.push1(x), conj_inv[x])));
      pull1.push_back(compose(conj[x1], compose(mod.pull1(x), conj_inv[x])));
    } else {
      push1.push_back(compose(conj[x], compose(mod.push1(x), conj_inv[x1])));
      pull1.push_back(compose(conj[x], compose(mod.pull1(x), conj_inv[x1])));
    }
  }
  return LeechModule(monoid, side, std::move(groups), std::move(push1), std::move(pull1));
}

}  // namespace leech
