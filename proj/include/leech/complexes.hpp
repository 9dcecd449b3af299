#pragma once

#include <utility>
#include <vector>

#include "leech/free_resolution.hpp"
#include "leech/trace_maps.hpp"

namespace leech {

enum class Direction { cochain, chain };

/// Bounded complex of abelian groups. For cochain direction diffs[i] runs
/// spots[i] -> spots[i+1]; for chain direction diffs[i] runs
/// spots[i+1] -> spots[i]. Consecutive composites are checked to vanish.
class AbComplex {
public:
  AbComplex(Direction dir, std::vector<AbGroup> spots, std::vector<AbHom> diffs)
      : dir_(dir), spots_(std::move(spots)), diffs_(std::move(diffs)) {
    if (spots_.empty() || diffs_.size() + 1 != spots_.size())
      raise(Errc::dimension_mismatch, "complex needs one differential between adjacent spots");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      const AbGroup& from = dir_ == Direction::cochain ? spots_[i] : spots_[i + 1];
      const AbGroup& to = dir_ == Direction::cochain ? spots_[i + 1] : spots_[i];
      if (diffs_[i].source() != from || diffs_[i].target() != to)
        raise(Errc::dimension_mismatch, "differential endpoints disagree with spots");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
      const AbHom& first = dir_ == Direction::cochain ? diffs_[i] : diffs_[i + 1];
      const AbHom& second = dir_ == Direction::cochain ? diffs_[i + 1] : diffs_[i];
      if (!compose(second, first).is_zero())
        raise(Errc::composition_not_zero, "consecutive differentials do not vanish");
    }
  }

  Direction direction() const { return dir_; }
  std::size_t spot_count() const { return spots_.size(); }
  const AbGroup& spot(std::size_t n) const { return spots_.at(n); }
  const AbHom& differential(std::size_t i) const { return diffs_.at(i); }

  /// Homology at an interior spot; the open end at degree 0 is treated as a
  /// zero map.
  GroupDecomposition homology(std::size_t n) const {
    if (n + 1 >= spots_.size())
      raise(Errc::spot_out_of_range, "homology: spot lacks an adjacent differential");
    if (dir_ == Direction::cochain) {
      AbHom incoming = n == 0 ? AbHom::zero(AbGroup(), spots_[0]) : diffs_[n - 1];
      return subquotient(diffs_[n], incoming);
    }
    AbHom outgoing = n == 0 ? AbHom::zero(spots_[0], AbGroup()) : diffs_[n - 1];
    return subquotient(outgoing, diffs_[n]);
  }

private:
  Direction dir_;
  std::vector<AbGroup> spots_;
  std::vector<AbHom> diffs_;
};

inline GroupDecomposition complex_homology(const AbComplex& c, std::size_t n) {
  return c.homology(n);
}

/// Cochain complex of a left module through the one-generator levels:
/// spots alternate A(r.m) and A(r.m + 1), differentials alternate the
/// difference map and the trace map.
inline AbComplex hom_complex_fast(const LeechModule& a, int max_degree) {
  if (a.side() != Side::left) raise(Errc::wrong_side, "hom complex needs a left module");
  const CyclicMonoid& mo = a.monoid();
  const int m = mo.index();
  std::vector<AbGroup> spots;
  std::vector<AbHom> diffs;
  for (int n = 0; n <= max_degree; ++n) {
    int base = mo.scalar(n / 2, m);
    spots.push_back(a.group(n % 2 == 0 ? base : mo.add(base, 1)));
    if (n == max_degree) break;
    diffs.push_back(n % 2 == 0 ? s_left(a, base) : trace_left(a, mo.add(base, 1)));
  }
  return AbComplex(Direction::cochain, std::move(spots), std::move(diffs));
}

/// Chain complex of a right module through the same levels, with the trace
/// and difference maps running downward.
inline AbComplex tensor_complex_fast(const LeechModule& b, int max_degree) {
  if (b.side() != Side::right) raise(Errc::wrong_side, "tensor complex needs a right module");
  const CyclicMonoid& mo = b.monoid();
  const int m = mo.index();
  std::vector<AbGroup> spots;
  std::vector<AbHom> diffs;
  for (int n = 0; n <= max_degree; ++n) {
    int base = mo.scalar(n / 2, m);
    spots.push_back(b.group(n % 2 == 0 ? base : mo.add(base, 1)));
    if (n == max_degree) break;
    diffs.push_back(n % 2 == 0 ? s_right(b, base) : trace_right(b, mo.add(base, 1)));
  }
  return AbComplex(Direction::chain, std::move(spots), std::move(diffs));
}

namespace detail {

/// Coordinate bookkeeping for one sum of module groups indexed by the
/// factorization basis of a resolution level: block (x, i) carries a copy of
/// the module group at x.
struct LevelLayout {
  std::vector<std::vector<std::size_t>> offset;  // [x][i] -> first coordinate
  std::vector<std::size_t> block_dim;            // per x
  AbGroup total;

  static LevelLayout make(const FreeResolution& res, const LeechModule& mod, int n) {
    LevelLayout l;
    std::vector<Int> orders;
    for (int x : mod.monoid().elements()) {
      const AbGroup& g = mod.group(x);
      l.block_dim.push_back(g.dim());
      std::vector<std::size_t> offs;
      for (std::size_t i = 0; i < res.basis(n, x).size(); ++i) {
        offs.push_back(orders.size());
        for (std::size_t c = 0; c < g.dim(); ++c) orders.push_back(g.order(c));
      }
      l.offset.push_back(std::move(offs));
    }
    l.total = AbGroup::of_orders(std::move(orders));
    return l;
  }
};

inline std::size_t pair_index(const FreeResolution& res, int n, int x,
                              const std::pair<int, int>& uv) {
  const auto& basis = res.basis(n, x);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == uv) return i;
  raise(Errc::invalid_argument, "factorization outside basis");
}

/// Naturality constraints over the generating arrows: at every basis element
/// the value moved by the module action must match the value at the shifted
/// basis element.
inline AbHom naturality_constraints(const FreeResolution& res, const LeechModule& a, int n,
                                    const LevelLayout& lay) {
  const CyclicMonoid& mo = a.monoid();
  std::vector<Int> row_orders;
  std::size_t rows = 0;
  for (int x : mo.elements()) {
    const std::size_t d1 = a.group(mo.add(x, 1)).dim();
    for (std::size_t i = 0; i < res.basis(n, x).size(); ++i) {
      rows += 2 * d1;
      for (int rep = 0; rep < 2; ++rep)
        for (std::size_t c = 0; c < d1; ++c) row_orders.push_back(a.group(mo.add(x, 1)).order(c));
    }
  }
  IntMatrix mat(rows, lay.total.dim());
  std::size_t ro = 0;
  for (int x : mo.elements()) {
    const int x1 = mo.add(x, 1);
    const std::size_t d1 = a.group(x1).dim();
    const IntMatrix& mp = a.push1(x).matrix();
    const IntMatrix& ml = a.pull1(x).matrix();
    const auto& basis = res.basis(n, x);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto [u, v] = basis[i];
      std::size_t ip = pair_index(res, n, x1, {mo.add(u, 1), v});
      std::size_t il = pair_index(res, n, x1, {u, mo.add(v, 1)});
      for (std::size_t r = 0; r < d1; ++r) {
        mat.at(ro + r, lay.offset[x1][ip] + r) += 1;
        for (std::size_t c = 0; c < lay.block_dim[x]; ++c)
          mat.at(ro + r, lay.offset[x][i] + c) -= mp.at(r, c);
        mat.at(ro + d1 + r, lay.offset[x1][il] + r) += 1;
        for (std::size_t c = 0; c < lay.block_dim[x]; ++c)
          mat.at(ro + d1 + r, lay.offset[x][i] + c) -= ml.at(r, c);
      }
      ro += 2 * d1;
    }
  }
  return AbHom::unchecked(lay.total, AbGroup::of_orders(std::move(row_orders)), std::move(mat));
}

/// The map of sums induced by a resolution differential, one identity block
/// per nonzero coefficient. `down` selects the chain-direction variant.
inline AbHom induced_level_map(const FreeResolution& res, const LeechModule& mod, int n_from,
                               int n_to, const LevelLayout& from, const LevelLayout& to) {
  const CyclicMonoid& mo = mod.monoid();
  IntMatrix mat(to.total.dim(), from.total.dim());
  const int n_diff = std::max(n_from, n_to);
  for (int x : mo.elements()) {
    IntMatrix d = res.differential(n_diff, x).matrix();  // rows: n_diff-1, cols: n_diff
    for (std::size_t j = 0; j < d.cols(); ++j)
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (d.at(i, j) == 0) continue;
        const std::size_t src_off = n_from == n_diff ? from.offset[x][j] : from.offset[x][i];
        const std::size_t dst_off = n_to == n_diff ? to.offset[x][j] : to.offset[x][i];
        for (std::size_t r = 0; r < from.block_dim[x]; ++r)
          mat.at(dst_off + r, src_off + r) += d.at(i, j);
      }
  }
  return AbHom::unchecked(from.total, to.total, std::move(mat));
}

}  // namespace detail

/// Oracle complex together with the per-spot comparison maps onto the fast
/// spots (evaluation at the level generator, or its tensor counterpart).
struct OracleComplex {
  AbComplex complex;
  std::vector<AbHom> to_fast;
};

/// Builds the cochain complex of natural maps from the resolution levels into
/// a left module from first principles: each spot is cut out of the product
/// of module values over all basis elements by the generating-arrow
/// naturality constraints; the differential is precomposition with the
/// boundary. No use is made of the one-generator collapse.
inline OracleComplex hom_complex_oracle_full(const LeechModule& a, int max_degree) {
  if (a.side() != Side::left) raise(Errc::wrong_side, "hom oracle needs a left module");
  FreeResolution res(a.monoid());
  std::vector<detail::LevelLayout> lay;
  std::vector<Presentation> pres;
  std::vector<AbGroup> spots;
  for (int n = 0; n <= max_degree; ++n) {
    lay.push_back(detail::LevelLayout::make(res, a, n));
    AbHom constraints = detail::naturality_constraints(res, a, n, lay[n]);
    pres.emplace_back(lay[n].total,
                      IntMatrix::from_columns(lay[n].total.dim(), kernel_basis(constraints)));
    spots.push_back(pres[n].group());
  }
  std::vector<AbHom> diffs;
  for (int n = 0; n < max_degree; ++n) {
    AbHom pre = detail::induced_level_map(res, a, n, n + 1, lay[n], lay[n + 1]);
    diffs.push_back(induced_hom(pres[n], pres[n + 1], pre));
  }
  std::vector<AbHom> to_fast;
  for (int n = 0; n <= max_degree; ++n) {
    const int p = res.generator_pi(n);
    const AbGroup& ap = a.group(p);
    IntMatrix ev(ap.dim(), lay[n].total.dim());
    std::size_t off = lay[n].offset[p][detail::pair_index(res, n, p, {0, 0})];
    for (std::size_t r = 0; r < ap.dim(); ++r) ev.at(r, off + r) = 1;
    to_fast.push_back(hom_to_ambient(pres[n], AbHom::unchecked(lay[n].total, ap, std::move(ev))));
  }
  return OracleComplex{AbComplex(Direction::cochain, std::move(spots), std::move(diffs)),
                       std::move(to_fast)};
}

/// Builds the chain complex of a right module tensored against the resolution
/// levels from first principles: each spot is the sum of module values over
/// all basis elements, divided by the move-across-the-generator relations;
/// the differential is induced by the boundary. The one-generator collapse is
/// again not used.
inline OracleComplex tensor_complex_oracle_full(const LeechModule& b, int max_degree) {
  if (b.side() != Side::right) raise(Errc::wrong_side, "tensor oracle needs a right module");
  const CyclicMonoid& mo = b.monoid();
  FreeResolution res(mo);
  std::vector<detail::LevelLayout> lay;
  std::vector<Presentation> pres;
  std::vector<AbGroup> spots;
  for (int n = 0; n <= max_degree; ++n) {
    lay.push_back(detail::LevelLayout::make(res, b, n));
    std::vector<std::vector<Int>> relators;
    for (int x : mo.elements()) {
      const int x1 = mo.add(x, 1);
      const IntMatrix& mp = b.push1(x).matrix();
      const IntMatrix& ml = b.pull1(x).matrix();
      const auto& basis = res.basis(n, x);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [u, v] = basis[i];
        std::size_t il = detail::pair_index(res, n, x1, {u, mo.add(v, 1)});
        std::size_t ip = detail::pair_index(res, n, x1, {mo.add(u, 1), v});
        for (std::size_t beta = 0; beta < b.group(x1).dim(); ++beta) {
          std::vector<Int> r1(lay[n].total.dim()), r2(lay[n].total.dim());
          for (std::size_t r = 0; r < lay[n].block_dim[x]; ++r) {
            r1[lay[n].offset[x][i] + r] += mp.at(r, beta);
            r2[lay[n].offset[x][i] + r] += ml.at(r, beta);
          }
          r1[lay[n].offset[x1][il] + beta] -= 1;
          r2[lay[n].offset[x1][ip] + beta] -= 1;
          relators.push_back(std::move(r1));
          relators.push_back(std::move(r2));
        }
      }
    }
    pres.push_back(Presentation::quotient(lay[n].total, relators));
    spots.push_back(pres[n].group());
  }
  std::vector<AbHom> diffs;
  for (int n = 0; n < max_degree; ++n) {
    AbHom ten = detail::induced_level_map(res, b, n + 1, n, lay[n + 1], lay[n]);
    diffs.push_back(induced_hom(pres[n + 1], pres[n], ten));
  }
  std::vector<AbHom> to_fast;
  for (int n = 0; n <= max_degree; ++n) {
    const int p = res.generator_pi(n);
    const AbGroup& bp = b.group(p);
    // The bare pairing anticommutes with the odd boundaries (pulling the
    // generator across the tensor swaps the two translations, so the induced
    // map is the negative of the difference map). The alternating sign makes
    // every square commute on the nose; it is still an isomorphism.
    const Int sign = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
    IntMatrix tau(bp.dim(), lay[n].total.dim());
    for (int x : mo.elements()) {
      const auto& basis = res.basis(n, x);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [u, v] = basis[i];
        IntMatrix block = compose(b.pull(u, p), b.push(v, mo.add(u, p))).matrix();
        for (std::size_t r = 0; r < bp.dim(); ++r)
          for (std::size_t c = 0; c < lay[n].block_dim[x]; ++c)
            tau.at(r, lay[n].offset[x][i] + c) += sign * block.at(r, c);
      }
    }
    to_fast.push_back(hom_to_ambient(pres[n], AbHom::unchecked(lay[n].total, bp, std::move(tau))));
  }
  return OracleComplex{AbComplex(Direction::chain, std::move(spots), std::move(diffs)),
                       std::move(to_fast)};
}

inline AbComplex hom_complex_oracle(const LeechModule& a, int max_degree) {
  return hom_complex_oracle_full(a, max_degree).complex;
}

inline AbComplex tensor_complex_oracle(const LeechModule& b, int max_degree) {
  return tensor_complex_oracle_full(b, max_degree).complex;
}

}  // namespace leech
