#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "leech/smith.hpp"

namespace leech {

/// Finitely generated abelian group presented by one order per coordinate:
/// order 0 means a free Z coordinate, order d >= 2 a Z/d coordinate.
/// Canonical groups list free coordinates first with the torsion orders in a
/// divisibility chain; ambient groups arising as products or sums of others
/// may carry any layout. Canonical answers are returned as GroupDecomposition.
class AbGroup {
public:
  AbGroup() = default;

  static AbGroup free(std::size_t rank) { return AbGroup(std::vector<Int>(rank, 0)); }

  static AbGroup of_orders(std::vector<Int> orders) {
    for (const Int& d : orders)
      if (d != 0 && d < 2) raise(Errc::invalid_argument, "coordinate order must be 0 or >= 2");
    return AbGroup(std::move(orders));
  }

  static AbGroup mixed(std::size_t rank, const std::vector<Int>& torsion) {
    std::vector<Int> orders(rank, 0);
    for (const Int& d : torsion) {
      if (d < 2) raise(Errc::invalid_argument, "torsion order must be >= 2");
      orders.push_back(d);
    }
    return AbGroup(std::move(orders));
  }

  std::size_t dim() const { return orders_.size(); }
  const Int& order(std::size_t i) const { return orders_[i]; }
  bool is_free_coord(std::size_t i) const { return orders_[i] == 0; }

  std::size_t free_rank() const {
    return static_cast<std::size_t>(std::count(orders_.begin(), orders_.end(), Int(0)));
  }
  std::size_t torsion_count() const { return dim() - free_rank(); }
  bool trivial() const { return orders_.empty(); }

  bool operator==(const AbGroup& o) const { return orders_ == o.orders_; }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }

  /// Canonical residues: torsion coordinates into [0, d), free unchanged.
  std::vector<Int> reduce(std::vector<Int> v) const {
    if (v.size() != dim()) raise(Errc::dimension_mismatch, "reduce: length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (orders_[i] != 0) v[i] = mod_floor(v[i], orders_[i]);
    return v;
  }

  /// One column d_i * e_i per torsion coordinate.
  IntMatrix torsion_relation_columns() const {
    IntMatrix m(dim(), torsion_count());
    std::size_t j = 0;
    for (std::size_t i = 0; i < dim(); ++i)
      if (orders_[i] != 0) m.at(i, j++) = orders_[i];
    return m;
  }

  friend AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> orders = a.orders_;
    orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
    return AbGroup(std::move(orders));
  }

private:
  explicit AbGroup(std::vector<Int> orders) : orders_(std::move(orders)) {}
  std::vector<Int> orders_;
};

/// Canonical form Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, di >= 2.
/// Complete isomorphism invariant; equality decides isomorphism.
class GroupDecomposition {
public:
  GroupDecomposition() = default;
  GroupDecomposition(std::size_t free_rank, std::vector<Int> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2) raise(Errc::invalid_argument, "invariant factor must be >= 2");
      if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
        raise(Errc::invalid_argument, "invariant factors must form a divisibility chain");
    }
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  AbGroup group() const { return AbGroup::mixed(free_rank_, torsion_); }

  bool operator==(const GroupDecomposition& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }
  bool operator!=(const GroupDecomposition& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) {
      os << "Z";
      first = false;
    } else if (free_rank_ > 1) {
      os << "Z^" << free_rank_;
      first = false;
    }
    for (const Int& d : torsion_) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

/// Structure theorem: canonical forms are equal iff the groups are isomorphic.
inline bool groups_isomorphic(const GroupDecomposition& a, const GroupDecomposition& b) {
  return a == b;
}

/// Canonical form of Z^ambient_rank / column-span(relations).
inline GroupDecomposition cokernel(const IntMatrix& relations, std::size_t ambient_rank) {
  if (relations.rows() != ambient_rank)
    raise(Errc::dimension_mismatch, "cokernel: relation rows != ambient rank");
  SmithOptions opts;
  opts.with_u = false;
  opts.with_v = false;
  SmithForm f = smith_normal_form(relations, opts);
  std::vector<Int> torsion;
  std::size_t nonzero = 0;
  for (const Int& d : f.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) torsion.push_back(d);
  }
  return GroupDecomposition(ambient_rank - nonzero, std::move(torsion));
}

/// Canonical form of an arbitrary-layout group.
inline GroupDecomposition decomposition_of(const AbGroup& g) {
  return cokernel(g.torsion_relation_columns(), g.dim());
}

/// Direct sum in canonical form (the torsion multiset is re-chained).
inline GroupDecomposition direct_sum(const GroupDecomposition& a, const GroupDecomposition& b) {
  std::vector<Int> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag.at(i, i) = orders[i];
  GroupDecomposition t = cokernel(diag, orders.size());
  return GroupDecomposition(a.free_rank() + b.free_rank(), t.torsion());
}

/// Homomorphism of finitely generated abelian groups, stored as an integer
/// matrix in coordinates (target rows, source columns). Construction checks
/// well-definedness: a source coordinate of order d must land on targets
/// annihilated by d. Rows over torsion targets are kept reduced.
class AbHom {
public:
  AbHom(AbGroup source, AbGroup target, IntMatrix matrix)
      : AbHom(std::move(source), std::move(target), std::move(matrix), true) {}

  /// Skips the well-definedness check (deserialization; validation reports
  /// the violation instead of throwing).
  static AbHom unchecked(AbGroup source, AbGroup target, IntMatrix matrix) {
    return AbHom(std::move(source), std::move(target), std::move(matrix), false);
  }

  static AbHom identity(const AbGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.dim()), false);
  }

  static AbHom zero(const AbGroup& source, const AbGroup& target) {
    return AbHom(source, target, IntMatrix(target.dim(), source.dim()), false);
  }

  const AbGroup& source() const { return src_; }
  const AbGroup& target() const { return dst_; }
  const IntMatrix& matrix() const { return m_; }

  bool well_defined() const {
    for (std::size_t j = 0; j < src_.dim(); ++j) {
      const Int& dj = src_.order(j);
      if (dj == 0) continue;
      for (std::size_t i = 0; i < dst_.dim(); ++i) {
        const Int& ei = dst_.order(i);
        if (ei == 0) {
          if (m_.at(i, j) != 0) return false;
        } else if ((dj * m_.at(i, j)) % ei != 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const { return dst_.reduce(m_.apply(v)); }

  bool is_zero() const { return m_.is_zero(); }

  bool operator==(const AbHom& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && m_ == o.m_;
  }
  bool operator!=(const AbHom& o) const { return !(*this == o); }

  friend AbHom compose(const AbHom& g, const AbHom& f) {
    if (f.dst_ != g.src_) raise(Errc::dimension_mismatch, "compose: inner groups differ");
    return AbHom(f.src_, g.dst_, g.m_ * f.m_, false);
  }

  friend AbHom add(const AbHom& f, const AbHom& g) {
    if (f.src_ != g.src_ || f.dst_ != g.dst_)
      raise(Errc::dimension_mismatch, "add: group mismatch");
    return AbHom(f.src_, f.dst_, f.m_ + g.m_, false);
  }

  friend AbHom sub(const AbHom& f, const AbHom& g) {
    if (f.src_ != g.src_ || f.dst_ != g.dst_)
      raise(Errc::dimension_mismatch, "sub: group mismatch");
    return AbHom(f.src_, f.dst_, f.m_ - g.m_, false);
  }

  friend AbHom scalar_mul(const Int& c, const AbHom& f) {
    return AbHom(f.src_, f.dst_, f.m_.scaled(c), false);
  }

private:
  AbHom(AbGroup source, AbGroup target, IntMatrix matrix, bool check)
      : src_(std::move(source)), dst_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != dst_.dim() || m_.cols() != src_.dim())
      raise(Errc::dimension_mismatch, "hom matrix shape mismatch");
    reduce_rows();
    if (check && !well_defined())
      raise(Errc::invalid_argument, "hom not well defined on torsion coordinates");
  }

  void reduce_rows() {
    for (std::size_t i = 0; i < dst_.dim(); ++i) {
      const Int& ei = dst_.order(i);
      if (ei == 0) continue;
      for (std::size_t j = 0; j < src_.dim(); ++j) m_.at(i, j) = mod_floor(m_.at(i, j), ei);
    }
  }

  AbGroup src_, dst_;
  IntMatrix m_;
};

/// Generating set of {a in source | f(a) = 0}, via the lifted integer system
/// which absorbs target torsion through slack columns.
inline std::vector<std::vector<Int>> kernel_basis(const AbHom& f) {
  const std::size_t n = f.source().dim();
  IntMatrix lifted = IntMatrix::hstack(f.matrix(), f.target().torsion_relation_columns());
  IntMatrix ker = kernel_columns(lifted);
  std::vector<std::vector<Int>> gens;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ker.at(i, j);
    v = f.source().reduce(std::move(v));
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; }))
      gens.push_back(std::move(v));
  }
  return gens;
}

/// Subgroup (or subquotient) of an ambient group presented by generator
/// columns and optional extra relators, brought to canonical coordinates.
/// Keeps the change of basis, so elements can be moved between the ambient
/// coordinates and the canonical ones in both directions.
class Presentation {
public:
  Presentation(AbGroup ambient, IntMatrix gens, const std::vector<std::vector<Int>>& relators = {})
      : ambient_(std::move(ambient)), gens_(std::move(gens)) {
    if (gens_.rows() != ambient_.dim())
      raise(Errc::dimension_mismatch, "presentation: generator rows != ambient dim");
    const std::size_t p = gens_.cols();
    identity_gens_ = (gens_ == IntMatrix::identity(ambient_.dim()));

    std::vector<std::vector<Int>> rel_cols;
    if (identity_gens_) {
      IntMatrix t = ambient_.torsion_relation_columns();
      for (std::size_t j = 0; j < t.cols(); ++j) rel_cols.push_back(t.col(j));
    } else {
      IntMatrix lifted = IntMatrix::hstack(gens_, ambient_.torsion_relation_columns());
      solver_.emplace(lifted);
      IntMatrix ker = kernel_columns(lifted);
      for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Int> c(p);
        for (std::size_t i = 0; i < p; ++i) c[i] = ker.at(i, j);
        rel_cols.push_back(std::move(c));
      }
    }
    for (const auto& w : relators) rel_cols.push_back(express(w));

    IntMatrix relmat = IntMatrix::from_columns(p, rel_cols);
    SmithOptions opts;
    opts.with_v = false;
    opts.with_u_inv = true;
    rel_snf_ = smith_normal_form(relmat, opts);

    std::vector<Int> diag = rel_snf_.diagonal();
    std::vector<std::size_t> free_rows, torsion_rows;
    for (std::size_t i = 0; i < p; ++i) {
      Int d = (i < diag.size()) ? diag[i] : Int(0);
      if (d == 0)
        free_rows.push_back(i);
      else if (d >= 2)
        torsion_rows.push_back(i);
    }
    std::vector<Int> torsion;
    for (std::size_t i : torsion_rows) torsion.push_back(diag[i]);
    sel_ = free_rows;
    sel_.insert(sel_.end(), torsion_rows.begin(), torsion_rows.end());
    decomp_ = GroupDecomposition(free_rows.size(), std::move(torsion));
  }

  static Presentation quotient(AbGroup ambient, const std::vector<std::vector<Int>>& relators) {
    IntMatrix id = IntMatrix::identity(ambient.dim());
    return Presentation(std::move(ambient), std::move(id), relators);
  }

  const AbGroup& ambient() const { return ambient_; }
  const IntMatrix& gens() const { return gens_; }
  const GroupDecomposition& decomposition() const { return decomp_; }
  AbGroup group() const { return decomp_.group(); }

  /// Generator-exponent coordinates -> canonical coordinates.
  std::vector<Int> to_canonical(const std::vector<Int>& span_coords) const {
    std::vector<Int> y = rel_snf_.u.apply(span_coords);
    std::vector<Int> out(sel_.size());
    const AbGroup g = group();
    for (std::size_t k = 0; k < sel_.size(); ++k) out[k] = y[sel_[k]];
    return g.reduce(std::move(out));
  }

  /// Canonical coordinates -> one generator-exponent representative.
  std::vector<Int> from_canonical(const std::vector<Int>& canon) const {
    if (canon.size() != sel_.size()) raise(Errc::dimension_mismatch, "from_canonical: length");
    std::vector<Int> y(gens_.cols());
    for (std::size_t k = 0; k < sel_.size(); ++k) y[sel_[k]] = canon[k];
    return rel_snf_.u_inv.apply(y);
  }

  /// Writes an ambient vector as a combination of the generators.
  /// Throws when the vector lies outside the presented subgroup.
  std::vector<Int> express(const std::vector<Int>& ambient_vec) const {
    if (ambient_vec.size() != ambient_.dim())
      raise(Errc::dimension_mismatch, "express: length mismatch");
    if (identity_gens_) return ambient_vec;
    auto z = solver_->solve(ambient_vec);
    if (!z) raise(Errc::invalid_argument, "express: vector outside presented subgroup");
    z->resize(gens_.cols());
    return *z;
  }

  /// Ambient representative of a canonical element.
  std::vector<Int> lift(const std::vector<Int>& canon) const {
    return ambient_.reduce(gens_.apply(from_canonical(canon)));
  }

private:
  AbGroup ambient_;
  IntMatrix gens_;
  bool identity_gens_ = false;
  std::optional<DiophantineSolver> solver_;
  SmithForm rel_snf_;
  std::vector<std::size_t> sel_;
  GroupDecomposition decomp_;
};

/// Hom between presented groups induced by a map of their ambients.
inline AbHom induced_hom(const Presentation& src, const Presentation& dst,
                         const AbHom& ambient_map) {
  if (ambient_map.source() != src.ambient() || ambient_map.target() != dst.ambient())
    raise(Errc::dimension_mismatch, "induced_hom: ambient mismatch");
  const std::size_t n = src.group().dim();
  const std::size_t m = dst.group().dim();
  IntMatrix mat(m, n);
  std::vector<Int> e(n);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = 1;
    std::vector<Int> img = dst.to_canonical(dst.express(ambient_map.apply(src.lift(e))));
    for (std::size_t i = 0; i < m; ++i) mat.at(i, k) = img[i];
    e[k] = 0;
  }
  return AbHom(src.group(), dst.group(), std::move(mat));
}

/// Hom from a presented group into a plain group, induced by an ambient map.
inline AbHom hom_to_ambient(const Presentation& src, const AbHom& ambient_map) {
  if (ambient_map.source() != src.ambient())
    raise(Errc::dimension_mismatch, "hom_to_ambient: ambient mismatch");
  const std::size_t n = src.group().dim();
  IntMatrix mat(ambient_map.target().dim(), n);
  std::vector<Int> e(n);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = 1;
    std::vector<Int> img = ambient_map.apply(src.lift(e));
    for (std::size_t i = 0; i < mat.rows(); ++i) mat.at(i, k) = img[i];
    e[k] = 0;
  }
  return AbHom(src.group(), ambient_map.target(), std::move(mat));
}

/// Canonical form of the subgroup generated by the given ambient vectors.
inline GroupDecomposition subgroup_decomposition(const AbGroup& g,
                                                 const std::vector<std::vector<Int>>& gens) {
  return Presentation(g, IntMatrix::from_columns(g.dim(), gens)).decomposition();
}

/// Canonical form of ker f.
inline GroupDecomposition kernel_decomposition(const AbHom& f) {
  return subgroup_decomposition(f.source(), kernel_basis(f));
}

/// Canonical form of target / im f.
inline GroupDecomposition cokernel_decomposition(const AbHom& f) {
  IntMatrix rel = IntMatrix::hstack(f.matrix(), f.target().torsion_relation_columns());
  return cokernel(rel, f.target().dim());
}

/// Canonical form of ker g / im f. Requires g o f = 0.
inline GroupDecomposition subquotient(const AbHom& g, const AbHom& f) {
  if (f.target() != g.source()) raise(Errc::dimension_mismatch, "subquotient: f.target != g.source");
  if (!compose(g, f).is_zero())
    raise(Errc::composition_not_zero, "subquotient: composition is not zero");
  std::vector<std::vector<Int>> ker = kernel_basis(g);
  std::vector<std::vector<Int>> relators;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j)
    relators.push_back(f.matrix().col(j));
  Presentation pres(g.source(), IntMatrix::from_columns(g.source().dim(), ker), relators);
  return pres.decomposition();
}

inline bool is_isomorphism(const AbHom& f) {
  return kernel_decomposition(f).trivial() && cokernel_decomposition(f).trivial();
}

}  // namespace leech
