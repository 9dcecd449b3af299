#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leech/int_matrix.hpp"

namespace leech {

/// Which transform matrices smith_normal_form should accumulate.
/// Skipping unneeded ones matters: for an r-by-c input, U is r-by-r and
/// dominates the cost when only the kernel (columns of V) is wanted.
struct SmithOptions {
  bool with_u = true;
  bool with_v = true;
  bool with_u_inv = false;
  bool with_v_inv = false;
};

/// u * input * v = d, with u, v unimodular and d diagonal, nonnegative,
/// each diagonal entry dividing the next. Unrequested transforms are empty.
struct SmithForm {
  IntMatrix d;
  IntMatrix u, v, u_inv, v_inv;
  std::size_t rank = 0;  // number of nonzero diagonal entries

  std::vector<Int> diagonal() const {
    std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
  }
};

namespace detail {

class SmithWorker {
public:
  SmithWorker(IntMatrix a, const SmithOptions& opts) : a_(std::move(a)), opts_(opts) {
    if (opts_.with_u) u_ = IntMatrix::identity(a_.rows());
    if (opts_.with_u_inv) u_inv_ = IntMatrix::identity(a_.rows());
    if (opts_.with_v) v_ = IntMatrix::identity(a_.cols());
    if (opts_.with_v_inv) v_inv_ = IntMatrix::identity(a_.cols());
  }

  SmithForm run() {
    const std::size_t nmin = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
      if (!reduce_pivot(t)) break;
    }
    for (std::size_t t = 0; t < nmin; ++t) {
      if (a_.at(t, t) < 0) negate_row(t);
    }
    SmithForm f;
    f.rank = 0;
    for (std::size_t t = 0; t < nmin; ++t)
      if (a_.at(t, t) != 0) ++f.rank;
    f.d = std::move(a_);
    f.u = std::move(u_);
    f.v = std::move(v_);
    f.u_inv = std::move(u_inv_);
    f.v_inv = std::move(v_inv_);
    return f;
  }

private:
  // Smallest nonzero magnitude in the trailing submatrix, first hit in
  // row-major order on ties, so results are reproducible.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Int& x = a_.at(i, j);
        if (x == 0) continue;
        Int m = abs(x);
        if (!found || m < best) {
          found = true;
          best = std::move(m);
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Clears row and column t and enforces that the pivot divides the rest of
  // the trailing submatrix. Returns false when the submatrix is all zero.
  bool reduce_pivot(std::size_t t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) return false;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_.at(i, t) == 0) continue;
        Int q = a_.at(i, t) / a_.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (a_.at(i, t) != 0) dirty = true;  // remainder smaller than pivot
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_.at(t, j) == 0) continue;
        Int q = a_.at(t, j) / a_.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (a_.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_.at(i, j) % a_.at(t, t) != 0) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) return true;
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(i, j), a_.at(k, j));
    if (opts_.with_u)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(i, j), u_.at(k, j));
    if (opts_.with_u_inv)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_.at(r, i), u_inv_.at(r, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_.at(i, j), a_.at(i, k));
    if (opts_.with_v)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_.at(i, j), v_.at(i, k));
    if (opts_.with_v_inv)
      for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_.at(j, c), v_inv_.at(k, c));
  }

  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const Int& c) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_.at(k, j) != 0) a_.at(i, j) += c * a_.at(k, j);
    if (opts_.with_u)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_.at(k, j) != 0) u_.at(i, j) += c * u_.at(k, j);
    if (opts_.with_u_inv)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r)
        if (u_inv_.at(r, i) != 0) u_inv_.at(r, k) -= c * u_inv_.at(r, i);
  }

  // col_j += c * col_k
  void add_col(std::size_t j, std::size_t k, const Int& c) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_.at(i, k) != 0) a_.at(i, j) += c * a_.at(i, k);
    if (opts_.with_v)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_.at(i, k) != 0) v_.at(i, j) += c * v_.at(i, k);
    if (opts_.with_v_inv)
      for (std::size_t c2 = 0; c2 < v_inv_.cols(); ++c2)
        if (v_inv_.at(j, c2) != 0) v_inv_.at(k, c2) -= c * v_inv_.at(j, c2);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(i, j) = -a_.at(i, j);
    if (opts_.with_u)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(i, j) = -u_.at(i, j);
    if (opts_.with_u_inv)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_.at(r, i) = -u_inv_.at(r, i);
  }

  IntMatrix a_;
  SmithOptions opts_;
  IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace detail

inline SmithForm smith_normal_form(IntMatrix m, const SmithOptions& opts = {}) {
  return detail::SmithWorker(std::move(m), opts).run();
}

/// Basis of the integer kernel lattice {x : m x = 0}, returned as columns.
inline IntMatrix kernel_columns(const IntMatrix& m) {
  SmithOptions opts;
  opts.with_u = false;
  SmithForm f = smith_normal_form(m, opts);
  std::size_t n = m.cols();
  IntMatrix out(n, n - f.rank);
  for (std::size_t j = f.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.at(i, j - f.rank) = f.v.at(i, j);
  return out;
}

/// Solves a x = b over the integers, for many right-hand sides against one
/// factorization. Returns nullopt when no integer solution exists.
class DiophantineSolver {
public:
  explicit DiophantineSolver(IntMatrix a) : rows_(a.rows()), cols_(a.cols()) {
    SmithOptions opts;
    opts.with_u = true;
    opts.with_v = true;
    f_ = smith_normal_form(std::move(a), opts);
  }

  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
    if (b.size() != rows_) raise(Errc::dimension_mismatch, "solve: rhs length mismatch");
    std::vector<Int> ub = f_.u.apply(b);
    std::vector<Int> y(cols_);
    std::size_t nmin = std::min(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i < nmin && f_.d.at(i, i) != 0) {
        if (ub[i] % f_.d.at(i, i) != 0) return std::nullopt;
        y[i] = ub[i] / f_.d.at(i, i);
      } else if (ub[i] != 0) {
        return std::nullopt;
      }
    }
    return f_.v.apply(y);
  }

private:
  std::size_t rows_, cols_;
  SmithForm f_;
};

}  // namespace leech
