#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "leech/abelian.hpp"
#include "leech/cyclic_monoid.hpp"
#include "leech/validation.hpp"

namespace leech {

/// The resolution of the constant module Z by free modules on single
/// generators: even levels sit over r-fold sums of the index, odd levels one
/// step further. Differentials alternate the difference map (odd) and the
/// trace sum (even); a contracting homotopy certifies exactness degreewise.
///
/// Each level at each element is the free abelian group on the two-sided
/// factorizations (u, v) of that element through the level's base point, in
/// lexicographic (u, v) order. Matrices for coinciding targets are merged by
/// adding coefficients.
class FreeResolution {
public:
  explicit FreeResolution(CyclicMonoid monoid) : monoid_(monoid) {}

  const CyclicMonoid& monoid() const { return monoid_; }

  /// Base point of the degree-n generator.
  int generator_pi(int n) const {
    if (n < 0) raise(Errc::invalid_argument, "degree must be nonnegative");
    int base = monoid_.scalar(n / 2, monoid_.index());
    return (n % 2 == 0) ? base : monoid_.add(base, 1);
  }

  /// Factorization pairs (u, v) with u + pi(n) + v = x, lex order.
  const std::vector<std::pair<int, int>>& basis(int n, int x) const {
    return level(n, x).basis;
  }

  AbGroup level_group(int n, int x) const { return AbGroup::free(basis(n, x).size()); }

  /// Boundary map at element x, level n >= 1 to level n-1.
  AbHom differential(int n, int x) const {
    if (n < 1) raise(Errc::invalid_argument, "differential needs degree >= 1");
    const LevelData& src = level(n, x);
    const LevelData& dst = level(n - 1, x);
    const int m = monoid_.index(), q = monoid_.period();
    IntMatrix mat(dst.basis.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
      auto [u, v] = src.basis[j];
      if (n % 2 == 1) {
        mat.at(dst.index_of(monoid_.add(u, 1), v), j) += 1;
        mat.at(dst.index_of(u, monoid_.add(v, 1)), j) -= 1;
      } else {
        for (int t = 0; t < m + q; ++t)
          mat.at(dst.index_of(monoid_.add(u, m + q - t - 1), monoid_.add(t, v)), j) += 1;
        for (int s = 0; s < m; ++s)
          mat.at(dst.index_of(monoid_.add(u, m - s - 1), monoid_.add(s, v)), j) -= 1;
      }
    }
    return AbHom::unchecked(AbGroup::free(src.basis.size()), AbGroup::free(dst.basis.size()),
                            std::move(mat));
  }

  /// Level 0 to Z: every factorization counts once.
  AbHom augmentation(int x) const {
    const LevelData& l0 = level(0, x);
    IntMatrix mat(1, l0.basis.size());
    for (std::size_t j = 0; j < l0.basis.size(); ++j) mat.at(0, j) = 1;
    return AbHom::unchecked(AbGroup::free(l0.basis.size()), AbGroup::free(1), std::move(mat));
  }

  /// Section of the augmentation: the generator of Z(x) goes to (0, x).
  AbHom homotopy_phi(int x) const {
    const LevelData& l0 = level(0, x);
    IntMatrix mat(l0.basis.size(), 1);
    mat.at(l0.index_of(0, x), 0) = 1;
    return AbHom::unchecked(AbGroup::free(1), AbGroup::free(l0.basis.size()), std::move(mat));
  }

  /// Contracting homotopy, level n to level n+1 at element x.
  AbHom homotopy_Phi(int n, int x) const {
    if (n < 0) raise(Errc::invalid_argument, "degree must be nonnegative");
    const LevelData& src = level(n, x);
    const LevelData& dst = level(n + 1, x);
    const int mq = monoid_.size();
    IntMatrix mat(dst.basis.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
      auto [u, v] = src.basis[j];
      if (n % 2 == 1) {
        if (u == mq - 1) mat.at(dst.index_of(0, v), j) += 1;
      } else {
        for (int t = 0; t < u; ++t)
          mat.at(dst.index_of(t, monoid_.add(v, u - t - 1)), j) += 1;
      }
    }
    return AbHom::unchecked(AbGroup::free(src.basis.size()), AbGroup::free(dst.basis.size()),
                            std::move(mat));
  }

  /// Exactness certificate: boundary squares to zero, the homotopy identities
  /// hold on the nose, and kernels equal images under the normal-form check.
  ValidationReport verify_exactness(int max_degree) const {
    ValidationReport report;
    if (max_degree < 1) raise(Errc::invalid_argument, "max_degree must be >= 1");
    for (int x : monoid_.elements()) {
      AbHom eps = augmentation(x);
      AbHom phi = homotopy_phi(x);
      if (!compose(eps, differential(1, x)).is_zero()) report.fail("aug.d=0", x, "");
      if (!cokernel_decomposition(eps).trivial()) report.fail("aug onto", x, "");
      if (compose(eps, phi) != AbHom::identity(AbGroup::free(1))) report.fail("aug.phi=id", x, "");
      AbHom id0 = AbHom::identity(eps.source());
      if (add(compose(phi, eps), compose(differential(1, x), homotopy_Phi(0, x))) != id0)
        report.fail("homotopy@0", x, "");
      for (int n = 1; n <= max_degree; ++n) {
        if (!compose(differential(n, x), differential(n + 1, x)).is_zero())
          report.fail("d.d=0", x, "degree " + std::to_string(n));
        AbHom lhs = add(compose(homotopy_Phi(n - 1, x), differential(n, x)),
                        compose(differential(n + 1, x), homotopy_Phi(n, x)));
        if (lhs != AbHom::identity(AbGroup::free(basis(n, x).size())))
          report.fail("homotopy", x, "degree " + std::to_string(n));
        if (!subquotient(differential(n, x), differential(n + 1, x)).trivial())
          report.fail("ker=im", x, "degree " + std::to_string(n));
      }
      if (!subquotient(eps, differential(1, x)).trivial()) report.fail("ker=im", x, "degree 0");
    }
    return report;
  }

private:
  struct LevelData {
    std::vector<std::pair<int, int>> basis;
    std::map<std::pair<int, int>, std::size_t> index;

    std::size_t index_of(int u, int v) const {
      auto it = index.find({u, v});
      if (it == index.end()) raise(Errc::invalid_argument, "factorization outside basis");
      return it->second;
    }
  };

  const LevelData& level(int n, int x) const {
    if (n < 0 || !monoid_.is_element(x)) raise(Errc::invalid_argument, "bad level request");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = levels_.find({n, x});
    if (it != levels_.end()) return it->second;
    LevelData data;
    const int p = generator_pi(n);
    for (int u = 0; u < monoid_.size(); ++u)
      for (int v = 0; v < monoid_.size(); ++v)
        if (monoid_.add(monoid_.add(u, p), v) == x) {
          data.index[{u, v}] = data.basis.size();
          data.basis.emplace_back(u, v);
        }
    return levels_.emplace(std::make_pair(n, x), std::move(data)).first->second;
  }

  CyclicMonoid monoid_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, LevelData> levels_;
};

}  // namespace leech
