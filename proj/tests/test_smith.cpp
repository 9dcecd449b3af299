#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "leech/smith.hpp"

using namespace leech;

namespace {

// Laplace expansion; fine at test sizes.
Int det(const IntMatrix& m) {
  REQUIRE(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Independent route to the invariant factors: d_k = D_k / D_{k-1} where D_k
// is the gcd of all k-by-k minors (D_0 = 1). Valid for any integer matrix.
std::vector<Int> factors_by_minors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Int> dks{1};  // D_0
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> rows = [&](std::size_t pos, std::size_t start) {
      if (pos == k) {
        std::function<void(std::size_t, std::size_t)> cols = [&](std::size_t cp,
                                                                 std::size_t cstart) {
          if (cp == k) {
            IntMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
              for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
            g = gcd(g, det(sub));
            return;
          }
          for (std::size_t c = cstart; c < m.cols(); ++c) {
            ci[cp] = c;
            cols(cp + 1, c + 1);
          }
        };
        cols(0, 0);
        return;
      }
      for (std::size_t r = start; r < m.rows(); ++r) {
        ri[pos] = r;
        rows(pos + 1, r + 1);
      }
    };
    rows(0, 0);
    dks.push_back(abs(g));
  }
  std::vector<Int> out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (dks[k] == 0) {
      out[k - 1] = 0;  // all deeper minors vanish as well
    } else {
      out[k - 1] = dks[k] / dks[k - 1];
    }
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span = 9) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<int>(rng() % (2 * span + 1)) - span;
  return m;
}

void check_smith(const IntMatrix& m) {
  SmithOptions opts;
  opts.with_u_inv = true;
  opts.with_v_inv = true;
  SmithForm f = smith_normal_form(m, opts);
  REQUIRE(f.u * m * f.v == f.d);
  REQUIRE(abs(det(f.u)) == 1);
  REQUIRE(abs(det(f.v)) == 1);
  REQUIRE(f.u * f.u_inv == IntMatrix::identity(m.rows()));
  REQUIRE(f.v * f.v_inv == IntMatrix::identity(m.cols()));
  std::vector<Int> diag = f.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    REQUIRE(diag[i] >= 0);
    if (i > 0 && diag[i - 1] != 0) REQUIRE(diag[i] % diag[i - 1] == 0);
    if (i > 0 && diag[i - 1] == 0) REQUIRE(diag[i] == 0);
  }
  for (std::size_t i = 0; i < f.d.rows(); ++i)
    for (std::size_t j = 0; j < f.d.cols(); ++j)
      if (i != j) REQUIRE(f.d.at(i, j) == 0);
  REQUIRE(diag == factors_by_minors(m));
}

}  // namespace

TEST_CASE("identity input stays diagonal with unit factors") {
  SmithForm f = smith_normal_form(IntMatrix::identity(2));
  REQUIRE(f.d == IntMatrix::identity(2));
  REQUIRE(f.diagonal() == std::vector<Int>{1, 1});
}

TEST_CASE("two-by-two worked example") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  // the minor route pins the expected factors before the main routine runs
  REQUIRE(factors_by_minors(m) == std::vector<Int>{2, 4});
  SmithForm f = smith_normal_form(m);
  REQUIRE(f.diagonal() == std::vector<Int>{2, 4});
  REQUIRE(f.u * m * f.v == f.d);
}

TEST_CASE("zero matrix") {
  IntMatrix m(3, 2);
  SmithForm f = smith_normal_form(m);
  REQUIRE(f.d.is_zero());
  REQUIRE(f.rank == 0);
}

TEST_CASE("smith invariants on random matrices") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 60; ++it) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    check_smith(random_matrix(rng, r, c));
  }
  // low-rank inputs: products of thin factors
  for (int it = 0; it < 20; ++it) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 4, 2, 4);
    IntMatrix b = random_matrix(rng, 2, 1 + rng() % 4, 4);
    check_smith(a * b);
  }
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(3, 0));
  check_smith(IntMatrix(0, 0));
}

TEST_CASE("intermediate entry growth stays exact") {
  // wider entries force multi-limb intermediates during elimination
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 8; ++it) {
    IntMatrix m = random_matrix(rng, 5, 5, 5000);
    SmithForm f = smith_normal_form(m);
    REQUIRE(f.u * m * f.v == f.d);
    Int dm = abs(det(m));
    Int dd = 1;
    for (const Int& d : f.diagonal()) dd *= d;
    REQUIRE(dd == dm);  // product of factors carries the determinant
  }
  // worst-case-style matrix with a huge determinant
  IntMatrix big(4, 4);
  Int v = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      v = v * 37 + 101;
      big.at(i, j) = v * ((i + j) % 2 ? 1 : -1);
    }
  SmithForm f = smith_normal_form(big);
  REQUIRE(f.u * big * f.v == f.d);
  REQUIRE(f.diagonal() == factors_by_minors(big));
}

TEST_CASE("smith output is deterministic") {
  std::mt19937_64 rng(99);
  IntMatrix m = random_matrix(rng, 4, 4);
  SmithForm a = smith_normal_form(m);
  SmithForm b = smith_normal_form(m);
  REQUIRE(a.d == b.d);
  REQUIRE(a.u == b.u);
  REQUIRE(a.v == b.v);
}

TEST_CASE("kernel columns span the kernel lattice") {
  std::mt19937_64 rng(777);
  for (int it = 0; it < 40; ++it) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, 5);
    IntMatrix k = kernel_columns(m);
    REQUIRE((m * k).is_zero());
    SmithOptions o;
    o.with_u = false;
    o.with_v = false;
    REQUIRE(k.cols() == m.cols() - smith_normal_form(m, o).rank);
    if (k.cols() > 0) REQUIRE(smith_normal_form(k, o).rank == k.cols());
  }
}

TEST_CASE("diophantine solve") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3, 5);
    DiophantineSolver solver(m);
    std::vector<Int> y(m.cols());
    for (auto& v : y) v = static_cast<int>(rng() % 7) - 3;
    std::vector<Int> b = m.apply(y);
    auto x = solver.solve(b);
    REQUIRE(x.has_value());
    REQUIRE(m.apply(*x) == b);
  }
  DiophantineSolver doubler(IntMatrix::from_rows({{2}}));
  REQUIRE_FALSE(doubler.solve({Int(1)}).has_value());
  REQUIRE(doubler.solve({Int(6)}).value() == std::vector<Int>{3});
}
