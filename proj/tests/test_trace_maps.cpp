#include <catch2/catch_amalgamated.hpp>

#include "leech/trace_maps.hpp"

using namespace leech;

namespace {

std::vector<CyclicMonoid> small_monoids(int max_size) {
  std::vector<CyclicMonoid> out;
  for (int m = 0; m <= max_size - 1; ++m)
    for (int q = 1; m + q <= max_size; ++q)
      if (m + q >= 2) out.emplace_back(m, q);
  return out;
}

AbHom matrix_power_sum(const AbHom& p, int m, int q) {
  // p^m * (1 + p + ... + p^(q-1))
  AbHom id = AbHom::identity(p.source());
  AbHom power = id;
  AbHom acc = AbHom::zero(p.source(), p.source());
  for (int t = 0; t < q; ++t) {
    acc = add(acc, power);
    power = compose(p, power);
  }
  for (int i = 0; i < m; ++i) acc = compose(p, acc);
  return acc;
}

}  // namespace

TEST_CASE("trace on the constant module is multiplication by the period") {
  for (const CyclicMonoid& mo : small_monoids(7)) {
    LeechModule zl = constant_z(mo, Side::left);
    LeechModule zr = constant_z(mo, Side::right);
    for (int x = 1; x < mo.size(); ++x) {
      REQUIRE(trace_left(zl, x).matrix().at(0, 0) == mo.period());
      REQUIRE(trace_right(zr, x).matrix().at(0, 0) == mo.period());
    }
    for (int x : mo.elements()) {
      REQUIRE(s_left(zl, x).is_zero());
      REQUIRE(s_right(zr, x).is_zero());
    }
  }
}

TEST_CASE("trace rejects the basepoint") {
  LeechModule z = constant_z(CyclicMonoid(2, 9), Side::left);
  REQUIRE_THROWS_AS(trace_left(z, 0), Error);
  try {
    trace_left(z, 0);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::x_must_be_positive);
  }
}

TEST_CASE("ordinary modules collapse the maps to action polynomials") {
  CyclicMonoid mo(2, 4);
  AbGroup z2 = AbGroup::free(2);
  AbHom p(z2, z2, IntMatrix::from_rows({{0, 0}, {1, 0}}));  // nilpotent, index 2
  LeechModule left = from_ordinary(mo, Side::left, z2, p);
  LeechModule right = from_ordinary(mo, Side::right, z2, p);
  AbHom id = AbHom::identity(z2);

  for (int x : mo.elements()) {
    REQUIRE(s_left(left, x) == sub(p, id));
    REQUIRE(s_right(right, x) == sub(id, p));
  }
  AbHom expected = matrix_power_sum(p, mo.index(), mo.period());
  for (int x = 1; x < mo.size(); ++x) {
    REQUIRE(trace_left(left, x) == expected);
    REQUIRE(trace_right(right, x) == expected);
  }
}

TEST_CASE("symmetric modules kill s and factor the trace into scalars") {
  for (const CyclicMonoid& mo : small_monoids(6)) {
    AbGroup g = AbGroup::mixed(1, {4});
    LeechModule sym = from_ordinary(mo, Side::left, g, AbHom::identity(g));
    REQUIRE(sym.is_symmetric());
    const int m = mo.index(), q = mo.period();
    for (int x : mo.elements()) REQUIRE(s_left(sym, x).is_zero());
    for (int x = 1; x < mo.size(); ++x) {
      AbHom lhs = trace_left(sym, x);
      AbHom rhs = scalar_mul(m + q, sym.push(mo.project(m + q - 1), x));
      if (m > 0) rhs = sub(rhs, scalar_mul(m, sym.push(m - 1, x)));
      REQUIRE(lhs == rhs);
    }
  }

  // the scalar form also holds with larger coefficient groups
  CyclicMonoid mo(2, 2);
  LeechModule sym = from_ordinary(mo, Side::left, AbGroup::mixed(2, {6}),
                                  AbHom::identity(AbGroup::mixed(2, {6})));
  const int m = mo.index(), q = mo.period();
  for (int x = 1; x < mo.size(); ++x) {
    AbHom lhs = trace_left(sym, x);
    AbHom rhs = sub(scalar_mul(m + q, sym.push(mo.project(m + q - 1), x)),
                    scalar_mul(m, sym.push(m - 1, x)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("lemma identities hold on the constant module") {
  LeechModule z = constant_z(CyclicMonoid(2, 9), Side::left);
  REQUIRE(lemma_report(z).passed());
  LeechModule zr = constant_z(CyclicMonoid(2, 9), Side::right);
  REQUIRE(lemma_report(zr).passed());
}

TEST_CASE("lemma identities hold on random modules") {
  RandomBounds rb;
  rb.max_free_points = 1;
  rb.max_torsion_coords = 2;
  for (const CyclicMonoid& mo : small_monoids(5))
    for (Side side : {Side::left, Side::right})
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        LeechModule mod = random_module(mo, side, seed, rb);
        ValidationReport rep = lemma_report(mod);
        INFO("monoid (" << mo.index() << "," << mo.period() << ") side " << side_name(side)
                        << " seed " << seed << ": " << rep.summary());
        REQUIRE(rep.passed());
      }
}
