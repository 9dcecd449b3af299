#pragma once

#include "leech/leech_module.hpp"

namespace leech {

/// Difference of the two generating maps at x. Left: group(x) -> group(x+1).
inline AbHom s_left(const LeechModule& a, int x) {
  if (a.side() != Side::left) raise(Errc::wrong_side, "s_left needs a left module");
  return sub(a.push1(x), a.pull1(x));
}

/// Right counterpart: group(x+1) -> group(x).
inline AbHom s_right(const LeechModule& b, int x) {
  if (b.side() != Side::right) raise(Errc::wrong_side, "s_right needs a right module");
  return sub(b.push1(x), b.pull1(x));
}

/// Trace map of a left module at x >= 1: the alternating double sum of
/// translated elements, group(x) -> group(m + x - 1).
inline AbHom trace_left(const LeechModule& a, int x) {
  if (a.side() != Side::left) raise(Errc::wrong_side, "trace_left needs a left module");
  if (x < 1) raise(Errc::x_must_be_positive, "trace map is defined for x >= 1");
  const CyclicMonoid& mo = a.monoid();
  const int m = mo.index(), q = mo.period();
  const int target = mo.project(static_cast<long long>(m) + x - 1);
  AbHom acc = AbHom::zero(a.group(x), a.group(target));
  for (int t = 0; t < m + q; ++t) {
    const int shift = m + q - t - 1;
    acc = add(acc, compose(a.pull(t, mo.add(x, shift)), a.push(shift, x)));
  }
  for (int s = 0; s < m; ++s) {
    const int shift = m - s - 1;
    acc = sub(acc, compose(a.pull(s, mo.add(x, shift)), a.push(shift, x)));
  }
  return acc;
}

/// Trace map of a right module at x >= 1: group(m + x - 1) -> group(x).
inline AbHom trace_right(const LeechModule& b, int x) {
  if (b.side() != Side::right) raise(Errc::wrong_side, "trace_right needs a right module");
  if (x < 1) raise(Errc::x_must_be_positive, "trace map is defined for x >= 1");
  const CyclicMonoid& mo = b.monoid();
  const int m = mo.index(), q = mo.period();
  const int source = mo.project(static_cast<long long>(m) + x - 1);
  AbHom acc = AbHom::zero(b.group(source), b.group(x));
  for (int t = 0; t < m + q; ++t) {
    const int shift = m + q - t - 1;
    acc = add(acc, compose(b.pull(t, x), b.push(shift, mo.add(x, t))));
  }
  for (int t = 0; t < m; ++t) {
    const int shift = m - t - 1;
    acc = sub(acc, compose(b.pull(t, x), b.push(shift, mo.add(x, t))));
  }
  return acc;
}

/// Checks, as exact matrix identities at every applicable element, the
/// commuting squares between the trace map and the generators together with
/// the semiexactness composites T S = 0 and S T = 0.
inline ValidationReport lemma_report(const LeechModule& mod) {
  ValidationReport report;
  const CyclicMonoid& mo = mod.monoid();
  const int m = mo.index();

  auto check = [&](bool ok, const char* name, int x) {
    if (!ok) report.fail(name, x, "");
  };

  if (mod.side() == Side::left) {
    for (int x : mo.elements()) {
      const int x1 = mo.add(x, 1);
      if (x1 >= 1) {
        AbHom t1 = trace_left(mod, x1);
        check(compose(t1, mod.push1(x)) == compose(t1, mod.pull1(x)), "T.push=T.pull", x);
        check(compose(t1, s_left(mod, x)).is_zero(), "T.S=0", x);
      }
      if (x >= 1) {
        AbHom tx = trace_left(mod, x);
        const int tgt = mo.project(static_cast<long long>(m) + x - 1);
        check(compose(s_left(mod, tgt), tx).is_zero(), "S.T=0", x);
        if (x1 >= 1) {
          AbHom t1 = trace_left(mod, x1);
          check(compose(mod.pull1(tgt), tx) == compose(t1, mod.pull1(x)), "pull.T=T.pull", x);
          check(compose(mod.push1(tgt), tx) == compose(t1, mod.push1(x)), "push.T=T.push", x);
        }
      }
    }
  } else {
    for (int x : mo.elements()) {
      const int x1 = mo.add(x, 1);
      if (x1 >= 1) {
        AbHom t1 = trace_right(mod, x1);
        check(compose(mod.push1(x), t1) == compose(mod.pull1(x), t1), "push.T=pull.T", x);
        check(compose(s_right(mod, x), t1).is_zero(), "S.T=0", x);
      }
      if (x >= 1) {
        AbHom tx = trace_right(mod, x);
        const int src = mo.project(static_cast<long long>(m) + x - 1);
        check(compose(tx, s_right(mod, src)).is_zero(), "T.S=0", x);
        if (x1 >= 1) {
          AbHom t1 = trace_right(mod, x1);
          check(compose(tx, mod.pull1(src)) == compose(mod.pull1(x), t1), "T.pull=pull.T", x);
          check(compose(tx, mod.push1(src)) == compose(mod.push1(x), t1), "T.push=push.T", x);
        }
      }
    }
  }
  return report;
}

}  // namespace leech
