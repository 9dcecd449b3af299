// Computes a few tables straight from the library, then re-derives one of
// them through the first-principles complex as a sanity check.

#include <iostream>

#include "leech/leech.hpp"

using namespace leech;

int main() {
  CyclicMonoid mo(2, 9);

  LeechModule z = constant_z(mo, Side::left);
  std::cout << render_table(make_table(z, 8, "Z"), TableFormat::text) << "\n";

  AbGroup z6 = AbGroup::of_orders({6});
  LeechModule triv = from_ordinary(mo, Side::right, z6, AbHom::identity(z6));
  std::cout << render_table(make_table(triv, 6, "Z/6 (trivial action)"), TableFormat::text)
            << "\n";

  LeechModule rnd = random_module(CyclicMonoid(1, 2), Side::left, 42);
  std::cout << render_table(make_table(rnd, 6, "seed 42"), TableFormat::text);
  std::cout << "independent route: " << (oracle_check(rnd, 5).passed() ? "agrees" : "DISAGREES")
            << "\n";
  return 0;
}
