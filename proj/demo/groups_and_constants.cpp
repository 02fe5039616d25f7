// Extremal constants on a few small groups, and the packing bound they obey.

#include <cstdio>

#include "delsarte/delsarte.hpp"

using namespace delsarte;

int main() {
  // Z_6 with Omega+ = {-1, 0, 1}: the three constants side by side.
  const Group z6 = Group::cyclic(6);
  const SymSet near = SymSet::checked(Subset::interval(z6, -1, 1));
  std::printf("Z_6, Omega = [-1,1]\n");
  std::printf("  Turan     %.12f\n", turan(z6, near).value);
  std::printf("  Delsarte  %.12f\n", delsarte_constant(z6, near).value);
  std::printf("  two-set   %.12f  (Omega- = G)\n",
              two_set_constant(z6, near, SymSet::full(z6)).value);

  // Lambda = 3 Z_12 packs [-2, 2]: D <= 1/#Lambda, with equality here.
  const Group z12 = Group::cyclic(12);
  const SymSet plus = SymSet::checked(Subset::interval(z12, -2, 2));
  const Subset lambda = Subset::residues(z12, {0, 3, 6, 9});
  const MainReport m = verify_main_theorem(z12, plus, lambda);
  std::printf("Z_12, Omega+ = [-2,2], Lambda = 3Z_12\n");
  std::printf("  D = %.12f  bound = %.12f  tight = %s\n", m.delsarte, m.bound, m.tight ? "yes" : "no");

  // H = {0, 1} tiles Z_8 with 2 Z_8, so C(H - H, Omega-) = |H| / 8.
  const Group z8 = Group::cyclic(8);
  const TileReport t = verify_tile_theorem(z8, Subset::interval(z8, 0, 1),
                                           Subset::residues(z8, {0, 2, 4, 6}), SymSet::empty(z8));
  std::printf("Z_8, H = {0,1}: C = %.12f, m(H) = %.12f\n", t.lhs, t.rhs);

  // Z_4 x Z_2 under counting measure.
  const Group g = Group({4, 2}, Measure::counting());
  const Subset s = Subset::of(g, {g.index_of({0, 0}), g.index_of({1, 0}), g.index_of({3, 0})});
  std::printf("Z_4 x Z_2 (counting), Omega = {(0,0), (+-1,0)}: T = %.12f\n",
              turan(g, SymSet::checked(s)).value);
  return 0;
}
