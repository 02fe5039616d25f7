// Short tables of the radial functions in dimensions 1 to 3.

#include <cstdio>

#include "delsarte/delsarte.hpp"

using namespace delsarte;

int main() {
  for (int d = 1; d <= 3; ++d) {
    const YudinFunction y(d);
    const GorbachevFunction h(d);
    std::printf("d = %d: q = %.12f, H(0) = %.9f\n", d, y.zero(), h.at_zero());
    std::printf("     t          Y(t)            H(t)\n");
    for (double t = 0; t <= 12.0001; t += 1.5) std::printf("  %5.2f  %14.9f  %14.9f\n", t, y(t), h(t));
    std::printf("     s          yhat(s)\n");
    for (double s = 0; s <= 2.5001; s += 0.5) std::printf("  %5.2f  %14.9f\n", s, yudin_transform(d, s).value);
  }
  return 0;
}
