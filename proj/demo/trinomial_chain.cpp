// The trinomial bound on the line: optimize, build Phi, compare with the
// integer discretizations and the density of the forbidden-difference set.

#include <cstdio>

#include "delsarte/delsarte.hpp"

using namespace delsarte;

int main() {
  const TrinomialOptimum o = optimize_trinomial();
  std::printf("T(t) = 1 + a cos t + b cos 4t, a = %.9f, b = %.9f\n", o.coeffs.a, o.coeffs.b);
  std::printf("z* = %.9f, 1 + a + b = %.10f, min T = %.2e\n", o.z_star, o.value, o.nonneg.min_value);

  const Example51Report r = example51_lower_bound();
  for (const auto& c : r.checks) std::printf("  %-22s %s  %.3e\n", c.name.c_str(), c.pass ? "ok" : "FAILED", c.value);
  std::printf("lower bound %.10f\n", r.bound);

  const Example51Comparison c = example51_comparison();
  for (const auto& k : c.cases) {
    std::printf("  h = %.2f on Z_%d: LP %.10f, tile %.1f\n", k.h, k.n, k.lp_value, k.tile_value);
  }
  std::printf("densest periodic set avoiding differences {1, 4}: %s (the half-step set has %s)\n",
              c.q_density.str().c_str(), c.w_density.str().c_str());
  return c.pass && r.pass ? 0 : 1;
}
