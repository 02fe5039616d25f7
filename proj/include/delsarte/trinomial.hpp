#pragma once

// Nonnegative cosine trinomials T(t) = 1 + a cos t + b cos 4t, the critical
// family h_z, and the one-dimensional lower-bound construction built from
// the optimal one.
//
//   a(z) = 4 sin 4z / d(z),  b(z) = sin z / d(z),
//   d(z) = 4 cos z sin 4z - cos 4z sin z,  z in [0, pi/4].
//
// Fourier convention for the construction: f^(t) = int f(x) e^{-ixt} dx, so
// the triangle (1 - |x|)_+ has transform (sin(t/2) / (t/2))^2.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "delsarte/density.hpp"
#include "delsarte/error.hpp"
#include "delsarte/extremal.hpp"
#include "delsarte/group.hpp"

namespace delsarte {

struct Trinomial {
  double a = 0.0;
  double b = 0.0;

  double operator()(double t) const { return 1.0 + a * std::cos(t) + b * std::cos(4.0 * t); }
  double value() const { return 1.0 + a + b; }
};

inline constexpr double kTrinomialTol = 1e-9;
inline constexpr double kQuarterPi = std::numbers::pi / 4;

inline double critical_denominator(double z) {
  return 4.0 * std::cos(z) * std::sin(4.0 * z) - std::cos(4.0 * z) * std::sin(z);
}

inline Trinomial critical_coeffs(double z) {
  require(z >= 0.0 && z <= kQuarterPi, ErrorKind::domain_error, "z must lie in [0, pi/4]");
  // Limits as z -> 0: d ~ 15 z, 4 sin 4z ~ 16 z, sin z ~ z.
  if (z == 0.0) return {16.0 / 15.0, 1.0 / 15.0};
  const double d = critical_denominator(z);
  if (std::abs(d) <= 1e-12) {
    fail(ErrorKind::singular_point, "d(z) vanishes at z = " + std::to_string(z));
  }
  return {4.0 * std::sin(4.0 * z) / d, std::sin(z) / d};
}

struct NonnegReport {
  bool pass = false;
  double min_value = 0.0;
  double argmin = 0.0;
};

// Grid minimum on [0, pi], then ternary search on the bracket around it.
inline NonnegReport is_nonneg(const Trinomial& T, int grid_size = 4096) {
  require(grid_size >= 1000, ErrorKind::invalid_input, "grid_size must be >= 1000");
  const double h = std::numbers::pi / grid_size;
  int best = 0;
  double best_v = T(0.0);
  for (int i = 1; i <= grid_size; ++i) {
    const double v = T(i * h);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1) * h);
  double hi = std::min(std::numbers::pi, (best + 1) * h);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double m1 = lo + (hi - lo) / 3;
    const double m2 = hi - (hi - lo) / 3;
    if (T(m1) < T(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  NonnegReport rep;
  const double t = 0.5 * (lo + hi);
  rep.min_value = std::min(best_v, T(t));
  rep.argmin = T(t) <= best_v ? t : best * h;
  rep.pass = rep.min_value >= -kTrinomialTol;
  return rep;
}

struct TrinomialOptimum {
  double z_star = 0.0;
  double value = 0.0;
  Trinomial coeffs;
  NonnegReport nonneg;
};

// Maximizes 1 + a(z) + b(z): grid scan of [0, pi/4], then golden section on
// the bracket around the best grid point until it is shorter than 1e-10.
inline TrinomialOptimum optimize_trinomial(int grid = 1000) {
  auto objective = [](double z) { return critical_coeffs(z).value(); };
  const double h = kQuarterPi / grid;
  int best = 0;
  double best_v = objective(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = objective(i * h);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1) * h);
  double hi = std::min(kQuarterPi, (best + 1) * h);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = objective(x1);
    }
  }
  TrinomialOptimum out;
  out.z_star = 0.5 * (lo + hi);
  out.coeffs = critical_coeffs(out.z_star);
  out.value = out.coeffs.value();
  if (best_v > out.value) {
    // Grid endpoint beat the interior refinement.
    out.z_star = best * h;
    out.coeffs = critical_coeffs(out.z_star);
    out.value = out.coeffs.value();
  }
  out.nonneg = is_nonneg(out.coeffs);
  require(out.nonneg.pass, ErrorKind::internal_error, "optimal trinomial is not nonnegative");
  return out;
}

// ---------------------------------------------------------------------------
// Phi = Delta * mu with Delta(x) = (1 - |x|)_+ and
// mu = delta_0 + (a/2)(delta_1 + delta_-1) + (b/2)(delta_4 + delta_-4).

struct Atom {
  double at;
  double mass;
};

inline std::array<Atom, 5> example51_atoms(const Trinomial& T) {
  return {{{0.0, 1.0}, {1.0, T.a / 2}, {-1.0, T.a / 2}, {4.0, T.b / 2}, {-4.0, T.b / 2}}};
}

inline double triangle(double x) { return std::max(0.0, 1.0 - std::abs(x)); }

inline double example51_phi(const Trinomial& T, double x) {
  double v = 0.0;
  for (const auto& atom : example51_atoms(T)) v += atom.mass * triangle(x - atom.at);
  return v;
}

// Closed-form transform (1 + a cos t + b cos 4t)(sin(t/2) / (t/2))^2.
inline double example51_phi_hat(const Trinomial& T, double t) {
  const double h = 0.5 * t;
  const double sinc = h == 0.0 ? 1.0 : std::sin(h) / h;
  return T(t) * sinc * sinc;
}

// Closure of Q = {-4} u (-1,1) u {4} + (-1,1), i.e. [-5,-3] u [-2,2] u [3,5].
inline bool in_q_closure(double x) {
  const double y = std::abs(x);
  return y <= 2.0 || (y >= 3.0 && y <= 5.0);
}

struct ConstructionCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
};

struct Example51Report {
  Trinomial coeffs;
  double z_star = 0.0;
  double bound = 0.0;
  std::vector<ConstructionCheck> checks;
  std::vector<double> grid;
  std::vector<double> phi;
  bool pass = false;
};

inline Example51Report example51_lower_bound(double step = 1e-3) {
  const TrinomialOptimum opt = optimize_trinomial();
  Example51Report rep;
  rep.coeffs = opt.coeffs;
  rep.z_star = opt.z_star;
  const Trinomial& T = opt.coeffs;

  const int n = static_cast<int>(std::lround(12.0 / step));
  double min_phi = INFINITY;
  double outside = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = -6.0 + i * step;
    const double v = example51_phi(T, x);
    rep.grid.push_back(x);
    rep.phi.push_back(v);
    min_phi = std::min(min_phi, v);
    if (!in_q_closure(x)) outside = std::max(outside, std::abs(v));
  }
  double min_hat = INFINITY;
  for (int i = 0; i <= 100000; ++i) min_hat = std::min(min_hat, example51_phi_hat(T, i * 1e-3));

  const double at_zero = example51_phi(T, 0.0);
  // int Phi = (total mass of mu) * int Delta = 1 + a + b.
  double integral = 0.0;
  for (const auto& atom : example51_atoms(T)) integral += atom.mass;

  rep.checks = {
      {"phi_at_zero_is_one", at_zero == 1.0, at_zero},
      {"phi_nonnegative", min_phi >= 0.0, min_phi},
      {"phi_supported_in_q", outside == 0.0, outside},
      {"phi_hat_nonnegative", min_hat >= -kTrinomialTol, min_hat},
      {"integral_matches", std::abs(integral - T.value()) <= 1e-14, integral},
  };
  rep.bound = integral;
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const ConstructionCheck& c) { return c.pass; });
  for (const auto& c : rep.checks) {
    if (!c.pass) fail(ErrorKind::construction_error, "check " + c.name + " failed");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// W = (-2, 2) is the difference set of M = (-1, 1), which tiles R with 2Z.
// Discretized on Z_n with step h: M_h = {0..m-1}, m h = 2, translates mZ_n.

struct DiscreteTileCase {
  double h = 0.0;
  int n = 0;
  int m = 0;
  double lp_value = 0.0;
  double tile_value = 0.0;
  bool pass = false;
};

struct Example51Comparison {
  std::vector<DiscreteTileCase> cases;
  double lower_bound = 0.0;
  bool bound_exceeds_two = false;
  Rational q_density;
  Rational w_density;
  bool density_pass = false;
  bool pass = false;
};

inline DiscreteTileCase discrete_tile_case(double h, int n) {
  DiscreteTileCase c;
  c.h = h;
  c.n = n;
  c.m = static_cast<int>(std::lround(2.0 / h));
  require(c.m >= 1 && n % c.m == 0, ErrorKind::invalid_input, "n must be a multiple of 2/h");
  const Group g = Group::cyclic(n, Measure::with_weight(h));
  const Subset w = Subset::interval(g, -(c.m - 1), c.m - 1);
  c.lp_value = delsarte_constant(g, SymSet::checked(w)).value;
  Subset lambda(g);
  for (int x = 0; x < n; x += c.m) lambda.insert(x);
  const TileReport tile =
      verify_tile_theorem(g, Subset::interval(g, 0, c.m - 1), lambda, SymSet::full(g));
  c.tile_value = tile.rhs;
  c.pass = std::abs(c.lp_value - 2.0) <= kTheoremTol && tile.pass;
  return c;
}

inline Example51Comparison example51_comparison() {
  Example51Comparison rep;
  for (auto [h, n] : {std::pair{0.5, 8}, {0.5, 16}, {0.25, 16}, {0.25, 32}}) {
    rep.cases.push_back(discrete_tile_case(h, n));
  }
  rep.lower_bound = example51_lower_bound().bound;
  rep.bound_exceeds_two = rep.lower_bound > 2.0;
  const std::array<std::int64_t, 2> forbidden = {1, 4};
  rep.q_density = max_density_search(forbidden, 10).density;
  rep.w_density = Rational(1, 2);
  rep.density_pass = rep.q_density == Rational(2, 5) && rep.q_density < rep.w_density;
  rep.pass = rep.bound_exceeds_two && rep.density_pass &&
             std::all_of(rep.cases.begin(), rep.cases.end(),
                         [](const DiscreteTileCase& c) { return c.pass; });
  return rep;
}

}  // namespace delsarte
