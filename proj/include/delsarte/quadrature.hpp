#pragma once

// Gauss-Legendre rules and a panel-adaptive integrator.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "delsarte/error.hpp"

namespace delsarte {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

namespace detail {

// (P_n(x), P_{n-1}(x)) by the three-term recurrence.
inline std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

}  // namespace detail

// Nodes by Newton iteration on P_n from the usual cosine initial guess.
inline GaussRule gauss_legendre(int n) {
  require(n >= 1, ErrorKind::invalid_input, "Gauss rule order must be >= 1");
  GaussRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const auto [pn, pm] = detail::legendre_pair(n, x);
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pn, pm] = detail::legendre_pair(n, x);
    dp = n * (x * pn - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

inline const GaussRule& gauss16() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

template <class F>
auto gauss_panel(const F& f, double a, double b, const GaussRule& rule = gauss16()) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  decltype(f(a)) sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-13;
  double panel_width = 1.0;
  int max_depth = 12;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int evaluations = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

// Gauss sum of |f| on [a, b]; the rounding noise of a panel sum scales with it.
template <class F>
double gauss_panel_abs(const F& f, double a, double b, const GaussRule& rule = gauss16()) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * magnitude(f(mid + half * rule.nodes[i]));
  }
  return sum * std::abs(half);
}

template <class F, class T>
T adapt(const F& f, double a, double b, T whole, double tol, int depth, int max_depth,
        double& err, int& evals) {
  const double m = 0.5 * (a + b);
  const T left = gauss_panel(f, a, m);
  const T right = gauss_panel(f, m, b);
  evals += 32;
  const T refined = left + right;
  const double diff = magnitude(refined - whole);
  if (diff <= tol) {
    err += diff;
    return refined;
  }
  // Differences at the level of rounding noise count as converged.
  const double noise = 1e-13 * gauss_panel_abs(f, a, b);
  evals += 16;
  if (diff <= noise) {
    err += diff;
    return refined;
  }
  if (depth >= max_depth) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "panel [%.6f, %.6f] did not converge: refinements differ by %.3e",
                  a, b, diff);
    fail(ErrorKind::quadrature_error, buf);
  }
  return adapt(f, a, m, left, 0.5 * tol, depth + 1, max_depth, err, evals) +
         adapt(f, m, b, right, 0.5 * tol, depth + 1, max_depth, err, evals);
}

}  // namespace detail

// Integral over [a, b]: fixed-width initial panels, each refined by halving
// until the two-level difference is below its share of the tolerance.
template <class F>
auto integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
  using T = decltype(f(a));
  QuadratureResult<T> res;
  if (b <= a) return res;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / cfg.panel_width)));
  const double h = (b - a) / panels;
  // Absolute tolerance per panel derived from a coarse magnitude estimate.
  std::vector<T> coarse(panels);
  double scale = 0.0;
  for (int i = 0; i < panels; ++i) {
    coarse[i] = gauss_panel(f, a + i * h, a + (i + 1) * h);
    scale += detail::magnitude(coarse[i]);
  }
  res.evaluations = 16 * panels;
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale) / panels;
  for (int i = 0; i < panels; ++i) {
    res.value += detail::adapt(f, a + i * h, a + (i + 1) * h, coarse[i], tol, 0, cfg.max_depth,
                               res.error, res.evaluations);
  }
  return res;
}

}  // namespace delsarte
