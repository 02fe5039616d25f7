#pragma once

// Gamma and normalized Bessel functions.
//
//   j_alpha(t) = Gamma(alpha+1) (2/t)^alpha J_alpha(t),  j_alpha(0) = 1,
//   q_alpha    = first positive zero of j_alpha.

#include <array>
#include <cmath>
#include <numbers>

#include "delsarte/error.hpp"

namespace delsarte {

// Lanczos approximation, g = 7, nine coefficients (the widely published set).
// Relative error below 1e-13 for the half-integer and small real arguments
// used here; reflection handles x < 1/2.
inline double lanczos_gamma(double x) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  x -= 1.0;
  double a = c[0];
  const double t = x + g + 0.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// Past t = 4 the alternating series loses digits to cancellation (1e-12
// relative near t = 12), so the library routine takes over there.
inline constexpr double kBesselSeriesLimit = 4.0;

namespace detail {

// sum_k (-t^2/4)^k / (k! (alpha+1)_k), stopped at relative 1e-16.
inline double bessel_j_series(double alpha, double t) {
  const double z = -0.25 * t * t;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= z / (k * (alpha + k));
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

// Unnormalized J_alpha for alpha >= -1/2 and large t. The standard library
// covers alpha >= 0; (-1/2, 0) goes through J_a = (2(a+1)/t) J_{a+1} - J_{a+2}.
inline double bessel_J_large(double alpha, double t) {
  if (alpha >= 0.0) return std::cyl_bessel_j(alpha, t);
  if (alpha == -0.5) return std::sqrt(2.0 / (std::numbers::pi * t)) * std::cos(t);
  const double j1 = std::cyl_bessel_j(alpha + 1.0, t);
  const double j2 = std::cyl_bessel_j(alpha + 2.0, t);
  return 2.0 * (alpha + 1.0) / t * j1 - j2;
}

}  // namespace detail

inline double bessel_j(double alpha, double t) {
  require(alpha >= -0.5, ErrorKind::domain_error, "normalized Bessel needs alpha >= -1/2");
  require(t >= 0.0 && std::isfinite(t), ErrorKind::domain_error, "Bessel argument must be >= 0");
  if (t == 0.0) return 1.0;
  if (alpha == -0.5) return std::cos(t);
  if (alpha == 0.5) return std::sin(t) / t;
  if (t <= kBesselSeriesLimit) return detail::bessel_j_series(alpha, t);
  return lanczos_gamma(alpha + 1.0) * std::pow(2.0 / t, alpha) * detail::bessel_J_large(alpha, t);
}

// d/dt j_alpha(t) = -t / (2(alpha+1)) j_{alpha+1}(t).
inline double bessel_j_derivative(double alpha, double t) {
  return -t / (2.0 * (alpha + 1.0)) * bessel_j(alpha + 1.0, t);
}

inline double bessel_first_zero(double alpha) {
  require(alpha >= -0.5, ErrorKind::domain_error, "normalized Bessel needs alpha >= -1/2");
  if (alpha == -0.5) return std::numbers::pi / 2;
  if (alpha == 0.5) return std::numbers::pi;
  double lo = 0.0;
  double hi = 0.1;
  while (bessel_j(alpha, hi) > 0.0) {
    lo = hi;
    hi += 0.1;
    require(hi < 1e4, ErrorKind::internal_error, "no Bessel zero found");
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_j(alpha, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Hankel asymptotic coefficients
//   a_n(alpha) = prod_{m=1..n} (4 alpha^2 - (2m-1)^2) / (n! 8^n).
inline double hankel_coefficient(double alpha, int n) {
  double a = 1.0;
  const double mu = 4.0 * alpha * alpha;
  for (int m = 1; m <= n; ++m) a *= (mu - (2.0 * m - 1) * (2.0 * m - 1)) / (m * 8.0);
  return a;
}

// Volume of the unit ball and area of the unit sphere in R^d.
inline double ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / lanczos_gamma(0.5 * d + 1.0);
}

inline double sphere_area(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / lanczos_gamma(0.5 * d);
}

}  // namespace delsarte
