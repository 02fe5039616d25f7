#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "delsarte/asymptotic.hpp"
#include "delsarte/quadrature.hpp"
#include "delsarte/rng.hpp"
#include "delsarte/special.hpp"
#include "oracles.hpp"

using namespace delsarte;
using std::numbers::pi;

namespace {

// Oracle: J_0 by its power series in long double, first zero by bisection.
long double j0_series(long double t) {
  long double term = 1, sum = 1;
  const long double z = -t * t / 4;
  for (int k = 1; k < 200; ++k) {
    term *= z / (static_cast<long double>(k) * k);
    sum += term;
  }
  return sum;
}

double j0_zero_oracle() {
  long double lo = 2.0L, hi = 3.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    (j0_series(mid) > 0 ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST(Gamma, MatchesStandardLibrary) {
  for (double x : {0.5, 1.0, 1.5, 2.0, 2.5, 3.25, 5.0, 7.5, 0.3, -0.5}) {
    EXPECT_NEAR(lanczos_gamma(x) / std::tgamma(x), 1.0, 1e-13) << x;
  }
  EXPECT_NEAR(lanczos_gamma(0.5), std::sqrt(pi), 1e-15);
}

TEST(Bessel, HalfIntegerClosedForms) {
  EXPECT_NEAR(bessel_j(0.5, pi), 0.0, 1e-16);
  EXPECT_EQ(bessel_j(-0.5, 0.0), 1.0);
  EXPECT_EQ(bessel_j(1.3, 0.0), 1.0);
  for (double t : {0.1, 1.0, 3.0, 7.0, 15.0, 40.0}) {
    EXPECT_NEAR(bessel_j(-0.5, t), std::cos(t), 1e-15);
    EXPECT_NEAR(bessel_j(0.5, t), std::sin(t) / t, 1e-15);
  }
}

TEST(Bessel, DomainErrors) {
  EXPECT_THROW(bessel_j(-0.6, 1.0), Error);
  EXPECT_THROW(bessel_j(0.0, -1.0), Error);
  try {
    bessel_j(-1.0, 1.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain_error);
  }
}

TEST(Bessel, AgreesWithStandardLibraryAcrossTheSwitch) {
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.5}) {
    for (double t = 0.25; t < 30; t += 0.37) {
      const double ref = std::tgamma(a + 1) * std::pow(2 / t, a) * std::cyl_bessel_j(a, t);
      EXPECT_NEAR(bessel_j(a, t), ref, 1e-13 * std::max(1.0, std::abs(ref))) << a << " " << t;
    }
  }
}

TEST(Bessel, NegativeOrderRecurrence) {
  // a in (-1/2, 0): series and recurrence branches must meet at the switch.
  for (double a : {-0.4, -0.25, -0.1}) {
    const double below = detail::bessel_j_series(a, kBesselSeriesLimit);
    const double above = lanczos_gamma(a + 1) * std::pow(2 / kBesselSeriesLimit, a) *
                         detail::bessel_J_large(a, kBesselSeriesLimit);
    EXPECT_NEAR(below, above, 1e-13);
  }
}

// The classical large-argument form with two correction terms is accurate to
// about 1e-6 at t = 12; the library routine used past the series range is not
// limited by that truncation.
TEST(Bessel, HankelExpansionAccuracy) {
  for (double a : {0.0, 1.0}) {
    const double exact = bessel_j(a, 12.0);
    const double two = bessel_j_hankel_expansion(a, 12.0, 2);
    const double ten = bessel_j_hankel_expansion(a, 12.0, 10);
    EXPECT_LT(std::abs(two - exact), 1e-5);
    EXPECT_GT(std::abs(two - exact), 1e-9);
    EXPECT_LT(std::abs(ten - exact), 1e-9);
  }
  for (double t : {50.0, 200.0}) {
    EXPECT_NEAR(bessel_j_hankel_expansion(0.3, t, 10), bessel_j(0.3, t), 1e-13);
  }
}

TEST(BesselZero, Examples) {
  EXPECT_DOUBLE_EQ(bessel_first_zero(0.5), pi);
  EXPECT_DOUBLE_EQ(bessel_first_zero(-0.5), pi / 2);
  const double q0 = bessel_first_zero(0.0);
  EXPECT_NEAR(q0, 2.404825557695773, 1e-9);
  EXPECT_NEAR(q0, j0_zero_oracle(), 1e-10);
  EXPECT_NEAR(bessel_j(0.0, 2.404825557695773), 0.0, 1e-10);
}

TEST(BesselZero, IncreasingInOrder) {
  double prev = 0;
  for (double a = -0.5; a <= 5.0; a += 0.25) {
    const double q = bessel_first_zero(a);
    EXPECT_GT(q, prev);
    EXPECT_NEAR(bessel_j(a, q), 0.0, 1e-12);
    prev = q;
  }
}

// d/du (u^{2a} j_a(s u)) = 2a u^{2a-1} j_{a-1}(s u).
TEST(BesselProperty, DerivativeIdentity) {
  SplitMix64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double s = rng.uniform(0.1, 5.0);
    const double u = rng.uniform(0.2, 10.0);
    auto F = [&](double v) { return std::pow(v, 2 * a) * bessel_j(a, s * v); };
    const double h = 1e-5;
    const double fd = (F(u + h) - F(u - h)) / (2 * h);
    const double rhs = 2 * a * std::pow(u, 2 * a - 1) * bessel_j(a - 1, s * u);
    // Relative to the size of the terms, so sign changes of j do not blow up.
    const double scale = 2 * a * std::pow(u, 2 * a - 1);
    EXPECT_LE(std::abs(fd - rhs), 1e-6 * std::max(std::abs(rhs), scale)) << a << " " << s << " " << u;
  }
}

TEST(BesselProperty, DerivativeFormula) {
  for (double a : {0.0, 0.7, 2.0}) {
    for (double t : {0.5, 3.0, 14.0}) {
      const double h = 1e-5;
      const double fd = (bessel_j(a, t + h) - bessel_j(a, t - h)) / (2 * h);
      EXPECT_NEAR(bessel_j_derivative(a, t), fd, 1e-8);
    }
  }
}

TEST(Hankel, Coefficients) {
  EXPECT_DOUBLE_EQ(hankel_coefficient(0.3, 0), 1.0);
  EXPECT_NEAR(hankel_coefficient(0.3, 1), (4 * 0.09 - 1) / 8, 1e-16);
  EXPECT_DOUBLE_EQ(hankel_coefficient(0.5, 1), 0.0);
}

TEST(Geometry, BallAndSphere) {
  EXPECT_NEAR(ball_volume(1), 2.0, 1e-14);
  EXPECT_NEAR(ball_volume(2), pi, 1e-14);
  EXPECT_NEAR(ball_volume(3), 4 * pi / 3, 1e-14);
  EXPECT_NEAR(sphere_area(2), 2 * pi, 1e-14);
  EXPECT_NEAR(sphere_area(3), 4 * pi, 1e-14);
}

TEST(Quadrature, NodesMatchGolubWelsch) {
  for (int n : {1, 2, 5, 16, 31}) {
    const GaussRule r = gauss_legendre(n);
    const auto [x, w] = oracle::golub_welsch(n);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(r.nodes[i], x[i], 1e-14);
      EXPECT_NEAR(r.weights[i], w[i], 1e-14);
    }
  }
}

TEST(Quadrature, Integrals) {
  auto q = integrate([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0.0, 40.0);
  EXPECT_NEAR(q.value, 0.1, 1e-13);
  auto c = integrate([](double x) { return std::polar(1.0, 2 * x); }, 0.0, pi);
  EXPECT_LT(std::abs(c.value), 1e-13);
  EXPECT_EQ(integrate([](double) { return 1.0; }, 1.0, 1.0).value, 0.0);
}

TEST(Quadrature, NonConvergenceIsReported) {
  // A jump cannot be resolved by a depth-limited rule with a tiny tolerance.
  QuadratureConfig cfg;
  cfg.max_depth = 3;
  cfg.rel_tol = 1e-15;
  cfg.abs_tol = 1e-15;
  try {
    integrate([](double x) { return x < 0.3 ? 0.0 : 1.0; }, 0.0, 1.0, cfg);
    FAIL() << "expected quadrature-error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::quadrature_error);
  }
}

TEST(Asymptotic, TailIntegralsMatchQuadrature) {
  // int_T^inf u^{-p} e^{i w u} du for a few (p, w), against long quadrature
  // plus a crude remainder that is negligible at this length.
  for (auto [p, w] : {std::pair{1.5, 1.0}, {2.0, -3.0}, {2.5, 0.5}}) {
    const double T = 20;
    const auto series = OscillatorySeries::monomial(1.0, p, w);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    const auto q = integrate([&](double u) { return series.evaluate(u); }, T, 20000.0, cfg);
    const cplx rest = series.tail_integral(20000.0);
    EXPECT_LT(std::abs(series.tail_integral(T) - (q.value + rest)), 1e-10) << p << " " << w;
  }
  const auto flat = OscillatorySeries::monomial(2.0, 3.0, 0.0);
  EXPECT_NEAR(flat.tail_integral(2.0).real(), 2.0 / (2 * 4.0), 1e-15);
}

TEST(Asymptotic, AntiderivativeDifferentiates) {
  const auto g = bessel_j_asymptotic(1.0, 1.0, 6) * bessel_j_asymptotic(1.0, 1.0, 6);
  const auto G = g.truncated(12).tail_antiderivative(12);
  for (double u : {40.0, 80.0}) {
    const double h = 1e-3;
    const cplx dG = (8.0 * (G.evaluate(u + h) - G.evaluate(u - h)) -
                     (G.evaluate(u + 2 * h) - G.evaluate(u - 2 * h))) / (12 * h);
    EXPECT_LT(std::abs(dG + g.truncated(12).evaluate(u)), 1e-11);
    EXPECT_LT(std::abs(G.evaluate(u) - g.truncated(12).tail_integral(u)), 1e-14);
  }
}
