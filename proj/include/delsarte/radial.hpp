#pragma once

// Radial functions on R^d: the Yudin function, Hankel transforms, the
// Gorbachev function H and the ball/sphere Fourier transforms.
//
// Conventions:
//   (H_alpha F)(s) = 1/(2^alpha Gamma(alpha+1)) int_0^inf F(u) j_alpha(su) u^{2alpha+1} du,
//   f^(xi) = int f(x) e^{-i<xi,x>} dx = (2 pi)^{d/2} (H_{d/2-1} F)(|xi|) for f(x) = F(|x|).
//
// Integrals to infinity are split at T = max(T_max, 40/s): Gauss-Legendre
// panels on [0, T], and the exact integral of an asymptotic model beyond T.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "delsarte/asymptotic.hpp"
#include "delsarte/error.hpp"
#include "delsarte/quadrature.hpp"
#include "delsarte/special.hpp"

namespace delsarte {

struct HankelConfig {
  double t_max = 60.0;
  double min_tail_argument = 40.0;  // s * T at the split point
  double max_radius = 4000.0;
  int series_order = 10;
  QuadratureConfig quad{};
};

// The radial specification: dimension, evaluation grid and quadrature.
struct RadialSpec {
  int d = 1;
  std::vector<double> grid;
  HankelConfig config{};

  void validate() const {
    require(d >= 1, ErrorKind::invalid_input, "dimension must be >= 1");
    require(config.t_max > 0.0, ErrorKind::invalid_input, "T_max must be positive");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      require(grid[i] >= 0.0, ErrorKind::invalid_input, "grid points must be >= 0");
      require(i == 0 || grid[i] >= grid[i - 1], ErrorKind::invalid_input, "grid must be sorted");
    }
  }
};

inline std::vector<double> uniform_grid(double lo, double hi, double step) {
  require(step > 0.0 && hi >= lo, ErrorKind::invalid_input, "bad grid range");
  std::vector<double> g;
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  for (long long i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

// ---------------------------------------------------------------------------
// Yudin function Y_d(t) = j_a(t)^2 / (1 - t^2/q^2), a = d/2 - 1, q = q_a.

class YudinFunction {
 public:
  explicit YudinFunction(int d) : d_(d) {
    require(d >= 1, ErrorKind::domain_error, "Yudin function needs d >= 1");
    alpha_ = 0.5 * d - 1.0;
    q_ = bessel_first_zero(alpha_);
    dj_ = bessel_j_derivative(alpha_, q_);
  }

  int dimension() const { return d_; }
  double alpha() const { return alpha_; }
  double zero() const { return q_; }

  double operator()(double t) const {
    require(t >= 0.0, ErrorKind::domain_error, "Yudin function needs t >= 0");
    const double delta = t - q_;
    if (std::abs(delta) < 1e-4 * q_) {
      // Taylor expansion of j about its zero, with j'' and j''' read off the
      // Bessel ODE j'' + (2a+1)/t j' + j = 0; Y = -q^2 j^2 / ((t-q)(t+q)).
      const double b = 2.0 * alpha_ + 1.0;
      const double lin = dj_ * (1.0 - b * delta / (2.0 * q_) +
                                (b * (b + 1.0) / (q_ * q_) - 1.0) * delta * delta / 6.0);
      return -q_ * q_ * lin * lin * delta / (t + q_);
    }
    const double j = bessel_j(alpha_, t);
    return j * j / (1.0 - t * t / (q_ * q_));
  }

  // Large-t model: -q^2 j^2 u^{-2} sum_m (q/u)^{2m}.
  OscillatorySeries asymptotic(int order) const {
    const OscillatorySeries j = bessel_j_asymptotic(alpha_, 1.0, order);
    OscillatorySeries geom;
    for (int m = 0; 2 * m <= order; ++m) {
      geom += OscillatorySeries::monomial(std::pow(q_, 2.0 * m), 2.0 * m, 0.0);
    }
    const double p_max = 2.0 * alpha_ + 1.0 + 2.0 + order;
    return ((j * j).truncated(p_max) * geom).truncated(p_max).scaled(-q_ * q_).times_power(2.0);
  }

 private:
  int d_;
  double alpha_;
  double q_;
  double dj_;
};

inline double yudin_Y(int d, double t) { return YudinFunction(d)(t); }

struct SignReport {
  double max_violation = 0.0;
  double worst_t = 0.0;
  int points = 0;
  bool pass = true;
};

// Y_d >= 0 on [0, q] and <= 0 beyond.
inline SignReport yudin_sign_check(int d, std::span<const double> grid, double tol = 1e-9) {
  const YudinFunction y(d);
  SignReport rep;
  for (double t : grid) {
    const double v = y(t);
    const double violation = t <= y.zero() ? -v : v;
    if (violation > rep.max_violation) {
      rep.max_violation = violation;
      rep.worst_t = t;
    }
    ++rep.points;
  }
  rep.pass = rep.max_violation <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Hankel transform

struct HankelResult {
  double value = 0.0;
  double quadrature_error = 0.0;  // sum of last refinement differences
  double tail = 0.0;              // contribution beyond the split point
  double tail_error = 0.0;        // size of the highest-order tail terms kept
  double split = 0.0;             // T
};

struct RadialProfile {
  std::function<double(double)> f;
  // Beyond `support` the profile vanishes (finite support) or follows
  // `asymptotic` (infinite support).
  double support = std::numeric_limits<double>::infinity();
  std::function<OscillatorySeries(int)> asymptotic;
};

inline double hankel_normalization(double alpha) {
  return 1.0 / (std::pow(2.0, alpha) * lanczos_gamma(alpha + 1.0));
}

inline HankelResult hankel_transform(const RadialProfile& F, double alpha, double s,
                                     const HankelConfig& cfg = {}) {
  require(alpha >= -0.5, ErrorKind::domain_error, "Hankel order must be >= -1/2");
  require(s >= 0.0, ErrorKind::domain_error, "Hankel transform needs s >= 0");
  const double c = hankel_normalization(alpha);
  const double w = 2.0 * alpha + 1.0;
  auto integrand = [&](double u) { return F.f(u) * bessel_j(alpha, s * u) * std::pow(u, w); };
  HankelResult res;

  if (std::isfinite(F.support)) {
    const auto q = integrate(integrand, 0.0, F.support, cfg.quad);
    res.value = c * q.value;
    res.quadrature_error = c * q.error;
    res.split = F.support;
    return res;
  }
  require(static_cast<bool>(F.asymptotic), ErrorKind::invalid_input,
          "infinite-support profile needs an asymptotic model");
  double T = cfg.t_max;
  if (s > 0.0) T = std::max(T, cfg.min_tail_argument / s);
  if (T > cfg.max_radius) {
    fail(ErrorKind::quadrature_error,
         "s = " + std::to_string(s) + " needs a split radius " + std::to_string(T) +
             " beyond the configured maximum " + std::to_string(cfg.max_radius));
  }
  res.split = T;
  const auto q = integrate(integrand, 0.0, T, cfg.quad);

  const OscillatorySeries model = F.asymptotic(cfg.series_order);
  const OscillatorySeries kernel = s > 0.0 ? bessel_j_asymptotic(alpha, s, cfg.series_order)
                                           : OscillatorySeries::constant(1.0);
  const double p_lead = model.leading_power() + kernel.leading_power() - w;
  const OscillatorySeries tail = (model * kernel).times_power(-w);
  const OscillatorySeries kept = tail.truncated(p_lead + cfg.series_order);
  const double tail_value = kept.tail_integral(T).real();
  // Truncation estimate: magnitude of the two highest orders kept.
  double highest = 0.0;
  for (const auto& t : kept.terms()) {
    if (t.p > p_lead + cfg.series_order - 2 + 1e-12) highest += std::abs(t.c) * std::pow(T, 1.0 - t.p);
  }
  res.tail = c * tail_value;
  res.tail_error = c * highest;
  res.value = c * (q.value + tail_value);
  res.quadrature_error = c * q.error;
  return res;
}

// Fourier transform of x -> F(|x|) on R^d.
inline HankelResult radial_fourier(const RadialProfile& F, int d, double s,
                                   const HankelConfig& cfg = {}) {
  HankelResult r = hankel_transform(F, 0.5 * d - 1.0, s, cfg);
  const double k = std::pow(2.0 * std::numbers::pi, 0.5 * d);
  r.value *= k;
  r.quadrature_error *= k;
  r.tail *= k;
  r.tail_error *= k;
  return r;
}

inline RadialProfile yudin_profile(const YudinFunction& y) {
  return {[y](double t) { return y(t); }, std::numeric_limits<double>::infinity(),
          [y](int order) { return y.asymptotic(order); }};
}

// y_d^ = Fourier transform of Y_d(|x|) on R^d.
inline HankelResult yudin_transform(int d, double s, const HankelConfig& cfg = {}) {
  return radial_fourier(yudin_profile(YudinFunction(d)), d, s, cfg);
}

// Indicator of the unit ball: chi_B^(x) = |B| j_{d/2}(|x|).
inline double ball_char_transform(int d, double x) {
  require(d >= 1, ErrorKind::domain_error, "dimension must be >= 1");
  require(x >= 0.0, ErrorKind::domain_error, "radius must be >= 0");
  return ball_volume(d) * bessel_j(0.5 * d, x);
}

// Surface measure of the unit sphere: nu^(s) = |S^{d-1}| j_{d/2-1}(|s|).
inline double sphere_transform(int d, double s) {
  require(d >= 2, ErrorKind::domain_error, "sphere transform needs d >= 2");
  require(s >= 0.0, ErrorKind::domain_error, "radius must be >= 0");
  return sphere_area(d) * bessel_j(0.5 * d - 1.0, s);
}

// ---------------------------------------------------------------------------
// Gorbachev function H(t) = int_t^inf s Y_{d+2}(s) ds and its scaling
// h(x) = H(q_{d/2} |x|) / H(0).

class GorbachevFunction {
 public:
  static constexpr double kPanel = 0.25;

  explicit GorbachevFunction(int d, const HankelConfig& cfg = {})
      : d_(d), cfg_(cfg), y_(d + 2) {
    require(d >= 1, ErrorKind::domain_error, "Gorbachev function needs d >= 1");
    const int panels = static_cast<int>(std::ceil(cfg_.t_max / kPanel));
    t_end_ = panels * kPanel;
    tail_series_ = y_.asymptotic(cfg_.series_order).times_power(-1.0);
    tail_at_end_ = tail_series_.tail_integral(t_end_).real();
    cumulative_.assign(panels + 1, 0.0);
    auto g = [this](double s) { return s * y_(s); };
    for (int i = panels - 1; i >= 0; --i) {
      const auto q = integrate(g, i * kPanel, (i + 1) * kPanel, cfg_.quad);
      cumulative_[i] = cumulative_[i + 1] + q.value;
      error_ += q.error;
    }
    h0_ = (*this)(0.0);
  }

  int dimension() const { return d_; }
  double zero() const { return y_.zero(); }  // q_{d/2}
  double at_zero() const { return h0_; }
  double quadrature_error() const { return error_; }

  double operator()(double t) const {
    require(t >= 0.0, ErrorKind::domain_error, "H needs t >= 0");
    if (t >= t_end_) return tail_series_.tail_integral(t).real();
    const int i = static_cast<int>(t / kPanel);
    auto g = [this](double s) { return s * y_(s); };
    const double partial = t == i * kPanel ? 0.0 : gauss_panel(g, t, (i + 1) * kPanel);
    return partial + cumulative_[i + 1] + tail_at_end_;
  }

  double scaled(double x) const { return (*this)(zero() * std::abs(x)) / h0_; }

  // Large-t model of H (integration by parts on the tail of s Y_{d+2}).
  OscillatorySeries asymptotic(int order) const {
    const OscillatorySeries g = y_.asymptotic(order).times_power(-1.0);
    return g.tail_antiderivative(g.leading_power() - 1.0 + order);
  }

  // H(t) ~ -kappa t^{-(d+1)}: kappa = A^2 q^2 / (2(d+1)), A the Bessel
  // amplitude 2^{a+1/2} Gamma(a+1) / sqrt(pi) for a = d/2.
  double leading_kappa() const {
    const double a = 0.5 * d_;
    const double amp = std::pow(2.0, a + 0.5) * lanczos_gamma(a + 1.0) / std::sqrt(std::numbers::pi);
    return amp * amp * zero() * zero() / (2.0 * (d_ + 1));
  }

  RadialProfile profile() const {
    return {[this](double t) { return (*this)(t); }, std::numeric_limits<double>::infinity(),
            [this](int order) { return asymptotic(order); }};
  }

 private:
  int d_;
  HankelConfig cfg_;
  YudinFunction y_;
  double t_end_ = 0.0;
  OscillatorySeries tail_series_;
  double tail_at_end_ = 0.0;
  std::vector<double> cumulative_;
  double error_ = 0.0;
  double h0_ = 0.0;
};

inline double gorbachev_H(int d, double t, const HankelConfig& cfg = {}) {
  return GorbachevFunction(d, cfg)(t);
}

struct GorbachevReport {
  double h_at_zero = 0.0;
  double max_positive = 0.0;     // largest H(t) on [q, t_hi] (must be < 0)
  double max_decrease = 0.0;     // largest H(t_i) - H(t_{i+1}) (must be <= 0)
  double fitted_c = 0.0;         // max of -H(t) t^{d+1} on [t_fit_lo, t_hi]
  double min_scaled = 0.0;       // min of -H(t) t^{d+1}, must stay > 0
  double leading_kappa = 0.0;
  bool negative = false;
  bool nondecreasing = false;
  bool pass = false;
};

inline GorbachevReport gorbachev_check(int d, double t_hi = 50.0, double step = 0.01,
                                       double t_fit_lo = 20.0, const HankelConfig& cfg = {}) {
  const GorbachevFunction H(d, cfg);
  GorbachevReport rep;
  rep.h_at_zero = H.at_zero();
  rep.leading_kappa = H.leading_kappa();
  rep.max_positive = -INFINITY;
  rep.max_decrease = -INFINITY;
  rep.min_scaled = INFINITY;
  double prev = NAN;
  for (double t = H.zero(); t <= t_hi + 1e-12; t += step) {
    const double v = H(t);
    rep.max_positive = std::max(rep.max_positive, v);
    if (!std::isnan(prev)) rep.max_decrease = std::max(rep.max_decrease, prev - v);
    prev = v;
    if (t >= t_fit_lo) {
      const double sc = -v * std::pow(t, d + 1);
      rep.fitted_c = std::max(rep.fitted_c, sc);
      rep.min_scaled = std::min(rep.min_scaled, sc);
    }
  }
  rep.negative = rep.max_positive < 0.0;
  rep.nondecreasing = rep.max_decrease <= 1e-12;
  rep.pass = rep.negative && rep.nondecreasing && rep.min_scaled > 0.0;
  return rep;
}

}  // namespace delsarte
