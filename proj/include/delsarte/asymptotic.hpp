#pragma once

// Finite sums  sum c u^{-p} e^{i omega u}  used as large-u models of Bessel
// products, with exact tail integrals. The Bessel expansion is
//
//   j_alpha(t) ~ (A/2) sum_n a_n(alpha) t^{-alpha-1/2-n}
//                  (i^n e^{i(t-phi)} + (-i)^n e^{-i(t-phi)}),
//   A = Gamma(alpha+1) 2^alpha sqrt(2/pi),  phi = alpha pi/2 + pi/4,
//
// which is cos(t - phi) times the leading constant plus the usual P, Q
// corrections written in exponential form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "delsarte/error.hpp"
#include "delsarte/quadrature.hpp"
#include "delsarte/special.hpp"

namespace delsarte {

using cplx = std::complex<double>;

struct OscTerm {
  cplx c;
  double p;
  double omega;
};

class OscillatorySeries {
 public:
  OscillatorySeries() = default;

  static OscillatorySeries constant(double c) { return monomial(c, 0.0, 0.0); }

  static OscillatorySeries monomial(cplx c, double p, double omega) {
    OscillatorySeries s;
    s.terms_.push_back({c, p, omega});
    return s;
  }

  const std::vector<OscTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  OscillatorySeries& operator+=(const OscillatorySeries& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    merge();
    return *this;
  }

  friend OscillatorySeries operator*(const OscillatorySeries& a, const OscillatorySeries& b) {
    OscillatorySeries out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) out.terms_.push_back({x.c * y.c, x.p + y.p, x.omega + y.omega});
    }
    out.merge();
    return out;
  }

  OscillatorySeries scaled(cplx f) const {
    OscillatorySeries out = *this;
    for (auto& t : out.terms_) t.c *= f;
    return out;
  }

  // Multiply by u^{-dp}.
  OscillatorySeries times_power(double dp) const {
    OscillatorySeries out = *this;
    for (auto& t : out.terms_) t.p += dp;
    return out;
  }

  // Drops every term decaying faster than u^{-p_max}.
  OscillatorySeries truncated(double p_max) const {
    OscillatorySeries out;
    for (const auto& t : terms_) {
      if (t.p <= p_max + 1e-12) out.terms_.push_back(t);
    }
    return out;
  }

  double leading_power() const {
    double p = INFINITY;
    for (const auto& t : terms_) p = std::min(p, t.p);
    return p;
  }

  cplx evaluate(double u) const {
    cplx sum = 0.0;
    for (const auto& t : terms_) sum += t.c * std::pow(u, -t.p) * std::polar(1.0, t.omega * u);
    return sum;
  }

  // Exact integral over [T, inf). Non-oscillating terms need p > 1 and
  // oscillating ones p > 0. For omega != 0 the path is rotated onto
  // u = T + i sign(omega) y / |omega|, where the integrand decays like e^{-y}.
  cplx tail_integral(double T) const {
    require(T > 0.0, ErrorKind::invalid_input, "tail integral needs T > 0");
    cplx sum = 0.0;
    for (const auto& t : terms_) {
      if (t.omega == 0.0) {
        require(t.p > 1.0, ErrorKind::quadrature_error, "non-oscillating tail term is not integrable");
        sum += t.c * std::pow(T, 1.0 - t.p) / (t.p - 1.0);
      } else {
        require(t.p > 0.0, ErrorKind::quadrature_error, "oscillating tail term grows");
        sum += t.c * rotated_integral(T, t.p, t.omega);
      }
    }
    return sum;
  }

  // Large-u expansion of G(u) = int_u^inf of this series, by repeated
  // integration by parts for oscillating terms, up to u^{-p_max}.
  OscillatorySeries tail_antiderivative(double p_max) const {
    OscillatorySeries out;
    for (const auto& t : terms_) {
      if (t.omega == 0.0) {
        require(t.p > 1.0, ErrorKind::quadrature_error, "non-oscillating tail term is not integrable");
        out.terms_.push_back({t.c / (t.p - 1.0), t.p - 1.0, 0.0});
        continue;
      }
      // int_u^inf v^{-p} e^{iwv} dv = -e^{iwu} sum_k (p)_k / (iw)^{k+1} u^{-p-k}
      const cplx iw(0.0, t.omega);
      cplx coef = -t.c / iw;
      for (int k = 0; t.p + k <= p_max + 1e-12; ++k) {
        out.terms_.push_back({coef, t.p + k, t.omega});
        coef *= (t.p + k) / iw;
      }
    }
    out.merge();
    return out;
  }

 private:
  static cplx rotated_integral(double T, double p, double omega) {
    const double aw = std::abs(omega);
    const double sigma = omega > 0 ? 1.0 : -1.0;
    const double kappa = T * aw;
    // int_0^inf (1 + i sigma y / kappa)^{-p} e^{-y} dy on geometric panels.
    auto g = [&](double y) { return std::pow(cplx(1.0, sigma * y / kappa), -p) * std::exp(-y); };
    double a = 0.0;
    double b = std::min(kappa, 1.0) / 64.0;
    cplx inner = 0.0;
    double err = 0.0;
    int evals = 0;
    while (a < 60.0) {
      const cplx whole = gauss_panel(g, a, b);
      inner += detail::adapt(g, a, b, whole, 1e-17, 0, 20, err, evals);
      a = b;
      b = std::min(60.0, 2.0 * b);
    }
    return cplx(0.0, sigma / aw) * std::polar(1.0, omega * T) * std::pow(T, -p) * inner;
  }

  void merge() {
    std::sort(terms_.begin(), terms_.end(), [](const OscTerm& x, const OscTerm& y) {
      if (x.omega != y.omega) return x.omega < y.omega;
      return x.p < y.p;
    });
    std::vector<OscTerm> out;
    for (const auto& t : terms_) {
      if (!out.empty() && std::abs(out.back().omega - t.omega) <= 1e-13 &&
          std::abs(out.back().p - t.p) <= 1e-13) {
        out.back().c += t.c;
      } else {
        out.push_back(t);
      }
    }
    std::erase_if(out, [](const OscTerm& t) { return t.c == 0.0; });
    terms_ = std::move(out);
  }

  std::vector<OscTerm> terms_;
};

// Large-argument model of u -> j_alpha(s u), s > 0, keeping relative order
// `order` (powers up to t^{-alpha-1/2-order}).
inline OscillatorySeries bessel_j_asymptotic(double alpha, double s, int order) {
  require(s > 0.0, ErrorKind::invalid_input, "asymptotic Bessel model needs s > 0");
  const double amp = lanczos_gamma(alpha + 1.0) * std::pow(2.0, alpha) *
                     std::sqrt(2.0 / std::numbers::pi);
  const double phi = alpha * std::numbers::pi / 2 + std::numbers::pi / 4;
  OscillatorySeries out;
  cplx in = 1.0;  // i^n
  for (int n = 0; n <= order; ++n) {
    const double an = hankel_coefficient(alpha, n);
    if (an != 0.0) {
      const double p = alpha + 0.5 + n;
      const double mag = 0.5 * amp * an * std::pow(s, -p);
      out += OscillatorySeries::monomial(mag * in * std::polar(1.0, -phi), p, s);
      out += OscillatorySeries::monomial(mag * std::conj(in) * std::polar(1.0, phi), p, -s);
    }
    in *= cplx(0.0, 1.0);
  }
  return out;
}

// Plain evaluation of the same expansion at t, for checking the library
// Bessel routine against the classical large-argument form.
inline double bessel_j_hankel_expansion(double alpha, double t, int order) {
  return bessel_j_asymptotic(alpha, 1.0, order).evaluate(t).real();
}

}  // namespace delsarte
