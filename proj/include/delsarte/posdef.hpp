#pragma once

// Positive definiteness on finite abelian groups and the standard ways of
// building positive definite functions from sets and from other functions.

#include <algorithm>
#include <limits>

#include "delsarte/group.hpp"

namespace delsarte {

inline constexpr double kPosdefTol = 1e-9;

// Bochner on a finite group: f is positive definite iff every Fourier
// coefficient is nonnegative.
inline double min_fourier_coefficient(const GroupFunction& f) {
  const Spectrum s = dft(f);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : s.values) m = std::min(m, v.real());
  return m;
}

inline bool is_posdef(const GroupFunction& f, double tol = kPosdefTol) {
  return min_fourier_coefficient(f) >= -tol;
}

// (chi_A * chi_A~)(x) = weight * #(A intersect (A + x)).
inline GroupFunction autocorrelation(const Subset& a) {
  require(!a.is_empty(), ErrorKind::invalid_input, "autocorrelation of the empty set");
  const Group& g = a.group();
  const auto elems = a.elements();
  GroupFunction f(g);
  for (int x : elems) {
    for (int y : elems) f[g.sub(x, y)] += g.weight();
  }
  return f;
}

inline GroupFunction schur_product(const GroupFunction& f, const GroupFunction& h) {
  require(f.group() == h.group(), ErrorKind::invalid_input,
          "schur_product: functions live on different groups");
  GroupFunction out(f.group());
  for (int x = 0; x < f.size(); ++x) out[x] = f[x] * h[x];
  return out;
}

// Phi(x) = sum_{l, l' in Lambda} f(x + l - l').
inline GroupFunction periodize(const GroupFunction& f, const Subset& lambda) {
  require(!lambda.is_empty(), ErrorKind::invalid_input, "periodize: empty translation set");
  require(f.group().same_elements(lambda.group()), ErrorKind::invalid_input,
          "periodize: translation set lives on a different group");
  const Group& g = f.group();
  const auto pts = lambda.elements();
  // Multiplicity of each difference l - l'.
  std::vector<int> diff_count(g.size(), 0);
  for (int l : pts) {
    for (int lp : pts) ++diff_count[g.sub(l, lp)];
  }
  GroupFunction phi(g);
  for (int x = 0; x < g.size(); ++x) {
    double acc = 0.0;
    for (int d = 0; d < g.size(); ++d) {
      if (diff_count[d] != 0) acc += diff_count[d] * f[g.add(x, d)];
    }
    phi[x] = acc;
  }
  return phi;
}

}  // namespace delsarte
