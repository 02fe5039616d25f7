#pragma once

// Two-set extremal constants C(Omega+, Omega-) on finite abelian groups:
//
//   sup  m_G-integral of f
//   over real symmetric positive definite f with f(0) = 1,
//        f <= 0 off Omega+, f >= 0 off Omega-.
//
// The Turan constant is C(Omega, Omega) and the Delsarte constant is
// C(Omega+, G). Supports are closed conditions here; on a finite group the
// open/compact distinctions of the continuous setting collapse.
//
// LP layout: one variable v_o per orbit {x, -x} with x != 0 (f(0) = 1 is
// fixed), one row per character orbit {k, -k}:
//   f^(k) / weight = 1 + sum_o |o| cos(2 pi <k, x_o>) v_o >= 0.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "delsarte/density.hpp"
#include "delsarte/error.hpp"
#include "delsarte/group.hpp"
#include "delsarte/lattice.hpp"
#include "delsarte/lp.hpp"
#include "delsarte/posdef.hpp"

namespace delsarte {

enum class ExtremalStatus { optimal, infeasible_zero };

inline const char* to_string(ExtremalStatus s) {
  return s == ExtremalStatus::optimal ? "optimal" : "infeasible-zero";
}

struct ExtremalResult {
  double value = 0.0;
  ExtremalStatus status = ExtremalStatus::optimal;
  GroupFunction optimizer;        // a witness, not canonical
  std::vector<double> spectrum;   // f^ per character
  double dual_bound = 0.0;        // weight * (1 + LP dual objective)
  int lp_variables = 0;
  int lp_rows = 0;
  int lp_iterations = 0;
  bool bland_engaged = false;
};

inline ExtremalResult two_set_constant(const Group& g, const SymSet& plus, const SymSet& minus,
                                       const LpOptions& options = {}) {
  require(plus.group().same_elements(g) && minus.group().same_elements(g),
          ErrorKind::invalid_input, "extremal sets live on a different group");
  ExtremalResult res;
  const double w = g.weight();
  if (!plus.contains(0)) {
    res.status = ExtremalStatus::infeasible_zero;
    res.value = 0.0;
    res.optimizer = GroupFunction(g);
    res.spectrum.assign(g.size(), 0.0);
    return res;
  }

  const auto orbits = g.orbits();
  struct Var {
    int rep;
    int partner;
    int size;
  };
  std::vector<Var> vars;
  LpProblem lp;
  for (const auto& o : orbits) {
    if (o.rep == 0) continue;
    const bool in_plus = plus.contains(o.rep);
    const bool in_minus = minus.contains(o.rep);
    if (!in_plus && !in_minus) continue;  // forced to zero
    vars.push_back({o.rep, o.partner, o.size});
    lp.objective.push_back(o.size);
    lp.lower.push_back(in_minus ? -kInf : 0.0);
    lp.upper.push_back(in_plus ? kInf : 0.0);
  }
  const int nv = static_cast<int>(vars.size());

  // Character orbits coincide with element orbits under the same indexing.
  std::vector<double> f(g.size(), 0.0);
  f[0] = 1.0;
  if (nv > 0) {
    for (const auto& k : orbits) {
      std::vector<double> row(nv);
      for (int j = 0; j < nv; ++j) {
        row[j] = vars[j].size * std::cos(2.0 * std::numbers::pi * g.pairing(k.rep, vars[j].rep));
      }
      lp.add_row(std::move(row), RowSense::ge, -1.0);
    }
    const LpSolution sol = solve(lp, options);
    require(sol.status == LpStatus::optimal, ErrorKind::solver_failure,
            std::string("extremal LP ended ") + to_string(sol.status) +
                " although f = delta is feasible and the value is bounded");
    for (int j = 0; j < nv; ++j) {
      f[vars[j].rep] = sol.x[j];
      f[vars[j].partner] = sol.x[j];
    }
    res.dual_bound = w * (1.0 + sol.dual_objective);
    res.lp_rows = lp.num_rows();
    res.lp_iterations = sol.iterations;
    res.bland_engaged = sol.bland_engaged;
  } else {
    res.dual_bound = w;
  }
  res.lp_variables = nv;
  res.optimizer = GroupFunction(g, std::move(f));
  res.value = res.optimizer.integral();
  res.spectrum = real_spectrum(res.optimizer);
  return res;
}

inline ExtremalResult turan(const Group& g, const SymSet& omega, const LpOptions& options = {}) {
  return two_set_constant(g, omega, omega, options);
}

inline ExtremalResult delsarte_constant(const Group& g, const SymSet& plus, const LpOptions& options = {}) {
  return two_set_constant(g, plus, SymSet::full(g), options);
}

inline constexpr double kTheoremTol = 1e-8;

// ---------------------------------------------------------------------------
// Tile theorem: H tiles G strictly with Lambda => C(H - H, Omega-) = m_G(H).

struct TileReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

inline TileReport verify_tile_theorem(const Group& g, const Subset& h, const Subset& lambda,
                                      const SymSet& minus) {
  require(h.group().same_elements(g) && lambda.group().same_elements(g), ErrorKind::invalid_input,
          "tile sets live on a different group");
  require(!h.is_empty() && tiles_strict(h, lambda), ErrorKind::not_a_strict_tiling,
          "H does not tile G in the strict sense with the given translates");
  TileReport rep;
  rep.lhs = two_set_constant(g, SymSet::checked(difference_set(h, h)), minus).value;
  rep.rhs = g.weight() * h.count();
  rep.pass = std::abs(rep.lhs - rep.rhs) <= kTheoremTol;
  return rep;
}

// ---------------------------------------------------------------------------
// Main theorem on a compact group: (Lambda - Lambda) avoids Omega+ off 0
// => D(Omega+) <= 1 / #Lambda. The periodization Phi of the optimizer is
// rebuilt to check the chain Phi posdef, Phi(0) <= #Lambda,
// integral Phi = (#Lambda)^2 integral f.

struct MainReport {
  double delsarte = 0.0;
  double bound = 0.0;
  int lambda_size = 0;
  double phi_at_zero = 0.0;
  double phi_integral = 0.0;
  double phi_identity_error = 0.0;  // relative
  double phi_min_fourier = 0.0;
  bool tight = false;
  bool pass = false;
};

inline MainReport verify_main_theorem(const Group& g, const SymSet& plus, const Subset& lambda,
                                      const LpOptions& options = {}) {
  require(g.is_probability(), ErrorKind::invalid_input,
          "main theorem check needs a probability-normalized group");
  require(lambda.group().same_elements(g) && plus.group().same_elements(g),
          ErrorKind::invalid_input, "sets live on a different group");
  require(!lambda.is_empty(), ErrorKind::invalid_input, "translation set is empty");
  require(packing_type(plus.set(), lambda), ErrorKind::condition_violated,
          "(Lambda - Lambda) meets Omega+ outside 0");
  MainReport rep;
  const ExtremalResult d = delsarte_constant(g, plus, options);
  rep.delsarte = d.value;
  rep.lambda_size = lambda.count();
  rep.bound = 1.0 / rep.lambda_size;

  const GroupFunction phi = periodize(d.optimizer, lambda);
  rep.phi_at_zero = phi[0];
  rep.phi_integral = phi.integral();
  const double expected = static_cast<double>(rep.lambda_size) * rep.lambda_size * d.value;
  rep.phi_identity_error = std::abs(rep.phi_integral - expected) / std::max(1.0, std::abs(expected));
  rep.phi_min_fourier = min_fourier_coefficient(phi);

  rep.tight = std::abs(rep.delsarte - rep.bound) <= kTheoremTol;
  rep.pass = rep.delsarte <= rep.bound + kTheoremTol && rep.phi_at_zero <= rep.lambda_size + 1e-7 &&
             rep.phi_identity_error <= 1e-10 && rep.phi_min_fourier >= -1e-7;
  return rep;
}

// ---------------------------------------------------------------------------
// Homomorphism bound for the projection G -> G/K, all groups with counting
// measure so that dm_G = dm_K dm_{G/K}:
//   C_G(Omega+, Omega-) <= C_{G/K}(pi Omega+, pi Omega-) * C_K(Omega+ n K, Omega- n K).

struct HomomorphismReport {
  double lhs = 0.0;
  double quotient = 0.0;
  double subgroup = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  std::vector<int> quotient_orders;
  std::vector<int> subgroup_orders;
  bool pass = false;
};

inline bool bound_holds(double lhs, double rhs) {
  return lhs <= rhs + kTheoremTol * std::max(1.0, std::abs(rhs));
}

inline HomomorphismReport verify_homomorphism_bound(const Group& g, const Subset& k,
                                                    const SymSet& plus, const SymSet& minus) {
  require(k.group().same_elements(g) && plus.group().same_elements(g) &&
              minus.group().same_elements(g),
          ErrorKind::invalid_input, "sets live on a different group");
  require(is_subgroup(k), ErrorKind::invalid_input, "K is not a subgroup of G");
  const Group gc = g.with_measure(Measure::counting());
  const Subset kc = Subset::of(gc, k.elements());
  const Presentation q = quotient_presentation(kc, Measure::counting());
  const Presentation s = subgroup_presentation(kc, Measure::counting());

  auto on = [](const Group& target, const SymSet& set) {
    return SymSet::checked(Subset::of(target, set.set().elements()));
  };
  HomomorphismReport rep;
  rep.lhs = two_set_constant(gc, on(gc, plus), on(gc, minus)).value;

  auto image = [&](const SymSet& set) {
    return SymSet::checked(Subset::of(gc, set.set().elements()).mapped(q.group, q.map));
  };
  rep.quotient = two_set_constant(q.group, image(plus), image(minus)).value;

  auto restrict_to_k = [&](const SymSet& set) {
    Subset out(s.group);
    for (int x : set.set().elements()) {
      if (s.map[x] >= 0) out.insert(s.map[x]);
    }
    return SymSet::checked(out);
  };
  rep.subgroup = two_set_constant(s.group, restrict_to_k(plus), restrict_to_k(minus)).value;

  rep.rhs = rep.quotient * rep.subgroup;
  rep.gap = rep.rhs - rep.lhs;
  rep.quotient_orders = q.group.orders();
  rep.subgroup_orders = s.group.orders();
  rep.pass = bound_holds(rep.lhs, rep.rhs);
  return rep;
}

// ---------------------------------------------------------------------------
// Product bound: C_{G1 x G2}(A1 x A2, B1 x B2) <= C_{G1}(A1, B1) C_{G2}(A2, B2).
// Observed gaps are recorded; strictness is not asserted.

struct ProductReport {
  double lhs = 0.0;
  double first = 0.0;
  double second = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool pass = false;
};

inline Subset product_set(const Group& prod, const Subset& a, const Subset& b) {
  const int nb = b.group().size();
  Subset out(prod);
  for (int x : a.elements()) {
    for (int y : b.elements()) out.insert(x * nb + y);
  }
  return out;
}

inline ProductReport verify_product_bound(const Group& g1, const SymSet& plus1,
                                          const SymSet& minus1, const Group& g2,
                                          const SymSet& plus2, const SymSet& minus2) {
  const Group prod = product_group(g1, g2);
  ProductReport rep;
  rep.first = two_set_constant(g1, plus1, minus1).value;
  rep.second = two_set_constant(g2, plus2, minus2).value;
  rep.lhs = two_set_constant(prod, SymSet::checked(product_set(prod, plus1.set(), plus2.set())),
                             SymSet::checked(product_set(prod, minus1.set(), minus2.set())))
                .value;
  rep.rhs = rep.first * rep.second;
  rep.gap = rep.rhs - rep.lhs;
  rep.pass = bound_holds(rep.lhs, rep.rhs);
  return rep;
}

// ---------------------------------------------------------------------------
// Automorphism invariance. A bijective additive map of a finite group keeps
// the counting (hence any) Haar measure, so the modulus is 1.

inline bool is_automorphism(const Group& g, std::span<const int> phi) {
  if (static_cast<int>(phi.size()) != g.size()) return false;
  std::vector<char> hit(g.size(), 0);
  for (int v : phi) {
    if (v < 0 || v >= g.size() || hit[v]) return false;
    hit[v] = 1;
  }
  for (int x = 0; x < g.size(); ++x) {
    for (int y = x; y < g.size(); ++y) {
      if (phi[g.add(x, y)] != g.add(phi[x], phi[y])) return false;
    }
  }
  return true;
}

// x -> m x, an automorphism iff m is a unit modulo every factor order.
inline std::vector<int> multiplication_map(const Group& g, long long m) {
  std::vector<int> phi(g.size());
  for (int x = 0; x < g.size(); ++x) phi[x] = g.scale(x, m);
  return phi;
}

struct AutomorphismReport {
  double original = 0.0;
  double mapped = 0.0;
  double difference = 0.0;
  bool pass = false;
};

inline AutomorphismReport verify_automorphism_invariance(const Group& g, std::span<const int> phi,
                                                         const SymSet& plus,
                                                         const SymSet& minus) {
  require(is_automorphism(g, phi), ErrorKind::invalid_input, "map is not a group automorphism");
  AutomorphismReport rep;
  rep.original = two_set_constant(g, plus, minus).value;
  rep.mapped = two_set_constant(g, SymSet::checked(plus.set().mapped(g, phi)),
                                SymSet::checked(minus.set().mapped(g, phi)))
                   .value;
  rep.difference = std::abs(rep.mapped - rep.original);
  rep.pass = rep.difference <= kTheoremTol;
  return rep;
}

}  // namespace delsarte
