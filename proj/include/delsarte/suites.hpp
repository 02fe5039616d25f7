#pragma once

// Randomized verification suites. Instance i draws all of its choices from
// SplitMix64::for_instance(seed, i), so a suite replays exactly from its seed
// and the instance list is the same whatever the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "delsarte/density.hpp"
#include "delsarte/extremal.hpp"
#include "delsarte/lattice.hpp"
#include "delsarte/posdef.hpp"
#include "delsarte/rng.hpp"

namespace delsarte {

struct InstanceOutcome {
  int index = 0;
  std::vector<int> orders;
  std::string check;  // which inequality or identity
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  bool tight = false;
  std::string error;  // non-empty when the instance threw
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int instances = 0;
  int violations = 0;
  int tight = 0;
  int errors = 0;
  std::vector<InstanceOutcome> outcomes;  // ordered by index
  bool pass = false;
};

// Runs body(i, rng) for i in [0, count) on up to `threads` workers and
// collects outcomes by index. An instance may yield several outcomes.
using InstanceBody = std::function<std::vector<InstanceOutcome>(int, SplitMix64&)>;

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count,
                             const InstanceBody& body, unsigned threads = 0) {
  require(count >= 0, ErrorKind::invalid_input, "instance count must be >= 0");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, count));
  std::vector<std::vector<InstanceOutcome>> slots(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      SplitMix64 rng = SplitMix64::for_instance(seed, static_cast<std::uint64_t>(i));
      try {
        slots[i] = body(i, rng);
      } catch (const std::exception& e) {
        InstanceOutcome o;
        o.error = e.what();
        slots[i] = {o};
      }
      for (auto& o : slots[i]) o.index = i;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.instances = count;
  for (auto& s : slots) {
    for (auto& o : s) {
      if (!o.error.empty()) {
        ++rep.errors;
      } else if (!o.pass) {
        ++rep.violations;
      }
      if (o.tight) ++rep.tight;
      rep.outcomes.push_back(std::move(o));
    }
  }
  rep.pass = rep.violations == 0 && rep.errors == 0;
  return rep;
}

namespace gen {

inline Measure random_measure(SplitMix64& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0: return Measure::probability();
    case 1: return Measure::counting();
    default: return Measure::with_weight(rng.uniform(0.25, 2.0));
  }
}

// Z_n x Z_m (second factor possibly trivial) with at most max_size elements.
inline Group random_group(SplitMix64& rng, int max_size, Measure m) {
  const int n1 = static_cast<int>(rng.uniform_int(2, std::max(2, max_size / 2)));
  const int cap = std::max(1, max_size / n1);
  const int n2 = rng.bernoulli(0.4) ? static_cast<int>(rng.uniform_int(1, std::min(cap, 6))) : 1;
  return n2 == 1 ? Group({n1}, m) : Group({n1, n2}, m);
}

// Symmetric set made of whole {x, -x} orbits, each kept with probability p.
inline Subset random_symmetric(SplitMix64& rng, const Group& g, double p, bool with_zero) {
  Subset s(g);
  for (const auto& o : g.orbits()) {
    if (o.rep == 0) continue;
    if (rng.bernoulli(p)) {
      s.insert(o.rep);
      s.insert(o.partner);
    }
  }
  if (with_zero) s.insert(0);
  return s;
}

inline Subset random_subset(SplitMix64& rng, const Group& g, double p) {
  Subset s(g);
  for (int x = 0; x < g.size(); ++x) {
    if (rng.bernoulli(p)) s.insert(x);
  }
  return s;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace gen

struct SuiteOptions {
  int count = 50;
  std::uint64_t seed = 1;
  int max_n = 24;
  unsigned threads = 0;
};

// H = one representative from each class mod m, Lambda = m Z_n.
inline SuiteReport tile_suite(const SuiteOptions& opt) {
  return run_suite("tile", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform_int(2, std::max(2, opt.max_n)));
    const auto divs = gen::divisors(n);
    const int m = divs[rng.uniform_int(0, static_cast<std::int64_t>(divs.size()) - 1)];
    const Group g = Group::cyclic(n, gen::random_measure(rng));
    Subset h(g), lambda(g);
    for (int r = 0; r < m; ++r) h.insert(r + m * static_cast<int>(rng.uniform_int(0, n / m - 1)));
    for (int x = 0; x < n; x += m) lambda.insert(x);
    const int which = static_cast<int>(rng.uniform_int(0, 2));
    const SymSet minus = which == 0   ? SymSet::empty(g)
                         : which == 1 ? SymSet::full(g)
                                      : SymSet::checked(gen::random_symmetric(rng, g, 0.5, false));
    const TileReport r = verify_tile_theorem(g, h, lambda, minus);
    return std::vector<InstanceOutcome>{{0, g.orders(), "C(H-H, Omega-) = m(H)", r.lhs, r.rhs,
                                         r.pass, r.pass, ""}};
  }, opt.threads);
}

// Random Lambda, then Omega+ drawn inside the complement of (Lambda - Lambda)
// plus 0. A quarter of the instances use the tight interval/subgroup pair.
inline SuiteReport main_suite(const SuiteOptions& opt) {
  return run_suite("main", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform_int(2, std::max(2, opt.max_n)));
    const Group g = Group::cyclic(n, Measure::probability());
    Subset lambda(g);
    Subset plus(g);
    if (rng.bernoulli(0.25)) {
      const auto divs = gen::divisors(n);
      const int m = divs[rng.uniform_int(0, static_cast<std::int64_t>(divs.size()) - 1)];
      for (int x = 0; x < n; x += m) lambda.insert(x);
      plus = Subset::interval(g, -(m - 1), m - 1);
    } else {
      lambda = gen::random_subset(rng, g, rng.uniform(0.05, 0.3));
      lambda.insert(0);
      const Subset diff = difference_set(lambda, lambda);
      plus = gen::random_symmetric(rng, g, rng.uniform(0.2, 0.9), true);
      for (int x : diff.elements()) {
        if (x != 0) plus.erase(x);
      }
    }
    const MainReport r = verify_main_theorem(g, SymSet::checked(plus), lambda);
    return std::vector<InstanceOutcome>{
        {0, g.orders(), "D(Omega+) <= 1/#Lambda", r.delsarte, r.bound, r.pass, r.tight, ""}};
  }, opt.threads);
}

inline SuiteReport homomorphism_suite(const SuiteOptions& opt) {
  return run_suite("hom", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const Group g = gen::random_group(rng, std::min(opt.max_n, 36), Measure::counting());
    std::vector<int> gens = {static_cast<int>(rng.uniform_int(0, g.size() - 1))};
    if (rng.bernoulli(0.3)) gens.push_back(static_cast<int>(rng.uniform_int(0, g.size() - 1)));
    const Subset k = generated_subgroup(g, gens);
    const SymSet plus = SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.3, 0.9), true));
    const SymSet minus = SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.0, 1.0), false));
    const HomomorphismReport r = verify_homomorphism_bound(g, k, plus, minus);
    return std::vector<InstanceOutcome>{{0, g.orders(), "C_G <= C_{G/K} C_K", r.lhs, r.rhs,
                                         r.pass, std::abs(r.gap) <= kTheoremTol, ""}};
  }, opt.threads);
}

inline SuiteReport product_suite(const SuiteOptions& opt) {
  return run_suite("product", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const int cap = std::max(4, std::min(opt.max_n, 40));
    const int n1 = static_cast<int>(rng.uniform_int(2, 8));
    const int n2 = static_cast<int>(rng.uniform_int(2, std::max(2, std::min(8, cap / n1))));
    const Measure m1 = gen::random_measure(rng);
    const Measure m2 = gen::random_measure(rng);
    const Group g1 = Group::cyclic(n1, m1);
    const Group g2 = Group::cyclic(n2, m2);
    auto plus = [&](const Group& g) {
      return SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.3, 1.0), true));
    };
    auto minus = [&](const Group& g) {
      return SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.0, 1.0), false));
    };
    const SymSet p1 = plus(g1), q1 = minus(g1), p2 = plus(g2), q2 = minus(g2);
    const ProductReport r = verify_product_bound(g1, p1, q1, g2, p2, q2);
    return std::vector<InstanceOutcome>{{0, {n1, n2}, "C_{G1xG2} <= C_G1 C_G2", r.lhs, r.rhs,
                                         r.pass, std::abs(r.gap) <= kTheoremTol, ""}};
  }, opt.threads);
}

inline SuiteReport automorphism_suite(const SuiteOptions& opt) {
  return run_suite("auto", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform_int(2, std::max(2, opt.max_n)));
    const Group g = Group::cyclic(n, gen::random_measure(rng));
    std::vector<long long> units;
    for (long long u = 1; u < n; ++u) {
      if (std::gcd(u, static_cast<long long>(n)) == 1) units.push_back(u);
    }
    const long long m = units[rng.uniform_int(0, static_cast<std::int64_t>(units.size()) - 1)];
    const auto phi = multiplication_map(g, m);
    const SymSet plus = SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.2, 0.9), true));
    const SymSet minus = SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.0, 1.0), false));
    const AutomorphismReport r = verify_automorphism_invariance(g, phi, plus, minus);
    return std::vector<InstanceOutcome>{
        {0, g.orders(), "C(phi Omega) = C(Omega)", r.mapped, r.original, r.pass, true, ""}};
  }, opt.threads);
}

// Packing / covering / tiling against the density of Lambda on a
// probability-normalized Z_n.
inline SuiteReport density_suite(const SuiteOptions& opt) {
  return run_suite("density", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const int n = static_cast<int>(rng.uniform_int(2, std::max(2, opt.max_n)));
    const Group g = Group::cyclic(n, Measure::probability());
    Subset h = gen::random_subset(rng, g, rng.uniform(0.1, 0.6));
    h.insert(0);
    Subset lambda = gen::random_subset(rng, g, rng.uniform(0.05, 0.6));
    lambda.insert(static_cast<int>(rng.uniform_int(0, n - 1)));
    const DensityBoundsReport r = density_bounds_check(g, h, lambda);
    return std::vector<InstanceOutcome>{{0, g.orders(), "density " + r.relation + " 1/m(H)",
                                         r.density.value(), r.inverse_measure.value(), r.pass,
                                         r.relation == "=", ""}};
  }, opt.threads);
}

// Elementary inequalities on one random instance each: monotonicity in
// Omega+, T <= D, C <= m(Omega+), and the autocorrelation lower bound.
inline SuiteReport ordering_suite(const SuiteOptions& opt) {
  return run_suite("ordering", opt.seed, opt.count, [&](int, SplitMix64& rng) {
    const Group g = gen::random_group(rng, std::min(opt.max_n, 30), gen::random_measure(rng));
    const Subset small = gen::random_symmetric(rng, g, rng.uniform(0.2, 0.7), true);
    const Subset large = small.unite(gen::random_symmetric(rng, g, 0.4, true));
    const SymSet minus = SymSet::checked(gen::random_symmetric(rng, g, rng.uniform(0.0, 1.0), false));
    const double c_small = two_set_constant(g, SymSet::checked(small), minus).value;
    const double c_large = two_set_constant(g, SymSet::checked(large), minus).value;
    const double t = turan(g, SymSet::checked(small)).value;
    const double d = delsarte_constant(g, SymSet::checked(small)).value;
    // A containing 0 with A - A inside `small`, grown greedily.
    Subset a(g);
    a.insert(0);
    for (int x = 1; x < g.size(); ++x) {
      bool ok = true;
      for (int y : a.elements()) ok = ok && small.contains(g.sub(x, y)) && small.contains(g.sub(y, x));
      if (ok && rng.bernoulli(0.7)) a.insert(x);
    }
    const GroupFunction ac = autocorrelation(a);
    const double witness = ac.integral() / ac[0];
    const auto o = g.orders();
    const double tol = kTheoremTol;
    const double scale = std::max(1.0, g.total_mass());
    return std::vector<InstanceOutcome>{
        {0, o, "monotone in Omega+", c_small, c_large, c_small <= c_large + tol * scale, false, ""},
        {0, o, "T <= D", t, d, t <= d + tol * scale, false, ""},
        {0, o, "C <= m(Omega+)", c_small, small.measure(), c_small <= small.measure() + tol * scale,
         false, ""},
        {0, o, "autocorrelation <= T", witness, t, witness <= t + tol * scale, false, ""},
    };
  }, opt.threads);
}

inline SuiteReport run_named_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "tile") return tile_suite(opt);
  if (name == "main") return main_suite(opt);
  if (name == "hom") return homomorphism_suite(opt);
  if (name == "product") return product_suite(opt);
  if (name == "auto") return automorphism_suite(opt);
  if (name == "density") return density_suite(opt);
  if (name == "ordering") return ordering_suite(opt);
  fail(ErrorKind::invalid_input, "unknown suite '" + name + "'");
}

}  // namespace delsarte
