// Acceptance checks. One line per criterion:
//   PASS criterion N: <name> | <details>
// `--criterion N` runs a single one; the exit status is 0 iff all run pass.

#include <Eigen/Dense>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "delsarte/delsarte.hpp"
#include "oracles.hpp"

using namespace delsarte;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!details.empty()) details += "; ";
    details += (ok ? "" : "MISS ") + what;
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome trinomial_optimum() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const TrinomialOptimum r = optimize_trinomial();
  const double secs = seconds_since(t0);
  o.check(std::abs(r.value - 2.2361) <= 5e-4, fmt("value %.10f", r.value));
  o.check(std::abs(r.z_star - 0.628) <= 5e-3, fmt("z_star %.9f", r.z_star));
  o.check(r.nonneg.pass, fmt("min T %.3e", r.nonneg.min_value));
  // Reference coefficients. That pair is slightly negative (about -1.8e-6
  // near t = 2.5136), while the optimum here is exact, so this sub-check
  // misses by about 4e-4.
  o.check(std::abs(r.coeffs.a - 0.98929) <= 1e-4 && std::abs(r.coeffs.b - 0.24678) <= 1e-4,
          fmt("coefficients (%.6f, %.6f) vs (0.98929, 0.24678) +- 1e-4", r.coeffs.a, r.coeffs.b));
  o.check(secs < 1.0, fmt("%.3f s", secs));
  return o;
}

Outcome endpoint_value() {
  Outcome o;
  const double v = critical_coeffs(0.0).value();
  o.check(std::abs(v - (2.0 + 2.0 / 15)) <= 1e-12, fmt("1+a(0)+b(0) = %.15f, error %.1e", v, v - 32.0 / 15));
  return o;
}

Outcome example_chain() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Example51Report r = example51_lower_bound();
  o.check(std::abs(r.bound - 2.2361) <= 5e-4, fmt("lower bound %.10f", r.bound));
  for (const auto& c : r.checks) o.check(c.pass, c.name);
  const Example51Comparison cmp = example51_comparison();
  for (const auto& c : cmp.cases) {
    o.check(c.tile_value == 2.0 && std::abs(c.lp_value - 2.0) <= 1e-8 && c.pass,
            fmt("D(W) h=%.2f", c.h) + fmt(" n=%.0f: %.12f", c.n, c.lp_value));
  }
  const std::array<std::int64_t, 2> forbidden = {1, 4};
  const DensitySearchResult d = max_density_search(forbidden, 10);
  o.check(d.density == Rational(2, 5), "density " + d.density.str());
  o.check(d.witness.period == 5 && d.witness.residues == std::vector<int>{0, 2},
          fmt("witness period %.0f", d.witness.period));
  const double secs = seconds_since(t0);
  o.check(secs < 10.0, fmt("%.3f s", secs));
  return o;
}

Outcome tile_equality() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  int cases = 0;
  for (auto [n, k] : {std::pair{6, 2}, {6, 3}, {8, 2}, {8, 4}, {12, 4}}) {
    const Group g = Group::cyclic(n);
    const Subset h = Subset::interval(g, 0, k - 1);
    std::vector<long long> lam;
    for (int x = 0; x < n; x += k) lam.push_back(x);
    const Subset lambda = Subset::residues(g, lam);
    for (const SymSet& minus : {SymSet::empty(g), SymSet::full(g)}) {
      const TileReport r = verify_tile_theorem(g, h, lambda, minus);
      const double err = std::abs(r.lhs - static_cast<double>(k) / n);
      worst = std::max(worst, err);
      o.pass = o.pass && err <= 1e-8;
      ++cases;
    }
  }
  const double secs = seconds_since(t0);
  o.check(o.pass, fmt("%.0f cases, max |C - k/n| = %.2e", cases, worst));
  o.check(secs < 5.0, fmt("%.3f s", secs));
  return o;
}

Outcome main_fuzz() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opt;
  opt.count = 200;
  opt.seed = 20241;
  opt.max_n = 40;
  const SuiteReport r = main_suite(opt);
  double worst = -INFINITY;
  for (const auto& x : r.outcomes) {
    if (x.error.empty()) worst = std::max(worst, x.lhs - x.rhs);
  }
  const double secs = seconds_since(t0);
  o.check(r.instances == 200, fmt("%.0f instances", r.instances));
  o.check(r.violations == 0 && r.errors == 0,
          fmt("%.0f violations, %.0f errors", r.violations, r.errors));
  o.check(worst <= 1e-8, fmt("max D - 1/#Lambda = %.2e", worst));
  o.check(r.tight >= 1, fmt("%.0f tight", r.tight));
  o.check(secs < 60.0, fmt("%.3f s", secs));
  return o;
}

Outcome inequality_suites() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opt;
  opt.count = 100;
  opt.seed = 777;
  opt.max_n = 30;
  for (const char* name : {"ordering", "hom", "product", "auto"}) {
    const SuiteReport r = run_named_suite(name, opt);
    // Every check kind must cover at least 50 instances.
    std::map<std::string, int> per_check;
    for (const auto& x : r.outcomes) {
      if (x.error.empty()) ++per_check[x.check];
    }
    bool covered = !per_check.empty();
    for (const auto& [_, n] : per_check) covered = covered && n >= 50;
    o.check(r.violations == 0 && r.errors == 0 && covered,
            std::string(name) + fmt(": %.0f checks, %.0f violations", r.outcomes.size(), r.violations) +
                fmt(", %.0f errors, %.0f kinds", r.errors, per_check.size()));
  }
  const double secs = seconds_since(t0);
  o.check(secs < 120.0, fmt("%.3f s", secs));
  return o;
}

// Smallest eigenvalue of [f(x - y)]; counting measure, so this spectrum is
// the DFT.
double min_eigenvalue(const GroupFunction& f) {
  const Group& g = f.group();
  Eigen::MatrixXd m(g.size(), g.size());
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < g.size(); ++y) m(x, y) = f[g.sub(x, y)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Outcome posdef_oracle() {
  Outcome o;
  SplitMix64 rng(4242);
  int agree = 0, positive = 0;
  const int total = 500;
  for (int i = 0; i < total; ++i) {
    const Group g = Group::cyclic(static_cast<int>(rng.uniform_int(1, 16)), Measure::counting());
    GroupFunction f(g);
    if (i % 2 == 0) {
      // Random symmetric values with a boosted centre.
      for (int x = 0; x < g.size(); ++x) {
        if (g.neg(x) < x) continue;
        f[x] = f[g.neg(x)] = rng.uniform(-1, 1);
      }
      f[0] += rng.uniform(0, 2.0 * g.size());
    } else {
      // Symmetric spectrum, nonnegative or with one negative entry.
      Spectrum s{g, std::vector<std::complex<double>>(g.size())};
      for (int k = 0; k < g.size(); ++k) {
        if (g.neg(k) < k) continue;
        s.values[k] = s.values[g.neg(k)] = rng.bernoulli(0.5) ? rng.uniform(0, 1) : 0.0;
      }
      if (rng.bernoulli(0.5)) {
        const int k = static_cast<int>(rng.uniform_int(0, g.size() - 1));
        s.values[k] = s.values[g.neg(k)] = -rng.uniform(1e-3, 1);
      }
      const auto vals = inverse_dft(s);
      for (int x = 0; x < g.size(); ++x) f[x] = vals[x].real();
    }
    const bool dft = is_posdef(f, 1e-9);
    const bool eig = min_eigenvalue(f) >= -1e-9;
    agree += dft == eig;
    positive += eig;
  }
  o.check(agree == total, fmt("%.0f / 500 agree", agree) + fmt(", %.0f positive definite", positive));
  return o;
}

Outcome bessel_radial() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double q0 = bessel_first_zero(0.0);
  o.check(std::abs(q0 - 2.404825558) <= 1e-8, fmt("q0 %.12f", q0));

  // d/du (u^{2a} j_a(s u)) = 2a u^{2a-1} j_{a-1}(s u).
  SplitMix64 rng(31);
  double worst_rel = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double s = rng.uniform(0.1, 5.0);
    const double u = rng.uniform(0.2, 10.0);
    auto F = [&](double v) { return std::pow(v, 2 * a) * bessel_j(a, s * v); };
    const double h = 1e-5;
    const double fd = (F(u + h) - F(u - h)) / (2 * h);
    const double rhs = 2 * a * std::pow(u, 2 * a - 1) * bessel_j(a - 1, s * u);
    const double scale = std::max(std::abs(rhs), 2 * a * std::pow(u, 2 * a - 1));
    worst_rel = std::max(worst_rel, std::abs(fd - rhs) / scale);
  }
  o.check(worst_rel <= 1e-6, fmt("derivative identity rel %.2e", worst_rel));

  // Ball transform against a tensor Gauss rule on the segment and the disk.
  double ball_err = 0;
  for (double s = 0; s <= 10.0001; s += 0.25) {
    for (int d : {1, 2}) {
      ball_err = std::max(ball_err, std::abs(ball_char_transform(d, s) - oracle::ball_transform(d, s)));
    }
  }
  o.check(ball_err <= 1e-8, fmt("ball transform %.2e", ball_err));

  const auto grid = uniform_grid(0.0, 30.0, 0.01);
  double sign = 0;
  for (int d : {1, 2, 3}) sign = std::max(sign, yudin_sign_check(d, grid).max_violation);
  o.check(sign <= 1e-9, fmt("Yudin sign violation %.2e", sign));

  double min_hat = INFINITY, tail = 0;
  for (int d : {1, 2, 3}) {
    for (double s = 0; s <= 3.0001; s += 0.05) {
      const double v = yudin_transform(d, s).value;
      min_hat = std::min(min_hat, v);
      if (s > 2.05) tail = std::max(tail, std::abs(v));
    }
  }
  o.check(min_hat >= -1e-5 && tail <= 1e-4, fmt("min y^ %.2e, tail %.2e", min_hat, tail));

  double hy = 0;
  for (int d : {1, 2}) {
    const GorbachevFunction H(d);
    const YudinFunction y(d + 2);
    for (double s = 0; s <= 3.0001; s += 0.5) {
      hy = std::max(hy, std::abs(hankel_transform(H.profile(), 0.5 * d - 1, s).value -
                                 hankel_transform(yudin_profile(y), 0.5 * d, s).value));
    }
  }
  o.check(hy <= 1e-5, fmt("H-Y connection %.2e", hy));

  bool gorb = true;
  for (int d : {1, 2, 3}) {
    const GorbachevReport r = gorbachev_check(d);
    gorb = gorb && r.negative && r.nondecreasing;
  }
  o.check(gorb, "H negative and nondecreasing on [q, 50]");
  const double secs = seconds_since(t0);
  o.check(secs < 60.0, fmt("%.3f s", secs));
  return o;
}

// The dimension-8 constants are quoted, never computed; the check is that the
// README records them as such.
Outcome referenced_constants() {
  Outcome o;
  std::ifstream in(DELSARTE_README);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  o.check(!text.empty(), "README readable");
  o.check(text.find("2^-4") != std::string::npos, "D(B) = 2^-4 in R^8 recorded");
  o.check(text.find("0.015854") != std::string::npos, "T(B) = 0.015854... recorded");
  o.check(text.find("not computed") != std::string::npos, "marked as not computed");
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"trinomial optimum", trinomial_optimum},
      {"endpoint value", endpoint_value},
      {"trinomial example chain", example_chain},
      {"tile-theorem equality", tile_equality},
      {"main-theorem fuzz", main_fuzz},
      {"inequality suites", inequality_suites},
      {"posdef oracle equivalence", posdef_oracle},
      {"Bessel and radial", bessel_radial},
      {"dimension-8 constants referenced only", referenced_constants},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);
  }
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "criterion must be in [1, %zu]\n", all.size());
    return 1;
  }
  bool ok = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome out;
    try {
      out = all[i].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.details = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s | %s\n", out.pass ? "PASS" : "FAIL", i + 1, all[i].name,
                out.details.c_str());
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
