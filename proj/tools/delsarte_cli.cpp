// delsarte_cli: extremal constants, verification suites, radial tables and
// the trinomial construction from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 a verification failed,
// 3 solver or quadrature failure.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "delsarte/delsarte.hpp"

using namespace delsarte;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::solver_failure:
    case ErrorKind::quadrature_error:
    case ErrorKind::singular_point:
    case ErrorKind::internal_error:
      return kExitNumeric;
    case ErrorKind::construction_error:
      return kExitVerify;
    default:
      return kExitInput;
  }
}

json tolerances() {
  return {{"theorem", kTheoremTol},
          {"posdef", kPosdefTol},
          {"trinomial_nonneg", kTrinomialTol},
          {"yudin_sign", 1e-9},
          {"yudin_transform_negative", 1e-5},
          {"yudin_transform_support", 1e-4},
          {"quadrature_rel", QuadratureConfig{}.rel_tol},
          {"quadrature_abs", QuadratureConfig{}.abs_tol}};
}

struct Output {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;

  void emit(const json& result) const {
    json out;
    out["artifact_version"] = kArtifactVersion;
    out["command"] = command;
    out["seed"] = seed ? json(*seed) : json(nullptr);
    out["tolerances"] = tolerances();
    out["warnings"] = warnings;
    out["result"] = result;
    std::cout << out.dump(2) << "\n";
  }

  void emit_error(const Error& e) const {
    json out;
    out["artifact_version"] = kArtifactVersion;
    out["command"] = command;
    out["seed"] = seed ? json(*seed) : json(nullptr);
    out["tolerances"] = tolerances();
    out["warnings"] = warnings;
    out["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    std::cout << out.dump(2) << "\n";
  }
};

void print_csv(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
  std::cout << "\n";
  char buf[64];
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      std::cout << (i ? "," : "") << buf;
    }
    std::cout << "\n";
  }
}

json table_json(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  return {{"columns", columns}, {"rows", rows}};
}

json extremal_json(const ExtremalResult& r) {
  return {{"value", r.value},
          {"status", to_string(r.status)},
          {"dual_bound", r.dual_bound},
          {"optimizer", r.optimizer.values()},
          {"spectrum", r.spectrum},
          {"lp", {{"variables", r.lp_variables},
                  {"rows", r.lp_rows},
                  {"iterations", r.lp_iterations},
                  {"bland_engaged", r.bland_engaged}}}};
}

json suite_json(const SuiteReport& s) {
  json outcomes = json::array();
  for (const auto& o : s.outcomes) {
    json item = {{"index", o.index}, {"orders", o.orders}, {"check", o.check}, {"lhs", o.lhs},
                 {"rhs", o.rhs},     {"pass", o.pass},     {"tight", o.tight}};
    if (!o.error.empty()) item["error"] = o.error;
    outcomes.push_back(item);
  }
  return {{"suite", s.suite},       {"instances", s.instances}, {"checks", s.outcomes.size()},
          {"violations", s.violations}, {"errors", s.errors},   {"tight", s.tight},
          {"pass", s.pass},         {"outcomes", outcomes}};
}

// Options shared by the commands that take a group and sets.
struct SetArgs {
  std::string group = R"({"orders":[6],"normalization":"probability"})";
  std::string plus = "all";
  std::string minus = "empty";
  std::string h;
  std::string lambda;
  std::string k;
  long long multiplier = 1;
  std::string group2;
  std::string plus2 = "all";
  std::string minus2 = "empty";
};

Group read_group(const std::string& text, const std::string& what) {
  return io::parse_group(io::parse(text, what));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal constants for positive definite functions on finite abelian groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));
  Output out;

  // constant
  SetArgs cargs;
  std::string kind = "two-set";
  auto* constant = app.add_subcommand("constant", "LP value of C(Omega+, Omega-), T(Omega) or D(Omega+)");
  constant->add_option("--group", cargs.group, "group as JSON");
  constant->add_option("--omega-plus,--omega", cargs.plus, "Omega+ (or Omega for turan)");
  constant->add_option("--omega-minus", cargs.minus, "Omega- (two-set only)");
  constant->add_option("--kind", kind, "two-set | turan | delsarte")
      ->check(CLI::IsMember({"two-set", "turan", "delsarte"}));

  // verify
  SetArgs vargs;
  std::string suite;
  int fuzz = 0;
  std::uint64_t seed = 1;
  int max_n = 24;
  unsigned threads = 0;
  bool failures_only = false;
  auto* verify = app.add_subcommand("verify", "theorem checks on one instance or a randomized suite");
  verify->add_option("suite", suite, "tile | main | hom | product | auto | density | ordering")
      ->required()
      ->check(CLI::IsMember({"tile", "main", "hom", "product", "auto", "density", "ordering"}));
  verify->add_option("--fuzz", fuzz, "number of random instances");
  verify->add_option("--seed", seed, "SplitMix64 seed");
  verify->add_option("--max-n", max_n, "largest group order drawn")->check(CLI::Range(2, 200));
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  verify->add_flag("--failures-only", failures_only, "list only failing instances");
  verify->add_option("--group", vargs.group, "group as JSON");
  verify->add_option("--omega-plus", vargs.plus, "Omega+");
  verify->add_option("--omega-minus", vargs.minus, "Omega-");
  verify->add_option("--H", vargs.h, "H (tile, density)");
  verify->add_option("--lambda", vargs.lambda, "Lambda (tile, main, density)");
  verify->add_option("--k", vargs.k, "subgroup K (hom)");
  verify->add_option("--multiplier", vargs.multiplier, "automorphism x -> m x (auto)");
  verify->add_option("--group2", vargs.group2, "second factor (product)");
  verify->add_option("--omega-plus2", vargs.plus2, "Omega+ on the second factor");
  verify->add_option("--omega-minus2", vargs.minus2, "Omega- on the second factor");

  // radial
  std::string radial_kind;
  int dim = 2;
  double from = 0.0, to = 10.0, step = 0.1;
  bool csv = false;
  auto* radial = app.add_subcommand("radial", "tables of Y_d, its transform, H and the ball transform");
  radial->add_option("table", radial_kind, "yudin | hankel | gorbachev-H | ball-transform")
      ->required()
      ->check(CLI::IsMember({"yudin", "hankel", "gorbachev-H", "ball-transform"}));
  radial->add_option("--d", dim, "dimension")->check(CLI::Range(1, 64));
  radial->add_option("--from", from, "first abscissa");
  radial->add_option("--to", to, "last abscissa");
  radial->add_option("--step", step, "grid step")->check(CLI::PositiveNumber);
  radial->add_flag("--csv", csv, "CSV instead of JSON");

  // trinomial
  std::string tri_kind;
  bool tri_csv = false;
  auto* trinomial = app.add_subcommand("trinomial", "extremal trinomial and the 1-D lower bound");
  trinomial->add_option("task", tri_kind, "optimize | example51")
      ->required()
      ->check(CLI::IsMember({"optimize", "example51"}));
  trinomial->add_flag("--csv", tri_csv, "example51: emit Phi on its grid as CSV");

  // density
  std::string dens_kind;
  std::string forbidden = "[1,4]";
  std::string intervals;
  int max_period = 10;
  std::string dgroup = R"({"orders":[10],"normalization":"probability"})";
  std::string dlambda;
  int period = 0;
  std::string residues;
  auto* density = app.add_subcommand("density", "periodic density search and a.u.u.d.");
  density->add_option("task", dens_kind, "search | auud")
      ->required()
      ->check(CLI::IsMember({"search", "auud"}));
  density->add_option("--forbidden", forbidden, "forbidden positive differences, JSON list");
  density->add_option("--intervals", intervals, "real forbidden set as a JSON list of intervals");
  density->add_option("--max-period", max_period, "largest period searched")
      ->check(CLI::Range(1, kMaxSearchPeriod));
  density->add_option("--group", dgroup, "finite group (auud)");
  density->add_option("--lambda", dlambda, "finite Lambda (auud)");
  density->add_option("--period", period, "period of a periodic set in Z (auud)");
  density->add_option("--residues", residues, "residues of a periodic set, JSON list (auud)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*constant) {
      out.command = "constant " + kind;
      const Group g = read_group(cargs.group, "--group");
      const SymSet plus = io::parse_symset(g, cargs.plus, "omega-plus", out.warnings);
      ExtremalResult r;
      json sets = {{"omega_plus", io::set_json(plus.set())}};
      if (kind == "turan") {
        r = turan(g, plus);
      } else if (kind == "delsarte") {
        r = delsarte_constant(g, plus);
      } else {
        const SymSet minus = io::parse_symset(g, cargs.minus, "omega-minus", out.warnings);
        sets["omega_minus"] = io::set_json(minus.set());
        r = two_set_constant(g, plus, minus);
      }
      json res = extremal_json(r);
      res["group"] = io::group_json(g);
      res["sets"] = sets;
      out.emit(res);
      return kExitOk;
    }

    if (*verify) {
      out.command = "verify " + suite;
      const bool explicit_instance = fuzz == 0 && (!vargs.lambda.empty() || !vargs.h.empty() ||
                                                   !vargs.k.empty() || !vargs.group2.empty() ||
                                                   vargs.multiplier != 1);
      if (!explicit_instance) {
        out.seed = seed;
        SuiteOptions opt;
        opt.count = fuzz > 0 ? fuzz : 50;
        opt.seed = seed;
        opt.max_n = max_n;
        opt.threads = threads;
        const SuiteReport rep = run_named_suite(suite, opt);
        json res = suite_json(rep);
        if (failures_only) {
          json kept = json::array();
          for (const auto& o : res["outcomes"]) {
            if (!o["pass"].get<bool>() || o.contains("error")) kept.push_back(o);
          }
          res["outcomes"] = kept;
        }
        out.emit(res);
        return rep.pass ? kExitOk : kExitVerify;
      }

      const Group g = read_group(vargs.group, "--group");
      auto need = [](const std::string& v, const char* flag) {
        require(!v.empty(), ErrorKind::invalid_input, std::string(flag) + " is required");
        return v;
      };
      json res;
      bool pass = false;
      if (suite == "tile") {
        const Subset h = io::parse_set(g, need(vargs.h, "--H"), "h");
        const Subset lambda = io::parse_set(g, need(vargs.lambda, "--lambda"), "lambda");
        const SymSet minus = io::parse_symset(g, vargs.minus, "omega-minus", out.warnings);
        const TileReport r = verify_tile_theorem(g, h, lambda, minus);
        res = {{"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
        pass = r.pass;
      } else if (suite == "main") {
        const SymSet plus = io::parse_symset(g, vargs.plus, "omega-plus", out.warnings);
        const Subset lambda = io::parse_set(g, need(vargs.lambda, "--lambda"), "lambda");
        const MainReport r = verify_main_theorem(g, plus, lambda);
        res = {{"delsarte", r.delsarte},          {"bound", r.bound},
               {"lambda_size", r.lambda_size},    {"phi_at_zero", r.phi_at_zero},
               {"phi_integral", r.phi_integral},  {"phi_identity_error", r.phi_identity_error},
               {"phi_min_fourier", r.phi_min_fourier}, {"tight", r.tight}, {"pass", r.pass}};
        pass = r.pass;
      } else if (suite == "hom") {
        const Subset k = io::parse_set(g, need(vargs.k, "--k"), "k");
        const SymSet plus = io::parse_symset(g, vargs.plus, "omega-plus", out.warnings);
        const SymSet minus = io::parse_symset(g, vargs.minus, "omega-minus", out.warnings);
        const HomomorphismReport r = verify_homomorphism_bound(g, k, plus, minus);
        res = {{"lhs", r.lhs}, {"quotient", r.quotient}, {"subgroup", r.subgroup},
               {"rhs", r.rhs}, {"gap", r.gap}, {"quotient_orders", r.quotient_orders},
               {"subgroup_orders", r.subgroup_orders}, {"pass", r.pass}};
        pass = r.pass;
      } else if (suite == "product") {
        const Group g2 = read_group(need(vargs.group2, "--group2"), "--group2");
        const SymSet p1 = io::parse_symset(g, vargs.plus, "omega-plus", out.warnings);
        const SymSet m1 = io::parse_symset(g, vargs.minus, "omega-minus", out.warnings);
        const SymSet p2 = io::parse_symset(g2, vargs.plus2, "omega-plus2", out.warnings);
        const SymSet m2 = io::parse_symset(g2, vargs.minus2, "omega-minus2", out.warnings);
        const ProductReport r = verify_product_bound(g, p1, m1, g2, p2, m2);
        res = {{"lhs", r.lhs}, {"first", r.first}, {"second", r.second},
               {"rhs", r.rhs}, {"gap", r.gap},     {"pass", r.pass}};
        pass = r.pass;
      } else if (suite == "auto") {
        const SymSet plus = io::parse_symset(g, vargs.plus, "omega-plus", out.warnings);
        const SymSet minus = io::parse_symset(g, vargs.minus, "omega-minus", out.warnings);
        const auto phi = multiplication_map(g, vargs.multiplier);
        const AutomorphismReport r = verify_automorphism_invariance(g, phi, plus, minus);
        res = {{"original", r.original}, {"mapped", r.mapped}, {"difference", r.difference},
               {"pass", r.pass}};
        pass = r.pass;
      } else if (suite == "density") {
        const Subset h = io::parse_set(g, need(vargs.h, "--H"), "h");
        const Subset lambda = io::parse_set(g, need(vargs.lambda, "--lambda"), "lambda");
        const DensityBoundsReport r = density_bounds_check(g, h, lambda);
        res = {{"packs", r.packs},
               {"covers", r.covers},
               {"tiles", r.tiles},
               {"density", io::rational_json(r.density)},
               {"inverse_measure", io::rational_json(r.inverse_measure)},
               {"relation", r.relation},
               {"pass", r.pass}};
        pass = r.pass;
      } else {
        fail(ErrorKind::invalid_input, "the ordering suite only runs randomized");
      }
      res["group"] = io::group_json(g);
      out.emit(res);
      return pass ? kExitOk : kExitVerify;
    }

    if (*radial) {
      out.command = "radial " + radial_kind;
      require(to >= from && from >= 0.0, ErrorKind::invalid_input, "need 0 <= --from <= --to");
      const std::vector<double> grid = uniform_grid(from, to, step);
      std::vector<std::string> cols;
      std::vector<std::vector<double>> rows;
      json checks;
      bool pass = true;
      if (radial_kind == "yudin") {
        const YudinFunction y(dim);
        cols = {"t", "Y"};
        for (double t : grid) rows.push_back({t, y(t)});
        const SignReport s = yudin_sign_check(dim, grid);
        checks = {{"zero", y.zero()}, {"sign_max_violation", s.max_violation},
                  {"worst_t", s.worst_t}, {"pass", s.pass}};
        pass = s.pass;
      } else if (radial_kind == "hankel") {
        cols = {"s", "yhat", "quadrature_error", "tail_error"};
        double most_negative = 0.0, beyond = 0.0;
        for (double s : grid) {
          const HankelResult r = yudin_transform(dim, s);
          rows.push_back({s, r.value, r.quadrature_error, r.tail_error});
          most_negative = std::min(most_negative, r.value);
          if (s > 2.05) beyond = std::max(beyond, std::abs(r.value));
        }
        pass = most_negative >= -1e-5 && beyond <= 1e-4;
        checks = {{"min_value", most_negative}, {"max_abs_beyond_2_05", beyond}, {"pass", pass}};
      } else if (radial_kind == "gorbachev-H") {
        const GorbachevFunction h(dim);
        cols = {"t", "H"};
        for (double t : grid) rows.push_back({t, h(t)});
        const GorbachevReport r = gorbachev_check(dim);
        checks = {{"h_at_zero", r.h_at_zero},       {"zero", h.zero()},
                  {"max_on_tail", r.max_positive},  {"max_decrease", r.max_decrease},
                  {"fitted_c", r.fitted_c},         {"min_scaled", r.min_scaled},
                  {"leading_kappa", r.leading_kappa}, {"pass", r.pass}};
        pass = r.pass;
      } else {
        cols = {"x", "chi_hat"};
        for (double x : grid) rows.push_back({x, ball_char_transform(dim, x)});
        checks = {{"ball_volume", ball_volume(dim)}, {"pass", true}};
      }
      if (csv) {
        print_csv(cols, rows);
      } else {
        json res = table_json(cols, rows);
        res["d"] = dim;
        res["checks"] = checks;
        out.emit(res);
      }
      return pass ? kExitOk : kExitVerify;
    }

    if (*trinomial) {
      out.command = "trinomial " + tri_kind;
      if (tri_kind == "optimize") {
        const TrinomialOptimum o = optimize_trinomial();
        out.emit({{"z", o.z_star},
                  {"value", o.value},
                  {"a", o.coeffs.a},
                  {"b", o.coeffs.b},
                  {"min_value", o.nonneg.min_value},
                  {"argmin", o.nonneg.argmin},
                  {"nonnegative", o.nonneg.pass}});
        return kExitOk;
      }
      const Example51Report r = example51_lower_bound();
      if (tri_csv) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < r.grid.size(); ++i) rows.push_back({r.grid[i], r.phi[i]});
        print_csv({"x", "phi"}, rows);
        return kExitOk;
      }
      const Example51Comparison c = example51_comparison();
      json checks = json::array();
      for (const auto& k : r.checks) checks.push_back({{"name", k.name}, {"pass", k.pass}, {"value", k.value}});
      json cases = json::array();
      for (const auto& k : c.cases) {
        cases.push_back({{"h", k.h}, {"n", k.n}, {"m", k.m}, {"lp_value", k.lp_value},
                         {"tile_value", k.tile_value}, {"pass", k.pass}});
      }
      out.emit({{"z", r.z_star},
                {"a", r.coeffs.a},
                {"b", r.coeffs.b},
                {"bound", r.bound},
                {"checks", checks},
                {"comparison", {{"discrete_tiles", cases},
                                {"bound_exceeds_two", c.bound_exceeds_two},
                                {"q_density", io::rational_json(c.q_density)},
                                {"w_density", io::rational_json(c.w_density)},
                                {"density_pass", c.density_pass}}},
                {"pass", r.pass && c.pass}});
      return r.pass && c.pass ? kExitOk : kExitVerify;
    }

    if (*density) {
      out.command = "density " + dens_kind;
      if (dens_kind == "search") {
        std::vector<std::int64_t> f;
        json source;
        if (!intervals.empty()) {
          const auto ivs = io::parse_intervals(io::parse(intervals, "--intervals"));
          f = integer_shadow(ivs);
          source = {{"intervals", io::parse(intervals, "--intervals")}};
        } else {
          const json j = io::parse(forbidden, "--forbidden");
          require(j.is_array(), ErrorKind::invalid_input, "--forbidden must be a JSON list");
          for (const auto& v : j) f.push_back(io::as_integer(v, "--forbidden"));
        }
        source["forbidden"] = f;
        const DensitySearchResult r = max_density_search(f, max_period);
        out.emit({{"density", io::rational_json(r.density)},
                  {"witness", {{"period", r.witness.period}, {"residues", r.witness.residues}}},
                  {"max_period", r.max_period},
                  {"nodes_visited", r.nodes_visited},
                  {"input", source}});
        return kExitOk;
      }
      if (period > 0) {
        PeriodicSet s{period, {}};
        const json j = io::parse(residues.empty() ? "[]" : residues, "--residues");
        require(j.is_array(), ErrorKind::invalid_input, "--residues must be a JSON list");
        for (const auto& v : j) s.residues.push_back(static_cast<int>(io::as_integer(v, "--residues")));
        s.validate();
        out.emit({{"density", io::rational_json(auud_periodic(s))}, {"period", period}});
        return kExitOk;
      }
      const Group g = read_group(dgroup, "--group");
      require(!dlambda.empty(), ErrorKind::invalid_input, "--lambda or --period is required");
      const Subset lambda = io::parse_set(g, dlambda, "lambda");
      out.emit({{"density", io::rational_json(auud_finite(g, lambda))}, {"group", io::group_json(g)}});
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    out.emit_error(e);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}
