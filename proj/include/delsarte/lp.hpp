#pragma once

// Dense two-phase revised simplex.
//
//   maximize    c . x
//   subject to  A x (<=, =, >=) b,   lower <= x <= upper
//
// Bounds may be infinite. Internally every variable is shifted, reflected or
// split so that it is nonnegative, finite upper bounds become rows, and rows
// are negated where needed so that b >= 0. The basis inverse is kept
// explicitly (product-form updates, periodic refactorization). Pricing is
// Dantzig's rule until a run of degenerate pivots exceeds a threshold, after
// which Bland's rule is used for the rest of the phase.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "delsarte/error.hpp"

namespace delsarte {

enum class RowSense { le, eq, ge };
enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<RowSense> sense;
  std::vector<double> lower;
  std::vector<double> upper;

  // n variables, each >= 0 and unbounded above.
  static LpProblem with_variables(int n) {
    LpProblem p;
    p.objective.assign(n, 0.0);
    p.lower.assign(n, 0.0);
    p.upper.assign(n, kInf);
    return p;
  }

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  void add_row(std::vector<double> coeffs, RowSense s, double b) {
    rows.push_back(std::move(coeffs));
    sense.push_back(s);
    rhs.push_back(b);
  }

  void set_free(int j) {
    lower[j] = -kInf;
    upper[j] = kInf;
  }

  void validate() const {
    const int n = num_variables();
    require(static_cast<int>(lower.size()) == n && static_cast<int>(upper.size()) == n,
            ErrorKind::invalid_input, "LP bound vectors have the wrong length");
    require(rhs.size() == rows.size() && sense.size() == rows.size(), ErrorKind::invalid_input,
            "LP row data has inconsistent lengths");
    for (double c : objective) {
      require(std::isfinite(c), ErrorKind::invalid_input, "LP objective has a non-finite entry");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(static_cast<int>(rows[i].size()) == n, ErrorKind::invalid_input,
              "LP row " + std::to_string(i) + " has the wrong length");
      for (double a : rows[i]) {
        require(std::isfinite(a), ErrorKind::invalid_input, "LP matrix has a non-finite entry");
      }
      require(std::isfinite(rhs[i]), ErrorKind::invalid_input, "LP rhs has a non-finite entry");
    }
    for (int j = 0; j < n; ++j) {
      require(!std::isnan(lower[j]) && !std::isnan(upper[j]) && lower[j] != kInf &&
                  upper[j] != -kInf,
              ErrorKind::invalid_input, "LP bounds are malformed");
    }
  }
};

struct LpOptions {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  int degenerate_threshold = 50;
  int refactor_interval = 64;
  int max_iterations = 0;  // 0: 200 * (rows + columns) + 1000
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  std::vector<double> dual;      // one multiplier per constraint row
  double dual_objective = 0.0;   // weak-duality bound certified by `dual`
  double primal_residual = 0.0;  // max violation of rows and bounds
  double dual_infeasibility = 0.0;
  int iterations = 0;
  bool bland_engaged = false;
};

namespace detail {

class SimplexEngine {
 public:
  SimplexEngine(const LpProblem& p, const LpOptions& opt) : p_(p), opt_(opt) {}

  LpSolution run() {
    p_.validate();
    LpSolution sol;
    for (int j = 0; j < p_.num_variables(); ++j) {
      if (p_.lower[j] > p_.upper[j]) {
        sol.status = LpStatus::infeasible;
        return sol;
      }
    }
    build_standard_form();
    max_iter_ = opt_.max_iterations > 0 ? opt_.max_iterations : 200 * (m_ + ncols_) + 1000;

    // Phase 1: maximize -(sum of artificials).
    std::vector<double> phase1_cost(ncols_, 0.0);
    for (int j = first_artificial_; j < ncols_; ++j) phase1_cost[j] = -1.0;
    if (!iterate(phase1_cost, /*allow_artificial=*/true)) {
      fail(ErrorKind::internal_error, "phase 1 reported unbounded");
    }
    double infeas = 0.0;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] >= first_artificial_) infeas += xb_[r];
    }
    double bscale = 1.0;
    for (double b : b_) bscale = std::max(bscale, std::abs(b));
    if (infeas > 1e-7 * bscale) {
      sol.status = LpStatus::infeasible;
      sol.iterations = iterations_;
      sol.bland_engaged = bland_seen_;
      return sol;
    }
    drive_out_artificials();

    // Phase 2.
    const bool bounded = iterate(cost_, /*allow_artificial=*/false);
    sol.iterations = iterations_;
    sol.bland_engaged = bland_seen_;
    if (!bounded) {
      sol.status = LpStatus::unbounded;
      return sol;
    }
    sol.status = LpStatus::optimal;
    extract(sol);
    return sol;
  }

 private:
  struct ColumnMap {
    int plus = -1;   // standard column for the positive part
    int minus = -1;  // standard column for the negative part (free variables)
    double shift = 0.0;
    double sign = 1.0;
  };

  void build_standard_form() {
    const int n = p_.num_variables();
    const int m0 = p_.num_rows();
    map_.assign(n, {});
    std::vector<std::vector<double>> struct_cols;  // columns over original rows
    std::vector<double> struct_cost;
    std::vector<std::pair<int, double>> bound_rows;  // (std column, upper - lower)
    constant_ = 0.0;

    auto original_column = [&](int j) {
      std::vector<double> col(m0);
      for (int i = 0; i < m0; ++i) col[i] = p_.rows[i][j];
      return col;
    };

    for (int j = 0; j < n; ++j) {
      const double lo = p_.lower[j];
      const double hi = p_.upper[j];
      ColumnMap cm;
      auto col = original_column(j);
      if (std::isfinite(lo)) {
        cm.shift = lo;
        cm.sign = 1.0;
        cm.plus = static_cast<int>(struct_cols.size());
        struct_cols.push_back(col);
        struct_cost.push_back(p_.objective[j]);
        if (std::isfinite(hi)) bound_rows.push_back({cm.plus, hi - lo});
      } else if (std::isfinite(hi)) {
        cm.shift = hi;
        cm.sign = -1.0;
        cm.plus = static_cast<int>(struct_cols.size());
        for (double& v : col) v = -v;
        struct_cols.push_back(col);
        struct_cost.push_back(-p_.objective[j]);
      } else {
        cm.plus = static_cast<int>(struct_cols.size());
        struct_cols.push_back(col);
        struct_cost.push_back(p_.objective[j]);
        cm.minus = static_cast<int>(struct_cols.size());
        for (double& v : col) v = -v;
        struct_cols.push_back(col);
        struct_cost.push_back(-p_.objective[j]);
      }
      constant_ += p_.objective[j] * cm.shift;
      map_[j] = cm;
    }

    const int ns = static_cast<int>(struct_cols.size());
    m_ = m0 + static_cast<int>(bound_rows.size());
    b_.assign(m_, 0.0);
    row_flip_.assign(m_, 1.0);
    std::vector<RowSense> sense(m_, RowSense::le);
    for (int i = 0; i < m0; ++i) {
      double b = p_.rhs[i];
      for (int j = 0; j < n; ++j) b -= p_.rows[i][j] * map_[j].shift;
      b_[i] = b;
      sense[i] = p_.sense[i];
    }
    for (std::size_t t = 0; t < bound_rows.size(); ++t) {
      b_[m0 + t] = bound_rows[t].second;
      sense[m0 + t] = RowSense::le;
    }

    // Full column set: structural, then slack/surplus, then artificials.
    cols_.clear();
    cost_.clear();
    for (int j = 0; j < ns; ++j) {
      std::vector<double> col(m_, 0.0);
      for (int i = 0; i < m0; ++i) col[i] = struct_cols[j][i];
      cols_.push_back(std::move(col));
      cost_.push_back(struct_cost[j]);
    }
    for (std::size_t t = 0; t < bound_rows.size(); ++t) {
      cols_[bound_rows[t].first][m0 + t] = 1.0;
    }
    num_structural_ = ns;

    for (int i = 0; i < m_; ++i) {
      if (b_[i] < 0) {
        b_[i] = -b_[i];
        row_flip_[i] = -1.0;
        for (auto& col : cols_) col[i] = -col[i];
        if (sense[i] == RowSense::le) {
          sense[i] = RowSense::ge;
        } else if (sense[i] == RowSense::ge) {
          sense[i] = RowSense::le;
        }
      }
    }

    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (sense[i] == RowSense::eq) continue;
      std::vector<double> col(m_, 0.0);
      col[i] = sense[i] == RowSense::le ? 1.0 : -1.0;
      if (sense[i] == RowSense::le) basis_[i] = static_cast<int>(cols_.size());
      cols_.push_back(std::move(col));
      cost_.push_back(0.0);
    }
    first_artificial_ = static_cast<int>(cols_.size());
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= 0) continue;
      std::vector<double> col(m_, 0.0);
      col[i] = 1.0;
      basis_[i] = static_cast<int>(cols_.size());
      cols_.push_back(std::move(col));
      cost_.push_back(0.0);
    }
    ncols_ = static_cast<int>(cols_.size());
    in_basis_.assign(ncols_, -1);
    for (int r = 0; r < m_; ++r) in_basis_[basis_[r]] = r;
    refactor();
  }

  // Rebuilds B^{-1} by Gauss-Jordan with partial pivoting and recomputes x_B.
  void refactor() {
    const int m = m_;
    std::vector<std::vector<double>> a(m, std::vector<double>(2 * m, 0.0));
    for (int r = 0; r < m; ++r) {
      const auto& col = cols_[basis_[r]];
      for (int i = 0; i < m; ++i) a[i][r] = col[i];
      a[r][m + r] = 1.0;
    }
    for (int c = 0; c < m; ++c) {
      int piv = c;
      for (int i = c + 1; i < m; ++i) {
        if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
      }
      if (std::abs(a[piv][c]) < 1e-12) {
        fail(ErrorKind::solver_failure, "basis matrix became singular");
      }
      std::swap(a[c], a[piv]);
      const double inv = 1.0 / a[c][c];
      for (double& v : a[c]) v *= inv;
      for (int i = 0; i < m; ++i) {
        if (i == c || a[i][c] == 0.0) continue;
        const double f = a[i][c];
        for (int j = c; j < 2 * m; ++j) a[i][j] -= f * a[c][j];
      }
    }
    binv_.assign(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) binv_[i][j] = a[i][m + j];
    }
    xb_.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int j = 0; j < m; ++j) acc += binv_[i][j] * b_[j];
      xb_[i] = acc < 0 && acc > -opt_.feasibility_tol ? 0.0 : acc;
    }
    since_refactor_ = 0;
  }

  std::vector<double> duals(const std::vector<double>& cost) const {
    std::vector<double> y(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (int i = 0; i < m_; ++i) y[i] += cb * binv_[r][i];
    }
    return y;
  }

  double reduced_cost(const std::vector<double>& cost, const std::vector<double>& y, int j) const {
    double d = cost[j];
    const auto& col = cols_[j];
    for (int i = 0; i < m_; ++i) d -= y[i] * col[i];
    return d;
  }

  std::vector<double> ftran(int j) const {
    std::vector<double> alpha(m_, 0.0);
    const auto& col = cols_[j];
    for (int i = 0; i < m_; ++i) {
      double acc = 0.0;
      for (int k = 0; k < m_; ++k) acc += binv_[i][k] * col[k];
      alpha[i] = acc;
    }
    return alpha;
  }

  void pivot(int r, int q, const std::vector<double>& alpha) {
    const double piv = alpha[r];
    for (double& v : binv_[r]) v /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || alpha[i] == 0.0) continue;
      const double f = alpha[i];
      for (int k = 0; k < m_; ++k) binv_[i][k] -= f * binv_[r][k];
    }
    in_basis_[basis_[r]] = -1;
    basis_[r] = q;
    in_basis_[q] = r;
    if (++since_refactor_ >= opt_.refactor_interval) refactor();
  }

  // Returns false when the objective is unbounded along some edge.
  bool iterate(const std::vector<double>& cost, bool allow_artificial) {
    bool bland = false;
    int degenerate_run = 0;
    while (true) {
      if (iterations_ >= max_iter_) {
        fail(ErrorKind::solver_failure, "iteration limit reached");
      }
      const auto y = duals(cost);
      int q = -1;
      double best = opt_.optimality_tol;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis_[j] >= 0) continue;
        if (!allow_artificial && j >= first_artificial_) continue;
        const double d = reduced_cost(cost, y, j);
        if (d <= opt_.optimality_tol) continue;
        if (bland) {
          q = j;
          break;
        }
        if (d > best) {
          best = d;
          q = j;
        }
      }
      if (q < 0) return true;

      const auto alpha = ftran(q);
      int r = -1;
      if (bland) {
        double theta = kInf;
        for (int i = 0; i < m_; ++i) {
          if (alpha[i] <= opt_.pivot_tol) continue;
          theta = std::min(theta, std::max(xb_[i], 0.0) / alpha[i]);
        }
        for (int i = 0; i < m_; ++i) {
          if (alpha[i] <= opt_.pivot_tol) continue;
          if (std::max(xb_[i], 0.0) / alpha[i] <= theta + 1e-12 &&
              (r < 0 || basis_[i] < basis_[r])) {
            r = i;
          }
        }
      } else {
        // Two-pass (Harris) ratio test: widest admissible step first, then the
        // largest pivot among rows that reach it.
        double theta_max = kInf;
        for (int i = 0; i < m_; ++i) {
          if (alpha[i] <= opt_.pivot_tol) continue;
          theta_max = std::min(theta_max, (std::max(xb_[i], 0.0) + opt_.feasibility_tol) / alpha[i]);
        }
        double best_alpha = 0.0;
        for (int i = 0; i < m_; ++i) {
          if (alpha[i] <= opt_.pivot_tol) continue;
          if (std::max(xb_[i], 0.0) / alpha[i] <= theta_max && alpha[i] > best_alpha) {
            best_alpha = alpha[i];
            r = i;
          }
        }
      }
      if (r < 0) return false;

      const double theta = std::max(xb_[r], 0.0) / alpha[r];
      for (int i = 0; i < m_; ++i) {
        if (i == r) continue;
        xb_[i] -= theta * alpha[i];
        if (xb_[i] < 0 && xb_[i] > -opt_.feasibility_tol) xb_[i] = 0.0;
      }
      xb_[r] = theta;
      pivot(r, q, alpha);
      ++iterations_;

      if (theta <= 1e-12) {
        if (++degenerate_run > opt_.degenerate_threshold) {
          bland = true;
          bland_seen_ = true;
        }
      } else {
        degenerate_run = 0;
      }
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < first_artificial_) continue;
      int q = -1;
      double best = opt_.pivot_tol;
      for (int j = 0; j < first_artificial_; ++j) {
        if (in_basis_[j] >= 0) continue;
        double v = 0.0;
        for (int k = 0; k < m_; ++k) v += binv_[r][k] * cols_[j][k];
        if (std::abs(v) > best) {
          best = std::abs(v);
          q = j;
        }
      }
      if (q < 0) continue;  // redundant row; the artificial stays basic at zero
      const auto alpha = ftran(q);
      const double theta = xb_[r] / alpha[r];
      for (int i = 0; i < m_; ++i) {
        if (i != r) xb_[i] -= theta * alpha[i];
      }
      xb_[r] = theta;
      pivot(r, q, alpha);
    }
  }

  void extract(LpSolution& sol) {
    refactor();
    std::vector<double> xs(ncols_, 0.0);
    for (int r = 0; r < m_; ++r) xs[basis_[r]] = xb_[r];

    const int n = p_.num_variables();
    sol.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const auto& cm = map_[j];
      double v = cm.shift + cm.sign * xs[cm.plus];
      if (cm.minus >= 0) v -= xs[cm.minus];
      sol.x[j] = v;
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < n; ++j) sol.objective_value += p_.objective[j] * sol.x[j];

    const auto y = duals(cost_);
    const int m0 = p_.num_rows();
    sol.dual.assign(m0, 0.0);
    for (int i = 0; i < m0; ++i) sol.dual[i] = y[i] * row_flip_[i];
    double dual_obj = constant_;
    for (int i = 0; i < m_; ++i) dual_obj += y[i] * b_[i];
    sol.dual_objective = dual_obj;

    double dinf = 0.0;
    for (int j = 0; j < first_artificial_; ++j) {
      dinf = std::max(dinf, reduced_cost(cost_, y, j));
    }
    sol.dual_infeasibility = dinf;

    double resid = 0.0;
    for (int i = 0; i < m0; ++i) {
      double ax = 0.0;
      for (int j = 0; j < n; ++j) ax += p_.rows[i][j] * sol.x[j];
      const double diff = ax - p_.rhs[i];
      switch (p_.sense[i]) {
        case RowSense::le: resid = std::max(resid, diff); break;
        case RowSense::ge: resid = std::max(resid, -diff); break;
        case RowSense::eq: resid = std::max(resid, std::abs(diff)); break;
      }
    }
    for (int j = 0; j < n; ++j) {
      resid = std::max(resid, p_.lower[j] - sol.x[j]);
      resid = std::max(resid, sol.x[j] - p_.upper[j]);
    }
    sol.primal_residual = resid;
  }

  const LpProblem& p_;
  LpOptions opt_;
  std::vector<ColumnMap> map_;
  std::vector<std::vector<double>> cols_;
  std::vector<double> cost_;
  std::vector<double> b_;
  std::vector<double> row_flip_;
  std::vector<int> basis_;
  std::vector<int> in_basis_;
  std::vector<std::vector<double>> binv_;
  std::vector<double> xb_;
  double constant_ = 0.0;
  int m_ = 0;
  int ncols_ = 0;
  int num_structural_ = 0;
  int first_artificial_ = 0;
  int iterations_ = 0;
  int max_iter_ = 0;
  int since_refactor_ = 0;
  bool bland_seen_ = false;
};

}  // namespace detail

inline LpSolution solve(const LpProblem& problem, const LpOptions& options = {}) {
  return detail::SimplexEngine(problem, options).run();
}

}  // namespace delsarte
