#include "fogcloud/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace fogcloud {

namespace {

constexpr double kPivotEps = 1e-9;

struct Tableau {
  int m = 0;           // rows
  int ncols = 0;       // columns excluding rhs
  int art_begin = 0;   // first artificial column
  std::vector<std::vector<double>> a;  // m rows, ncols+1 (rhs last)
  std::vector<double> obj;             // ncols+1, reduced costs + negated value
  std::vector<int> basis;              // m entries

  void pivot(int row, int col) {
    auto& pr = a[row];
    const double p = pr[col];
    for (int c = 0; c <= ncols; ++c) pr[c] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c <= ncols; ++c) a[r][c] -= f * pr[c];
    }
    const double f = obj[col];
    if (f != 0.0)
      for (int c = 0; c <= ncols; ++c) obj[c] -= f * pr[c];
    basis[row] = col;
  }

  // Bland's rule: lowest-index entering column with negative reduced
  // cost, lowest-index basic variable among the ratio-test ties.
  // Returns false when optimal, throws nothing; unbounded flagged via out.
  enum class StepResult { Optimal, Pivoted, Unbounded };
  StepResult step(bool allow_artificial_entering) {
    int col = -1;
    const int limit = allow_artificial_entering ? ncols : art_begin;
    for (int c = 0; c < limit; ++c)
      if (obj[c] < -kPivotEps) {
        col = c;
        break;
      }
    if (col < 0) return StepResult::Optimal;

    int row = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      if (a[r][col] <= kPivotEps) continue;
      const double ratio = a[r][ncols] / a[r][col];
      if (ratio < best_ratio - kPivotEps ||
          (ratio < best_ratio + kPivotEps && (row < 0 || basis[r] < basis[row]))) {
        best_ratio = ratio;
        row = r;
      }
    }
    if (row < 0) return StepResult::Unbounded;
    pivot(row, col);
    return StepResult::Pivoted;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const int n = problem.num_vars;
  const int m = static_cast<int>(problem.rows.size());
  LpSolution sol;

  int num_slack = 0;
  for (const auto& row : problem.rows)
    if (row.relation == LpRow::Relation::LessEqual) ++num_slack;

  Tableau t;
  t.m = m;
  t.art_begin = n + num_slack;
  t.ncols = t.art_begin + m;  // one artificial per row, kept for dual readout
  t.a.assign(m, std::vector<double>(t.ncols + 1, 0.0));
  t.basis.assign(m, -1);

  std::vector<double> row_sign(m, 1.0);
  std::vector<int> art_col(m, -1);
  {
    int slack = 0;
    for (int r = 0; r < m; ++r) {
      const auto& row = problem.rows[r];
      const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
      row_sign[r] = sign;
      for (int c = 0; c < n; ++c) t.a[r][c] = sign * row.coeffs[c];
      t.a[r][t.ncols] = sign * row.rhs;
      if (row.relation == LpRow::Relation::LessEqual) {
        t.a[r][n + slack] = sign;
        ++slack;
      }
      art_col[r] = t.art_begin + r;
      t.a[r][art_col[r]] = 1.0;
      t.basis[r] = art_col[r];
    }
  }

  // Phase 1: minimize the sum of artificials.
  t.obj.assign(t.ncols + 1, 0.0);
  for (int c = t.art_begin; c < t.ncols; ++c) t.obj[c] = 1.0;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= t.ncols; ++c) t.obj[c] -= t.a[r][c];

  for (;;) {
    const auto res = t.step(true);
    if (res == Tableau::StepResult::Optimal) break;
    if (res == Tableau::StepResult::Unbounded) {
      sol.status = LpSolution::Status::Infeasible;  // cannot happen for phase 1
      return sol;
    }
  }
  if (-t.obj[t.ncols] > 1e-7) {
    sol.status = LpSolution::Status::Infeasible;
    return sol;
  }

  // Drive zero-valued artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (t.basis[r] < t.art_begin) continue;
    int col = -1;
    for (int c = 0; c < t.art_begin; ++c)
      if (std::abs(t.a[r][c]) > kPivotEps) {
        col = c;
        break;
      }
    if (col >= 0) t.pivot(r, col);
    // else: redundant row, artificial stays basic at value zero
  }

  // Phase 2: original objective.
  t.obj.assign(t.ncols + 1, 0.0);
  for (int c = 0; c < n; ++c) t.obj[c] = problem.objective[c];
  for (int r = 0; r < m; ++r) {
    const int b = t.basis[r];
    if (b < n && problem.objective[b] != 0.0) {
      const double f = problem.objective[b];
      for (int c = 0; c <= t.ncols; ++c) t.obj[c] -= f * t.a[r][c];
    }
  }

  for (;;) {
    const auto res = t.step(false);
    if (res == Tableau::StepResult::Optimal) break;
    if (res == Tableau::StepResult::Unbounded) {
      sol.status = LpSolution::Status::Unbounded;
      return sol;
    }
  }

  sol.status = LpSolution::Status::Optimal;
  sol.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r)
    if (t.basis[r] < n) sol.x[t.basis[r]] = t.a[r][t.ncols];
  sol.objective = -t.obj[t.ncols];

  // The artificial column of row r carries -y_r in the final objective
  // row; undo the rhs sign normalization to map back to the input rows.
  sol.duals.assign(m, 0.0);
  for (int r = 0; r < m; ++r)
    sol.duals[r] = row_sign[r] * -t.obj[art_col[r]];
  return sol;
}

}  // namespace fogcloud
