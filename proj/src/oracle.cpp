#include "fogcloud/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fogcloud {

namespace {

// Variable layout of the relaxed LP: alpha (N*J) then beta (N*J*K).
int var_alpha(int i, int j, int J) { return i * J + j; }
int var_beta(int i, int j, int k, int N, int J, int K) {
  return N * J + (i * J + j) * K + k;
}

}  // namespace

LpProblem assemble_lp(const Scenario& sc, const DerivedCoefficients& d,
                      bool fog_enabled) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  const int nvars = N * J + N * J * K;

  LpProblem lp;
  lp.num_vars = nvars;
  lp.objective.assign(nvars, 0.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      lp.objective[var_alpha(i, j, J)] = d.unit_fog_cost_u[idx_ij(i, j, J)];
      for (int k = 0; k < K; ++k)
        lp.objective[var_beta(i, j, k, N, J, K)] =
            d.unit_dispatch_cost_w[idx_ijk(i, j, k, J, K)];
    }

  // Workload balance: alpha + sum_k beta = lambda.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      LpRow row;
      row.relation = LpRow::Relation::Equal;
      row.coeffs.assign(nvars, 0.0);
      row.coeffs[var_alpha(i, j, J)] = 1.0;
      for (int k = 0; k < K; ++k) row.coeffs[var_beta(i, j, k, N, J, K)] = 1.0;
      row.rhs = sc.fog_devices[i].arrival_rate_lambda[j];
      lp.rows.push_back(std::move(row));
    }

  // Fog rate bounds.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      LpRow row;
      row.coeffs.assign(nvars, 0.0);
      row.coeffs[var_alpha(i, j, J)] = 1.0;
      row.rhs = fog_enabled ? d.alpha_ub_ij[idx_ij(i, j, J)] : 0.0;
      lp.rows.push_back(std::move(row));
    }

  // Link capacities.
  for (int k = 0; k < K; ++k) {
    LpRow row;
    row.coeffs.assign(nvars, 0.0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j)
        row.coeffs[var_beta(i, j, k, N, J, K)] = sc.applications[j].request_size_s;
    row.rhs = sc.data_centers[k].link_capacity_A;
    lp.rows.push_back(std::move(row));
  }

  // Cloud service-margin capacities.
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      LpRow row;
      row.coeffs.assign(nvars, 0.0);
      for (int i = 0; i < N; ++i) row.coeffs[var_beta(i, j, k, N, J, K)] = 1.0;
      row.rhs = sc.data_centers[k].service_rate_mu[j] * sc.data_centers[k].server_count_C[j] -
                d.e_jk[idx_jk(j, k, K)];
      lp.rows.push_back(std::move(row));
    }

  return lp;
}

OracleResult solve_lp_exact(const Scenario& sc, const DerivedCoefficients& d) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  OracleResult out;
  if (N * J + N * J * K > kOracleMaxVariables) {
    out.status = OracleResult::Status::TooLarge;
    return out;
  }
  const LpProblem lp = assemble_lp(sc, d, true);
  const LpSolution sol = solve_lp(lp);
  switch (sol.status) {
    case LpSolution::Status::Infeasible:
      out.status = OracleResult::Status::Infeasible;
      return out;
    case LpSolution::Status::Unbounded:
      out.status = OracleResult::Status::Unbounded;
      return out;
    case LpSolution::Status::Optimal:
      break;
  }
  out.status = OracleResult::Status::Optimal;
  out.objective = sol.objective;
  out.duals = sol.duals;
  out.alpha.assign(sol.x.begin(), sol.x.begin() + N * J);
  out.beta.assign(sol.x.begin() + N * J, sol.x.end());
  return out;
}

KktReport kkt_check(const std::vector<double>& alpha,
                    const std::vector<double>& beta,
                    std::span<const double> duals,
                    const Scenario& sc, const DerivedCoefficients& d,
                    double tol) {
  const LpProblem lp = assemble_lp(sc, d, true);
  const int nvars = lp.num_vars;
  const int N = sc.num_fogs(), J = sc.num_apps();

  std::vector<double> x(nvars, 0.0);
  std::copy(alpha.begin(), alpha.end(), x.begin());
  std::copy(beta.begin(), beta.end(), x.begin() + N * J);

  KktReport rep;
  std::vector<double> slack(lp.rows.size(), 0.0);
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    double lhs = 0.0;
    for (int c = 0; c < nvars; ++c) lhs += row.coeffs[c] * x[c];
    slack[r] = row.rhs - lhs;
    const double viol = row.relation == LpRow::Relation::Equal ? std::abs(slack[r])
                                                               : std::max(0.0, -slack[r]);
    rep.max_primal_violation = std::max(rep.max_primal_violation, viol);
  }
  for (int c = 0; c < nvars; ++c)
    rep.max_primal_violation = std::max(rep.max_primal_violation, -x[c]);

  rep.pass = rep.max_primal_violation <= tol;
  if (!duals.empty() && duals.size() == lp.rows.size()) {
    // Simplex convention: reduced cost c - A'y >= 0, y <= 0 on <= rows.
    for (int c = 0; c < nvars; ++c) {
      double rc = lp.objective[c];
      for (std::size_t r = 0; r < lp.rows.size(); ++r) rc -= duals[r] * lp.rows[r].coeffs[c];
      rep.max_stationarity_violation = std::max(rep.max_stationarity_violation, -rc);
      rep.complementarity_gap = std::max(rep.complementarity_gap, std::abs(x[c] * rc));
    }
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
      if (lp.rows[r].relation == LpRow::Relation::LessEqual) {
        rep.max_stationarity_violation =
            std::max(rep.max_stationarity_violation, duals[r]);
        rep.complementarity_gap =
            std::max(rep.complementarity_gap, std::abs(duals[r] * slack[r]));
      }
    }
    rep.pass = rep.pass && rep.max_stationarity_violation <= tol &&
               rep.complementarity_gap <= tol;
  }
  if (!rep.pass) rep.detail = "primal/stationarity/complementarity tolerance exceeded";
  return rep;
}

BaselineResult solve_baseline(const Scenario& sc, const DerivedCoefficients& d,
                              bool idle_shutdown) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  BaselineResult out;
  if (N * J + N * J * K > kOracleMaxVariables) {
    out.status = OracleResult::Status::TooLarge;
    return out;
  }
  const LpProblem lp = assemble_lp(sc, d, false);
  const LpSolution sol = solve_lp(lp);
  if (sol.status == LpSolution::Status::Infeasible) {
    out.status = OracleResult::Status::Infeasible;
    return out;
  }
  if (sol.status == LpSolution::Status::Unbounded) {
    out.status = OracleResult::Status::Unbounded;
    return out;
  }
  out.status = OracleResult::Status::Optimal;
  const std::vector<double> alpha(static_cast<std::size_t>(N) * J, 0.0);
  out.beta.assign(sol.x.begin() + N * J, sol.x.end());
  out.costs = evaluate_costs(alpha, out.beta, sc, d, idle_shutdown);
  return out;
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double e = a + kInvPhi * (b - a);
  double fc = f(c), fe = f(e);
  while (b - a > tol) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + kInvPhi * (b - a);
      fe = f(e);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> coordinate_descent_box(const std::vector<std::vector<double>>& Q,
                                           const std::vector<double>& q,
                                           const std::vector<double>& lo,
                                           const std::vector<double>& hi,
                                           int sweeps) {
  const std::size_t n = q.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(0.0, lo[i], hi[i]);
  for (int s = 0; s < sweeps; ++s) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lin = q[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) lin += Q[i][j] * x[j];
      const double xi = std::clamp(-lin / Q[i][i], lo[i], hi[i]);
      change = std::max(change, std::abs(xi - x[i]));
      x[i] = xi;
    }
    if (change < 1e-15) break;
  }
  return x;
}

double exact_waterfill_dual(std::span<const double> g, std::span<const double> w,
                            double d, double cap) {
  const std::size_t M = g.size();
  double at_zero = 0.0;
  for (std::size_t m = 0; m < M; ++m) at_zero += std::max(0.0, g[m] / d) * w[m];
  if (at_zero <= cap) return 0.0;

  std::vector<std::size_t> order(M);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g[a] / w[a] > g[b] / w[b];
  });

  // On the segment where the top-t entries stay positive the equation
  // is linear; scan breakpoints in descending order.
  double sum_gw = 0.0, sum_w2 = 0.0;
  for (std::size_t t = 0; t < M; ++t) {
    const std::size_t m = order[t];
    sum_gw += g[m] * w[m];
    sum_w2 += w[m] * w[m];
    const double candidate = (sum_gw - d * cap) / sum_w2;
    const double seg_hi = g[m] / w[m];
    const double seg_lo = t + 1 < M ? std::max(0.0, g[order[t + 1]] / w[order[t + 1]]) : 0.0;
    if (candidate <= seg_hi && candidate >= seg_lo) return candidate;
  }
  return 0.0;  // unreachable for cap >= 0 once at_zero > cap
}

}  // namespace fogcloud
