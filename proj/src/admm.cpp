#include "fogcloud/admm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "fogcloud/subproblems.hpp"

namespace fogcloud {

namespace {

constexpr int kConvergenceStreak = 10;

double sum_lambda(const Scenario& sc) {
  double s = 0.0;
  for (const auto& fog : sc.fog_devices)
    for (double l : fog.arrival_rate_lambda) s += l;
  return s;
}

PrimalState zero_state(int N, int J, int K) {
  PrimalState st;
  st.alpha.assign(static_cast<std::size_t>(N) * J, 0.0);
  st.gamma.assign(static_cast<std::size_t>(N) * J * K, 0.0);
  st.beta.assign(static_cast<std::size_t>(N) * J * K, 0.0);
  st.l.assign(static_cast<std::size_t>(N) * J * K, 0.0);
  return st;
}

DualState zero_duals(int N, int J, int K) {
  DualState du;
  du.phi.assign(static_cast<std::size_t>(N) * J, 0.0);
  du.varphi.assign(static_cast<std::size_t>(N) * J * K, 0.0);
  du.chi.assign(static_cast<std::size_t>(N) * J * K, 0.0);
  return du;
}

double primal_residual_norm(const PrimalState& st, const Scenario& sc) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  double sq = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      double r = st.alpha[idx_ij(i, j, J)] - sc.fog_devices[i].arrival_rate_lambda[j];
      for (int k = 0; k < K; ++k) r += st.gamma[idx_ijk(i, j, k, J, K)];
      sq += r * r;
    }
  for (std::size_t m = 0; m < st.gamma.size(); ++m) {
    const double r1 = st.gamma[m] - st.beta[m];
    const double r2 = st.beta[m] - st.l[m];
    sq += r1 * r1 + r2 * r2;
  }
  return std::sqrt(sq);
}

// Repair the returned plan so it is exactly feasible for the relaxed
// problem: project beta onto the link and service-margin caps (both
// projections only shrink entries), then restore workload balance from
// the remaining slack, cheapest data center first.
void project_feasible(PrimalState& st, const Scenario& sc,
                      const DerivedCoefficients& d,
                      const std::vector<double>& alpha_ub) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();

  for (int k = 0; k < K; ++k) {
    std::vector<double> g(static_cast<std::size_t>(N) * J), w(g.size());
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j) {
        g[idx_ij(i, j, J)] = st.beta[idx_ijk(i, j, k, J, K)];
        w[idx_ij(i, j, J)] = sc.applications[j].request_size_s;
      }
    const auto proj = bisect_waterfill(g, w, 1.0, sc.data_centers[k].link_capacity_A);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j)
        st.beta[idx_ijk(i, j, k, J, K)] = proj.x[idx_ij(i, j, J)];
  }

  std::vector<double> row_slack(static_cast<std::size_t>(J) * K, 0.0);
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      const double cap = sc.data_centers[k].service_rate_mu[j] *
                             sc.data_centers[k].server_count_C[j] -
                         d.e_jk[idx_jk(j, k, K)];
      std::vector<double> g(N);
      for (int i = 0; i < N; ++i) g[i] = st.beta[idx_ijk(i, j, k, J, K)];
      const std::vector<double> ones(N, 1.0);
      const auto proj = bisect_waterfill(g, ones, 1.0, std::max(0.0, cap));
      double used = 0.0;
      for (int i = 0; i < N; ++i) {
        st.beta[idx_ijk(i, j, k, J, K)] = proj.x[i];
        used += proj.x[i];
      }
      row_slack[idx_jk(j, k, K)] = std::max(0.0, cap) - used;
    }

  std::vector<double> link_slack(K);
  for (int k = 0; k < K; ++k) {
    double used = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j)
        used += st.beta[idx_ijk(i, j, k, J, K)] * sc.applications[j].request_size_s;
    link_slack[k] = sc.data_centers[k].link_capacity_A - used;
  }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      const double lambda = sc.fog_devices[i].arrival_rate_lambda[j];
      const double s_j = sc.applications[j].request_size_s;
      double row_sum = 0.0;
      for (int k = 0; k < K; ++k) row_sum += st.beta[idx_ijk(i, j, k, J, K)];
      const double a = std::clamp(lambda - row_sum, 0.0, alpha_ub[idx_ij(i, j, J)]);
      st.alpha[idx_ij(i, j, J)] = a;
      double deficit = lambda - a - row_sum;
      if (deficit < 0.0 && row_sum > 0.0) {
        const double factor = (lambda - a) / row_sum;
        for (int k = 0; k < K; ++k) {
          const std::size_t m = idx_ijk(i, j, k, J, K);
          const double removed = st.beta[m] * (1.0 - factor);
          row_slack[idx_jk(j, k, K)] += removed;
          link_slack[k] += removed * s_j;
          st.beta[m] *= factor;
        }
        continue;
      }
      // Fill any remaining deficit at the cheapest data centers with slack.
      std::vector<int> order(K);
      for (int k = 0; k < K; ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](int a_k, int b_k) {
        return d.unit_dispatch_cost_w[idx_ijk(i, j, a_k, J, K)] <
               d.unit_dispatch_cost_w[idx_ijk(i, j, b_k, J, K)];
      });
      for (int k : order) {
        if (deficit <= 0.0) break;
        const double room =
            std::max(0.0, std::min(row_slack[idx_jk(j, k, K)], link_slack[k] / s_j));
        const double add = std::min(deficit, room);
        if (add <= 0.0) continue;
        st.beta[idx_ijk(i, j, k, J, K)] += add;
        row_slack[idx_jk(j, k, K)] -= add;
        link_slack[k] -= add * s_j;
        deficit -= add;
      }
    }
}

}  // namespace

std::string IterationTrace::csv_header() {
  return "iteration,objective,primal_residual,feasibility_metric,wall_time_ms";
}

std::string IterationTrace::csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << iteration << ',' << reduced_objective << ',' << primal_residual << ','
     << feasibility_metric << ',' << wall_time_ms;
  return os.str();
}

SolverConfig configure(const Scenario& sc, const SolverConfig& overrides) {
  SolverConfig cfg = overrides;
  if (cfg.rho <= 0.0) throw ConfigError("rho must be > 0");
  if (cfg.delta <= 0.0 || cfg.delta >= 2.0)
    throw ConfigError("delta must lie strictly inside (0,2)");
  if (cfg.safety_margin < 1.0) throw ConfigError("safety_margin must be >= 1");
  if (cfg.max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (cfg.trace_every < 1) throw ConfigError("trace_every must be >= 1");

  const double K = sc.num_dcs();
  const double bound = cfg.weight_bound_factor();
  if (cfg.theta_bar == 0.0) cfg.theta_bar = cfg.safety_margin * bound;
  if (cfg.sigma_bar == 0.0) cfg.sigma_bar = cfg.safety_margin * (K + 1.0) * bound;
  if (cfg.eta_bar == 0.0) cfg.eta_bar = cfg.safety_margin * 2.0 * bound;
  if (cfg.kappa_bar == 0.0) cfg.kappa_bar = cfg.safety_margin * bound;

  if (cfg.theta_bar <= bound)
    throw ConfigError("theta_bar must exceed rho*(4/(2-delta)-1)");
  if (cfg.sigma_bar <= (K + 1.0) * bound)
    throw ConfigError("sigma_bar must exceed (K+1)*rho*(4/(2-delta)-1)");
  if (cfg.eta_bar <= 2.0 * bound)
    throw ConfigError("eta_bar must exceed 2*rho*(4/(2-delta)-1)");
  if (cfg.kappa_bar <= bound)
    throw ConfigError("kappa_bar must exceed rho*(4/(2-delta)-1)");

  if (cfg.tol_objective <= 0.0) throw ConfigError("tol_objective must be > 0");
  if (cfg.tol_feasibility == 0.0)
    cfg.tol_feasibility = 1e-3 * std::max(1.0, sum_lambda(sc));
  else if (cfg.tol_feasibility < 0.0)
    throw ConfigError("tol_feasibility must be > 0");
  return cfg;
}

double feasibility_metric(const PrimalState& st, const Scenario& sc) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  double m = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      double r = st.alpha[idx_ij(i, j, J)] - sc.fog_devices[i].arrival_rate_lambda[j];
      for (int k = 0; k < K; ++k) r += st.beta[idx_ijk(i, j, k, J, K)];
      m += std::abs(r);
    }
  return m;
}

void iterate_once(const PrimalState& st, const DualState& du,
                  const Scenario& sc, const DerivedCoefficients& d,
                  const SolverConfig& cfg, PrimalState& next, DualState& next_du) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  next = zero_state(N, J, K);

  // Fog-side blocks (one per (i,j)): local rate and the auxiliary split.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      const std::size_t ij = idx_ij(i, j, J);
      double gamma_row = 0.0;
      for (int k = 0; k < K; ++k) gamma_row += st.gamma[idx_ijk(i, j, k, J, K)];

      P4Inputs p4;
      p4.rho = cfg.rho;
      p4.theta_bar = cfg.theta_bar;
      p4.lambda_ij = sc.fog_devices[i].arrival_rate_lambda[j];
      p4.gamma_row_sum = gamma_row;
      p4.alpha_prev = st.alpha[ij];
      p4.phi_prev = du.phi[ij];
      p4.fog_unit_cost = d.unit_fog_cost_u[ij];
      p4.alpha_ub = cfg.baseline ? 0.0 : d.alpha_ub_ij[ij];
      next.alpha[ij] = solve_p4(p4);

      P5Inputs p5;
      p5.rho = cfg.rho;
      p5.sigma_bar = cfg.sigma_bar;
      p5.lambda_ij = p4.lambda_ij;
      p5.alpha_prev = st.alpha[ij];
      p5.phi_prev = du.phi[ij];
      p5.gamma_prev.resize(K);
      p5.beta_prev.resize(K);
      p5.varphi_prev.resize(K);
      for (int k = 0; k < K; ++k) {
        const std::size_t m = idx_ijk(i, j, k, J, K);
        p5.gamma_prev[k] = st.gamma[m];
        p5.beta_prev[k] = st.beta[m];
        p5.varphi_prev[k] = du.varphi[m];
      }
      const auto gamma_new = solve_p5(p5);
      for (int k = 0; k < K; ++k) next.gamma[idx_ijk(i, j, k, J, K)] = gamma_new[k];
    }

  // Data-center blocks: dispatch rates per k, capacity split per (j,k).
  for (int k = 0; k < K; ++k) {
    P6Inputs p6;
    p6.rho = cfg.rho;
    p6.eta_bar = cfg.eta_bar;
    const std::size_t M = static_cast<std::size_t>(N) * J;
    p6.gamma_prev.resize(M);
    p6.l_prev.resize(M);
    p6.beta_prev.resize(M);
    p6.varphi_prev.resize(M);
    p6.chi_prev.resize(M);
    p6.dispatch_cost_w.resize(M);
    std::vector<double> sizes(M);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j) {
        const std::size_t src = idx_ijk(i, j, k, J, K);
        const std::size_t dst = idx_ij(i, j, J);
        p6.gamma_prev[dst] = st.gamma[src];
        p6.l_prev[dst] = st.l[src];
        p6.beta_prev[dst] = st.beta[src];
        p6.varphi_prev[dst] = du.varphi[src];
        p6.chi_prev[dst] = du.chi[src];
        p6.dispatch_cost_w[dst] = d.unit_dispatch_cost_w[src];
        sizes[dst] = sc.applications[j].request_size_s;
      }
    const auto beta_new = solve_p6(p6, sc.data_centers[k].link_capacity_A, sizes);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < J; ++j)
        next.beta[idx_ijk(i, j, k, J, K)] = beta_new[idx_ij(i, j, J)];

    for (int j = 0; j < J; ++j) {
      P7Inputs p7;
      p7.rho = cfg.rho;
      p7.kappa_bar = cfg.kappa_bar;
      p7.l_prev.resize(N);
      p7.beta_prev.resize(N);
      p7.chi_prev.resize(N);
      for (int i = 0; i < N; ++i) {
        const std::size_t m = idx_ijk(i, j, k, J, K);
        p7.l_prev[i] = st.l[m];
        p7.beta_prev[i] = st.beta[m];
        p7.chi_prev[i] = du.chi[m];
      }
      const double cap = sc.data_centers[k].service_rate_mu[j] *
                             sc.data_centers[k].server_count_C[j] -
                         d.e_jk[idx_jk(j, k, K)];
      const auto l_new = solve_p7(p7, std::max(0.0, cap));
      for (int i = 0; i < N; ++i) next.l[idx_ijk(i, j, k, J, K)] = l_new[i];
    }
  }

  // Damped dual step after all blocks have completed.
  next_du = du;
  const double step = cfg.delta * cfg.rho;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j) {
      const std::size_t ij = idx_ij(i, j, J);
      double r = next.alpha[ij] - sc.fog_devices[i].arrival_rate_lambda[j];
      for (int k = 0; k < K; ++k) r += next.gamma[idx_ijk(i, j, k, J, K)];
      next_du.phi[ij] += step * r;
    }
  for (std::size_t m = 0; m < next.gamma.size(); ++m) {
    next_du.varphi[m] += step * (next.gamma[m] - next.beta[m]);
    next_du.chi[m] += step * (next.beta[m] - next.l[m]);
  }
}

SolveResult run(const Scenario& sc, const SolverConfig& config) {
  const SolverConfig cfg = configure(sc, config);
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  const DerivedCoefficients d = derive_coefficients(sc);

  SolveResult res;
  res.state = zero_state(N, J, K);
  res.duals = zero_duals(N, J, K);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  double prev_objective = 0.0;
  int quiet_streak = 0;  // consecutive iterations below tol_objective
  PrimalState next_state;
  DualState next_duals;
  for (int w = 0; w < cfg.max_iterations; ++w) {
    iterate_once(res.state, res.duals, sc, d, cfg, next_state, next_duals);
    std::swap(res.state, next_state);
    std::swap(res.duals, next_duals);
    res.iterations = w + 1;

    const double objective = reduced_objective(res.state.alpha, res.state.beta, d);
    const double metric = feasibility_metric(res.state, sc);
    // The objective oscillates on its way in, so a single small step is
    // not evidence of convergence; require a sustained quiet stretch.
    if (std::abs(objective - prev_objective) / std::max(1.0, std::abs(objective)) <
        cfg.tol_objective)
      ++quiet_streak;
    else
      quiet_streak = 0;
    const bool converged =
        quiet_streak >= kConvergenceStreak && metric < cfg.tol_feasibility;
    prev_objective = objective;

    if (w % cfg.trace_every == 0 || converged || w + 1 == cfg.max_iterations) {
      IterationTrace tr;
      tr.iteration = w + 1;
      tr.reduced_objective = objective;
      tr.primal_residual = primal_residual_norm(res.state, sc);
      tr.feasibility_metric = metric;
      tr.wall_time_ms = elapsed_ms();
      res.traces.push_back(tr);
    }
    if (converged) {
      res.termination = TerminationReason::Converged;
      break;
    }
  }

  std::vector<double> alpha_ub = d.alpha_ub_ij;
  if (cfg.baseline) std::fill(alpha_ub.begin(), alpha_ub.end(), 0.0);
  project_feasible(res.state, sc, d, alpha_ub);
  res.final_feasibility = feasibility_metric(res.state, sc);
  res.costs = evaluate_costs(res.state.alpha, res.state.beta, sc, d, cfg.idle_shutdown);
  return res;
}

}  // namespace fogcloud
