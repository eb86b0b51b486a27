#include "fogcloud/cost.hpp"

#include <cmath>
#include <sstream>

namespace fogcloud {

namespace {
constexpr double kWattsToMW = 1e-6;
// Guard against float noise pushing exactly-integral loads over the
// next ceiling step.
constexpr double kCeilGuard = 1e-9;
}  // namespace

std::string CostBreakdown::csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << gamma1_energy << ',' << gamma2_bandwidth << ',' << gamma3_latency_loss
     << ',' << gamma4_compensation << ',' << total << ',' << reduced_objective;
  return os.str();
}

double cloud_power(const std::vector<double>& beta, const std::vector<int>& c,
                   int k, const Scenario& sc, const DerivedCoefficients& d) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  double p = 0.0;
  for (int j = 0; j < J; ++j) {
    double load = 0.0;
    for (int i = 0; i < N; ++i) load += beta[idx_ijk(i, j, k, J, K)];
    p += c[idx_jk(j, k, K)] * d.a_jk[idx_jk(j, k, K)] +
         d.b_jk[idx_jk(j, k, K)] * load / sc.data_centers[k].service_rate_mu[j];
  }
  return p;
}

double fog_power(const std::vector<double>& alpha, int i, const Scenario& sc) {
  const int J = sc.num_apps();
  const auto& fog = sc.fog_devices[i];
  double traffic = 0.0;
  for (int j = 0; j < J; ++j)
    traffic += alpha[idx_ij(i, j, J)] * sc.applications[j].request_size_s;
  return fog.idle_power_q +
         (fog.peak_power_q - fog.idle_power_q) * traffic / fog.total_rate_v_i;
}

std::vector<int> recover_servers(const std::vector<double>& beta,
                                 const Scenario& sc,
                                 const DerivedCoefficients& d,
                                 bool idle_shutdown) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  std::vector<int> c(static_cast<std::size_t>(J) * K, 0);
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      double load = 0.0;
      for (int i = 0; i < N; ++i) load += beta[idx_ijk(i, j, k, J, K)];
      if (idle_shutdown && load == 0.0) continue;
      const double mu = sc.data_centers[k].service_rate_mu[j];
      const double raw = (load + d.e_jk[idx_jk(j, k, K)]) / mu;
      int count = static_cast<int>(std::ceil(raw - kCeilGuard));
      if (count < 0) count = 0;
      const int cap = sc.data_centers[k].server_count_C[j];
      c[idx_jk(j, k, K)] = count > cap ? cap : count;
    }
  return c;
}

double dispatch_capacity_violation(const std::vector<double>& beta,
                                   const Scenario& sc,
                                   const DerivedCoefficients& d) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  double worst = 0.0;
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      double load = 0.0;
      for (int i = 0; i < N; ++i) load += beta[idx_ijk(i, j, k, J, K)];
      const double cap = sc.data_centers[k].service_rate_mu[j] *
                             sc.data_centers[k].server_count_C[j] -
                         d.e_jk[idx_jk(j, k, K)];
      if (load - cap > worst) worst = load - cap;
    }
  return worst;
}

double reduced_objective(const std::vector<double>& alpha,
                         const std::vector<double>& beta,
                         const DerivedCoefficients& d) {
  double g = 0.0;
  for (std::size_t m = 0; m < alpha.size(); ++m) g += d.unit_fog_cost_u[m] * alpha[m];
  for (std::size_t m = 0; m < beta.size(); ++m) g += d.unit_dispatch_cost_w[m] * beta[m];
  return g;
}

CostBreakdown evaluate_costs(const std::vector<double>& alpha,
                             const std::vector<double>& beta,
                             const Scenario& sc,
                             const DerivedCoefficients& d,
                             bool idle_shutdown) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  const double T_seconds = sc.slot_duration_T;
  const double T_energy = T_seconds / 3600.0 * kWattsToMW;

  CostBreakdown out;
  out.server_counts_c = recover_servers(beta, sc, d, idle_shutdown);

  // Fixed summation order (j outer, k, then i) keeps results bit-identical
  // regardless of caller-side parallelism.
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      double load = 0.0;
      for (int i = 0; i < N; ++i) load += beta[idx_ijk(i, j, k, J, K)];
      const auto& dc = sc.data_centers[k];
      out.gamma1_energy += dc.electricity_price_nu *
                           (out.server_counts_c[idx_jk(j, k, K)] * d.a_jk[idx_jk(j, k, K)] +
                            d.b_jk[idx_jk(j, k, K)] * load / dc.service_rate_mu[j]) *
                           T_energy;
    }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < J; ++j)
      for (int k = 0; k < K; ++k) {
        const double b = beta[idx_ijk(i, j, k, J, K)];
        out.gamma2_bandwidth += b * sc.applications[j].response_traffic_tau *
                                sc.data_centers[k].bandwidth_price_B;
        out.gamma3_latency_loss += sc.applications[j].latency_loss_omega *
                                   sc.data_centers[k].latency_to_fog_L[i] * b * T_seconds;
      }

  for (int i = 0; i < N; ++i) {
    const auto& fog = sc.fog_devices[i];
    double traffic = 0.0;
    for (int j = 0; j < J; ++j)
      traffic += alpha[idx_ij(i, j, J)] * sc.applications[j].request_size_s;
    out.gamma4_compensation += fog.electricity_price_S * fog.compensation_factor_h *
                               (fog.peak_power_q - fog.idle_power_q) *
                               traffic / fog.total_rate_v_i * T_energy;
  }

  out.total = out.gamma1_energy + out.gamma2_bandwidth + out.gamma3_latency_loss +
              out.gamma4_compensation;
  out.reduced_objective = reduced_objective(alpha, beta, d);
  return out;
}

}  // namespace fogcloud
