#include "fogcloud/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fogcloud {

namespace {

// Fixed unit contract: electricity prices are $/MWh, powers are watts,
// slots are seconds. Energy terms carry T/3600 * 1e-6; latency terms
// carry T in seconds.
constexpr double kWattsToMW = 1e-6;

std::string fmt(const char* what, int a, int b = -1, int c = -1) {
  std::ostringstream os;
  os << what << " (" << a + 1;
  if (b >= 0) os << "," << b + 1;
  if (c >= 0) os << "," << c + 1;
  os << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_scenario(const Scenario& sc) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, bool hard, std::string msg) {
    report.violations.push_back({kind, hard, std::move(msg)});
  };

  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  if (sc.slot_duration_T <= 0.0)
    add(Violation::Kind::InvalidValue, true, "slot_duration_T must be > 0");

  for (int j = 0; j < J; ++j) {
    const auto& app = sc.applications[j];
    if (app.request_size_s <= 0.0)
      add(Violation::Kind::InvalidValue, true, fmt("request_size_s <= 0 for application", j));
    if (app.max_delay_t <= 0.0)
      add(Violation::Kind::InvalidValue, true, fmt("max_delay_t <= 0 for application", j));
    if (app.response_traffic_tau < 0.0 || app.latency_loss_omega < 0.0)
      add(Violation::Kind::InvalidValue, true, fmt("negative tau/omega for application", j));
  }

  for (int i = 0; i < N; ++i) {
    const auto& fog = sc.fog_devices[i];
    if (static_cast<int>(fog.service_rate_v.size()) != J ||
        static_cast<int>(fog.arrival_rate_lambda.size()) != J) {
      add(Violation::Kind::IndexMismatch, true, fmt("fog device arrays not length J", i));
      continue;
    }
    double v_sum = 0.0;
    for (int j = 0; j < J; ++j) {
      if (fog.service_rate_v[j] <= 0.0)
        add(Violation::Kind::InvalidValue, true, fmt("service_rate_v <= 0 at fog,app", i, j));
      if (fog.arrival_rate_lambda[j] < 0.0)
        add(Violation::Kind::InvalidValue, true, fmt("arrival_rate_lambda < 0 at fog,app", i, j));
      v_sum += fog.service_rate_v[j];
    }
    if (v_sum != fog.total_rate_v_i)
      add(Violation::Kind::InvalidValue, true, fmt("total_rate_v_i != sum of service_rate_v at fog", i));
    if (fog.peak_power_q < fog.idle_power_q || fog.idle_power_q < 0.0)
      add(Violation::Kind::InvalidValue, true, fmt("power bounds violated at fog", i));
    if (fog.compensation_factor_h < 1.0)
      add(Violation::Kind::InvalidValue, true, fmt("compensation_factor_h < 1 at fog", i));
  }

  for (int k = 0; k < K; ++k) {
    const auto& dc = sc.data_centers[k];
    if (static_cast<int>(dc.server_count_C.size()) != J ||
        static_cast<int>(dc.service_rate_mu.size()) != J ||
        static_cast<int>(dc.idle_power_p.size()) != J ||
        static_cast<int>(dc.peak_power_p.size()) != J) {
      add(Violation::Kind::IndexMismatch, true, fmt("data center arrays not length J", k));
      continue;
    }
    if (static_cast<int>(dc.latency_to_fog_L.size()) != N)
      add(Violation::Kind::IndexMismatch, true, fmt("latency_to_fog_L not length N at data center", k));
    if (dc.pue < 1.0 || dc.link_capacity_A <= 0.0)
      add(Violation::Kind::InvalidValue, true, fmt("pue/link_capacity invalid at data center", k));
    for (int j = 0; j < J; ++j) {
      if (dc.server_count_C[j] < 1)
        add(Violation::Kind::InvalidValue, true, fmt("server_count_C < 1 at app,dc", j, k));
      if (dc.service_rate_mu[j] <= 0.0)
        add(Violation::Kind::InvalidValue, true, fmt("service_rate_mu <= 0 at app,dc", j, k));
      if (dc.peak_power_p[j] < dc.idle_power_p[j] || dc.idle_power_p[j] < 0.0)
        add(Violation::Kind::InvalidValue, true, fmt("power bounds violated at app,dc", j, k));
      for (int n = 0; n < N; ++n)
        if (n < static_cast<int>(dc.latency_to_fog_L.size()) && dc.latency_to_fog_L[n] < 0.0)
          add(Violation::Kind::InvalidValue, true, fmt("negative latency at fog,dc", n, k));
    }
  }

  if (report.hard_error()) return report;

  // (a) e_{j,k} undefined when the delay bound cannot cover one service time.
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k) {
      const auto& dc = sc.data_centers[k];
      if (sc.applications[j].max_delay_t <= 1.0 / dc.service_rate_mu[j])
        add(Violation::Kind::UndefinedServiceMargin, true,
            fmt("max_delay_t <= 1/mu, service margin e undefined at app,dc", j, k));
    }
  if (report.hard_error()) return report;

  // Aggregate feasibility checks compare total demand per application
  // against the fog rate bounds plus the cloud service margins.
  double fog_bw_residual = 0.0;
  for (int j = 0; j < J; ++j) {
    const auto& app = sc.applications[j];
    double demand = 0.0, fog_cap = 0.0, cloud_cap = 0.0;
    for (int i = 0; i < N; ++i) {
      const auto& fog = sc.fog_devices[i];
      demand += fog.arrival_rate_lambda[j];
      fog_cap += std::max(0.0, fog.service_rate_v[j] / app.request_size_s - 1.0 / app.max_delay_t);
    }
    for (int k = 0; k < K; ++k) {
      const auto& dc = sc.data_centers[k];
      const double e = 1.0 / (app.max_delay_t - 1.0 / dc.service_rate_mu[j]);
      cloud_cap += dc.service_rate_mu[j] * dc.server_count_C[j] - e;
    }
    if (demand > fog_cap + cloud_cap)
      add(Violation::Kind::AggregateCapacity, false,
          fmt("total demand exceeds fog + cloud capacity for application", j));
    fog_bw_residual += std::max(0.0, demand - fog_cap) * app.request_size_s;
  }

  double link_total = 0.0;
  for (int k = 0; k < K; ++k) link_total += sc.data_centers[k].link_capacity_A;
  if (fog_bw_residual > link_total)
    add(Violation::Kind::BandwidthCapacity, false,
        "dispatch bandwidth exceeds total link capacity even at maximal fog absorption");

  return report;
}

DerivedCoefficients derive_coefficients(const Scenario& sc) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  DerivedCoefficients d;
  d.N = N;
  d.J = J;
  d.K = K;
  d.a_jk.resize(static_cast<std::size_t>(J) * K);
  d.b_jk.resize(static_cast<std::size_t>(J) * K);
  d.e_jk.resize(static_cast<std::size_t>(J) * K);
  d.alpha_ub_ij.resize(static_cast<std::size_t>(N) * J);
  d.unit_dispatch_cost_w.resize(static_cast<std::size_t>(N) * J * K);
  d.unit_fog_cost_u.resize(static_cast<std::size_t>(N) * J);

  const double T_seconds = sc.slot_duration_T;
  const double T_energy = T_seconds / 3600.0 * kWattsToMW;  // $/MWh * W -> $

  for (int j = 0; j < J; ++j) {
    const auto& app = sc.applications[j];
    for (int k = 0; k < K; ++k) {
      const auto& dc = sc.data_centers[k];
      const double denom = app.max_delay_t - 1.0 / dc.service_rate_mu[j];
      if (denom <= 0.0)
        throw std::domain_error("derive_coefficients: max_delay_t <= 1/mu");
      d.a_jk[idx_jk(j, k, K)] = dc.idle_power_p[j] + (dc.pue - 1.0) * dc.peak_power_p[j];
      d.b_jk[idx_jk(j, k, K)] = dc.peak_power_p[j] - dc.idle_power_p[j];
      d.e_jk[idx_jk(j, k, K)] = 1.0 / denom;
    }
  }

  for (int i = 0; i < N; ++i) {
    const auto& fog = sc.fog_devices[i];
    for (int j = 0; j < J; ++j) {
      const auto& app = sc.applications[j];
      d.alpha_ub_ij[idx_ij(i, j, J)] =
          std::max(0.0, fog.service_rate_v[j] / app.request_size_s - 1.0 / app.max_delay_t);
      d.unit_fog_cost_u[idx_ij(i, j, J)] =
          fog.compensation_factor_h * fog.electricity_price_S *
          (fog.peak_power_q - fog.idle_power_q) * app.request_size_s * T_energy /
          fog.total_rate_v_i;
      for (int k = 0; k < K; ++k) {
        const auto& dc = sc.data_centers[k];
        d.unit_dispatch_cost_w[idx_ijk(i, j, k, J, K)] =
            app.response_traffic_tau * dc.bandwidth_price_B +
            app.latency_loss_omega * dc.latency_to_fog_L[i] * T_seconds +
            dc.electricity_price_nu * T_energy / dc.service_rate_mu[j] *
                (d.a_jk[idx_jk(j, k, K)] + d.b_jk[idx_jk(j, k, K)]);
      }
    }
  }
  return d;
}

}  // namespace fogcloud
