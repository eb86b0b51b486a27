#include "fogcloud/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace fogcloud {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

double uniform_draw(std::uint64_t seed, std::string_view field,
                    std::uint64_t index, double lo, double hi) {
  std::uint64_t x = splitmix64(seed ^ splitmix64(fnv1a(field)));
  x = splitmix64(x ^ index);
  const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Scenario generate(const GenSpec& spec) {
  if (spec.n_fog < 1) throw std::invalid_argument("generate: n_fog must be >= 1");
  if (spec.scale_capacity <= 0.0)
    throw std::invalid_argument("generate: scale_capacity must be > 0");

  constexpr int J = 2, K = 3;
  // Data-center catalog: C, p_idle, p_peak, mu per (k,j).
  constexpr int C_base[K][J] = {{2000, 1600}, {2000, 1600}, {2000, 1600}};
  constexpr double p_idle[K][J] = {{110, 100}, {95, 90}, {120, 100}};
  constexpr double p_peak[K][J] = {{220, 200}, {190, 180}, {240, 200}};
  constexpr double mu[K][J] = {{3.0, 2.625}, {2.7, 2.4}, {2.85, 2.25}};
  constexpr double t_max[J] = {0.5, 0.6};
  constexpr double s_mb[J] = {0.25, 0.5};
  constexpr double link_A[K] = {1e5, 0.9e5, 0.8e5};
  constexpr double pue[K] = {1.13, 1.14, 1.15};
  constexpr double nu[K] = {30.0, 35.0, 40.0};

  const double omega = spec.latency_omega.value_or(3e-8);
  const double bandwidth = spec.bandwidth_B.value_or(0.005);
  const double comp_h = spec.compensation_h.value_or(1.0);
  const int N = spec.n_fog;

  double cap_sum[J];  // sum_k C_{j,k} mu_{j,k}, scaled
  for (int j = 0; j < J; ++j) {
    cap_sum[j] = 0.0;
    for (int k = 0; k < K; ++k)
      cap_sum[j] += std::round(C_base[k][j] * spec.scale_capacity) * mu[k][j];
  }

  for (int redraw = 0;; ++redraw) {
    if (redraw > 64) throw std::runtime_error("generate: no feasible draw found");
    const std::uint64_t eff_seed = splitmix64(spec.seed ^ splitmix64(redraw));

    Scenario sc;
    sc.slot_duration_T = 3600.0;
    sc.metadata.present = true;
    sc.metadata.seed = spec.seed;
    sc.metadata.generator_version = kGeneratorVersion;
    sc.metadata.redraw_count = redraw;

    for (int j = 0; j < J; ++j) {
      Application app;
      app.id = j + 1;
      app.request_size_s = s_mb[j];
      app.max_delay_t = t_max[j];
      app.response_traffic_tau = 1.0;
      app.latency_loss_omega = omega;
      sc.applications.push_back(app);
    }

    for (int k = 0; k < K; ++k) {
      DataCenter dc;
      dc.id = k + 1;
      for (int j = 0; j < J; ++j) {
        dc.server_count_C.push_back(
            static_cast<int>(std::round(C_base[k][j] * spec.scale_capacity)));
        dc.service_rate_mu.push_back(mu[k][j]);
        dc.idle_power_p.push_back(p_idle[k][j]);
        dc.peak_power_p.push_back(p_peak[k][j]);
      }
      dc.pue = pue[k];
      dc.link_capacity_A = link_A[k];
      dc.electricity_price_nu = nu[k];
      dc.bandwidth_price_B = bandwidth;
      dc.latency_to_fog_L.resize(N);
      for (int i = 0; i < N; ++i)
        dc.latency_to_fog_L[i] = uniform_draw(
            eff_seed, "latency_to_fog_L", static_cast<std::uint64_t>(i) * K + k, 10.0, 40.0);
      sc.data_centers.push_back(std::move(dc));
    }

    for (int i = 0; i < N; ++i) {
      FogDevice fog;
      fog.id = i + 1;
      fog.peak_power_q = uniform_draw(eff_seed, "peak_power_q", i, 440.0, 500.0);
      fog.idle_power_q = 0.5 * fog.peak_power_q;
      fog.electricity_price_S = uniform_draw(eff_seed, "electricity_price_S", i, 30.0, 60.0);
      fog.compensation_factor_h = comp_h;
      for (int j = 0; j < J; ++j) {
        fog.service_rate_v.push_back(uniform_draw(
            eff_seed, "service_rate_v", static_cast<std::uint64_t>(i) * J + j, 2.25, 3.0));
        fog.arrival_rate_lambda.push_back(uniform_draw(
            eff_seed, "arrival_rate_lambda", static_cast<std::uint64_t>(i) * J + j,
            cap_sum[j] / (2.0 * N), cap_sum[j] / N));
      }
      fog.total_rate_v_i = fog.service_rate_v[0] + fog.service_rate_v[1];
      sc.fog_devices.push_back(std::move(fog));
    }

    if (validate_scenario(sc).pass()) return sc;
  }
}

}  // namespace fogcloud
