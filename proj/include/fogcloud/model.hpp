#ifndef FOGCLOUD_MODEL_HPP
#define FOGCLOUD_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace fogcloud {

// One request class served by the fog-cloud system.
struct Application {
  int id = 0;                     // 1-based in files, dense order in memory
  double request_size_s = 0.0;    // Mb per request
  double max_delay_t = 0.0;       // seconds
  double response_traffic_tau = 0.0;  // Mb per request
  double latency_loss_omega = 0.0;    // $ per ms per request
};

struct FogDevice {
  int id = 0;
  std::vector<double> service_rate_v;      // Mbps, one per application
  double total_rate_v_i = 0.0;             // Mbps, sum of service_rate_v
  double idle_power_q = 0.0;               // watts
  double peak_power_q = 0.0;               // watts
  double electricity_price_S = 0.0;        // $/MWh
  double compensation_factor_h = 1.0;      // >= 1
  std::vector<double> arrival_rate_lambda; // requests/s, one per application
};

struct DataCenter {
  int id = 0;
  std::vector<int> server_count_C;      // per application
  std::vector<double> service_rate_mu;  // requests/s per server, per application
  std::vector<double> idle_power_p;     // watts, per application
  std::vector<double> peak_power_p;     // watts, per application
  double pue = 1.0;
  double link_capacity_A = 0.0;         // Mbps
  double electricity_price_nu = 0.0;    // $/MWh
  double bandwidth_price_B = 0.0;       // $/Mbps per slot
  std::vector<double> latency_to_fog_L; // ms, one per fog device
};

// Optional provenance block carried by generated scenario files.
struct ScenarioMetadata {
  bool present = false;
  std::uint64_t seed = 0;
  int generator_version = 0;
  int redraw_count = 0;
};

struct Scenario {
  std::vector<Application> applications;
  std::vector<FogDevice> fog_devices;
  std::vector<DataCenter> data_centers;
  double slot_duration_T = 0.0;  // seconds
  ScenarioMetadata metadata;

  int num_apps() const { return static_cast<int>(applications.size()); }
  int num_fogs() const { return static_cast<int>(fog_devices.size()); }
  int num_dcs() const { return static_cast<int>(data_centers.size()); }
};

// Flat index helpers shared by every module that stores (i,j[,k]) arrays.
inline std::size_t idx_ij(int i, int j, int J) {
  return static_cast<std::size_t>(i) * J + j;
}
inline std::size_t idx_ijk(int i, int j, int k, int J, int K) {
  return (static_cast<std::size_t>(i) * J + j) * K + k;
}
inline std::size_t idx_jk(int j, int k, int K) {
  return static_cast<std::size_t>(j) * K + k;
}

// Coefficients recomputable from a Scenario alone. a/b/e follow the
// server power model; alpha_ub is the fog-side rate bound; the unit
// costs are the per-(request/s) coefficients of the reduced objective.
struct DerivedCoefficients {
  int N = 0, J = 0, K = 0;
  std::vector<double> a_jk;                  // J*K, watts
  std::vector<double> b_jk;                  // J*K, watts
  std::vector<double> e_jk;                  // J*K, requests/s
  std::vector<double> alpha_ub_ij;           // N*J, requests/s
  std::vector<double> unit_dispatch_cost_w;  // N*J*K, $ per (request/s)
  std::vector<double> unit_fog_cost_u;       // N*J, $ per (request/s)
};

struct Violation {
  enum class Kind {
    UndefinedServiceMargin,  // t_j^max <= 1/mu_{j,k}
    AggregateCapacity,       // total demand exceeds fog + cloud capacity
    BandwidthCapacity,       // link caps unsatisfiable at max fog absorption
    IndexMismatch,
    InvalidValue,
  };
  Kind kind;
  bool hard = true;  // false: feasibility warning, solver may still run
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
  bool hard_error() const {
    for (const auto& v : violations)
      if (v.hard) return true;
    return false;
  }
};

ValidationReport validate_scenario(const Scenario& scenario);

// Precondition: validate_scenario reports no hard error.
DerivedCoefficients derive_coefficients(const Scenario& scenario);

}  // namespace fogcloud

#endif
