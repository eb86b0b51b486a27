#ifndef FOGCLOUD_COST_HPP
#define FOGCLOUD_COST_HPP

#include <string>
#include <vector>

#include "fogcloud/model.hpp"

namespace fogcloud {

struct CostBreakdown {
  double gamma1_energy = 0.0;       // data-center energy
  double gamma2_bandwidth = 0.0;    // ISP bandwidth
  double gamma3_latency_loss = 0.0; // WAN propagation revenue loss
  double gamma4_compensation = 0.0; // paid to fog devices
  double total = 0.0;               // gamma1+2+3+4 in that order
  double reduced_objective = 0.0;   // linear objective over (alpha, beta)
  std::vector<int> server_counts_c; // J*K

  std::string csv_row() const;  // gamma1,gamma2,gamma3,gamma4,total,reduced_objective
};

// Power consumption of data center k given active servers and dispatch rates.
double cloud_power(const std::vector<double>& beta, const std::vector<int>& c,
                   int k, const Scenario& scenario, const DerivedCoefficients& coeffs);

// Linear power model of one fog device at the given local rates.
double fog_power(const std::vector<double>& alpha, int i, const Scenario& scenario);

// Active server counts per (j,k): ceil((sum_i beta + e)/mu), clamped to C.
// With idle_shutdown, pairs receiving no traffic keep zero servers.
std::vector<int> recover_servers(const std::vector<double>& beta,
                                 const Scenario& scenario,
                                 const DerivedCoefficients& coeffs,
                                 bool idle_shutdown);

// Largest violation of sum_i beta <= mu*C - e over all (j,k), in requests/s.
double dispatch_capacity_violation(const std::vector<double>& beta,
                                   const Scenario& scenario,
                                   const DerivedCoefficients& coeffs);

CostBreakdown evaluate_costs(const std::vector<double>& alpha,
                             const std::vector<double>& beta,
                             const Scenario& scenario,
                             const DerivedCoefficients& coeffs,
                             bool idle_shutdown = false);

// The linear objective alone: sum u*alpha + sum w*beta.
double reduced_objective(const std::vector<double>& alpha,
                         const std::vector<double>& beta,
                         const DerivedCoefficients& coeffs);

}  // namespace fogcloud

#endif
