#ifndef FOGCLOUD_ADMM_HPP
#define FOGCLOUD_ADMM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fogcloud/cost.hpp"
#include "fogcloud/model.hpp"

namespace fogcloud {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  double rho = 0.002;
  double delta = 1.0;  // damping, open interval (0,2)
  // Proximal weights; zero means auto-derive from the convergence bound
  // times safety_margin.
  double theta_bar = 0.0;
  double sigma_bar = 0.0;
  double eta_bar = 0.0;
  double kappa_bar = 0.0;
  double safety_margin = 1.01;
  int max_iterations = 20000;
  double tol_objective = 1e-8;   // relative objective change
  double tol_feasibility = 0.0;  // zero means 1e-3 * max(1, sum lambda)
  int trace_every = 1;
  bool baseline = false;         // force all fog rate bounds to zero
  bool idle_shutdown = false;

  // rho * (4/(2-delta) - 1), the common factor of all weight bounds.
  double weight_bound_factor() const { return rho * (4.0 / (2.0 - delta) - 1.0); }
};

struct PrimalState {
  std::vector<double> alpha;  // N*J
  std::vector<double> gamma;  // N*J*K
  std::vector<double> beta;   // N*J*K
  std::vector<double> l;      // N*J*K
};

struct DualState {
  std::vector<double> phi;     // N*J
  std::vector<double> varphi;  // N*J*K
  std::vector<double> chi;     // N*J*K
};

struct IterationTrace {
  int iteration = 0;
  double reduced_objective = 0.0;
  double primal_residual = 0.0;     // Euclidean norm of all split residuals
  double feasibility_metric = 0.0;  // sum |alpha + sum_k beta - lambda|
  double wall_time_ms = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

enum class TerminationReason { Converged, IterationCap };

struct SolveResult {
  PrimalState state;
  DualState duals;
  CostBreakdown costs;
  std::vector<IterationTrace> traces;
  TerminationReason termination = TerminationReason::IterationCap;
  int iterations = 0;
  double final_feasibility = 0.0;
};

// Fills the auto-derived weights and validates every convergence bound;
// throws ConfigError naming the violated one.
SolverConfig configure(const Scenario& scenario, const SolverConfig& overrides);

double feasibility_metric(const PrimalState& state, const Scenario& scenario);

// One Jacobi sweep: all four blocks from the previous iterate, then the
// damped dual update. Pure function of (state, duals).
void iterate_once(const PrimalState& state, const DualState& duals,
                  const Scenario& scenario, const DerivedCoefficients& coeffs,
                  const SolverConfig& config, PrimalState& next_state,
                  DualState& next_duals);

SolveResult run(const Scenario& scenario, const SolverConfig& config);

}  // namespace fogcloud

#endif
