#ifndef FOGCLOUD_ORACLE_HPP
#define FOGCLOUD_ORACLE_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fogcloud/cost.hpp"
#include "fogcloud/model.hpp"
#include "fogcloud/simplex.hpp"

namespace fogcloud {

// Desk-scale guard for the dense simplex.
constexpr int kOracleMaxVariables = 2000;

struct OracleResult {
  enum class Status { Optimal, Infeasible, Unbounded, TooLarge };
  Status status = Status::Infeasible;
  double objective = 0.0;            // reduced objective at the optimum
  std::vector<double> alpha;         // N*J
  std::vector<double> beta;          // N*J*K
  std::vector<double> duals;         // per LP row
};

// Relaxed workload-allocation LP over (alpha, beta): workload balance
// equalities, fog rate bounds, link caps, cloud service-margin caps.
// With fog_enabled=false every alpha upper bound is forced to zero.
LpProblem assemble_lp(const Scenario& scenario, const DerivedCoefficients& coeffs,
                      bool fog_enabled = true);

OracleResult solve_lp_exact(const Scenario& scenario,
                            const DerivedCoefficients& coeffs);

struct KktReport {
  double max_primal_violation = 0.0;
  double max_stationarity_violation = 0.0;  // only with duals
  double complementarity_gap = 0.0;         // only with duals
  bool pass = false;
  std::string detail;
};

// Feasibility of a candidate (alpha, beta) for the relaxed LP; with a
// dual vector also checks reduced-cost sign and complementary slackness.
KktReport kkt_check(const std::vector<double>& alpha,
                    const std::vector<double>& beta,
                    std::span<const double> duals,  // empty: primal-only
                    const Scenario& scenario,
                    const DerivedCoefficients& coeffs,
                    double tol);

struct BaselineResult {
  OracleResult::Status status = OracleResult::Status::Infeasible;
  CostBreakdown costs;
  std::vector<double> beta;
};

// Cloud-only plan (alpha = 0), same LP machinery; feeds RCR.
BaselineResult solve_baseline(const Scenario& scenario,
                              const DerivedCoefficients& coeffs,
                              bool idle_shutdown = false);

// Test oracles, independent of the closed-form solvers.
double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol = 1e-12);

// Cyclic exact coordinate descent for min 1/2 x'Qx + q'x on a box.
std::vector<double> coordinate_descent_box(const std::vector<std::vector<double>>& Q,
                                           const std::vector<double>& q,
                                           const std::vector<double>& lo,
                                           const std::vector<double>& hi,
                                           int sweeps = 20000);

// Exact breakpoint-sort solution of the clamped water-filling equation,
// used as the independent check on the bisection kernel.
double exact_waterfill_dual(std::span<const double> g, std::span<const double> w,
                            double d, double cap);

}  // namespace fogcloud

#endif
