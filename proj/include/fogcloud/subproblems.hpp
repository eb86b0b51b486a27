#ifndef FOGCLOUD_SUBPROBLEMS_HPP
#define FOGCLOUD_SUBPROBLEMS_HPP

#include <span>
#include <vector>

namespace fogcloud {

// Fog-side local-rate update: one scalar per (i,j).
struct P4Inputs {
  double rho = 0.0;
  double theta_bar = 0.0;
  double lambda_ij = 0.0;
  double gamma_row_sum = 0.0;  // sum over k of previous gamma
  double alpha_prev = 0.0;
  double phi_prev = 0.0;
  double fog_unit_cost = 0.0;  // h*S*q*s*T''/v
  double alpha_ub = 0.0;
};

// Fog-side auxiliary split: K coupled scalars per (i,j).
struct P5Inputs {
  double rho = 0.0;
  double sigma_bar = 0.0;
  double lambda_ij = 0.0;
  double alpha_prev = 0.0;
  double phi_prev = 0.0;
  std::vector<double> gamma_prev;   // K
  std::vector<double> beta_prev;    // K
  std::vector<double> varphi_prev;  // K
};

// Data-center dispatch update: all (i,j) entries of one data center.
struct P6Inputs {
  double rho = 0.0;
  double eta_bar = 0.0;
  std::vector<double> gamma_prev;       // N*J
  std::vector<double> l_prev;           // N*J
  std::vector<double> beta_prev;        // N*J
  std::vector<double> varphi_prev;      // N*J
  std::vector<double> chi_prev;         // N*J
  std::vector<double> dispatch_cost_w;  // N*J
};

// Data-center capacity split: N entries of one (j,k) pair.
struct P7Inputs {
  double rho = 0.0;
  double kappa_bar = 0.0;
  std::vector<double> l_prev;    // N
  std::vector<double> beta_prev; // N
  std::vector<double> chi_prev;  // N
};

struct WaterfillResult {
  double dual = 0.0;       // multiplier of the capacity constraint
  std::vector<double> x;   // max(0, (g - dual*w)/d)
  int iterations = 0;
};

// Scalar-dual bisection for min sum d/2*x^2 - g*x s.t. x >= 0, sum w*x <= cap.
// Returns dual in [0, max g/w] with |sum w*x - cap| <= 1e-9*cap when the
// constraint binds. Handles entries crossing zero during the search.
WaterfillResult bisect_waterfill(std::span<const double> g,
                                 std::span<const double> w,
                                 double d, double cap);

double solve_p4(const P4Inputs& in);

// Solves the coupled unconstrained system, then clips at zero; exact
// whenever the unconstrained solution is already nonnegative.
std::vector<double> solve_p5(const P5Inputs& in);

std::vector<double> solve_p6(const P6Inputs& in, double link_cap_A,
                             std::span<const double> sizes_s_per_entry);

std::vector<double> solve_p7(const P7Inputs& in, double cap);

}  // namespace fogcloud

#endif
