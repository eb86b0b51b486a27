#include "fogcloud/subproblems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fogcloud {

namespace {
constexpr int kMaxBisectIters = 200;

double clamped_sum(std::span<const double> g, std::span<const double> w,
                   double d, double dual) {
  double s = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m)
    s += std::max(0.0, (g[m] - dual * w[m]) / d) * w[m];
  return s;
}
}  // namespace

WaterfillResult bisect_waterfill(std::span<const double> g,
                                 std::span<const double> w,
                                 double d, double cap) {
  if (d <= 0.0 || cap < 0.0) throw std::invalid_argument("bisect_waterfill: d > 0, cap >= 0 required");
  for (double wm : w)
    if (wm <= 0.0) throw std::invalid_argument("bisect_waterfill: weights must be > 0");

  WaterfillResult out;
  out.x.resize(g.size());

  if (clamped_sum(g, w, d, 0.0) <= cap) {
    for (std::size_t m = 0; m < g.size(); ++m) out.x[m] = std::max(0.0, g[m] / d);
    return out;
  }

  double hi = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) hi = std::max(hi, g[m] / w[m]);
  // clamped_sum is continuous and non-increasing in the dual, zero at hi.
  if (cap == 0.0) {
    out.dual = hi;
    for (std::size_t m = 0; m < g.size(); ++m) out.x[m] = 0.0;
    return out;
  }
  // Shrink the bracket until it collapses at double precision; the hi side
  // stays feasible throughout, which keeps the returned load at or under
  // the cap (well inside the 1e-9 relative contract).
  double lo = 0.0;
  for (int it = 0; it < kMaxBisectIters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    out.iterations = it + 1;
    if (clamped_sum(g, w, d, mid) > cap)
      lo = mid;
    else
      hi = mid;
  }
  out.dual = hi;
  for (std::size_t m = 0; m < g.size(); ++m)
    out.x[m] = std::max(0.0, (g[m] - out.dual * w[m]) / d);
  return out;
}

double solve_p4(const P4Inputs& in) {
  const double unconstrained =
      (in.rho * (in.lambda_ij - in.gamma_row_sum) + in.theta_bar * in.alpha_prev -
       in.phi_prev - in.fog_unit_cost) /
      (in.rho + in.theta_bar);
  return std::min(std::max(0.0, unconstrained), in.alpha_ub);
}

std::vector<double> solve_p5(const P5Inputs& in) {
  const std::size_t K = in.gamma_prev.size();
  std::vector<double> y(K);
  double y_sum = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    y[k] = in.rho * (in.alpha_prev - in.beta_prev[k] - in.lambda_ij) +
           (in.phi_prev + in.varphi_prev[k] - in.sigma_bar * in.gamma_prev[k]);
    y_sum += y[k];
  }
  const double coupled = in.rho * y_sum / ((K + 1) * in.rho + in.sigma_bar);
  std::vector<double> gamma(K);
  for (std::size_t k = 0; k < K; ++k)
    gamma[k] = std::max(0.0, (coupled - y[k]) / (in.rho + in.sigma_bar));
  return gamma;
}

std::vector<double> solve_p6(const P6Inputs& in, double link_cap_A,
                             std::span<const double> sizes_s_per_entry) {
  const std::size_t M = in.beta_prev.size();
  const double denom = in.eta_bar + 2.0 * in.rho;
  std::vector<double> g(M);
  for (std::size_t m = 0; m < M; ++m)
    g[m] = in.rho * (in.gamma_prev[m] + in.l_prev[m]) + in.eta_bar * in.beta_prev[m] -
           (in.dispatch_cost_w[m] + in.chi_prev[m] - in.varphi_prev[m]);
  return bisect_waterfill(g, sizes_s_per_entry, denom, link_cap_A).x;
}

std::vector<double> solve_p7(const P7Inputs& in, double cap) {
  const std::size_t M = in.beta_prev.size();
  const double denom = in.rho + in.kappa_bar;
  std::vector<double> z(M);
  for (std::size_t m = 0; m < M; ++m)
    z[m] = in.kappa_bar * in.l_prev[m] + in.rho * in.beta_prev[m] + in.chi_prev[m];
  const std::vector<double> ones(M, 1.0);
  return bisect_waterfill(z, ones, denom, cap).x;
}

}  // namespace fogcloud
