// Batch front-end: generate scenarios, run solves and parameter sweeps,
// compare against the exact LP oracle and the cloud-only baseline.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fogcloud/admm.hpp"
#include "fogcloud/generator.hpp"
#include "fogcloud/json_io.hpp"
#include "fogcloud/oracle.hpp"

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitIterationCap = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitConfigError = 4;

struct SolverFlags {
  double rho = 0.002;
  double delta = 1.0;
  int max_iter = 20000;
  double tol_objective = 1e-8;
  double tol_feasibility = 0.0;
  bool baseline = false;
  bool idle_shutdown = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rho", rho, "penalty parameter");
    cmd->add_option("--delta", delta, "dual damping, in (0,2)");
    cmd->add_option("--max-iter", max_iter, "iteration cap");
    cmd->add_option("--tol-objective", tol_objective, "relative objective-change threshold");
    cmd->add_option("--tol-feasibility", tol_feasibility,
                    "workload-balance threshold (0: 1e-3 * max(1, sum lambda))");
    cmd->add_flag("--baseline", baseline, "force all fog rate bounds to zero");
    cmd->add_flag("--idle-shutdown", idle_shutdown,
                  "power down server pools that receive no traffic");
  }

  fogcloud::SolverConfig config() const {
    fogcloud::SolverConfig cfg;
    cfg.rho = rho;
    cfg.delta = delta;
    cfg.max_iterations = max_iter;
    cfg.tol_objective = tol_objective;
    cfg.tol_feasibility = tol_feasibility;
    cfg.baseline = baseline;
    cfg.idle_shutdown = idle_shutdown;
    return cfg;
  }
};

struct GenFlags {
  int n = 1000;
  std::uint64_t seed = 0;
  double capacity_scale = 1.0;
  std::optional<double> h, bandwidth, omega;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of fog devices");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--capacity-scale", capacity_scale,
                    "multiplier on server counts (scales arrival rates too)");
    cmd->add_option("--compensation", h, "uniform compensation factor");
    cmd->add_option("--bandwidth", bandwidth, "uniform bandwidth price");
    cmd->add_option("--omega", omega, "uniform latency loss parameter");
  }

  fogcloud::GenSpec spec() const {
    fogcloud::GenSpec gs;
    gs.n_fog = n;
    gs.seed = seed;
    gs.scale_capacity = capacity_scale;
    gs.compensation_h = h;
    gs.bandwidth_B = bandwidth;
    gs.latency_omega = omega;
    return gs;
  }
};

int check_scenario(const fogcloud::Scenario& sc) {
  const auto report = fogcloud::validate_scenario(sc);
  if (report.hard_error()) {
    for (const auto& v : report.violations)
      if (v.hard) std::cerr << "invalid scenario: " << v.message << "\n";
    return kExitConfigError;
  }
  for (const auto& v : report.violations)
    std::cerr << "warning: " << v.message << "\n";
  return kExitConverged;
}

double fog_traffic(const fogcloud::SolveResult& res, const fogcloud::Scenario& sc) {
  double t = 0.0;
  const int J = sc.num_apps();
  for (int i = 0; i < sc.num_fogs(); ++i)
    for (int j = 0; j < J; ++j)
      t += res.state.alpha[fogcloud::idx_ij(i, j, J)] * sc.applications[j].request_size_s;
  return t;
}

double cloud_workload(const fogcloud::SolveResult& res) {
  double t = 0.0;
  for (double b : res.state.beta) t += b;
  return t;
}

struct SweepRow {
  double value = 0.0;
  fogcloud::CostBreakdown costs;
  double fog_workload = 0.0;
  double cloud = 0.0;
  double baseline_total = 0.0;
  int iterations = 0;
  bool converged = false;
};

SweepRow run_sweep_point(const fogcloud::Scenario& sc, const fogcloud::SolverConfig& cfg,
                         double value) {
  SweepRow row;
  row.value = value;
  const auto res = fogcloud::run(sc, cfg);
  row.costs = res.costs;
  row.fog_workload = fog_traffic(res, sc);
  row.cloud = cloud_workload(res);
  row.iterations = res.iterations;
  row.converged = res.termination == fogcloud::TerminationReason::Converged;
  const auto coeffs = fogcloud::derive_coefficients(sc);
  const auto base = fogcloud::solve_baseline(sc, coeffs, cfg.idle_shutdown);
  row.baseline_total = base.status == fogcloud::OracleResult::Status::Optimal
                           ? base.costs.total
                           : std::numeric_limits<double>::quiet_NaN();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fog-assisted cloud load balancing solver"};
  app.require_subcommand(1);

  // generate
  auto* cmd_gen = app.add_subcommand("generate", "write a seeded random scenario");
  GenFlags gen_flags;
  gen_flags.attach(cmd_gen);
  std::string gen_out = "scenario.json";
  cmd_gen->add_option("--out", gen_out, "output scenario path");

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "run the distributed solver");
  SolverFlags solve_flags;
  solve_flags.attach(cmd_solve);
  std::string solve_scenario, solve_out = "result.json", solve_trace;
  bool timing = false;
  cmd_solve->add_option("--scenario", solve_scenario, "scenario JSON")->required();
  cmd_solve->add_option("--out", solve_out, "result JSON path");
  cmd_solve->add_option("--trace", solve_trace, "trace CSV path");
  int trace_every = 1;
  cmd_solve->add_option("--trace-every", trace_every, "iterations between trace rows");
  cmd_solve->add_flag("--timing", timing,
                      "record real wall times in the trace (breaks bit-reproducibility)");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "solve over a list of parameter values");
  SolverFlags sweep_flags;
  sweep_flags.attach(cmd_sweep);
  GenFlags sweep_gen;
  sweep_gen.attach(cmd_sweep);
  std::string sweep_scenario, sweep_out = "sweep.csv", sweep_param;
  std::vector<double> sweep_values;
  int workers = 1;
  cmd_sweep->add_option("--scenario", sweep_scenario, "base scenario JSON");
  cmd_sweep->add_option("--param", sweep_param, "h | B | omega | rho | capacity_scale")
      ->required();
  cmd_sweep->add_option("--values", sweep_values, "sweep values")->required();
  cmd_sweep->add_option("--out", sweep_out, "output CSV path");
  cmd_sweep->add_option("--workers", workers, "parallel sweep points");

  // compare
  auto* cmd_cmp = app.add_subcommand("compare", "solver vs LP oracle vs baseline");
  SolverFlags cmp_flags;
  cmp_flags.attach(cmd_cmp);
  std::string cmp_scenario, cmp_out = "compare.json";
  cmd_cmp->add_option("--scenario", cmp_scenario, "scenario JSON")->required();
  cmd_cmp->add_option("--out", cmp_out, "report JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      fogcloud::save_scenario(fogcloud::generate(gen_flags.spec()), gen_out);
      return kExitConverged;
    }

    if (*cmd_solve) {
      const auto sc = fogcloud::load_scenario(solve_scenario);
      if (const int rc = check_scenario(sc); rc != 0) return rc;
      auto cfg = solve_flags.config();
      cfg.trace_every = trace_every;
      const auto res = fogcloud::run(sc, cfg);
      std::ofstream(solve_out) << fogcloud::result_to_json(res, sc);
      if (!solve_trace.empty()) fogcloud::write_trace_csv(res, solve_trace, timing);
      std::cout << (res.termination == fogcloud::TerminationReason::Converged
                        ? "converged"
                        : "iteration-cap")
                << " after " << res.iterations
                << " iterations, total cost " << res.costs.total << "\n";
      return res.termination == fogcloud::TerminationReason::Converged
                 ? kExitConverged
                 : kExitIterationCap;
    }

    if (*cmd_sweep) {
      if (sweep_values.empty()) {
        std::cerr << "sweep: --values must be nonempty\n";
        return kExitConfigError;
      }
      fogcloud::Scenario base;
      if (sweep_param != "capacity_scale")  // scale points are regenerated per value
        base = sweep_scenario.empty() ? fogcloud::generate(sweep_gen.spec())
                                      : fogcloud::load_scenario(sweep_scenario);

      std::vector<std::pair<fogcloud::Scenario, fogcloud::SolverConfig>> points;
      for (double value : sweep_values) {
        fogcloud::Scenario sc = base;
        fogcloud::SolverConfig cfg = sweep_flags.config();
        if (sweep_param == "h") {
          for (auto& fog : sc.fog_devices) fog.compensation_factor_h = value;
        } else if (sweep_param == "B") {
          for (auto& dc : sc.data_centers) dc.bandwidth_price_B = value;
        } else if (sweep_param == "omega") {
          for (auto& app_ : sc.applications) app_.latency_loss_omega = value;
        } else if (sweep_param == "rho") {
          cfg.rho = value;
        } else if (sweep_param == "capacity_scale") {
          auto gs = sweep_gen.spec();
          gs.scale_capacity = value;
          sc = fogcloud::generate(gs);
        } else {
          std::cerr << "sweep: unknown --param '" << sweep_param << "'\n";
          return kExitConfigError;
        }
        if (const int rc = check_scenario(sc); rc != 0) return rc;
        points.emplace_back(std::move(sc), cfg);
      }

      std::vector<SweepRow> rows(points.size());
      std::atomic<std::size_t> cursor{0};
      auto worker = [&] {
        for (;;) {
          const std::size_t p = cursor.fetch_add(1);
          if (p >= points.size()) return;
          rows[p] = run_sweep_point(points[p].first, points[p].second,
                                    sweep_values[p]);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < std::max(1, workers); ++t) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();

      std::ofstream out(sweep_out);
      out << "# fogcloud-sweep-v1\n";
      out << "param,value,gamma1,gamma2,gamma3,gamma4,total,reduced_objective,"
             "fog_workload,cloud_workload,baseline_total,rcr,iterations,converged\n";
      out.precision(17);
      bool all_converged = true;
      for (const auto& row : rows) {
        const double rcr = (row.baseline_total - row.costs.total) / row.baseline_total;
        out << sweep_param << ',' << row.value << ',' << row.costs.csv_row() << ','
            << row.fog_workload << ',' << row.cloud << ',' << row.baseline_total << ','
            << rcr << ',' << row.iterations << ',' << (row.converged ? 1 : 0) << "\n";
        all_converged = all_converged && row.converged;
      }
      return all_converged ? kExitConverged : kExitIterationCap;
    }

    if (*cmd_cmp) {
      const auto sc = fogcloud::load_scenario(cmp_scenario);
      if (const int rc = check_scenario(sc); rc != 0) return rc;
      const auto coeffs = fogcloud::derive_coefficients(sc);
      const int nvars =
          sc.num_fogs() * sc.num_apps() * (1 + sc.num_dcs());
      if (nvars > fogcloud::kOracleMaxVariables) {
        std::cerr << "compare: instance has " << nvars
                  << " variables, above the exact-oracle cap of "
                  << fogcloud::kOracleMaxVariables << "; refusing\n";
        return kExitConfigError;
      }
      const auto res = fogcloud::run(sc, cmp_flags.config());
      const auto oracle = fogcloud::solve_lp_exact(sc, coeffs);
      const auto baseline = fogcloud::solve_baseline(sc, coeffs, cmp_flags.idle_shutdown);
      if (oracle.status != fogcloud::OracleResult::Status::Optimal ||
          baseline.status != fogcloud::OracleResult::Status::Optimal) {
        std::cerr << "compare: oracle or baseline LP infeasible\n";
        return kExitInfeasible;
      }
      const auto oracle_costs =
          fogcloud::evaluate_costs(oracle.alpha, oracle.beta, sc, coeffs,
                                   cmp_flags.idle_shutdown);
      const double gap =
          (res.costs.reduced_objective - oracle.objective) / oracle.objective;
      const double rcr = (baseline.costs.total - res.costs.total) / baseline.costs.total;

      std::ostringstream report;
      report.precision(17);
      report << "{\n  \"schema\": \"fogcloud-compare-v1\",\n";
      auto costs_json = [](const fogcloud::CostBreakdown& c) {
        std::ostringstream os;
        os.precision(17);
        os << "{\"gamma1\": " << c.gamma1_energy << ", \"gamma2\": " << c.gamma2_bandwidth
           << ", \"gamma3\": " << c.gamma3_latency_loss
           << ", \"gamma4\": " << c.gamma4_compensation << ", \"total\": " << c.total
           << ", \"reduced_objective\": " << c.reduced_objective << "}";
        return os.str();
      };
      report << "  \"solver\": " << costs_json(res.costs) << ",\n";
      report << "  \"oracle\": " << costs_json(oracle_costs) << ",\n";
      report << "  \"baseline\": " << costs_json(baseline.costs) << ",\n";
      report << "  \"relative_gap\": " << gap << ",\n";
      report << "  \"rcr\": " << rcr << ",\n";
      report << "  \"iterations\": " << res.iterations << "\n}\n";
      std::ofstream(cmp_out) << report.str();
      std::cout << "relative gap " << gap << ", RCR " << rcr << "\n";
      return res.termination == fogcloud::TerminationReason::Converged
                 ? kExitConverged
                 : kExitIterationCap;
    }
  } catch (const fogcloud::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const fogcloud::SchemaError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitConfigError;
}
