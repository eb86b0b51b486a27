#include "fogcloud/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fogcloud {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw SchemaError("unknown field '" + key + "' in " + where);
}

template <typename T>
T field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError("missing field '" + key + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError("wrong type for field '" + key + "' in " + where);
  }
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
  ordered_json root;
  root["applications"] = ordered_json::array();
  for (const auto& app : sc.applications)
    root["applications"].push_back(ordered_json{
        {"id", app.id},
        {"request_size_s", app.request_size_s},
        {"max_delay_t", app.max_delay_t},
        {"response_traffic_tau", app.response_traffic_tau},
        {"latency_loss_omega", app.latency_loss_omega},
    });
  root["fog_devices"] = ordered_json::array();
  for (const auto& fog : sc.fog_devices)
    root["fog_devices"].push_back(ordered_json{
        {"id", fog.id},
        {"service_rate_v", fog.service_rate_v},
        {"total_rate_v_i", fog.total_rate_v_i},
        {"idle_power_q", fog.idle_power_q},
        {"peak_power_q", fog.peak_power_q},
        {"electricity_price_S", fog.electricity_price_S},
        {"compensation_factor_h", fog.compensation_factor_h},
        {"arrival_rate_lambda", fog.arrival_rate_lambda},
    });
  root["data_centers"] = ordered_json::array();
  for (const auto& dc : sc.data_centers)
    root["data_centers"].push_back(ordered_json{
        {"id", dc.id},
        {"server_count_C", dc.server_count_C},
        {"service_rate_mu", dc.service_rate_mu},
        {"idle_power_p", dc.idle_power_p},
        {"peak_power_p", dc.peak_power_p},
        {"pue", dc.pue},
        {"link_capacity_A", dc.link_capacity_A},
        {"electricity_price_nu", dc.electricity_price_nu},
        {"bandwidth_price_B", dc.bandwidth_price_B},
        {"latency_to_fog_L", dc.latency_to_fog_L},
    });
  root["slot_duration_T"] = sc.slot_duration_T;
  if (sc.metadata.present)
    root["metadata"] = ordered_json{
        {"seed", sc.metadata.seed},
        {"generator_version", sc.metadata.generator_version},
        {"redraw_count", sc.metadata.redraw_count},
    };
  return root.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(root, {"applications", "fog_devices", "data_centers",
                      "slot_duration_T", "metadata"},
               "scenario");

  Scenario sc;
  sc.slot_duration_T = field<double>(root, "slot_duration_T", "scenario");

  int idx = 0;
  for (const auto& node : field<json>(root, "applications", "scenario")) {
    const std::string where = "applications[" + std::to_string(idx++) + "]";
    require_keys(node, {"id", "request_size_s", "max_delay_t",
                        "response_traffic_tau", "latency_loss_omega"},
                 where);
    Application app;
    app.id = field<int>(node, "id", where);
    app.request_size_s = field<double>(node, "request_size_s", where);
    app.max_delay_t = field<double>(node, "max_delay_t", where);
    app.response_traffic_tau = field<double>(node, "response_traffic_tau", where);
    app.latency_loss_omega = field<double>(node, "latency_loss_omega", where);
    sc.applications.push_back(app);
  }

  idx = 0;
  for (const auto& node : field<json>(root, "fog_devices", "scenario")) {
    const std::string where = "fog_devices[" + std::to_string(idx++) + "]";
    require_keys(node, {"id", "service_rate_v", "total_rate_v_i", "idle_power_q",
                        "peak_power_q", "electricity_price_S",
                        "compensation_factor_h", "arrival_rate_lambda"},
                 where);
    FogDevice fog;
    fog.id = field<int>(node, "id", where);
    fog.service_rate_v = field<std::vector<double>>(node, "service_rate_v", where);
    fog.total_rate_v_i = field<double>(node, "total_rate_v_i", where);
    fog.idle_power_q = field<double>(node, "idle_power_q", where);
    fog.peak_power_q = field<double>(node, "peak_power_q", where);
    fog.electricity_price_S = field<double>(node, "electricity_price_S", where);
    fog.compensation_factor_h = field<double>(node, "compensation_factor_h", where);
    fog.arrival_rate_lambda = field<std::vector<double>>(node, "arrival_rate_lambda", where);
    sc.fog_devices.push_back(std::move(fog));
  }

  idx = 0;
  for (const auto& node : field<json>(root, "data_centers", "scenario")) {
    const std::string where = "data_centers[" + std::to_string(idx++) + "]";
    require_keys(node, {"id", "server_count_C", "service_rate_mu", "idle_power_p",
                        "peak_power_p", "pue", "link_capacity_A",
                        "electricity_price_nu", "bandwidth_price_B",
                        "latency_to_fog_L"},
                 where);
    DataCenter dc;
    dc.id = field<int>(node, "id", where);
    dc.server_count_C = field<std::vector<int>>(node, "server_count_C", where);
    dc.service_rate_mu = field<std::vector<double>>(node, "service_rate_mu", where);
    dc.idle_power_p = field<std::vector<double>>(node, "idle_power_p", where);
    dc.peak_power_p = field<std::vector<double>>(node, "peak_power_p", where);
    dc.pue = field<double>(node, "pue", where);
    dc.link_capacity_A = field<double>(node, "link_capacity_A", where);
    dc.electricity_price_nu = field<double>(node, "electricity_price_nu", where);
    dc.bandwidth_price_B = field<double>(node, "bandwidth_price_B", where);
    dc.latency_to_fog_L = field<std::vector<double>>(node, "latency_to_fog_L", where);
    sc.data_centers.push_back(std::move(dc));
  }

  if (root.contains("metadata")) {
    const auto& node = root.at("metadata");
    require_keys(node, {"seed", "generator_version", "redraw_count"}, "metadata");
    sc.metadata.present = true;
    sc.metadata.seed = field<std::uint64_t>(node, "seed", "metadata");
    sc.metadata.generator_version = field<int>(node, "generator_version", "metadata");
    sc.metadata.redraw_count = field<int>(node, "redraw_count", "metadata");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write scenario file: " + path);
  out << scenario_to_json(sc);
}

std::string result_to_json(const SolveResult& res, const Scenario& sc) {
  const int N = sc.num_fogs(), J = sc.num_apps(), K = sc.num_dcs();
  ordered_json root;

  ordered_json alpha = ordered_json::array();
  for (int i = 0; i < N; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < J; ++j) row.push_back(res.state.alpha[idx_ij(i, j, J)]);
    alpha.push_back(std::move(row));
  }
  ordered_json beta = ordered_json::array();
  for (int i = 0; i < N; ++i) {
    ordered_json plane = ordered_json::array();
    for (int j = 0; j < J; ++j) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < K; ++k) row.push_back(res.state.beta[idx_ijk(i, j, k, J, K)]);
      plane.push_back(std::move(row));
    }
    beta.push_back(std::move(plane));
  }
  ordered_json servers = ordered_json::array();
  for (int j = 0; j < J; ++j) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < K; ++k) row.push_back(res.costs.server_counts_c[idx_jk(j, k, K)]);
    servers.push_back(std::move(row));
  }

  root["alpha"] = std::move(alpha);
  root["beta"] = std::move(beta);
  root["server_counts_c"] = std::move(servers);
  root["costs"] = ordered_json{
      {"gamma1_energy", res.costs.gamma1_energy},
      {"gamma2_bandwidth", res.costs.gamma2_bandwidth},
      {"gamma3_latency_loss", res.costs.gamma3_latency_loss},
      {"gamma4_compensation", res.costs.gamma4_compensation},
      {"total", res.costs.total},
      {"reduced_objective", res.costs.reduced_objective},
  };
  root["termination_reason"] =
      res.termination == TerminationReason::Converged ? "converged" : "iteration-cap";
  root["iterations"] = res.iterations;
  root["final_feasibility"] = res.final_feasibility;
  return root.dump(2) + "\n";
}

void write_trace_csv(const SolveResult& res, const std::string& path,
                     bool include_timing) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write trace file: " + path);
  out << IterationTrace::csv_header() << "\n";
  for (IterationTrace tr : res.traces) {
    if (!include_timing) tr.wall_time_ms = 0.0;
    out << tr.csv_row() << "\n";
  }
}

}  // namespace fogcloud
