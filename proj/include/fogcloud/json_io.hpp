#ifndef FOGCLOUD_JSON_IO_HPP
#define FOGCLOUD_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "fogcloud/admm.hpp"
#include "fogcloud/model.hpp"

namespace fogcloud {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

// Final plan: alpha (N*J), beta (N*J*K), server counts (J*K), cost
// breakdown, termination reason, iteration count.
std::string result_to_json(const SolveResult& result, const Scenario& scenario);

void write_trace_csv(const SolveResult& result, const std::string& path,
                     bool include_timing);

}  // namespace fogcloud

#endif
