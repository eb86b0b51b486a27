#ifndef FOGCLOUD_GENERATOR_HPP
#define FOGCLOUD_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "fogcloud/model.hpp"

namespace fogcloud {

// Bumped whenever a draw stream changes meaning.
constexpr int kGeneratorVersion = 1;

struct GenSpec {
  int n_fog = 1000;
  std::uint64_t seed = 0;
  double scale_capacity = 1.0;  // multiplies every server count (and so
                                // the arrival-rate distribution bounds)
  std::optional<double> compensation_h;   // uniform h_i override
  std::optional<double> bandwidth_B;      // uniform B_k override
  std::optional<double> latency_omega;    // uniform omega_j override
};

// Counter-based uniform draw: independent per (seed, field, index), so
// adding fields never perturbs existing streams.
double uniform_draw(std::uint64_t seed, std::string_view field,
                    std::uint64_t index, double lo, double hi);

// Two applications, three data centers with fixed catalog constants;
// per-fog-device fields drawn from the documented uniform distributions.
// Draws failing validation are redrawn with an incremented sub-seed and
// counted in the scenario metadata.
Scenario generate(const GenSpec& spec);

}  // namespace fogcloud

#endif
