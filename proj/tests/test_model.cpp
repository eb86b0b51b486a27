#include "fogcloud/model.hpp"

#include "doctest.h"
#include "fogcloud/generator.hpp"
#include "test_util.hpp"

using namespace fogcloud;
using testutil::tiny_scenario;

TEST_CASE("generated scenario passes validation") {
  const Scenario sc = generate(GenSpec{.n_fog = 20, .seed = 7});
  CHECK(validate_scenario(sc).pass());
}

TEST_CASE("service margin undefined when delay bound equals service time") {
  Scenario sc = tiny_scenario();
  sc.applications[0].max_delay_t = 1.0 / 3.0;  // == 1/mu
  const auto report = validate_scenario(sc);
  CHECK(report.hard_error());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == Violation::Kind::UndefinedServiceMargin) found = true;
  CHECK(found);
}

TEST_CASE("demand far above capacity flags aggregate infeasibility") {
  Scenario sc = tiny_scenario();
  // fog bound 8 + cloud margin (3*2000 - 6) = 6002; exceed it outright
  sc.fog_devices[0].arrival_rate_lambda = {1000.0 * 100.0};
  const auto report = validate_scenario(sc);
  CHECK(!report.pass());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == Violation::Kind::AggregateCapacity) {
      found = true;
      CHECK(!v.hard);  // warning, not an error: the solver diverges, not throws
    }
  }
  CHECK(found);
}

TEST_CASE("index mismatches are hard errors") {
  Scenario sc = tiny_scenario();
  sc.fog_devices[0].arrival_rate_lambda.push_back(1.0);
  CHECK(validate_scenario(sc).hard_error());
}

TEST_CASE("derived coefficients match hand arithmetic") {
  const Scenario sc = tiny_scenario();
  const auto d = derive_coefficients(sc);
  CHECK(d.a_jk[0] == doctest::Approx(138.6).epsilon(1e-12));  // 110 + 0.13*220
  CHECK(d.b_jk[0] == doctest::Approx(110.0));
  CHECK(d.e_jk[0] == doctest::Approx(6.0).epsilon(1e-12));  // 1/(0.5 - 1/3)
  CHECK(d.alpha_ub_ij[0] == doctest::Approx(8.0));          // 2.5/0.25 - 2
}

TEST_CASE("alpha bound clamps at zero for slow fog devices") {
  Scenario sc = tiny_scenario();
  sc.fog_devices[0].service_rate_v = {0.25};  // v/s = 1 < 1/t = 2
  sc.fog_devices[0].total_rate_v_i = 0.25;
  const auto d = derive_coefficients(sc);
  CHECK(d.alpha_ub_ij[0] == 0.0);
}

TEST_CASE("derive_coefficients is pure") {
  const Scenario sc = generate(GenSpec{.n_fog = 5, .seed = 3});
  const auto d1 = derive_coefficients(sc);
  const auto d2 = derive_coefficients(sc);
  CHECK(d1.unit_dispatch_cost_w == d2.unit_dispatch_cost_w);
  CHECK(d1.unit_fog_cost_u == d2.unit_fog_cost_u);
  CHECK(d1.e_jk == d2.e_jk);
}

TEST_CASE("service margin properties") {
  Scenario sc = tiny_scenario();
  const auto d = derive_coefficients(sc);
  const double t = sc.applications[0].max_delay_t;
  CHECK(d.e_jk[0] > 1.0 / t);

  // e is strictly decreasing in the delay bound
  sc.applications[0].max_delay_t = t + 1e-4;
  const auto d2 = derive_coefficients(sc);
  CHECK(d2.e_jk[0] < d.e_jk[0]);
}

TEST_CASE("power coefficients dominate idle power") {
  const Scenario sc = generate(GenSpec{.n_fog = 3, .seed = 11});
  const auto d = derive_coefficients(sc);
  for (int j = 0; j < sc.num_apps(); ++j)
    for (int k = 0; k < sc.num_dcs(); ++k) {
      CHECK(d.a_jk[idx_jk(j, k, sc.num_dcs())] >= sc.data_centers[k].idle_power_p[j]);
      CHECK(d.b_jk[idx_jk(j, k, sc.num_dcs())] >= 0.0);
    }
}
