#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "swrad/error.hpp"
#include "swrad/io.hpp"
#include "swrad/simulation.hpp"

using namespace swrad;

namespace {

ValidatedModel load(const char* name) { return validate(io::load_building(std::string(SWRAD_TEST_DATA "/") + name)); }

std::vector<SolarInputRecord> series_of(const ValidatedModel& vm) {
  return io::load_inputs(SWRAD_TEST_DATA "/three_zone_inputs.csv", vm, false);
}

void check_nonnegative(const FluxReport& r) {
  for (const auto& z : r.zones) {
    for (double v : {z.diffuse_input, z.direct_input, z.net_diffuse, z.escape_outside, z.enclosure_escape})
      CHECK(v >= 0.0);
    for (double v : z.absorbed) CHECK(v >= 0.0);
  }
  for (double v : r.interzone_flux.data()) CHECK(v >= 0.0);
  CHECK(r.balance_residual >= 0.0);
}

}  // namespace

TEST_CASE("constant inputs give identical reports") {
  const auto vm = load("three_zone.json");
  const SolarInputRecord rec{"t", {300.0, 0.0, 20.0}, {150.0, 40.0, 60.0}};
  std::vector<SolarInputRecord> series(3, rec);
  const auto reports = run_simulation(vm, series);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0] == reports[1]);
  CHECK(reports[1] == reports[2]);
  check_nonnegative(reports[0]);
  CHECK(reports[0].balance_residual <= 1e-9 * 570.0);
}

TEST_CASE("zero inputs give zero fluxes") {
  const auto vm = load("dwelling.json");
  const std::vector<SolarInputRecord> series{{"night", std::vector<double>(4, 0.0), std::vector<double>(4, 0.0)}};
  const auto r = run_simulation(vm, series).front();
  for (const auto& z : r.zones) {
    CHECK(z.net_diffuse == 0.0);
    CHECK(z.escape_outside == 0.0);
    CHECK(z.enclosure_escape == 0.0);
    for (double v : z.absorbed) CHECK(v == 0.0);
  }
  CHECK(r.interzone_flux == DenseMatrix(5, 5));
  CHECK(r.balance_residual == 0.0);
}

TEST_CASE("sealed three-zone building conserves diffuse radiation every timestep") {
  auto m = io::load_building(SWRAD_TEST_DATA "/three_zone.json");
  std::erase_if(m.apertures, [](const Aperture& a) { return a.is_external(); });
  const auto vm = validate(m);
  testing::Gen gen(61);
  std::vector<SolarInputRecord> series;
  for (int t = 0; t < 20; ++t)
    series.push_back({"t" + std::to_string(t), {0.0, 0.0, 0.0},
                      {gen.uniform(0, 300), gen.uniform(0, 300), gen.uniform(0, 300)}});
  for (const auto& r : run_simulation(vm, series)) {
    double in = 0.0, net = 0.0;
    for (const auto& z : r.zones) {
      in += z.diffuse_input;
      net += z.net_diffuse;
      CHECK(z.escape_outside == 0.0);
    }
    CHECK(std::abs(net - in) <= 1e-9 * in);
  }
}

TEST_CASE("parallel kernel reproduces the serial reference exactly") {
  const auto vm = load("three_zone.json");
  const auto series = series_of(vm);
  const Simulation sim(vm);
  const auto serial = sim.run_serial(series);
  for (int threads : {1, 2, 3, 8}) CHECK(sim.run_parallel(series, threads) == serial);
  for (const auto& r : serial) check_nonnegative(r);
}

TEST_CASE("permuting timesteps permutes the reports") {
  const auto vm = load("three_zone.json");
  auto series = series_of(vm);
  const auto reports = run_simulation(vm, series);
  std::vector<std::size_t> order(series.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<SolarInputRecord> shuffled;
  for (std::size_t k : order) shuffled.push_back(series[k]);
  const auto permuted = run_simulation(vm, shuffled);
  for (std::size_t k = 0; k < order.size(); ++k) CHECK(permuted[k] == reports[order[k]]);
}

TEST_CASE("enclosure layer sees the net diffuse radiation") {
  const auto vm = load("three_zone.json");
  const Simulation sim(vm);
  const auto r = sim.step({"t", {250.0, 0.0, 10.0}, {100.0, 30.0, 50.0}});
  for (std::size_t i = 0; i < 3; ++i) {
    const auto expected = solve_absorbed(r.zones[i].direct_input, r.zones[i].net_diffuse, sim.entity_sets()[i]);
    CHECK(r.zones[i].absorbed == expected.absorbed);
    CHECK(r.zones[i].enclosure_escape == expected.escape);
  }
}

TEST_CASE("simulation errors carry the timestamp") {
  const auto vm = load("three_zone.json");
  std::vector<SolarInputRecord> series{{"ok", {0, 0, 0}, {1, 1, 1}}, {"bad-row", {0, 0}, {1, 1}}};
  for (bool parallel : {false, true}) {
    try {
      run_simulation(vm, series, {.parallel = parallel});
      FAIL("expected E_INPUT_SCHEMA");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InputSchema);
      CHECK(std::string(e.what()).find("bad-row") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(run_simulation(vm, std::vector<SolarInputRecord>{}), Error);
}
