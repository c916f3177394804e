#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "swrad/simulation.hpp"

using namespace swrad;

namespace {

BuildingModel row_of_rooms(int n) {
  BuildingModel m;
  for (int i = 1; i <= n; ++i) {
    Zone z;
    z.id = i;
    z.name = "room" + std::to_string(i);
    const std::string p = "z" + std::to_string(i);
    z.surfaces.push_back({p + "-floor", i, SurfaceCategory::Slab, 20.0, {0.3, 0.7, 0.0}});
    z.surfaces.push_back({p + "-ceiling", i, SurfaceCategory::Slab, 20.0, {0.7, 0.3, 0.0}});
    z.surfaces.push_back({p + "-walls", i, SurfaceCategory::VerticalWall, 36.0, {0.5, 0.5, 0.0}});
    z.surfaces.push_back({p + "-partition", i, SurfaceCategory::InternalWall, 10.0, {0.6, 0.4, 0.0}});
    m.zones.push_back(z);
    m.apertures.push_back({p + "-window", i, 0, 3.0, 0.8, {0.08, 0.07, 0.85}, ApertureKind::Window, 1.0});
    if (i > 1)
      m.apertures.push_back({p + "-door", i - 1, i, 1.8, 1.0, {0.0, 0.0, 1.0}, ApertureKind::LargeOpening, 1.0});
  }
  return m;
}

std::vector<SolarInputRecord> series(int zones, int steps) {
  std::vector<SolarInputRecord> out(steps);
  for (int t = 0; t < steps; ++t) {
    out[t].timestamp = std::to_string(t);
    for (int i = 0; i < zones; ++i) {
      out[t].direct.push_back(100.0 + (t * 7 + i * 13) % 400);
      out[t].diffuse.push_back(20.0 + (t * 3 + i * 5) % 150);
    }
  }
  return out;
}

void BM_Serial(benchmark::State& state) {
  const int zones = static_cast<int>(state.range(0));
  const auto vm = validate(row_of_rooms(zones));
  const Simulation sim(vm);
  const auto inputs = series(zones, 8760);
  for (auto _ : state) benchmark::DoNotOptimize(sim.run_serial(inputs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}

void BM_Parallel(benchmark::State& state) {
  const int zones = static_cast<int>(state.range(0));
  const auto vm = validate(row_of_rooms(zones));
  const Simulation sim(vm);
  const auto inputs = series(zones, 8760);
  for (auto _ : state) benchmark::DoNotOptimize(sim.run_parallel(inputs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
