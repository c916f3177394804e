#pragma once

#include <span>
#include <string>
#include <vector>

#include "swrad/coupling.hpp"
#include "swrad/dense.hpp"
#include "swrad/enclosure.hpp"
#include "swrad/model.hpp"

namespace swrad {

struct ZoneFluxes {
  int zone = 0;
  double diffuse_input = 0.0;   // d0_i, W
  double direct_input = 0.0;    // D_i, W
  double net_diffuse = 0.0;     // d_i, W
  double escape_outside = 0.0;  // a_i0 * d_i, W
  EntityVector absorbed{};      // per entity, W
  double enclosure_escape = 0.0;

  bool operator==(const ZoneFluxes&) const = default;
};

struct FluxReport {
  std::string timestamp;
  std::vector<ZoneFluxes> zones;
  DenseMatrix interzone_flux;  // (n+1) x (n+1), W
  // |sum N - sum (1 + a_i0) d_i| + |sum (D_i + d_i) - absorbed - enclosure escape|
  double balance_residual = 0.0;

  bool operator==(const FluxReport&) const = default;
};

/// Everything that depends only on the building: ZDC matrix, entity sets and
/// floor reflectances. Built once, then shared read-only by all timesteps.
class Simulation {
 public:
  explicit Simulation(const ValidatedModel& model);

  const ValidatedModel& model() const noexcept { return *model_; }
  const ZdcMatrix& zdc() const noexcept { return zdc_; }
  const std::vector<EntitySet>& entity_sets() const noexcept { return entity_sets_; }
  std::span<const double> floor_reflectances() const noexcept { return floor_reflectances_; }

  /// One timestep: net diffuse solve, inter-zone fluxes, then the enclosure
  /// repartition of every zone fed with (D_i, d_i).
  FluxReport step(const SolarInputRecord& record) const;

  /// Reference kernel, one timestep after the other.
  std::vector<FluxReport> run_serial(std::span<const SolarInputRecord> series) const;

  /// OpenMP kernel over timesteps; output order matches input order and the
  /// values are identical to run_serial. threads <= 0 uses the OpenMP default.
  std::vector<FluxReport> run_parallel(std::span<const SolarInputRecord> series, int threads = 0) const;

 private:
  const ValidatedModel* model_;
  ZdcMatrix zdc_;
  std::vector<EntitySet> entity_sets_;
  std::vector<double> floor_reflectances_;
};

struct SimulationOptions {
  bool parallel = true;
  int threads = 0;
};

/// Throws Error(InputSchema) for an empty series; solve errors are rethrown
/// with the offending timestamp in the message.
std::vector<FluxReport> run_simulation(const ValidatedModel& model,
                                       std::span<const SolarInputRecord> series,
                                       const SimulationOptions& options = {});

}  // namespace swrad
