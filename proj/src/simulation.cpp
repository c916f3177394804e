#include "swrad/simulation.hpp"

#include <cmath>
#include <exception>
#include <optional>

#include <omp.h>

#include "swrad/error.hpp"
#include "swrad/multizone.hpp"

namespace swrad {

Simulation::Simulation(const ValidatedModel& model)
    : model_(&model), zdc_(build_zdc(model)), floor_reflectances_(swrad::floor_reflectances(model)) {
  entity_sets_.reserve(model.zone_count());
  for (std::size_t i = 0; i < model.zone_count(); ++i)
    entity_sets_.push_back(aggregate_entities(model, static_cast<int>(i + 1)));
}

FluxReport Simulation::step(const SolarInputRecord& record) const {
  check_inputs(*model_, record);
  const std::size_t n = model_->zone_count();

  NetDiffuseSolution sol = solve_multizone(zdc_, record, floor_reflectances_);

  FluxReport report;
  report.timestamp = record.timestamp;
  report.zones.resize(n);

  double rhs_total = 0.0;
  double exported_total = 0.0;
  double enclosure_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ZoneFluxes& z = report.zones[i];
    z.zone = static_cast<int>(i + 1);
    z.diffuse_input = record.diffuse[i];
    z.direct_input = record.direct[i];
    z.net_diffuse = sol.d[i];
    z.escape_outside = sol.interzone_flux(i + 1, 0);

    const AbsorbedFluxes abs = solve_absorbed(z.direct_input, z.net_diffuse, entity_sets_[i]);
    z.absorbed = abs.absorbed;
    z.enclosure_escape = abs.escape;

    rhs_total += sol.n[i];
    exported_total += z.net_diffuse + z.escape_outside;
    enclosure_residual += z.direct_input + z.net_diffuse - abs.total_absorbed() - abs.escape;
  }
  report.interzone_flux = std::move(sol.interzone_flux);
  report.balance_residual = std::abs(rhs_total - exported_total) + std::abs(enclosure_residual);
  return report;
}

namespace {

[[noreturn]] void rethrow_with_timestamp(const std::exception_ptr& error, const std::string& timestamp) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    throw Error(e.code(), "at timestamp '" + timestamp + "': " + e.what());
  }
}

}  // namespace

std::vector<FluxReport> Simulation::run_serial(std::span<const SolarInputRecord> series) const {
  std::vector<FluxReport> reports;
  reports.reserve(series.size());
  for (const SolarInputRecord& record : series) {
    try {
      reports.push_back(step(record));
    } catch (const Error&) {
      rethrow_with_timestamp(std::current_exception(), record.timestamp);
    }
  }
  return reports;
}

std::vector<FluxReport> Simulation::run_parallel(std::span<const SolarInputRecord> series, int threads) const {
  const auto count = static_cast<std::ptrdiff_t>(series.size());
  std::vector<FluxReport> reports(series.size());
  std::vector<std::exception_ptr> errors(series.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    const auto k = static_cast<std::size_t>(t);
    try {
      reports[k] = step(series[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  // Report the earliest failing record, as the serial kernel would.
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const Error&) {
      rethrow_with_timestamp(errors[k], series[k].timestamp);
    }
  }
  return reports;
}

std::vector<FluxReport> run_simulation(const ValidatedModel& model, std::span<const SolarInputRecord> series,
                                       const SimulationOptions& options) {
  if (series.empty()) throw Error(ErrorCode::InputSchema, "solar input series is empty");
  const Simulation sim(model);
  return options.parallel ? sim.run_parallel(series, options.threads) : sim.run_serial(series);
}

}  // namespace swrad
