#include "swrad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "swrad/coupling.hpp"
#include "swrad/enclosure.hpp"
#include "swrad/error.hpp"
#include "swrad/multizone.hpp"
#include "swrad/oracle.hpp"

namespace swrad {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::string sci(double x) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << x;
  return ss.str();
}

class Collector {
 public:
  void record(std::string name, double worst, double limit) {
    results_.push_back({std::move(name), worst <= limit, "worst " + sci(worst) + " (limit " + sci(limit) + ")"});
  }
  void fail(std::string name, const std::exception& e) { results_.push_back({std::move(name), false, e.what()}); }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_oracle_checks(const ValidatedModel& model, double tol) {
  Collector out;
  const std::size_t n = model.zone_count();
  const std::vector<double> rho_floor = floor_reflectances(model);

  try {
    double worst = 0.0;
    double worst_balance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const EntitySet es = aggregate_entities(model, static_cast<int>(i + 1));
      const double direct = 1.0;
      const double diffuse = 1.0;
      const AbsorbedFluxes direct_solve = solve_absorbed(direct, diffuse, es);
      const EntityVector phi0 = incident_split(direct, diffuse, es);
      const auto fp = oracle::fixedpoint_absorbed(es, phi0, tol);
      const double scale = direct + diffuse;
      for (std::size_t k = 0; k < kEntityCount; ++k)
        worst = std::max(worst, std::abs(direct_solve.absorbed[k] - fp.values[k]) / scale);
      worst_balance = std::max(
          worst_balance, std::abs(direct_solve.total_absorbed() + direct_solve.escape - scale) / scale);
    }
    out.record("enclosure: direct solve vs fixed-point radiosity", worst, 1e-9);
    out.record("enclosure: energy balance", worst_balance, 1e-9);
  } catch (const std::exception& e) {
    out.fail("enclosure checks", e);
  }

  try {
    double worst_escape = 0.0;
    double worst_coupling = 0.0;
    for (const Aperture& a : model.apertures()) {
      for (int zone : {a.from_zone, a.to_zone}) {
        if (zone == kOutside) continue;
        const double at = model.total_area(zone);
        const double rho_o = opaque_reflectance(model, zone);
        const double rf = rho_floor[static_cast<std::size_t>(zone) - 1];
        const double closed = escape_flux_closed_form(1.0, 1.0, a.area, at, rho_o, rf, a.diffuse_transmittance);
        const auto series =
            oracle::reflection_series_escape(1.0, 1.0, a.area, at, rho_o, rf, a.diffuse_transmittance);
        worst_escape = std::max(worst_escape, rel_diff(closed, series.values[0]));

        const double coeff = coupling_coefficient(at, rho_o, a.area, a.diffuse_transmittance);
        const auto unit =
            oracle::reflection_series_escape(1.0, 0.0, a.area, at, rho_o, 0.0, a.diffuse_transmittance);
        worst_coupling = std::max(worst_coupling, std::abs(coeff - unit.values[0]));
      }
    }
    out.record("escape flux: closed form vs reflection series", worst_escape, 1e-12);
    out.record("coupling terms: closed form vs reflection series", worst_coupling, 1e-12);
  } catch (const std::exception& e) {
    out.fail("reflection series checks", e);
  }

  try {
    // Every term must grow with the opaque reflectance of its zone.
    bool monotone = true;
    for (const Aperture& a : model.apertures()) {
      for (int zone : {a.from_zone, a.to_zone}) {
        if (zone == kOutside) continue;
        const double at = model.total_area(zone);
        double prev = -1.0;
        for (int s = 0; s < 20; ++s) {
          const double rho_o = 0.95 * s / 19.0;
          const double v = coupling_coefficient(at, rho_o, a.area, a.diffuse_transmittance);
          if (a.diffuse_transmittance > 0.0 && a.area < at && !(v > prev)) monotone = false;
          prev = v;
        }
      }
    }
    out.record("coupling terms: strictly increasing in opaque reflectance", monotone ? 0.0 : 1.0, 0.0);
  } catch (const std::exception& e) {
    out.fail("monotonicity check", e);
  }

  try {
    const ZdcMatrix zdc = build_zdc(model);
    SolarInputRecord unit{"check", std::vector<double>(n, 1.0), std::vector<double>(n, 1.0)};
    const NetDiffuseSolution sol = solve_multizone(zdc, unit, rho_floor);
    const auto jac = oracle::jacobi_net_diffuse(zdc, sol.n, tol);
    double worst = 0.0;
    const double scale = max_abs(sol.d);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(sol.d[i] - jac.values[i]) / scale);
    out.record("multizone: direct solve vs Jacobi iteration", worst, 1e-9);
    out.record("multizone: relative residual of M d = N", relative_residual(sol.m, sol.d, sol.n), 1e-10);

    DenseMatrix sealed_a = zdc.a;
    for (std::size_t i = 0; i <= n; ++i) sealed_a(i, 0) = 0.0;
    const ZdcMatrix sealed = make_zdc(sealed_a);
    SolarInputRecord diffuse_only{"check", std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) diffuse_only.diffuse[i] = static_cast<double>(i + 1);
    const NetDiffuseSolution cons = solve_multizone(sealed, diffuse_only, rho_floor);
    const double in = std::accumulate(diffuse_only.diffuse.begin(), diffuse_only.diffuse.end(), 0.0);
    const double net = std::accumulate(cons.d.begin(), cons.d.end(), 0.0);
    out.record("multizone: conservation with outside leaks removed", std::abs(net - in) / in, 1e-9);
  } catch (const std::exception& e) {
    out.fail("multizone checks", e);
  }

  return out.take();
}

}  // namespace swrad
