#include "swrad/multizone.hpp"

#include <string>

#include "swrad/enclosure.hpp"
#include "swrad/error.hpp"

namespace swrad {

NetDiffuseSystem assemble_system(const ZdcMatrix& zdc, const SolarInputRecord& inputs,
                                 std::span<const double> floor_reflectances) {
  const std::size_t n = zdc.zone_count();
  if (inputs.direct.size() != n || inputs.diffuse.size() != n || floor_reflectances.size() != n)
    throw Error(ErrorCode::InputSchema, "inputs do not match the " + std::to_string(n) + "-zone coupling matrix");

  NetDiffuseSystem sys{DenseMatrix(n, n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t zi = i + 1;
    double diag = 1.0;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != zi) diag += zdc.a(zi, k);
    for (std::size_t j = 0; j < n; ++j) sys.m(i, j) = (i == j) ? diag : -zdc.a(j + 1, zi);
    sys.n[i] = inputs.diffuse[i] + floor_reflectances[i] * inputs.direct[i];
  }
  return sys;
}

std::vector<double> solve_net_diffuse(const DenseMatrix& m, std::span<const double> rhs) {
  return solve_dense(m, rhs);
}

DenseMatrix interzone_fluxes(const ZdcMatrix& zdc, std::span<const double> net_diffuse) {
  const std::size_t n = zdc.zone_count();
  DenseMatrix flux(n + 1, n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) flux(i, j) = zdc.a(i, j) * net_diffuse[i - 1];
  return flux;
}

NetDiffuseSolution solve_multizone(const ZdcMatrix& zdc, const SolarInputRecord& inputs,
                                   std::span<const double> floor_reflectances) {
  NetDiffuseSystem sys = assemble_system(zdc, inputs, floor_reflectances);
  NetDiffuseSolution sol;
  sol.d = solve_net_diffuse(sys.m, sys.n);
  sol.interzone_flux = interzone_fluxes(zdc, sol.d);
  sol.m = std::move(sys.m);
  sol.n = std::move(sys.n);
  return sol;
}

std::vector<double> floor_reflectances(const ValidatedModel& model) {
  std::vector<double> rho(model.zone_count());
  for (std::size_t i = 0; i < rho.size(); ++i)
    rho[i] = aggregate_entities(model, static_cast<int>(i + 1))[Entity::Slabs].optics.reflectance;
  return rho;
}

double relative_residual(const DenseMatrix& m, std::span<const double> d, std::span<const double> rhs) {
  std::vector<double> r = m.multiply(d);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= rhs[i];
  const double scale = max_abs(rhs);
  return scale > 0.0 ? max_abs(r) / scale : max_abs(r);
}

}  // namespace swrad
