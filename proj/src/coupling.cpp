#include "swrad/coupling.hpp"

#include <string>

#include "swrad/enclosure.hpp"

namespace swrad {

double coupling_coefficient(double total_area, double opaque_reflectance, double window_area,
                            double diffuse_transmittance) {
  return diffuse_transmittance * (window_area / total_area) /
         (1.0 - opaque_reflectance * ((total_area - window_area) / total_area));
}

double opaque_reflectance(const ValidatedModel& model, int zone_id) {
  double area = 0.0;
  double rho = 0.0;
  for (const Surface& s : model.zone(zone_id).surfaces) {
    area += s.area;
    rho += s.area * s.optics.reflectance;
  }
  return area > 0.0 ? rho / area : 0.0;
}

double coupling_coefficient(const ValidatedModel& model, int zone_id, std::size_t aperture_index) {
  const Aperture& a = model.aperture(aperture_index);
  if (!a.touches(zone_id))
    throw Error(ErrorCode::BadTopology, "aperture '" + a.id + "' does not touch zone " + std::to_string(zone_id));
  return coupling_coefficient(model.total_area(zone_id), opaque_reflectance(model, zone_id), a.area,
                              a.diffuse_transmittance);
}

namespace {

void finish(ZdcMatrix& zdc) {
  const std::size_t n = zdc.a.rows() - 1;
  zdc.leak_ratio.assign(n, 0.0);
  zdc.warnings.clear();
  for (std::size_t i = 1; i <= n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) r += zdc.a(i, j);
    zdc.leak_ratio[i - 1] = r;
    if (r > 1.0)
      zdc.warnings.push_back({ErrorCode::LeakGtOne, "zone " + std::to_string(i),
                              "leak ratio " + std::to_string(r) + " exceeds 1"});
  }
}

}  // namespace

ZdcMatrix build_zdc(const ValidatedModel& model) {
  const std::size_t n = model.zone_count();
  ZdcMatrix zdc{DenseMatrix(n + 1, n + 1), {}, {}};

  std::vector<double> rho_o(n);
  for (std::size_t i = 0; i < n; ++i) rho_o[i] = opaque_reflectance(model, static_cast<int>(i + 1));

  for (const Aperture& a : model.apertures()) {
    // Each inside endpoint exports through the aperture with its own geometry.
    for (int from : {a.from_zone, a.to_zone}) {
      if (from == kOutside) continue;
      const auto i = static_cast<std::size_t>(from);
      const auto j = static_cast<std::size_t>(a.other_side(from));
      zdc.a(i, j) += coupling_coefficient(model.total_area(from), rho_o[i - 1], a.area, a.diffuse_transmittance);
    }
  }
  finish(zdc);
  return zdc;
}

ZdcMatrix make_zdc(const DenseMatrix& a) {
  ZdcMatrix zdc{a, {}, {}};
  for (std::size_t j = 0; j < a.cols(); ++j) zdc.a(0, j) = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) zdc.a(i, i) = 0.0;
  finish(zdc);
  return zdc;
}

}  // namespace swrad
