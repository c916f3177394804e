#include "swrad/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swrad/error.hpp"

namespace swrad {

namespace {

constexpr EntityGroup kNeutralGroup{0.0, SurfaceOptics{0.0, 1.0, 0.0}};

struct Accumulator {
  double area = 0.0;
  double rho = 0.0;
  double alpha = 0.0;
  double tau = 0.0;

  void add(double a, const SurfaceOptics& o) {
    area += a;
    rho += a * o.reflectance;
    alpha += a * o.absorptance;
    tau += a * o.transmittance;
  }

  EntityGroup finish() const {
    if (area <= 0.0) return kNeutralGroup;
    return {area, SurfaceOptics{rho / area, alpha / area, tau / area}};
  }
};

std::size_t entity_of(SurfaceCategory c) {
  switch (c) {
    case SurfaceCategory::Slab: return index(Entity::Slabs);
    case SurfaceCategory::VerticalWall: return index(Entity::VerticalWalls);
    case SurfaceCategory::InternalWall: return index(Entity::InternalWalls);
  }
  return index(Entity::Slabs);
}

}  // namespace

double EntitySet::opaque_reflectance() const {
  double area = 0.0;
  double rho = 0.0;
  for (std::size_t i = 0; i < index(Entity::Windows); ++i) {
    area += groups[i].area;
    rho += groups[i].area * groups[i].optics.reflectance;
  }
  return area > 0.0 ? rho / area : 0.0;
}

EntitySet make_entity_set(const std::array<EntityGroup, kEntityCount>& groups) {
  EntitySet es;
  for (std::size_t i = 0; i < kEntityCount; ++i) {
    es.groups[i] = groups[i].area > 0.0 ? groups[i] : kNeutralGroup;
    es.total_area += es.groups[i].area;
  }
  if (!(es.total_area > 0.0)) throw Error(ErrorCode::EmptyEntity, "enclosure has zero total area");
  return es;
}

EntitySet aggregate_entities(const ValidatedModel& model, int zone_id) {
  const Zone& zone = model.zone(zone_id);
  std::array<Accumulator, kEntityCount> acc{};
  for (const Surface& s : zone.surfaces) acc[entity_of(s.category)].add(s.area, s.optics);
  for (std::size_t k : zone.apertures) {
    const Aperture& a = model.aperture(k);
    acc[index(Entity::Windows)].add(a.area, a.optics);
  }
  std::array<EntityGroup, kEntityCount> groups;
  for (std::size_t i = 0; i < kEntityCount; ++i) groups[i] = acc[i].finish();
  try {
    return make_entity_set(groups);
  } catch (const Error&) {
    throw Error(ErrorCode::EmptyEntity, "zone " + std::to_string(zone_id) + " has zero total area");
  }
}

EntityMatrix view_factors(const EntitySet& es) {
  EntityMatrix f{};
  for (std::size_t i = 0; i < kEntityCount; ++i)
    for (std::size_t j = 0; j < kEntityCount; ++j) f[i][j] = es.groups[j].area / es.total_area;
  return f;
}

EntityVector incident_split(double direct, double diffuse, const EntitySet& es) {
  EntityVector phi0{};
  for (std::size_t i = 0; i < kEntityCount; ++i) phi0[i] = diffuse * es.groups[i].area / es.total_area;
  phi0[index(Entity::Slabs)] += direct;
  return phi0;
}

AbsorptionSystem assemble_absorption_system(const EntitySet& es) {
  AbsorptionSystem sys{DenseMatrix(kEntityCount, kEntityCount), {}, false};
  for (std::size_t j = 0; j < kEntityCount; ++j) {
    double alpha = es.groups[j].optics.absorptance;
    if (alpha < kMinAbsorptance) {
      if (j != index(Entity::Windows) && es.groups[j].area > 0.0)
        throw Error(ErrorCode::Mirror, "entity " + std::to_string(j + 1) + " absorptance below 1e-6");
      if (j == index(Entity::Windows)) sys.window_absorptance_clamped = true;
      alpha = kMinAbsorptance;
    }
    sys.absorptance_used[j] = alpha;
  }
  // Radiation reflected by entity j reaches entity i in proportion to A_i / A_T.
  const EntityMatrix f = view_factors(es);
  for (std::size_t i = 0; i < kEntityCount; ++i) {
    for (std::size_t j = 0; j < kEntityCount; ++j) {
      sys.matrix(i, j) = es.groups[j].optics.reflectance / sys.absorptance_used[j] * f[j][i];
    }
    sys.matrix(i, i) -= 1.0 / sys.absorptance_used[i];
  }
  return sys;
}

AbsorbedFluxes solve_absorbed(double direct, double diffuse, const EntitySet& es) {
  const EntityVector phi0 = incident_split(direct, diffuse, es);
  const AbsorptionSystem sys = assemble_absorption_system(es);

  EntityVector rhs{};
  for (std::size_t i = 0; i < kEntityCount; ++i) rhs[i] = -phi0[i];
  const std::vector<double> x = solve_dense(sys.matrix, rhs);

  AbsorbedFluxes out;
  out.window_absorptance_clamped = sys.window_absorptance_clamped;
  // x_i / alpha_used_i is the total flux incident on entity i, whatever alpha
  // was used to scale the system, so the true absorptance is reapplied here.
  for (std::size_t i = 0; i < kEntityCount; ++i)
    out.absorbed[i] = es.groups[i].optics.absorptance * (x[i] / sys.absorptance_used[i]);

  if (es[Entity::Windows].optics.transmittance > 0.0)
    out.escape = std::max(0.0, direct + diffuse - out.total_absorbed());
  return out;
}

double escape_flux_closed_form(double direct, double diffuse, double window_area, double total_area,
                               double opaque_reflectance, double floor_reflectance,
                               double diffuse_transmittance) {
  if (!(total_area > 0.0) || !(window_area >= 0.0) || window_area > total_area)
    throw Error(ErrorCode::BadValue, "window area must lie in [0, A_T] with A_T > 0");
  if (!(opaque_reflectance >= 0.0 && opaque_reflectance <= 1.0))
    throw Error(ErrorCode::BadValue, "opaque reflectance must lie in [0, 1]");
  const double ratio = opaque_reflectance * (total_area - window_area) / total_area;
  if (ratio >= 1.0) throw Error(ErrorCode::Divergent, "reflection ratio " + std::to_string(ratio) + " >= 1");
  return diffuse_transmittance * (diffuse + floor_reflectance * direct) * (window_area / total_area) /
         (1.0 - ratio);
}

}  // namespace swrad
