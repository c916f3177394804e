#pragma once

#include <array>

#include "swrad/dense.hpp"
#include "swrad/model.hpp"

namespace swrad {

/// The four aggregated surface groups of a zone enclosure.
enum class Entity : std::size_t { Slabs = 0, VerticalWalls = 1, InternalWalls = 2, Windows = 3 };
inline constexpr std::size_t kEntityCount = 4;

constexpr std::size_t index(Entity e) noexcept { return static_cast<std::size_t>(e); }

using EntityVector = std::array<double, kEntityCount>;
using EntityMatrix = std::array<EntityVector, kEntityCount>;

struct EntityGroup {
  double area = 0.0;
  SurfaceOptics optics;  // area-weighted means; rho=0, alpha=1 when area is 0
};

struct EntitySet {
  std::array<EntityGroup, kEntityCount> groups;
  double total_area = 0.0;

  const EntityGroup& operator[](Entity e) const { return groups[index(e)]; }
  EntityGroup& operator[](Entity e) { return groups[index(e)]; }

  /// Area-weighted reflectance of the three opaque entities.
  double opaque_reflectance() const;
};

/// Builds an EntitySet from explicit groups; total area is their sum.
/// Throws Error(EmptyEntity) when the total is zero.
EntitySet make_entity_set(const std::array<EntityGroup, kEntityCount>& groups);

/// Aggregates a validated zone into four entities. Entity 4 collects every
/// aperture touching the zone, external and inter-zone alike.
EntitySet aggregate_entities(const ValidatedModel& model, int zone_id);

/// Spherical view factors F_ij = A_j / A_T (all rows identical).
EntityMatrix view_factors(const EntitySet& es);

/// Incident fluxes before reflection: the direct beam lands on the slabs,
/// diffuse is shared in proportion to area.
EntityVector incident_split(double direct, double diffuse, const EntitySet& es);

struct AbsorptionSystem {
  DenseMatrix matrix;  // 4x4
  EntityVector absorptance_used{};
  bool window_absorptance_clamped = false;
};

/// Assembles M_a, with M_a(i, j) = (rho_j / alpha_j) * F_ji - delta_ij / alpha_i,
/// so that M_a * phi_a = -phi0. A window absorptance below kMinAbsorptance is
/// clamped (and flagged).
AbsorptionSystem assemble_absorption_system(const EntitySet& es);

struct AbsorbedFluxes {
  EntityVector absorbed{};  // W
  double escape = 0.0;      // W, transmitted out through entity 4
  bool window_absorptance_clamped = false;

  double total_absorbed() const { return absorbed[0] + absorbed[1] + absorbed[2] + absorbed[3]; }
};

/// Solves the 4-entity enclosure. Escape is obtained by closure
/// (D + d0 - sum of absorbed) when entity 4 transmits, and is 0 otherwise.
AbsorbedFluxes solve_absorbed(double direct, double diffuse, const EntitySet& es);

/// Flux leaving through a window of area A_w in an enclosure of area A_T whose
/// remaining surfaces have mean reflectance rho_o, counting the direct beam as
/// floor-reflected diffuse:
///   tau_d * (d0 + rho_floor * D) * (A_w / A_T) / (1 - rho_o * (A_T - A_w) / A_T)
/// Throws Error(Divergent) if the reflection ratio reaches 1, Error(BadValue)
/// on out-of-range geometry.
double escape_flux_closed_form(double direct, double diffuse, double window_area, double total_area,
                               double opaque_reflectance, double floor_reflectance,
                               double diffuse_transmittance);

}  // namespace swrad
