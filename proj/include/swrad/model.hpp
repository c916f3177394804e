#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace swrad {

/// Index of the outside pseudo-zone.
inline constexpr int kOutside = 0;

/// Smallest absorptance accepted for opaque surfaces.
inline constexpr double kMinAbsorptance = 1e-6;

/// Tolerance on rho + alpha + tau = 1.
inline constexpr double kOpticsSumTolerance = 1e-9;

struct SurfaceOptics {
  double reflectance = 0.0;
  double absorptance = 1.0;
  double transmittance = 0.0;

  bool operator==(const SurfaceOptics&) const = default;
};

enum class SurfaceCategory { Slab, VerticalWall, InternalWall };
enum class ApertureKind { Window, LargeOpening };

struct Surface {
  std::string id;
  int zone = 0;
  SurfaceCategory category = SurfaceCategory::Slab;
  double area = 0.0;
  SurfaceOptics optics;

  bool operator==(const Surface&) const = default;
};

struct Aperture {
  std::string id;
  int from_zone = 0;
  int to_zone = 0;
  double area = 0.0;
  double diffuse_transmittance = 0.0;
  SurfaceOptics optics;
  ApertureKind kind = ApertureKind::Window;
  double shading_factor = 1.0;  // 1 = unshaded

  bool is_external() const { return from_zone == kOutside || to_zone == kOutside; }
  bool touches(int zone) const { return from_zone == zone || to_zone == zone; }
  /// The endpoint that is not `zone` (kOutside for an external aperture seen from inside).
  int other_side(int zone) const { return from_zone == zone ? to_zone : from_zone; }

  bool operator==(const Aperture&) const = default;
};

struct Zone {
  int id = 0;
  std::string name;
  std::vector<Surface> surfaces;
  std::vector<std::size_t> apertures;  // indices into BuildingModel::apertures

  bool operator==(const Zone&) const = default;
};

struct BuildingModel {
  std::vector<Zone> zones;
  std::vector<Aperture> apertures;

  bool operator==(const BuildingModel&) const = default;
};

/// A BuildingModel whose invariants have been checked. Zones are stored in
/// id order 1..n, each zone's aperture list is filled in, and the total
/// indoor area A_T of every zone is cached. Immutable.
class ValidatedModel {
 public:
  const BuildingModel& model() const noexcept { return model_; }
  std::size_t zone_count() const noexcept { return model_.zones.size(); }
  const Zone& zone(int id) const;
  const std::vector<Aperture>& apertures() const noexcept { return model_.apertures; }
  const Aperture& aperture(std::size_t index) const { return model_.apertures.at(index); }
  /// Index of the aperture with the given id, or npos.
  std::size_t find_aperture(const std::string& id) const;
  double total_area(int zone_id) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend ValidatedModel validate(const BuildingModel& model);
  ValidatedModel() = default;

  BuildingModel model_;
  std::vector<double> total_area_;
};

/// Checks every invariant of the building description. Throws ValidationError
/// listing all offending ids. Validating an already validated model is a no-op.
ValidatedModel validate(const BuildingModel& model);

/// Per-zone solar inputs for one instant. Vectors are indexed by zone id - 1.
struct SolarInputRecord {
  std::string timestamp;
  std::vector<double> direct;   // D_i, W
  std::vector<double> diffuse;  // d_i^0, W

  bool operator==(const SolarInputRecord&) const = default;
};

/// Throws Error(InputSchema) on size mismatch or negative values.
void check_inputs(const ValidatedModel& model, const SolarInputRecord& record);

struct ApertureIrradiance {
  double direct = 0.0;   // W/m2
  double diffuse = 0.0;  // W/m2
};

/// Converts external irradiance at apertures into zone inputs:
///   D_i  = sum_k direct_k  * A_k * tau_k   * shading_k
///   d0_i = sum_k diffuse_k * A_k * tau_dk  * shading_k
/// Keys are aperture ids. Throws Error(NotExternal) for inter-zone apertures and
/// Error(InputSchema) for unknown ids or negative values.
SolarInputRecord zone_inputs_from_windows(const ValidatedModel& model,
                                          const std::map<std::string, ApertureIrradiance>& irradiance,
                                          std::string timestamp = {});

std::string_view category_name(SurfaceCategory category) noexcept;
std::string_view kind_name(ApertureKind kind) noexcept;

}  // namespace swrad
