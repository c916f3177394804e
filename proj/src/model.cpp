#include "swrad/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "swrad/error.hpp"

namespace swrad {

std::string_view category_name(SurfaceCategory category) noexcept {
  switch (category) {
    case SurfaceCategory::Slab: return "slab";
    case SurfaceCategory::VerticalWall: return "vertical-wall";
    case SurfaceCategory::InternalWall: return "internal-wall";
  }
  return "?";
}

std::string_view kind_name(ApertureKind kind) noexcept {
  return kind == ApertureKind::LargeOpening ? "large-opening" : "window";
}

const Zone& ValidatedModel::zone(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > model_.zones.size())
    throw Error(ErrorCode::BadTopology, "no zone with id " + std::to_string(id));
  return model_.zones[static_cast<std::size_t>(id) - 1];
}

double ValidatedModel::total_area(int zone_id) const {
  zone(zone_id);
  return total_area_[static_cast<std::size_t>(zone_id) - 1];
}

std::size_t ValidatedModel::find_aperture(const std::string& id) const {
  for (std::size_t k = 0; k < model_.apertures.size(); ++k)
    if (model_.apertures[k].id == id) return k;
  return npos;
}

namespace {

bool is_fraction(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void check_optics(const SurfaceOptics& o, const std::string& id, std::vector<Issue>& issues) {
  if (!is_fraction(o.reflectance) || !is_fraction(o.absorptance) || !is_fraction(o.transmittance)) {
    issues.push_back({ErrorCode::Optics, id, "reflectance, absorptance and transmittance must lie in [0, 1]"});
    return;
  }
  const double sum = o.reflectance + o.absorptance + o.transmittance;
  if (std::abs(sum - 1.0) > kOpticsSumTolerance)
    issues.push_back({ErrorCode::Optics, id, "rho + alpha + tau = " + std::to_string(sum) + ", expected 1"});
}

}  // namespace

ValidatedModel validate(const BuildingModel& input) {
  std::vector<Issue> issues;
  ValidatedModel out;
  BuildingModel& model = out.model_;
  model = input;

  std::sort(model.zones.begin(), model.zones.end(),
            [](const Zone& a, const Zone& b) { return a.id < b.id; });

  const int n = static_cast<int>(model.zones.size());
  if (n == 0) issues.push_back({ErrorCode::BadTopology, "", "building has no zones"});
  for (int k = 0; k < n; ++k) {
    const Zone& z = model.zones[static_cast<std::size_t>(k)];
    if (z.id != k + 1)
      issues.push_back({ErrorCode::BadTopology, std::to_string(z.id),
                        "zone ids must be contiguous 1.." + std::to_string(n)});
  }

  std::set<std::string> ids;
  auto check_id = [&](const std::string& id) {
    if (id.empty()) issues.push_back({ErrorCode::BadTopology, id, "empty identifier"});
    else if (!ids.insert(id).second) issues.push_back({ErrorCode::BadTopology, id, "duplicate identifier"});
  };

  for (Zone& z : model.zones) {
    const std::string zid = "zone " + std::to_string(z.id);
    bool has_slab = false;
    for (Surface& s : z.surfaces) {
      check_id(s.id);
      if (s.zone != 0 && s.zone != z.id)
        issues.push_back({ErrorCode::BadTopology, s.id, "surface listed under " + zid +
                                                            " but names zone " + std::to_string(s.zone)});
      s.zone = z.id;
      if (!(std::isfinite(s.area) && s.area > 0.0))
        issues.push_back({ErrorCode::BadValue, s.id, "area must be > 0"});
      check_optics(s.optics, s.id, issues);
      if (s.optics.transmittance != 0.0)
        issues.push_back({ErrorCode::Optics, s.id, "opaque surface must have transmittance 0"});
      if (s.optics.absorptance < kMinAbsorptance)
        issues.push_back({ErrorCode::Mirror, s.id, "opaque absorptance below 1e-6"});
      if (s.category == SurfaceCategory::Slab) has_slab = true;
    }
    if (!has_slab) issues.push_back({ErrorCode::NoSlab, zid, "zone has no slab surface"});
    z.apertures.clear();
  }

  for (std::size_t k = 0; k < model.apertures.size(); ++k) {
    const Aperture& a = model.apertures[k];
    check_id(a.id);
    const bool from_ok = a.from_zone >= 0 && a.from_zone <= n;
    const bool to_ok = a.to_zone >= 0 && a.to_zone <= n;
    if (!from_ok || !to_ok)
      issues.push_back({ErrorCode::BadTopology, a.id, "aperture endpoint is not 0 or a zone id"});
    else if (a.from_zone == a.to_zone)
      issues.push_back({ErrorCode::BadTopology, a.id, "aperture joins a zone to itself"});
    if (!(std::isfinite(a.area) && a.area > 0.0))
      issues.push_back({ErrorCode::BadValue, a.id, "area must be > 0"});
    if (!is_fraction(a.diffuse_transmittance))
      issues.push_back({ErrorCode::Optics, a.id, "diffuse_transmittance must lie in [0, 1]"});
    if (!is_fraction(a.shading_factor))
      issues.push_back({ErrorCode::BadValue, a.id, "shading_factor must lie in [0, 1]"});
    check_optics(a.optics, a.id, issues);
    if (a.kind == ApertureKind::LargeOpening &&
        (a.diffuse_transmittance != 1.0 || a.optics != SurfaceOptics{0.0, 0.0, 1.0}))
      issues.push_back({ErrorCode::Optics, a.id, "large opening requires tau_d = 1 and optics (0, 0, 1)"});

    if (from_ok && to_ok && a.from_zone != a.to_zone) {
      for (int endpoint : {a.from_zone, a.to_zone})
        if (endpoint != kOutside && static_cast<std::size_t>(endpoint) <= model.zones.size())
          model.zones[static_cast<std::size_t>(endpoint) - 1].apertures.push_back(k);
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));

  out.total_area_.reserve(model.zones.size());
  for (const Zone& z : model.zones) {
    double area = 0.0;
    for (const Surface& s : z.surfaces) area += s.area;
    for (std::size_t k : z.apertures) area += model.apertures[k].area;
    out.total_area_.push_back(area);
  }
  return out;
}

void check_inputs(const ValidatedModel& model, const SolarInputRecord& record) {
  const std::size_t n = model.zone_count();
  if (record.direct.size() != n || record.diffuse.size() != n)
    throw Error(ErrorCode::InputSchema, "record '" + record.timestamp + "' has " +
                                            std::to_string(record.direct.size()) + " zones, model has " +
                                            std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(record.direct[i] >= 0.0) || !(record.diffuse[i] >= 0.0) || !std::isfinite(record.direct[i]) ||
        !std::isfinite(record.diffuse[i]))
      throw Error(ErrorCode::InputSchema, "record '" + record.timestamp + "': zone " + std::to_string(i + 1) +
                                              " inputs must be finite and >= 0");
  }
}

SolarInputRecord zone_inputs_from_windows(const ValidatedModel& model,
                                          const std::map<std::string, ApertureIrradiance>& irradiance,
                                          std::string timestamp) {
  const std::size_t n = model.zone_count();
  SolarInputRecord record{std::move(timestamp), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (const auto& [id, value] : irradiance) {
    const std::size_t k = model.find_aperture(id);
    if (k == ValidatedModel::npos) throw Error(ErrorCode::InputSchema, "unknown aperture '" + id + "'");
    const Aperture& a = model.aperture(k);
    if (!a.is_external())
      throw Error(ErrorCode::NotExternal, "irradiance given for inter-zone aperture '" + id + "'");
    if (!(value.direct >= 0.0) || !(value.diffuse >= 0.0) || !std::isfinite(value.direct) ||
        !std::isfinite(value.diffuse))
      throw Error(ErrorCode::InputSchema, "irradiance at '" + id + "' must be finite and >= 0");
    const auto zone = static_cast<std::size_t>(a.other_side(kOutside)) - 1;
    record.direct[zone] += value.direct * a.area * a.optics.transmittance * a.shading_factor;
    record.diffuse[zone] += value.diffuse * a.area * a.diffuse_transmittance * a.shading_factor;
  }
  return record;
}

}  // namespace swrad
