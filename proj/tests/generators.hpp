#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed so every
// run sees the same cases.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "swrad/coupling.hpp"
#include "swrad/enclosure.hpp"
#include "swrad/model.hpp"

namespace swrad::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  SurfaceOptics opaque_optics(double max_rho = 0.95) {
    const double rho = uniform(0.0, max_rho);
    return {rho, 1.0 - rho, 0.0};
  }

  SurfaceOptics glazing_optics() {
    if (chance(0.25)) return {0.0, 0.0, 1.0};  // large opening
    const double rho = uniform(0.0, 0.2);
    const double alpha = uniform(0.0, 0.3);
    return {rho, alpha, 1.0 - rho - alpha};
  }

  /// Random 4-entity enclosure; internal walls and windows are sometimes absent.
  EntitySet entity_set() {
    std::array<EntityGroup, kEntityCount> g{};
    g[0] = {uniform(1.0, 60.0), opaque_optics()};
    g[1] = {chance(0.9) ? uniform(0.5, 80.0) : 0.0, opaque_optics()};
    g[2] = {chance(0.8) ? uniform(0.5, 40.0) : 0.0, opaque_optics()};
    g[3] = {chance(0.85) ? uniform(0.1, 20.0) : 0.0, glazing_optics()};
    return make_entity_set(g);
  }

  /// Random coupling fractions with every leak ratio <= max_leak.
  ZdcMatrix zdc(int n, bool sealed, double max_leak = 0.95) {
    DenseMatrix a(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
      double row = 0.0;
      for (int j = 0; j <= n; ++j) {
        if (j == i || (j == 0 && sealed) || chance(0.3)) continue;
        a(i, j) = uniform(0.0, 0.3);
        row += a(i, j);
      }
      const double cap = uniform(0.0, max_leak);
      if (row > cap)
        for (int j = 0; j <= n; ++j) a(i, j) *= cap / row;
    }
    return make_zdc(a);
  }

  Zone zone(int id) {
    Zone z;
    z.id = id;
    z.name = "zone " + std::to_string(id);
    const std::string p = "z" + std::to_string(id) + "-";
    z.surfaces.push_back({p + "floor", id, SurfaceCategory::Slab, uniform(5.0, 40.0), opaque_optics(0.9)});
    if (chance(0.7))
      z.surfaces.push_back({p + "ceiling", id, SurfaceCategory::Slab, uniform(5.0, 40.0), opaque_optics(0.9)});
    if (chance(0.8))
      z.surfaces.push_back({p + "vwall", id, SurfaceCategory::VerticalWall, uniform(5.0, 60.0), opaque_optics(0.9)});
    if (chance(0.8))
      z.surfaces.push_back({p + "iwall", id, SurfaceCategory::InternalWall, uniform(5.0, 40.0), opaque_optics(0.9)});
    return z;
  }

  Aperture aperture(const std::string& id, int from, int to) {
    Aperture a;
    a.id = id;
    a.from_zone = from;
    a.to_zone = to;
    a.area = uniform(0.3, 6.0);
    if (chance(0.3)) {
      a.kind = ApertureKind::LargeOpening;
      a.diffuse_transmittance = 1.0;
      a.optics = {0.0, 0.0, 1.0};
    } else {
      a.kind = ApertureKind::Window;
      const double rho = uniform(0.0, 0.2);
      const double alpha = uniform(0.01, 0.3);
      a.optics = {rho, alpha, 1.0 - rho - alpha};
      a.diffuse_transmittance = uniform(0.3, 0.9);
      a.shading_factor = chance(0.5) ? 1.0 : uniform(0.0, 1.0);
    }
    return a;
  }

  /// Random building; `sealed` leaves out every external aperture.
  BuildingModel building(int n, bool sealed) {
    BuildingModel m;
    for (int i = 1; i <= n; ++i) m.zones.push_back(zone(i));
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j)
        if (chance(0.5)) m.apertures.push_back(aperture("a" + std::to_string(k++), i, j));
      if (!sealed && chance(0.8)) m.apertures.push_back(aperture("a" + std::to_string(k++), i, 0));
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(double actual, double expected) {
  const double scale = std::max(std::abs(actual), std::abs(expected));
  return scale > 0.0 ? std::abs(actual - expected) / scale : 0.0;
}

}  // namespace swrad::testing
