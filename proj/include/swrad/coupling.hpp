#pragma once

#include <vector>

#include "swrad/dense.hpp"
#include "swrad/error.hpp"
#include "swrad/model.hpp"

namespace swrad {

/// Zone Diffuse Coupling matrix. a(i, j), i, j in 0..n, is the fraction of
/// zone i's diffuse radiation transferred to zone j; column 0 holds the
/// leaks to the outside, row 0 is zero.
struct ZdcMatrix {
  DenseMatrix a;
  std::vector<double> leak_ratio;  // r_i = sum_j a_ij, indexed by zone id - 1
  std::vector<Issue> warnings;     // LeakGtOne per zone

  std::size_t zone_count() const noexcept { return leak_ratio.size(); }
  double operator()(std::size_t i, std::size_t j) const { return a(i, j); }
};

/// One aperture's contribution to a_ij seen from a zone of total area A_T and
/// mean opaque reflectance rho_o:
///   tau_d * (A_w / A_T) / (1 - rho_o * (A_T - A_w) / A_T)
double coupling_coefficient(double total_area, double opaque_reflectance, double window_area,
                            double diffuse_transmittance);

/// Same term, taking the geometry from the model (aperture must touch the zone).
double coupling_coefficient(const ValidatedModel& model, int zone_id, std::size_t aperture_index);

/// Area-weighted reflectance of a zone's opaque surfaces (apertures excluded).
double opaque_reflectance(const ValidatedModel& model, int zone_id);

ZdcMatrix build_zdc(const ValidatedModel& model);

/// Builds a ZdcMatrix straight from coupling fractions (row 0 and the diagonal
/// are forced to zero). Used for synthetic systems.
ZdcMatrix make_zdc(const DenseMatrix& a);

}  // namespace swrad
