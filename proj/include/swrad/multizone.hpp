#pragma once

#include <span>
#include <vector>

#include "swrad/coupling.hpp"
#include "swrad/dense.hpp"
#include "swrad/model.hpp"

namespace swrad {

struct NetDiffuseSystem {
  DenseMatrix m;           // n x n
  std::vector<double> n;   // right-hand side, W
};

/// M(i, i) = 1 + sum_{j != i, j = 0..n} a_ij,  M(i, j) = -a_ji,
/// N(i) = d0_i + rho_i * D_i with rho_i the zone's floor (slab) reflectance.
NetDiffuseSystem assemble_system(const ZdcMatrix& zdc, const SolarInputRecord& inputs,
                                 std::span<const double> floor_reflectances);

std::vector<double> solve_net_diffuse(const DenseMatrix& m, std::span<const double> rhs);

/// flux(i, j) = a_ij * d_i, i = 1..n, j = 0..n. Row 0 is zero.
DenseMatrix interzone_fluxes(const ZdcMatrix& zdc, std::span<const double> net_diffuse);

struct NetDiffuseSolution {
  std::vector<double> d;  // W, indexed by zone id - 1
  DenseMatrix m;
  std::vector<double> n;
  DenseMatrix interzone_flux;
};

NetDiffuseSolution solve_multizone(const ZdcMatrix& zdc, const SolarInputRecord& inputs,
                                   std::span<const double> floor_reflectances);

/// Slab-entity reflectance of every zone, indexed by zone id - 1.
std::vector<double> floor_reflectances(const ValidatedModel& model);

/// ||M d - N||_inf / ||N||_inf (absolute residual when N = 0).
double relative_residual(const DenseMatrix& m, std::span<const double> d, std::span<const double> rhs);

}  // namespace swrad
