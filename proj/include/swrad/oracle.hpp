#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swrad/coupling.hpp"
#include "swrad/enclosure.hpp"

// Brute-force counterparts of the closed forms and direct solves. They
// iterate the underlying physical recursions and never factorize a matrix.
namespace swrad::oracle {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 100000;

struct IterationReport {
  std::vector<double> values;
  std::size_t iterations = 0;
  double final_delta = 0.0;
  bool converged = false;
};

/// Sums the window-interception series
///   tau_d (d0 + rho_floor D) (A_w/A_T) (1 + q + q^2 + ...),  q = rho_o (A_T - A_w) / A_T
/// until a term drops below tol relative to the partial sum (max 1e6 terms).
/// Throws Error(NoConverge) when the term budget runs out.
IterationReport reflection_series_escape(double diffuse, double direct, double window_area,
                                         double total_area, double opaque_reflectance,
                                         double floor_reflectance, double diffuse_transmittance,
                                         double tol = 1e-15);

/// Iterates phi_r,i <- (A_i/A_T) * sum_j rho_j (phi0_j + phi_r,j) from zero and
/// returns alpha_i (phi0_i + phi_r,i).
IterationReport fixedpoint_absorbed(const EntitySet& es, std::span<const double> incident,
                                    double tol = kDefaultTolerance,
                                    std::size_t max_iter = kDefaultMaxIterations);

/// Jacobi sweeps d_i <- (N_i + sum_{j != i} a_ji d_j) / (1 + sum_j a_ij) from d = N.
IterationReport jacobi_net_diffuse(const ZdcMatrix& zdc, std::span<const double> rhs,
                                   double tol = kDefaultTolerance,
                                   std::size_t max_iter = kDefaultMaxIterations);

}  // namespace swrad::oracle
