#include "swrad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swrad/error.hpp"

namespace swrad::oracle {

namespace {

constexpr std::size_t kMaxSeriesTerms = 1000000;

// Neumaier-compensated running sum; keeps the long series accurate to an ulp or so.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

IterationReport reflection_series_escape(double diffuse, double direct, double window_area,
                                         double total_area, double opaque_reflectance,
                                         double floor_reflectance, double diffuse_transmittance,
                                         double tol) {
  const double ratio = opaque_reflectance * (total_area - window_area) / total_area;
  double term = diffuse_transmittance * (diffuse + floor_reflectance * direct) * (window_area / total_area);

  IterationReport report;
  CompensatedSum sum;
  while (report.iterations < kMaxSeriesTerms) {
    sum.add(term);
    ++report.iterations;
    term *= ratio;
    const double total = std::abs(sum.value());
    report.final_delta = total > 0.0 ? std::abs(term) / total : 0.0;
    if (report.final_delta <= tol) {
      report.converged = true;
      break;
    }
  }
  report.values = {sum.value()};
  if (!report.converged)
    throw Error(ErrorCode::NoConverge, "reflection series did not converge in " +
                                           std::to_string(kMaxSeriesTerms) + " terms");
  return report;
}

IterationReport fixedpoint_absorbed(const EntitySet& es, std::span<const double> incident, double tol,
                                    std::size_t max_iter) {
  if (incident.size() != kEntityCount) throw Error(ErrorCode::BadValue, "expected 4 incident fluxes");
  double scale = 0.0;
  for (double x : incident) scale += std::abs(x);

  EntityVector received{};
  IterationReport report;
  while (report.iterations < max_iter) {
    ++report.iterations;
    double reflected = 0.0;
    for (std::size_t j = 0; j < kEntityCount; ++j)
      reflected += es.groups[j].optics.reflectance * (incident[j] + received[j]);
    double delta = 0.0;
    for (std::size_t i = 0; i < kEntityCount; ++i) {
      const double next = es.groups[i].area / es.total_area * reflected;
      delta = std::max(delta, std::abs(next - received[i]));
      received[i] = next;
    }
    report.final_delta = scale > 0.0 ? delta / scale : 0.0;
    if (report.final_delta <= tol) {
      report.converged = true;
      break;
    }
  }
  if (!report.converged)
    throw Error(ErrorCode::NoConverge, "radiosity fixed point did not converge in " +
                                           std::to_string(max_iter) + " iterations");
  report.values.resize(kEntityCount);
  for (std::size_t i = 0; i < kEntityCount; ++i)
    report.values[i] = es.groups[i].optics.absorptance * (incident[i] + received[i]);
  return report;
}

IterationReport jacobi_net_diffuse(const ZdcMatrix& zdc, std::span<const double> rhs, double tol,
                                   std::size_t max_iter) {
  const std::size_t n = zdc.zone_count();
  if (rhs.size() != n) throw Error(ErrorCode::BadValue, "right-hand side size mismatch");
  const double scale = max_abs(rhs);

  std::vector<double> outflow(n, 1.0);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) outflow[i - 1] += zdc.a(i, k);

  IterationReport report;
  std::vector<double> d(rhs.begin(), rhs.end());
  std::vector<double> next(n);
  while (report.iterations < max_iter) {
    ++report.iterations;
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double inflow = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) inflow += zdc.a(j + 1, i + 1) * d[j];
      next[i] = (rhs[i] + inflow) / outflow[i];
      delta = std::max(delta, std::abs(next[i] - d[i]));
    }
    d.swap(next);
    report.final_delta = scale > 0.0 ? delta / scale : 0.0;
    if (report.final_delta <= tol) {
      report.converged = true;
      break;
    }
  }
  if (!report.converged)
    throw Error(ErrorCode::NoConverge, "Jacobi sweeps did not converge in " + std::to_string(max_iter) +
                                           " iterations");
  report.values = std::move(d);
  return report;
}

}  // namespace swrad::oracle
