#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "swrad/model.hpp"
#include "swrad/simulation.hpp"

namespace swrad::io {

/// Building description (JSON). Field names follow the model types:
///   { "zones": [ { "id", "name", "surfaces": [ { "id", "category", "area",
///       "optics": { "reflectance", "absorptance", "transmittance" } } ] } ],
///     "apertures": [ { "id", "from_zone", "to_zone", "area",
///       "diffuse_transmittance", "optics", "kind", "shading_factor" } ] }
/// category: slab | vertical-wall | internal-wall; kind: window | large-opening.
BuildingModel parse_building(std::string_view text);
BuildingModel load_building(const std::filesystem::path& path);
std::string building_to_json(const BuildingModel& model);

/// Zone-input series: header `timestamp,D_1,d0_1,...,D_n,d0_n`.
std::vector<SolarInputRecord> parse_zone_inputs(std::string_view text, const ValidatedModel& model);

/// Window-irradiance series: header `timestamp` followed by any subset of
/// `dir_<aperture-id>` / `dif_<aperture-id>` columns (W/m2) for external
/// apertures; missing columns read as 0.
std::vector<SolarInputRecord> parse_window_inputs(std::string_view text, const ValidatedModel& model);

std::vector<SolarInputRecord> load_inputs(const std::filesystem::path& path, const ValidatedModel& model,
                                          bool window_irradiance);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double value);
double parse_number(std::string_view text);

inline constexpr std::string_view kZoneReportFile = "zones.csv";
std::string zone_report_header();
std::string interzone_file_name(std::size_t ordinal);

std::string zone_report_csv(const std::vector<FluxReport>& reports);
std::string interzone_csv(const FluxReport& report);

/// Writes zones.csv plus interzone_<ordinal>.csv per timestep into out_dir
/// (created if needed). Throws Error(Io) with the path on failure.
void write_reports(const std::vector<FluxReport>& reports, const std::filesystem::path& out_dir);

/// One data row of zones.csv, read back.
struct ZoneReportRow {
  std::string timestamp;
  ZoneFluxes zone;
  double balance_residual = 0.0;
};

std::vector<ZoneReportRow> parse_zone_report(std::string_view text);
DenseMatrix parse_interzone(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace swrad::io
