#include "swrad/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swrad/error.hpp"

namespace swrad::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::InputSchema, what); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(where + ": missing field '" + key + "'");
  return obj.at(key);
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) schema_error(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

double number_field_or(const json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number_field(obj, key, where) : fallback;
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) schema_error(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema_error(where + ": field '" + key + "' must be a string");
}

SurfaceOptics parse_optics(const json& obj, const std::string& where) {
  return {number_field(obj, "reflectance", where), number_field(obj, "absorptance", where),
          number_field_or(obj, "transmittance", 0.0, where)};
}

SurfaceCategory parse_category(const std::string& s, const std::string& where) {
  if (s == "slab") return SurfaceCategory::Slab;
  if (s == "vertical-wall") return SurfaceCategory::VerticalWall;
  if (s == "internal-wall") return SurfaceCategory::InternalWall;
  schema_error(where + ": unknown category '" + s + "'");
}

json optics_json(const SurfaceOptics& o) {
  return {{"reflectance", o.reflectance}, {"absorptance", o.absorptance}, {"transmittance", o.transmittance}};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct CsvLine {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<CsvLine> csv_lines(std::string_view text) {
  std::vector<CsvLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++number;
    if (trim(line).empty()) continue;
    lines.push_back({number, split(line)});
  }
  return lines;
}

double cell_number(std::string_view cell, std::size_t line) {
  try {
    return parse_number(cell);
  } catch (const Error&) {
    schema_error("line " + std::to_string(line) + ": '" + std::string(cell) + "' is not a number");
  }
}

}  // namespace

BuildingModel parse_building(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("building file is not valid JSON: ") + e.what());
  }

  BuildingModel model;
  const json& zones = require(doc, "zones", "building");
  if (!zones.is_array()) schema_error("building: 'zones' must be a list");
  for (const json& zj : zones) {
    Zone z;
    z.id = int_field(zj, "id", "zone");
    const std::string where = "zone " + std::to_string(z.id);
    z.name = zj.contains("name") ? string_field(zj, "name", where) : std::string{};
    const json& surfaces = require(zj, "surfaces", where);
    if (!surfaces.is_array()) schema_error(where + ": 'surfaces' must be a list");
    for (const json& sj : surfaces) {
      Surface s;
      s.id = string_field(sj, "id", where + " surface");
      const std::string swhere = "surface '" + s.id + "'";
      s.zone = sj.contains("zone") ? int_field(sj, "zone", swhere) : z.id;
      s.category = parse_category(string_field(sj, "category", swhere), swhere);
      s.area = number_field(sj, "area", swhere);
      s.optics = parse_optics(require(sj, "optics", swhere), swhere);
      z.surfaces.push_back(std::move(s));
    }
    model.zones.push_back(std::move(z));
  }

  if (doc.contains("apertures")) {
    const json& apertures = doc.at("apertures");
    if (!apertures.is_array()) schema_error("building: 'apertures' must be a list");
    for (const json& aj : apertures) {
      Aperture a;
      a.id = string_field(aj, "id", "aperture");
      const std::string where = "aperture '" + a.id + "'";
      a.from_zone = int_field(aj, "from_zone", where);
      a.to_zone = int_field(aj, "to_zone", where);
      a.area = number_field(aj, "area", where);
      const std::string kind = aj.contains("kind") ? string_field(aj, "kind", where) : "window";
      if (kind == "window") {
        a.kind = ApertureKind::Window;
        a.diffuse_transmittance = number_field(aj, "diffuse_transmittance", where);
        a.optics = parse_optics(require(aj, "optics", where), where);
      } else if (kind == "large-opening") {
        a.kind = ApertureKind::LargeOpening;
        a.diffuse_transmittance = number_field_or(aj, "diffuse_transmittance", 1.0, where);
        a.optics = aj.contains("optics") ? parse_optics(aj.at("optics"), where) : SurfaceOptics{0.0, 0.0, 1.0};
      } else {
        schema_error(where + ": unknown kind '" + kind + "'");
      }
      a.shading_factor = number_field_or(aj, "shading_factor", 1.0, where);
      model.apertures.push_back(std::move(a));
    }
  }
  return model;
}

BuildingModel load_building(const std::filesystem::path& path) { return parse_building(read_file(path)); }

std::string building_to_json(const BuildingModel& model) {
  json doc;
  doc["zones"] = json::array();
  for (const Zone& z : model.zones) {
    json zj{{"id", z.id}, {"name", z.name}, {"surfaces", json::array()}};
    for (const Surface& s : z.surfaces)
      zj["surfaces"].push_back({{"id", s.id},
                                {"zone", z.id},
                                {"category", std::string(category_name(s.category))},
                                {"area", s.area},
                                {"optics", optics_json(s.optics)}});
    doc["zones"].push_back(std::move(zj));
  }
  doc["apertures"] = json::array();
  for (const Aperture& a : model.apertures)
    doc["apertures"].push_back({{"id", a.id},
                                {"from_zone", a.from_zone},
                                {"to_zone", a.to_zone},
                                {"area", a.area},
                                {"diffuse_transmittance", a.diffuse_transmittance},
                                {"optics", optics_json(a.optics)},
                                {"kind", std::string(kind_name(a.kind))},
                                {"shading_factor", a.shading_factor}});
  return doc.dump(2) + "\n";
}

std::vector<SolarInputRecord> parse_zone_inputs(std::string_view text, const ValidatedModel& model) {
  const std::vector<CsvLine> lines = csv_lines(text);
  if (lines.empty()) schema_error("input file is empty");
  const std::size_t n = model.zone_count();

  std::vector<std::string> expected{"timestamp"};
  for (std::size_t i = 1; i <= n; ++i) {
    expected.push_back("D_" + std::to_string(i));
    expected.push_back("d0_" + std::to_string(i));
  }
  const auto& header = lines.front().fields;
  bool header_ok = header.size() == expected.size();
  for (std::size_t c = 0; header_ok && c < header.size(); ++c) header_ok = header[c] == expected[c];
  if (!header_ok) {
    std::string want;
    for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
    schema_error("input header must be '" + want + "'");
  }

  std::vector<SolarInputRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const CsvLine& line = lines[r];
    if (line.fields.size() != expected.size())
      schema_error("line " + std::to_string(line.number) + ": expected " + std::to_string(expected.size()) +
                   " columns, found " + std::to_string(line.fields.size()));
    SolarInputRecord rec{std::string(line.fields[0]), std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      rec.direct[i] = cell_number(line.fields[1 + 2 * i], line.number);
      rec.diffuse[i] = cell_number(line.fields[2 + 2 * i], line.number);
    }
    check_inputs(model, rec);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SolarInputRecord> parse_window_inputs(std::string_view text, const ValidatedModel& model) {
  const std::vector<CsvLine> lines = csv_lines(text);
  if (lines.empty()) schema_error("input file is empty");
  const auto& header = lines.front().fields;
  if (header.empty() || header[0] != "timestamp") schema_error("first input column must be 'timestamp'");

  struct Column {
    std::string aperture;
    bool direct;
  };
  std::vector<Column> columns;
  std::set<std::string_view> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string_view name = header[c];
    if (!seen.insert(name).second) schema_error("duplicate input column '" + std::string(name) + "'");
    const bool direct = name.starts_with("dir_");
    if (!direct && !name.starts_with("dif_"))
      schema_error("input column '" + std::string(name) + "' must start with dir_ or dif_");
    std::string id(name.substr(4));
    if (model.find_aperture(id) == ValidatedModel::npos)
      schema_error("input column '" + std::string(name) + "' names an unknown aperture");
    columns.push_back({std::move(id), direct});
  }

  std::vector<SolarInputRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const CsvLine& line = lines[r];
    if (line.fields.size() != header.size())
      schema_error("line " + std::to_string(line.number) + ": expected " + std::to_string(header.size()) +
                   " columns, found " + std::to_string(line.fields.size()));
    std::map<std::string, ApertureIrradiance> irradiance;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const double v = cell_number(line.fields[c + 1], line.number);
      auto& slot = irradiance[columns[c].aperture];
      (columns[c].direct ? slot.direct : slot.diffuse) = v;
    }
    records.push_back(zone_inputs_from_windows(model, irradiance, std::string(line.fields[0])));
  }
  return records;
}

std::vector<SolarInputRecord> load_inputs(const std::filesystem::path& path, const ValidatedModel& model,
                                          bool window_irradiance) {
  const std::string text = read_file(path);
  return window_irradiance ? parse_window_inputs(text, model) : parse_zone_inputs(text, model);
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::InputSchema, "'" + std::string(text) + "' is not a number");
  return value;
}

std::string zone_report_header() {
  return "timestamp,zone,d0,D,d_net,escape_outside,absorbed_slabs,absorbed_vertical_walls,"
         "absorbed_internal_walls,absorbed_windows,enclosure_escape,balance_residual";
}

std::string interzone_file_name(std::size_t ordinal) {
  std::string digits = std::to_string(ordinal);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return "interzone_" + digits + ".csv";
}

std::string zone_report_csv(const std::vector<FluxReport>& reports) {
  std::string out = zone_report_header() + "\n";
  for (const FluxReport& r : reports) {
    for (const ZoneFluxes& z : r.zones) {
      out += r.timestamp;
      out += "," + std::to_string(z.zone);
      for (double v : {z.diffuse_input, z.direct_input, z.net_diffuse, z.escape_outside, z.absorbed[0],
                       z.absorbed[1], z.absorbed[2], z.absorbed[3], z.enclosure_escape, r.balance_residual})
        out += "," + format_number(v);
      out += "\n";
    }
  }
  return out;
}

std::string interzone_csv(const FluxReport& report) {
  const DenseMatrix& f = report.interzone_flux;
  std::string out = "from_zone";
  for (std::size_t j = 0; j < f.cols(); ++j) out += ",to_" + std::to_string(j);
  out += "\n";
  for (std::size_t i = 0; i < f.rows(); ++i) {
    out += std::to_string(i);
    for (std::size_t j = 0; j < f.cols(); ++j) out += "," + format_number(f(i, j));
    out += "\n";
  }
  return out;
}

void write_reports(const std::vector<FluxReport>& reports, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / kZoneReportFile, zone_report_csv(reports));
  for (std::size_t t = 0; t < reports.size(); ++t)
    write_file(out_dir / interzone_file_name(t + 1), interzone_csv(reports[t]));
}

std::vector<ZoneReportRow> parse_zone_report(std::string_view text) {
  const std::vector<CsvLine> lines = csv_lines(text);
  if (lines.empty() || lines.front().fields != split(zone_report_header()))
    schema_error("zone report header mismatch");
  std::vector<ZoneReportRow> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& f = lines[r].fields;
    if (f.size() != 12) schema_error("line " + std::to_string(lines[r].number) + ": expected 12 columns");
    ZoneReportRow row;
    row.timestamp = std::string(f[0]);
    row.zone.zone = static_cast<int>(cell_number(f[1], lines[r].number));
    double* targets[] = {&row.zone.diffuse_input, &row.zone.direct_input, &row.zone.net_diffuse,
                         &row.zone.escape_outside, &row.zone.absorbed[0], &row.zone.absorbed[1],
                         &row.zone.absorbed[2], &row.zone.absorbed[3], &row.zone.enclosure_escape,
                         &row.balance_residual};
    for (std::size_t c = 0; c < 10; ++c) *targets[c] = cell_number(f[c + 2], lines[r].number);
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix parse_interzone(std::string_view text) {
  const std::vector<CsvLine> lines = csv_lines(text);
  if (lines.empty() || lines.front().fields.empty() || lines.front().fields[0] != "from_zone")
    schema_error("inter-zone flux header mismatch");
  const std::size_t size = lines.front().fields.size() - 1;
  if (lines.size() != size + 1) schema_error("inter-zone flux matrix is not square");
  DenseMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto& f = lines[i + 1].fields;
    if (f.size() != size + 1) schema_error("line " + std::to_string(lines[i + 1].number) + ": bad column count");
    for (std::size_t j = 0; j < size; ++j) m(i, j) = cell_number(f[j + 1], lines[i + 1].number);
  }
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

}  // namespace swrad::io
