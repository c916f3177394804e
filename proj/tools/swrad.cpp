// swrad: command-line front end for the multizone short-wave radiation engine.
//
//   swrad validate --model building.json
//   swrad zdc      --model building.json
//   swrad solve    --model building.json --direct 1=120 --diffuse 1=80 ...
//   swrad simulate --model building.json --inputs series.csv --out results/
//   swrad check    --model building.json
//
// Exit codes: 0 success, 1 validation/input error, 2 solve error, 3 I/O error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swrad/checks.hpp"
#include "swrad/coupling.hpp"
#include "swrad/error.hpp"
#include "swrad/io.hpp"
#include "swrad/model.hpp"
#include "swrad/simulation.hpp"

namespace {

struct Options {
  std::string model;
  std::string inputs;
  std::string out;
  bool window_irradiance = false;
  double tol = 1e-12;
  bool quiet = false;
  bool serial = false;
  int threads = 0;
  std::vector<std::string> direct;
  std::vector<std::string> diffuse;
};

std::pair<std::string, double> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw swrad::Error(swrad::ErrorCode::InputSchema, "expected <key>=<value>, got '" + text + "'");
  return {text.substr(0, eq), swrad::io::parse_number(text.substr(eq + 1))};
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

swrad::ValidatedModel load_model(const Options& opt) {
  return swrad::validate(swrad::io::load_building(opt.model));
}

int cmd_validate(const Options& opt) {
  const swrad::ValidatedModel model = load_model(opt);
  if (!opt.quiet) {
    std::cout << "model OK: " << model.zone_count() << " zone(s), " << model.apertures().size()
              << " aperture(s)\n";
    for (std::size_t i = 1; i <= model.zone_count(); ++i) {
      const auto& z = model.zone(static_cast<int>(i));
      std::cout << "  zone " << z.id << (z.name.empty() ? "" : " (" + z.name + ")")
                << ": A_T = " << swrad::io::format_number(model.total_area(z.id)) << " m2, "
                << z.surfaces.size() << " surface(s), " << z.apertures.size() << " aperture(s)\n";
    }
  }
  return 0;
}

void print_zdc(const swrad::ZdcMatrix& zdc) {
  const std::size_t n = zdc.zone_count();
  std::cout << "ZDC matrix a_ij in percent (row = from zone, column = to zone, 0 = outside)\n";
  std::cout << pad("", 6);
  for (std::size_t j = 0; j <= n; ++j) std::cout << pad(std::to_string(j), 9);
  std::cout << "\n";
  for (std::size_t i = 0; i <= n; ++i) {
    std::cout << pad(std::to_string(i), 6);
    for (std::size_t j = 0; j <= n; ++j) std::cout << pad(fixed(100.0 * zdc(i, j), 2), 9);
    std::cout << "\n";
  }
  std::cout << "leak ratio r_i in percent\n";
  for (std::size_t i = 0; i < n; ++i)
    std::cout << pad(std::to_string(i + 1), 6) << pad(fixed(100.0 * zdc.leak_ratio[i], 2), 9) << "\n";
}

int cmd_zdc(const Options& opt) {
  const swrad::ValidatedModel model = load_model(opt);
  const swrad::ZdcMatrix zdc = swrad::build_zdc(model);
  for (const auto& w : zdc.warnings) std::cerr << "warning: " << swrad::to_string(w) << "\n";
  if (!opt.quiet) print_zdc(zdc);
  return 0;
}

void print_report(const swrad::FluxReport& r) {
  std::cout << "zone        d0         D     d_net   to_out   abs_slab   abs_vert   abs_int   abs_win   "
               "escape\n";
  for (const auto& z : r.zones) {
    std::cout << pad(std::to_string(z.zone), 4);
    for (double v : {z.diffuse_input, z.direct_input, z.net_diffuse, z.escape_outside, z.absorbed[0],
                     z.absorbed[1], z.absorbed[2], z.absorbed[3], z.enclosure_escape})
      std::cout << pad(fixed(v, 3), 10);
    std::cout << "\n";
  }
  std::cout << "inter-zone fluxes (W), row = from, column = to\n";
  const auto& f = r.interzone_flux;
  for (std::size_t i = 1; i < f.rows(); ++i) {
    std::cout << pad(std::to_string(i), 4);
    for (std::size_t j = 0; j < f.cols(); ++j) std::cout << pad(fixed(f(i, j), 3), 10);
    std::cout << "\n";
  }
  std::cout << "balance residual: " << swrad::io::format_number(r.balance_residual) << " W\n";
}

int cmd_solve(const Options& opt) {
  const swrad::ValidatedModel model = load_model(opt);
  swrad::SolarInputRecord record;
  if (opt.window_irradiance) {
    std::map<std::string, swrad::ApertureIrradiance> irr;
    for (const auto& s : opt.direct) {
      const auto [id, v] = split_assignment(s);
      irr[id].direct = v;
    }
    for (const auto& s : opt.diffuse) {
      const auto [id, v] = split_assignment(s);
      irr[id].diffuse = v;
    }
    record = swrad::zone_inputs_from_windows(model, irr, "solve");
  } else {
    const std::size_t n = model.zone_count();
    record = {"solve", std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    auto assign = [&](const std::vector<std::string>& items, std::vector<double>& target) {
      for (const auto& s : items) {
        const auto [key, v] = split_assignment(s);
        int zone = 0;
        try {
          zone = std::stoi(key);
        } catch (const std::exception&) {
          zone = 0;
        }
        if (zone < 1 || static_cast<std::size_t>(zone) > n)
          throw swrad::Error(swrad::ErrorCode::InputSchema, "'" + key + "' is not a zone id");
        target[static_cast<std::size_t>(zone) - 1] = v;
      }
    };
    assign(opt.direct, record.direct);
    assign(opt.diffuse, record.diffuse);
  }
  const auto reports = swrad::run_simulation(model, std::span(&record, 1), {.parallel = false});
  if (!opt.out.empty()) swrad::io::write_reports(reports, opt.out);
  if (!opt.quiet) print_report(reports.front());
  return 0;
}

int cmd_simulate(const Options& opt) {
  const swrad::ValidatedModel model = load_model(opt);
  const auto series = swrad::io::load_inputs(opt.inputs, model, opt.window_irradiance);
  const auto reports =
      swrad::run_simulation(model, series, {.parallel = !opt.serial, .threads = opt.threads});
  swrad::io::write_reports(reports, opt.out);

  std::size_t flagged = 0;
  for (std::size_t t = 0; t < reports.size(); ++t) {
    double input = 0.0;
    for (const auto& z : reports[t].zones) input += z.diffuse_input + z.direct_input;
    if (reports[t].balance_residual > opt.tol * std::max(input, 1.0)) {
      ++flagged;
      std::cerr << "warning: balance residual " << swrad::io::format_number(reports[t].balance_residual)
                << " W at '" << reports[t].timestamp << "'\n";
    }
  }
  if (!opt.quiet)
    std::cout << "simulated " << reports.size() << " timestep(s) x " << model.zone_count() << " zone(s) -> "
              << opt.out << (flagged ? " (" + std::to_string(flagged) + " residual warning(s))" : "") << "\n";
  return 0;
}

int cmd_check(const Options& opt) {
  const swrad::ValidatedModel model = load_model(opt);
  const auto results = swrad::run_oracle_checks(model, opt.tol);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (!opt.quiet || !r.passed)
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multizone short-wave radiation engine"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model, "Building description (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--quiet", opt.quiet, "Suppress console output");
  };

  auto* validate = app.add_subcommand("validate", "Check a building description");
  add_common(validate);

  auto* zdc = app.add_subcommand("zdc", "Print the zone diffuse coupling matrix and leak ratios");
  add_common(zdc);

  auto* solve = app.add_subcommand("solve", "Solve a single record given on the command line");
  add_common(solve);
  solve->add_flag("--window-irradiance", opt.window_irradiance,
                  "Read --direct/--diffuse as <aperture-id>=<W/m2> at external apertures");
  solve->add_option("--direct", opt.direct, "<zone>=<W> (or <aperture>=<W/m2>)");
  solve->add_option("--diffuse", opt.diffuse, "<zone>=<W> (or <aperture>=<W/m2>)");
  solve->add_option("--out", opt.out, "Also write report files to this directory");

  auto* simulate = app.add_subcommand("simulate", "Run a solar input series");
  add_common(simulate);
  simulate->add_option("--inputs", opt.inputs, "Solar input series (CSV)")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", opt.out, "Output directory")->required();
  simulate->add_flag("--window-irradiance", opt.window_irradiance, "Inputs are per-aperture irradiance columns");
  simulate->add_option("--tol", opt.tol, "Relative balance residual that triggers a warning");
  simulate->add_option("--threads", opt.threads, "OpenMP threads (0 = default)");
  simulate->add_flag("--serial", opt.serial, "Use the serial reference kernel");

  auto* check = app.add_subcommand("check", "Run the oracle cross-checks on a building");
  add_common(check);
  check->add_option("--tol", opt.tol, "Oracle convergence tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*zdc) return cmd_zdc(opt);
    if (*solve) return cmd_solve(opt);
    if (*simulate) return cmd_simulate(opt);
    if (*check) return cmd_check(opt);
  } catch (const swrad::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const swrad::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return swrad::exit_status(e.code());
  }
  return 1;
}
