// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: material condition checks, field-level
// Legendre-Hadamard scans, oscillatory-probe convergence runs, and the
// self-validation suite. Reports are emitted as deterministic JSON plus
// aligned text; probe convergence tables additionally as CSV.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cosserat/config.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/kinematics.hpp"
#include "cosserat/parallel.hpp"
#include "cosserat/probe.hpp"
#include "cosserat/report.hpp"
#include "cosserat/stability.hpp"
#include "cosserat/validation.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_suite_failure = 1;
constexpr int exit_violated = 2;
constexpr int exit_marginal = 3;
constexpr int exit_usage = 64;

struct CommonFlags {
  std::optional<std::string> config_path;
  std::optional<double> mu, mu_c, lambda, a1, a2, a3;
  std::optional<int> scan_resolution;
  std::optional<unsigned> seed;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
};

void add_material_flags(CLI::App& cmd, CommonFlags& flags, bool required) {
  auto opt = [&](const char* name, std::optional<double>& target, const char* help) {
    CLI::Option* o = cmd.add_option(name, target, help);
    if (required) o->required();
  };
  opt("--mu", flags.mu, "shear modulus");
  opt("--mu-c", flags.mu_c, "Cosserat couple modulus");
  opt("--lambda", flags.lambda, "Lame modulus");
  opt("--a1", flags.a1, "curvature modulus (deviatoric-symmetric)");
  opt("--a2", flags.a2, "curvature modulus (skew)");
  opt("--a3", flags.a3, "curvature modulus (spherical)");
}

void add_common_flags(CLI::App& cmd, CommonFlags& flags, bool with_config) {
  if (with_config)
    cmd.add_option("--config", flags.config_path,
                   "JSON run configuration; values in it override flags");
  cmd.add_option("--seed", flags.seed, "seed echoed into reports (default 42)");
  cmd.add_option("--scan-resolution", flags.scan_resolution,
                 "directions in the sphere scan (>= 64)");
  cmd.add_option("--json", flags.json_path, "write the machine-readable report here");
}

/// defaults < flags < config file.
cosserat::RunConfig resolve_config(const CommonFlags& flags) {
  cosserat::RunConfig config;
  if (flags.mu) config.material.mu = *flags.mu;
  if (flags.mu_c) config.material.mu_c = *flags.mu_c;
  if (flags.lambda) config.material.lambda = *flags.lambda;
  if (flags.a1) config.material.a1 = *flags.a1;
  if (flags.a2) config.material.a2 = *flags.a2;
  if (flags.a3) config.material.a3 = *flags.a3;
  if (flags.scan_resolution) config.scan.directions = *flags.scan_resolution;
  if (flags.seed) config.seed = *flags.seed;
  if (flags.json_path) config.json_output = *flags.json_path;
  if (flags.csv_path) config.csv_output = *flags.csv_path;
  if (flags.config_path) config = cosserat::load_config_file(*flags.config_path, config);
  return config;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cosserat::Error("cannot write '" + path + "'");
  out << content;
}

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

int run_check(const std::string& echo, const CommonFlags& flags) {
  const cosserat::RunConfig config = resolve_config(flags);
  const cosserat::LHReport report = cosserat::scan_lh(config.material, config.scan);

  int code = exit_ok;
  if (report.verdict == cosserat::LHVerdict::violated) code = exit_violated;
  if (report.verdict == cosserat::LHVerdict::marginal) code = exit_marginal;

  cosserat::LHReport scan_only = report;
  scan_only.margins.reset();
  std::cout << cosserat::render_margin_table(*report.margins) << "\n"
            << "scan cross-check over " << report.resolution.directions
            << " directions:\n"
            << cosserat::render_lh_report(scan_only);
  const std::string json = cosserat::check_report_json(echo, config.material, report, code);
  if (config.json_output) write_file(*config.json_output, json);
  return code;
}

int run_scan(const std::string& echo, const CommonFlags& flags) {
  const cosserat::RunConfig config = resolve_config(flags);
  const cosserat::FieldGrid grid = cosserat::build_grid(config);

  cosserat::ScanSummary summary;
  summary.nodes = grid.node_count();
  bool first = true;
  for (int i = 0; i < grid.n(); ++i)
    for (int j = 0; j < grid.n(); ++j)
      for (int k = 0; k < grid.n(); ++k) {
        const cosserat::CosseratState state =
            cosserat::state_at(grid, i, j, k, config.tolerances.wryness_skew);
        const cosserat::LHQuadraticForm form =
            cosserat::make_lh_form(config.material, state.strain, state.wryness);
        cosserat::LHReport report = cosserat::scan_lh(form, config.scan);
        report.margins = cosserat::isotropic_conditions(config.material);
        switch (report.verdict) {
          case cosserat::LHVerdict::satisfied: ++summary.satisfied; break;
          case cosserat::LHVerdict::violated: ++summary.violated; break;
          case cosserat::LHVerdict::marginal: ++summary.marginal; break;
        }
        if (first || report.min_eigenvalue < summary.worst.min_eigenvalue) {
          summary.worst = report;
          summary.worst_node = {i, j, k};
          first = false;
        }
      }

  std::cout << "scanned " << summary.nodes << " nodes: " << summary.satisfied
            << " satisfied, " << summary.violated << " violated, " << summary.marginal
            << " marginal\n"
            << "worst node (" << summary.worst_node[0] << ", " << summary.worst_node[1]
            << ", " << summary.worst_node[2] << "):\n"
            << cosserat::render_lh_report(summary.worst);
  const std::string json = cosserat::scan_report_json(echo, config, summary);
  if (config.json_output) write_file(*config.json_output, json);
  return exit_ok;
}

int run_probe(const std::string& echo, const CommonFlags& flags) {
  const cosserat::RunConfig config = resolve_config(flags);
  const cosserat::FieldGrid grid = cosserat::build_grid(config);
  const cosserat::ProbeTable table =
      cosserat::oscillatory_probe(grid, config.material, config.probe);

  std::cout << cosserat::render_probe_table(table);
  const std::string csv = cosserat::render_csv(table);
  if (config.csv_output) write_file(*config.csv_output, csv);
  const std::string json = cosserat::probe_report_json(echo, config, table);
  if (config.json_output) write_file(*config.json_output, json);
  return exit_ok;
}

int run_validate(const std::string& echo, const CommonFlags& flags) {
  const cosserat::RunConfig config = resolve_config(flags);
  const std::vector<cosserat::CheckResult> checks =
      cosserat::run_validation(config.material, config.seed);

  std::cout << cosserat::render_check_table(checks);
  const std::string json = cosserat::validate_report_json(echo, config, checks);
  if (config.json_output) write_file(*config.json_output, json);
  return cosserat::all_pass(checks) ? exit_ok : exit_suite_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cosserat elasticity: strain measures, energy variations and "
               "Legendre-Hadamard checks"};
  app.require_subcommand(1);

  CommonFlags check_flags, scan_flags, probe_flags, validate_flags;

  CLI::App* check = app.add_subcommand(
      "check", "closed-form isotropic conditions plus a direction-scan cross-check");
  add_material_flags(*check, check_flags, /*required=*/true);
  add_common_flags(*check, check_flags, /*with_config=*/false);

  CLI::App* scan = app.add_subcommand(
      "scan", "Legendre-Hadamard scan at every node of the configured field");
  add_material_flags(*scan, scan_flags, /*required=*/false);
  add_common_flags(*scan, scan_flags, /*with_config=*/true);

  CLI::App* probe = app.add_subcommand(
      "probe", "oscillatory second-variation probe and its convergence table");
  add_material_flags(*probe, probe_flags, /*required=*/false);
  add_common_flags(*probe, probe_flags, /*with_config=*/true);
  probe->add_option("--csv", probe_flags.csv_path, "write the convergence table here");

  CLI::App* validate = app.add_subcommand(
      "validate", "derivative, identity, kinematics and integrator suites");
  add_material_flags(*validate, validate_flags, /*required=*/false);
  add_common_flags(*validate, validate_flags, /*with_config=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  const std::string echo = command_echo(argc, argv);
  const auto started = std::chrono::steady_clock::now();
  int code = exit_ok;
  try {
    if (check->parsed()) code = run_check(echo, check_flags);
    if (scan->parsed()) code = run_scan(echo, scan_flags);
    if (probe->parsed()) code = run_probe(echo, probe_flags);
    if (validate->parsed()) code = run_validate(echo, validate_flags);
  } catch (const cosserat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_usage;
  } catch (const cosserat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_violated;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;
  std::cerr << "elapsed: " << elapsed.count() << " s\n";
  return code;
}
