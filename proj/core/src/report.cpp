// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cosserat {

namespace {

using nlohmann::json;

json vec3_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json margins_to_json(const std::array<ConditionMargin, 4>& margins) {
  json out = json::array();
  for (const ConditionMargin& m : margins)
    out.push_back({{"name", m.name}, {"value", m.value}, {"pass", m.pass}});
  return out;
}

json lh_report_to_json(const LHReport& report) {
  json j;
  j["verdict"] = to_string(report.verdict);
  j["min_eigenvalue"] = report.min_eigenvalue;
  j["worst_n"] = vec3_to_json(report.worst_n);
  j["worst_ab"] = report.worst_ab;
  if (report.margins) j["margins"] = margins_to_json(*report.margins);
  j["resolution"] = {{"directions", report.resolution.directions},
                     {"refine_iterations", report.resolution.refine_iterations},
                     {"refine_candidates", report.resolution.refine_candidates}};
  j["eig_tol"] = report.eig_tol;
  return j;
}

json probe_table_to_json(const ProbeTable& table) {
  json rows = json::array();
  for (const ProbeRow& r : table.rows)
    rows.push_back({{"epsilon", r.epsilon},
                    {"k", r.k},
                    {"value", r.value},
                    {"limit", r.limit},
                    {"residual", r.residual},
                    {"f_term", r.f_term}});
  return {{"rows", rows},
          {"integral_f2", table.integral_f2},
          {"lh_value", table.lh_value}};
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const CheckResult& c : checks)
    out.push_back({{"name", c.name},
                   {"value", c.value},
                   {"threshold", c.threshold},
                   {"pass", c.pass}});
  return out;
}

json header(const std::string& command, const RunConfig* config) {
  json j;
  j["command"] = command;
  if (config != nullptr) {
    const std::string canonical = config_json(*config);
    char hash[19];
    std::snprintf(hash, sizeof hash, "0x%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical)));
    j["config_hash"] = hash;
    j["seed"] = config->seed;
  }
  return j;
}

}  // namespace

std::string check_report_json(const std::string& command,
                              const IsotropicQuadraticMaterial& mat,
                              const LHReport& report, int exit_code) {
  json j = header(command, nullptr);
  j["material"] = {{"mu", mat.mu},     {"mu_c", mat.mu_c}, {"lambda", mat.lambda},
                   {"a1", mat.a1},     {"a2", mat.a2},     {"a3", mat.a3}};
  j["report"] = lh_report_to_json(report);
  j["exit_code"] = exit_code;
  return j.dump(2);
}

std::string scan_report_json(const std::string& command, const RunConfig& config,
                             const ScanSummary& summary) {
  json j = header(command, &config);
  j["worst_node"] = summary.worst_node;
  j["worst"] = lh_report_to_json(summary.worst);
  j["nodes"] = summary.nodes;
  j["satisfied"] = summary.satisfied;
  j["violated"] = summary.violated;
  j["marginal"] = summary.marginal;
  return j.dump(2);
}

std::string probe_report_json(const std::string& command, const RunConfig& config,
                              const ProbeTable& table) {
  json j = header(command, &config);
  j["probe"] = probe_table_to_json(table);
  return j.dump(2);
}

std::string validate_report_json(const std::string& command, const RunConfig& config,
                                 const std::vector<CheckResult>& checks) {
  json j = header(command, &config);
  j["checks"] = checks_to_json(checks);
  j["all_pass"] = all_pass(checks);
  return j.dump(2);
}

std::string render_csv(const ProbeTable& table) {
  std::string out = "epsilon,k,value,limit,residual,f_term\n";
  for (const ProbeRow& r : table.rows) {
    out += format_double(r.epsilon) + "," + format_double(r.k) + "," +
           format_double(r.value) + "," + format_double(r.limit) + "," +
           format_double(r.residual) + "," + format_double(r.f_term) + "\n";
  }
  return out;
}

std::string render_margin_table(const std::array<ConditionMargin, 4>& margins) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "condition" << std::right << std::setw(16)
     << "margin" << "  verdict\n";
  for (const ConditionMargin& m : margins) {
    os << std::left << std::setw(14) << m.name << std::right << std::setw(16)
       << std::setprecision(8) << std::scientific << m.value << "  "
       << (m.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render_check_table(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t width = 24;
  for (const CheckResult& c : checks) width = std::max(width, c.name.size() + 2);
  os << std::left << std::setw(static_cast<int>(width)) << "check" << std::right
     << std::setw(14) << "value" << std::setw(14) << "threshold" << "  result\n";
  for (const CheckResult& c : checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << std::right
       << std::setw(14) << std::setprecision(3) << std::scientific << c.value
       << std::setw(14) << c.threshold << "  " << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render_probe_table(const ProbeTable& table) {
  std::ostringstream os;
  os << std::right << std::setw(10) << "epsilon" << std::setw(8) << "k" << std::setw(16)
     << "value" << std::setw(16) << "limit" << std::setw(14) << "residual"
     << std::setw(14) << "f_term" << "\n";
  for (const ProbeRow& r : table.rows) {
    os << std::right << std::setw(10) << std::setprecision(4) << std::defaultfloat
       << r.epsilon << std::setw(8) << r.k << std::setw(16) << std::setprecision(8)
       << std::fixed << r.value << std::setw(16) << r.limit << std::setw(14)
       << std::setprecision(3) << std::scientific << r.residual << std::setw(14)
       << r.f_term << "\n";
  }
  return os.str();
}

std::string render_lh_report(const LHReport& report) {
  std::ostringstream os;
  os << "verdict:        " << to_string(report.verdict) << "\n"
     << "min eigenvalue: " << std::setprecision(12) << report.min_eigenvalue << "\n"
     << "worst n:        [" << report.worst_n[0] << ", " << report.worst_n[1] << ", "
     << report.worst_n[2] << "]\n"
     << "worst (a, b):   [";
  for (int i = 0; i < 6; ++i)
    os << report.worst_ab[static_cast<std::size_t>(i)] << (i < 5 ? ", " : "]\n");
  if (report.margins) os << render_margin_table(*report.margins);
  return os.str();
}

}  // namespace cosserat
