// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_REPORT_HPP
#define COSSERAT_REPORT_HPP

#include <array>
#include <string>
#include <vector>

#include "cosserat/config.hpp"
#include "cosserat/probe.hpp"
#include "cosserat/stability.hpp"
#include "cosserat/validation.hpp"

namespace cosserat {

/// Summary of a per-node grid scan; keeps the worst node in full.
struct ScanSummary {
  LHReport worst;
  std::array<int, 3> worst_node{};
  std::size_t nodes = 0;
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t marginal = 0;
};

// Machine-readable reports. Output is deterministic for a given config and
// seed: object keys are sorted and numbers use shortest round-trip form, so
// parse + re-serialize is byte-identical. Wall-clock timing is deliberately
// not part of these payloads; the CLI prints it on stderr.

std::string check_report_json(const std::string& command,
                              const IsotropicQuadraticMaterial& mat,
                              const LHReport& report, int exit_code);

std::string scan_report_json(const std::string& command, const RunConfig& config,
                             const ScanSummary& summary);

std::string probe_report_json(const std::string& command, const RunConfig& config,
                              const ProbeTable& table);

std::string validate_report_json(const std::string& command, const RunConfig& config,
                                 const std::vector<CheckResult>& checks);

/// CSV with header `epsilon,k,value,limit,residual,f_term`, one row per
/// probe sample, round-trip float formatting.
std::string render_csv(const ProbeTable& table);

// Aligned human-readable tables.
std::string render_margin_table(const std::array<ConditionMargin, 4>& margins);
std::string render_check_table(const std::vector<CheckResult>& checks);
std::string render_probe_table(const ProbeTable& table);
std::string render_lh_report(const LHReport& report);

}  // namespace cosserat

#endif  // COSSERAT_REPORT_HPP
