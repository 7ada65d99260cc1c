// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_CONFIG_HPP
#define COSSERAT_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cosserat/grid.hpp"
#include "cosserat/material.hpp"
#include "cosserat/probe.hpp"
#include "cosserat/stability.hpp"
#include "cosserat/variation.hpp"

namespace cosserat {

/// Node arrays given directly in the config instead of a catalog selector.
struct ExplicitField {
  std::vector<Vec3> chi;
  std::vector<Mat3> rotations;
};

struct Tolerances {
  double rotation = 1e-10;     ///< ||R^t R - I|| bound at grid construction
  double wryness_skew = 1e-2;  ///< relative sym(R^t dR) bound in wryness()
};

/// One run of the tool: material, sampled field, resolutions, outputs.
/// Parsed from JSON (UTF-8, 64-bit floats) with unknown keys rejected.
struct RunConfig {
  IsotropicQuadraticMaterial material{1.0, 0.5, 0.0, 1.0, 1.0, 1.0};
  Box box;
  int n_per_axis = 17;
  std::variant<CatalogField, ExplicitField> field = CatalogField{IdentityField{}};
  BoundaryPartition boundary;
  ScanResolution scan;
  ProbeSpec probe;
  Tolerances tolerances;
  unsigned seed = 42;
  std::optional<std::string> json_output;
  std::optional<std::string> csv_output;
};

/// Throws ConfigError on malformed JSON or schema violations (unknown keys,
/// wrong types, wrong array sizes). Keys present in the JSON overwrite the
/// base config; omitted keys keep the base values (this is how config files
/// override command-line flags).
RunConfig parse_config_json(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Canonical JSON echo of a config, defaults filled in. Deterministic:
/// sorted keys, shortest round-trip number formatting.
std::string config_json(const RunConfig& config);

FieldGrid build_grid(const RunConfig& config);

/// FNV-1a, used to fingerprint configs in reports.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace cosserat

#endif  // COSSERAT_CONFIG_HPP
