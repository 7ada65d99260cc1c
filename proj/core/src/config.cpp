// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cosserat {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.contains(key))
      throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  return j.get<double>();
}

Vec3 get_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ConfigError(where + ": expected an array of 3 numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = get_number(j[static_cast<std::size_t>(i)], where);
  return v;
}

Mat3 get_mat3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 9)
    throw ConfigError(where + ": expected an array of 9 numbers (row-major)");
  Mat3 m;
  for (int i = 0; i < 9; ++i)
    m.m[static_cast<std::size_t>(i)] = get_number(j[static_cast<std::size_t>(i)], where);
  return m;
}

std::vector<double> get_number_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ConfigError(where + ": expected a nonempty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(get_number(x, where));
  return out;
}

void parse_material(const json& j, IsotropicQuadraticMaterial& mat) {
  require_keys(j, {"mu", "mu_c", "lambda", "a1", "a2", "a3"}, "material");
  if (j.contains("mu")) mat.mu = get_number(j["mu"], "material.mu");
  if (j.contains("mu_c")) mat.mu_c = get_number(j["mu_c"], "material.mu_c");
  if (j.contains("lambda")) mat.lambda = get_number(j["lambda"], "material.lambda");
  if (j.contains("a1")) mat.a1 = get_number(j["a1"], "material.a1");
  if (j.contains("a2")) mat.a2 = get_number(j["a2"], "material.a2");
  if (j.contains("a3")) mat.a3 = get_number(j["a3"], "material.a3");
}

void parse_grid(const json& j, RunConfig& config) {
  require_keys(j, {"box", "n_per_axis"}, "grid");
  if (j.contains("box")) {
    require_keys(j["box"], {"lo", "hi"}, "grid.box");
    if (j["box"].contains("lo")) config.box.lo = get_vec3(j["box"]["lo"], "grid.box.lo");
    if (j["box"].contains("hi")) config.box.hi = get_vec3(j["box"]["hi"], "grid.box.hi");
  }
  if (j.contains("n_per_axis")) {
    const double n = get_number(j["n_per_axis"], "grid.n_per_axis");
    config.n_per_axis = static_cast<int>(n);
    if (config.n_per_axis < 3)
      throw ConfigError("grid.n_per_axis: at least 3 points per axis required");
  }
}

void parse_field(const json& j, RunConfig& config) {
  if (!j.is_object() || !j.contains("name"))
    throw ConfigError("field: expected an object with a 'name'");
  const std::string name = j["name"].get<std::string>();
  if (name == "identity") {
    require_keys(j, {"name"}, "field");
    config.field = CatalogField{IdentityField{}};
  } else if (name == "uniform_stretch") {
    require_keys(j, {"name", "stretch"}, "field");
    UniformStretch f;
    if (j.contains("stretch")) f.stretch = get_number(j["stretch"], "field.stretch");
    config.field = CatalogField{f};
  } else if (name == "axis_twist") {
    require_keys(j, {"name", "axis", "rate", "direction"}, "field");
    AxisTwist f;
    if (j.contains("axis")) f.axis = get_vec3(j["axis"], "field.axis");
    if (j.contains("rate")) f.rate = get_number(j["rate"], "field.rate");
    if (j.contains("direction")) f.direction = get_vec3(j["direction"], "field.direction");
    config.field = CatalogField{f};
  } else if (name == "sinusoidal") {
    require_keys(j, {"name", "amplitude", "wavevector", "direction", "phase"}, "field");
    SinusoidalPerturbation f;
    if (j.contains("amplitude")) f.amplitude = get_number(j["amplitude"], "field.amplitude");
    if (j.contains("wavevector")) f.wavevector = get_vec3(j["wavevector"], "field.wavevector");
    if (j.contains("direction")) f.direction = get_vec3(j["direction"], "field.direction");
    if (j.contains("phase")) f.phase = get_number(j["phase"], "field.phase");
    config.field = CatalogField{f};
  } else if (name == "explicit") {
    require_keys(j, {"name", "chi", "R"}, "field");
    if (!j.contains("chi") || !j.contains("R"))
      throw ConfigError("field: explicit fields need both 'chi' and 'R'");
    ExplicitField f;
    for (const auto& node : j["chi"]) f.chi.push_back(get_vec3(node, "field.chi"));
    for (const auto& node : j["R"]) f.rotations.push_back(get_mat3(node, "field.R"));
    config.field = std::move(f);
  } else {
    throw ConfigError("field: unknown field name '" + name + "'");
  }
}

std::array<bool, 6> parse_face_set(const json& j, const std::string& where) {
  std::array<bool, 6> set{false, false, false, false, false, false};
  if (!j.is_array()) throw ConfigError(where + ": expected an array of face names");
  for (const auto& f : j) {
    if (!f.is_string()) throw ConfigError(where + ": expected face names");
    try {
      set[static_cast<std::size_t>(face_from_name(f.get<std::string>()))] = true;
    } catch (const InvalidFace& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return set;
}

void parse_boundary(const json& j, BoundaryPartition& boundary) {
  require_keys(j, {"traction_faces", "couple_faces"}, "boundary");
  if (j.contains("traction_faces"))
    boundary.traction_free = parse_face_set(j["traction_faces"], "boundary.traction_faces");
  if (j.contains("couple_faces"))
    boundary.couple_free = parse_face_set(j["couple_faces"], "boundary.couple_faces");
}

void parse_scan(const json& j, ScanResolution& scan) {
  require_keys(j, {"resolution", "refine_iterations", "refine_candidates"}, "scan");
  if (j.contains("resolution"))
    scan.directions = static_cast<int>(get_number(j["resolution"], "scan.resolution"));
  if (j.contains("refine_iterations"))
    scan.refine_iterations =
        static_cast<int>(get_number(j["refine_iterations"], "scan.refine_iterations"));
  if (j.contains("refine_candidates"))
    scan.refine_candidates =
        static_cast<int>(get_number(j["refine_candidates"], "scan.refine_candidates"));
}

void parse_probe(const json& j, ProbeSpec& probe) {
  require_keys(j, {"x0", "a", "b", "n", "k_list", "eps_list", "bump", "resolution"},
               "probe");
  if (j.contains("x0")) probe.x0 = get_vec3(j["x0"], "probe.x0");
  if (j.contains("a")) probe.a = get_vec3(j["a"], "probe.a");
  if (j.contains("b")) probe.b = get_vec3(j["b"], "probe.b");
  if (j.contains("n")) probe.n = get_vec3(j["n"], "probe.n");
  if (j.contains("k_list")) probe.k_list = get_number_list(j["k_list"], "probe.k_list");
  if (j.contains("eps_list"))
    probe.eps_list = get_number_list(j["eps_list"], "probe.eps_list");
  if (j.contains("bump")) probe.bump = j["bump"].get<std::string>();
  if (j.contains("resolution"))
    probe.resolution = static_cast<int>(get_number(j["resolution"], "probe.resolution"));
  for (std::size_t i = 1; i < probe.k_list.size(); ++i)
    if (probe.k_list[i] <= probe.k_list[i - 1])
      throw ConfigError("probe.k_list: entries must increase");
  for (std::size_t i = 1; i < probe.eps_list.size(); ++i)
    if (probe.eps_list[i] >= probe.eps_list[i - 1])
      throw ConfigError("probe.eps_list: entries must decrease");
}

void parse_tolerances(const json& j, Tolerances& tol) {
  require_keys(j, {"rotation", "wryness_skew"}, "tolerances");
  if (j.contains("rotation")) tol.rotation = get_number(j["rotation"], "tolerances.rotation");
  if (j.contains("wryness_skew"))
    tol.wryness_skew = get_number(j["wryness_skew"], "tolerances.wryness_skew");
}

void parse_output(const json& j, RunConfig& config) {
  require_keys(j, {"json", "csv"}, "output");
  if (j.contains("json")) config.json_output = j["json"].get<std::string>();
  if (j.contains("csv")) config.csv_output = j["csv"].get<std::string>();
}

json face_set_to_json(const std::array<bool, 6>& set) {
  json out = json::array();
  for (Face f : all_faces)
    if (set[static_cast<std::size_t>(f)]) out.push_back(face_name(f));
  return out;
}

json vec3_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

RunConfig parse_config(const json& j, RunConfig config) {
  require_keys(j,
               {"material", "grid", "field", "boundary", "scan", "probe", "tolerances",
                "seed", "output"},
               "config");
  if (j.contains("material")) parse_material(j["material"], config.material);
  if (j.contains("grid")) parse_grid(j["grid"], config);
  if (j.contains("field")) parse_field(j["field"], config);
  if (j.contains("boundary")) parse_boundary(j["boundary"], config.boundary);
  if (j.contains("scan")) parse_scan(j["scan"], config.scan);
  if (j.contains("probe")) parse_probe(j["probe"], config.probe);
  if (j.contains("tolerances")) parse_tolerances(j["tolerances"], config.tolerances);
  if (j.contains("seed"))
    config.seed = static_cast<unsigned>(get_number(j["seed"], "seed"));
  if (j.contains("output")) parse_output(j["output"], config);
  return config;
}

json config_to_json(const RunConfig& config) {
  json j;
  j["material"] = {{"mu", config.material.mu},     {"mu_c", config.material.mu_c},
                   {"lambda", config.material.lambda}, {"a1", config.material.a1},
                   {"a2", config.material.a2},     {"a3", config.material.a3}};
  j["grid"] = {{"box", {{"lo", vec3_to_json(config.box.lo)}, {"hi", vec3_to_json(config.box.hi)}}},
               {"n_per_axis", config.n_per_axis}};
  if (const auto* catalog = std::get_if<CatalogField>(&config.field)) {
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, IdentityField>) {
            j["field"] = {{"name", "identity"}};
          } else if constexpr (std::is_same_v<T, UniformStretch>) {
            j["field"] = {{"name", "uniform_stretch"}, {"stretch", f.stretch}};
          } else if constexpr (std::is_same_v<T, AxisTwist>) {
            j["field"] = {{"name", "axis_twist"},
                          {"axis", vec3_to_json(f.axis)},
                          {"rate", f.rate},
                          {"direction", vec3_to_json(f.direction)}};
          } else {
            j["field"] = {{"name", "sinusoidal"},
                          {"amplitude", f.amplitude},
                          {"wavevector", vec3_to_json(f.wavevector)},
                          {"direction", vec3_to_json(f.direction)},
                          {"phase", f.phase}};
          }
        },
        *catalog);
  } else {
    j["field"] = {{"name", "explicit"},
                  {"nodes", std::get<ExplicitField>(config.field).chi.size()}};
  }
  j["boundary"] = {{"traction_faces", face_set_to_json(config.boundary.traction_free)},
                   {"couple_faces", face_set_to_json(config.boundary.couple_free)}};
  j["scan"] = {{"resolution", config.scan.directions},
               {"refine_iterations", config.scan.refine_iterations},
               {"refine_candidates", config.scan.refine_candidates}};
  json klist = json::array(), elist = json::array();
  for (double k : config.probe.k_list) klist.push_back(k);
  for (double e : config.probe.eps_list) elist.push_back(e);
  j["probe"] = {{"x0", vec3_to_json(config.probe.x0)},
                {"a", vec3_to_json(config.probe.a)},
                {"b", vec3_to_json(config.probe.b)},
                {"n", vec3_to_json(config.probe.n)},
                {"k_list", klist},
                {"eps_list", elist},
                {"bump", config.probe.bump},
                {"resolution", config.probe.resolution}};
  j["tolerances"] = {{"rotation", config.tolerances.rotation},
                     {"wryness_skew", config.tolerances.wryness_skew}};
  j["seed"] = config.seed;
  if (config.json_output || config.csv_output) {
    j["output"] = json::object();
    if (config.json_output) j["output"]["json"] = *config.json_output;
    if (config.csv_output) j["output"]["csv"] = *config.csv_output;
  }
  return j;
}

}  // namespace

RunConfig parse_config_json(const std::string& text, RunConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j, std::move(base));
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str(), std::move(base));
}

std::string config_json(const RunConfig& config) {
  return config_to_json(config).dump(2);
}

FieldGrid build_grid(const RunConfig& config) {
  if (const auto* catalog = std::get_if<CatalogField>(&config.field))
    return sample_fields(
        config.box, config.n_per_axis,
        [&](const Vec3& x) { return catalog_deformation(*catalog, x); },
        [&](const Vec3& x) { return catalog_rotation(*catalog, x); },
        config.tolerances.rotation);
  const auto& f = std::get<ExplicitField>(config.field);
  return FieldGrid(config.box, config.n_per_axis, f.chi, f.rotations,
                   config.tolerances.rotation);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace cosserat
