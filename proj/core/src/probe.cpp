// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat/errors.hpp"
#include "cosserat/kinematics.hpp"
#include "cosserat/parallel.hpp"
#include "cosserat/variation.hpp"

namespace cosserat {

namespace {

constexpr double pi = std::numbers::pi;

bool inside_support(const Vec3& y) {
  return std::abs(y[0]) < 1.0 && std::abs(y[1]) < 1.0 && std::abs(y[2]) < 1.0;
}

double cos2_value(const Vec3& y) {
  if (!inside_support(y)) return 0.0;
  double f = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double c = std::cos(0.5 * pi * y[i]);
    f *= c * c;
  }
  return f;
}

Vec3 cos2_gradient(const Vec3& y) {
  if (!inside_support(y)) return {};
  std::array<double, 3> comp{}, dcomp{};
  for (int i = 0; i < 3; ++i) {
    const double c = std::cos(0.5 * pi * y[i]);
    comp[static_cast<std::size_t>(i)] = c * c;
    dcomp[static_cast<std::size_t>(i)] = -0.5 * pi * std::sin(pi * y[i]);
  }
  return {dcomp[0] * comp[1] * comp[2], comp[0] * dcomp[1] * comp[2],
          comp[0] * comp[1] * dcomp[2]};
}

double cos3_value(const Vec3& y) {
  if (!inside_support(y)) return 0.0;
  double f = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double c = std::cos(0.5 * pi * y[i]);
    f *= c * c * c;
  }
  return f;
}

Vec3 cos3_gradient(const Vec3& y) {
  if (!inside_support(y)) return {};
  std::array<double, 3> comp{}, dcomp{};
  for (int i = 0; i < 3; ++i) {
    const double c = std::cos(0.5 * pi * y[i]);
    const double s = std::sin(0.5 * pi * y[i]);
    comp[static_cast<std::size_t>(i)] = c * c * c;
    dcomp[static_cast<std::size_t>(i)] = -1.5 * pi * c * c * s;
  }
  return {dcomp[0] * comp[1] * comp[2], comp[0] * dcomp[1] * comp[2],
          comp[0] * comp[1] * dcomp[2]};
}

// 1D integrals over [-1,1]: int cos^4(pi y/2) = 3/4, int cos^6(pi y/2) = 5/8.
const BumpFunction bump_catalog[] = {
    {"cos2", cos2_value, cos2_gradient, 27.0 / 64.0},
    {"cos3", cos3_value, cos3_gradient, 125.0 / 512.0},
};

}  // namespace

const BumpFunction& bump_by_name(const std::string& name) {
  for (const BumpFunction& b : bump_catalog)
    if (b.name == name) return b;
  throw ConfigError("unknown bump function '" + name + "'");
}

ProbeTable oscillatory_probe(const FieldGrid& grid, const Material& mat,
                             const ProbeSpec& spec) {
  const BumpFunction& bump = bump_by_name(spec.bump);
  if (spec.resolution < 3) throw Error("probe resolution must be at least 3");
  if (spec.k_list.empty() || spec.eps_list.empty())
    throw Error("probe needs nonempty k and eps lists");

  // The support x0 + eps D must stay strictly inside the domain for every
  // eps; with decreasing eps the first entry governs.
  const Box& box = grid.box();
  for (double eps : spec.eps_list) {
    if (!(eps > 0.0)) throw Error("probe eps must be positive");
    for (int c = 0; c < 3; ++c) {
      if (!(spec.x0[c] - eps > box.lo[c] && spec.x0[c] + eps < box.hi[c]))
        throw ProbeOutsideDomain("support of the bump escapes the domain at eps = " +
                                 std::to_string(eps));
    }
  }

  // Freeze the state at the node nearest to x0 (the construction localizes
  // everything at x0; for homogeneous states the choice is immaterial).
  int nearest[3];
  for (int c = 0; c < 3; ++c) {
    const double t = (spec.x0[c] - box.lo[c]) / grid.spacing(c);
    nearest[c] = std::clamp(static_cast<int>(std::lround(t)), 0, grid.n() - 1);
  }
  const CosseratState state = state_at(grid, nearest[0], nearest[1], nearest[2]);

  // Spatial-frame amplitudes: the construction prescribes a = R0^t alpha,
  // so alpha = R0 a reproduces the requested material-frame pair (a, b).
  const Vec3 alpha = state.rotation * spec.a;
  const Vec3 beta = state.rotation * spec.b;

  ProbeTable table;
  table.integral_f2 = bump.integral_f2;
  const LHQuadraticForm form = make_lh_form(mat, state.strain, state.wryness);
  table.lh_value = lh_form_value(form, spec.a, spec.b, spec.n);
  const double limit = table.lh_value * bump.integral_f2;

  const int res = spec.resolution;
  const double h = 2.0 / (res - 1);
  const std::size_t count = static_cast<std::size_t>(res) * static_cast<std::size_t>(res) *
                            static_cast<std::size_t>(res);
  auto weight_1d = [&](int p) { return (p == 0 || p == res - 1) ? 0.5 * h : h; };

  for (double eps : spec.eps_list) {
    for (double k : spec.k_list) {
      auto integrand = [&](std::size_t idx, bool absolute_f) {
        const int i = static_cast<int>(idx / (static_cast<std::size_t>(res) * res));
        const int j = static_cast<int>((idx / static_cast<std::size_t>(res)) % res);
        const int l = static_cast<int>(idx % static_cast<std::size_t>(res));
        const Vec3 y{-1.0 + i * h, -1.0 + j * h, -1.0 + l * h};
        const double f = bump.value(y);
        const Vec3 gf = bump.gradient(y);
        const double phase = k * dot(spec.n, y);
        const double s = std::sin(phase), c = std::cos(phase);
        // grad_X u = alpha (x) v with v = -k sin f n + cos grad f; same v for omega.
        const Vec3 v = (-k * s * f) * spec.n + c * gf;
        const Mat3 grad_u = outer(alpha, v);
        const Mat3 grad_w = outer(beta, v);
        const Mat3 omega_tensor = skew_from_axial((eps * c * f) * beta);

        const Mat3 rt = transpose(state.rotation);
        const Mat3 g = rt * grad_u;
        const Mat3 hh = rt * grad_w;
        const double quad =
            inner(g, mat.elasticity_action(state.strain, state.wryness, g)) +
            inner(g, mat.coupling_action(state.strain, state.wryness, hh)) +
            inner(hh, mat.coupling_transpose_action(state.strain, state.wryness, g)) +
            inner(hh, mat.curvature_action(state.strain, state.wryness, hh));
        const double fterm = f_term_integrand(mat, state.strain, state.wryness,
                                              state.rotation, state.deformation_gradient,
                                              grad_u, grad_w, omega_tensor);
        const double w = weight_1d(i) * weight_1d(j) * weight_1d(l);
        return absolute_f ? w * std::abs(fterm) : w * (quad + fterm);
      };

      const double integral = deterministic_sum(
          count, [&](std::size_t idx) { return integrand(idx, false); });
      const double f_l1 = deterministic_sum(
          count, [&](std::size_t idx) { return integrand(idx, true); });

      ProbeRow row;
      row.epsilon = eps;
      row.k = k;
      row.value = 2.0 * integral / (k * k);
      row.limit = limit;
      row.residual = row.value - limit;
      row.f_term = 2.0 * f_l1 / (k * k);
      table.rows.push_back(row);
    }
  }
  return table;
}

}  // namespace cosserat
