// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_PROBE_HPP
#define COSSERAT_PROBE_HPP

#include <string>
#include <vector>

#include "cosserat/grid.hpp"
#include "cosserat/material.hpp"
#include "cosserat/stability.hpp"

namespace cosserat {

/// Compactly supported bump on D = [-1,1]^3 with closed-form gradient and
/// closed-form integral of f^2 (used to normalize the probe limit).
struct BumpFunction {
  std::string name;
  double (*value)(const Vec3&);
  Vec3 (*gradient)(const Vec3&);
  double integral_f2;
};

const BumpFunction& bump_by_name(const std::string& name);  // "cos2", "cos3"

/// Oscillatory variation family u = eps a cos(k n.Y) f(Y),
/// omega = eps b cos(k n.Y) f(Y), Y = (X - x0)/eps, localized at x0.
struct ProbeSpec {
  Vec3 x0{{0.5, 0.5, 0.5}};
  Vec3 a{{1.0, 0.0, 0.0}};
  Vec3 b{{0.0, 0.0, 1.0}};
  Vec3 n{{0.0, 1.0, 0.0}};
  std::vector<double> k_list{8.0, 16.0, 32.0};       ///< increasing
  std::vector<double> eps_list{0.2, 0.1, 0.05};      ///< decreasing
  std::string bump = "cos2";
  /// Quadrature nodes per axis of the probe's Y-grid over D. The variation
  /// fields and their gradients are closed-form, so this resolution only has
  /// to control the trapezoid remainder of the oscillatory integrands.
  int resolution = 161;
};

struct ProbeRow {
  double epsilon;
  double k;
  double value;     ///< 2 Edotdot / (eps^3 k^2), the scaled second variation
  double limit;     ///< lh_form(a, b, n) * int f^2
  double residual;  ///< value - limit; shrinks as O(k^-2)
  double f_term;    ///< L1 magnitude of the F contribution, same scaling; O(eps)
};

struct ProbeTable {
  std::vector<ProbeRow> rows;  ///< eps-major, k-minor order
  double integral_f2 = 0.0;
  double lh_value = 0.0;  ///< lh_form(a, b, n) at the frozen state
};

/// Evaluates the scaled second variation of the oscillatory family against
/// its k -> infinity limit. The state (R, F, stress, couple stress, Hessian
/// actions) is frozen at the grid node nearest to x0; integration runs over
/// the probe's own Y-grid with closed-form field gradients.
///
/// Throws ProbeOutsideDomain unless x0 +/- eps D stays strictly inside the
/// grid box for every eps in eps_list.
ProbeTable oscillatory_probe(const FieldGrid& grid, const Material& mat,
                             const ProbeSpec& spec);

}  // namespace cosserat

#endif  // COSSERAT_PROBE_HPP
