// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_VARIATION_HPP
#define COSSERAT_VARIATION_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cosserat/grid.hpp"
#include "cosserat/kinematics.hpp"
#include "cosserat/material.hpp"

namespace cosserat {

/// Which faces carry assigned tractions/couples. A face with traction_free
/// set belongs to the traction boundary (position not assigned there, u may
/// vary); otherwise position is assigned and u must vanish on it. Same for
/// couple_free and omega.
struct BoundaryPartition {
  std::array<bool, 6> traction_free{true, true, true, true, true, true};
  std::array<bool, 6> couple_free{true, true, true, true, true, true};
};

/// Admissible variation fields (u, omega) on the grid nodes. Construction
/// verifies that declared-assigned faces actually carry zero values.
class VariationPair {
 public:
  VariationPair(const FieldGrid& grid, std::vector<Vec3> u, std::vector<Vec3> omega,
                BoundaryPartition faces = {});

  const std::vector<Vec3>& u() const { return u_; }
  const std::vector<Vec3>& omega() const { return omega_; }
  const BoundaryPartition& faces() const { return faces_; }

 private:
  std::vector<Vec3> u_;
  std::vector<Vec3> omega_;
  BoundaryPartition faces_;
};

/// Dead loads: traction vectors t on traction faces and couple tensors M on
/// couple faces, stored per face in face-local node order.
struct DeadLoad {
  std::array<std::vector<Vec3>, 6> traction;
  std::array<std::vector<Mat3>, 6> couple;
};

DeadLoad zero_loads(const FieldGrid& grid);

/// Loads that equilibrate the sampled state: t = (R sigma) nu on traction
/// faces and M chosen so that the couple traction 2 axl[skew(M R^t)] equals
/// (R m) nu on couple faces.
DeadLoad matched_dead_loads(const FieldGrid& grid, const Material& mat,
                            const BoundaryPartition& faces);

/// Strain rates at a node: Edot = R^t (grad u - Omega F), Gammadot = R^t grad omega,
/// with Omega = skew_from_axial(omega).
std::pair<Mat3, Mat3> strain_rates(const FieldGrid& grid, const VariationPair& pair,
                                   int i, int j, int k);

/// First variation of the potential energy under dead loads,
///   int_k (R W_Gamma . grad omega + R W_E . grad u - R W_E F^t . Omega) dv
///   - int_{dk_t} t.u da - int_{dk_c} c.omega da,  c = 2 axl[skew(M R^t)],
/// by trapezoidal quadrature on the grid.
double first_variation(const FieldGrid& grid, const Material& mat,
                       const VariationPair& pair, const DeadLoad& loads);

/// Pointwise value of the seven-term expression F(grad u, grad omega, Omega)
/// entering the second variation. Exposed separately for the limit probe.
double f_term_integrand(const Material& mat, const Mat3& strain, const Mat3& wry,
                        const Mat3& rotation, const Mat3& deformation_gradient,
                        const Mat3& grad_u, const Mat3& grad_omega, const Mat3& omega_tensor);

/// F at a grid node for a sampled pair.
double f_term(const FieldGrid& grid, const Material& mat, const VariationPair& pair,
              int i, int j, int k);

struct SecondVariation {
  double value = 0.0;
  /// Whether the state passed the first-variation gate; when false the value
  /// is not interpretable as the second variation at equilibrium.
  bool equilibrated = false;
  double gate_residual = 0.0;
  double gate_threshold = 0.0;
};

/// Second variation at equilibrium: Hessian quadratic form in
/// (R^t grad u, R^t grad omega), plus the F term, minus the couple-boundary
/// term int MR^t . Omega^2 da. The optional second pair (v, phi) adds the
/// stationarity terms, which vanish at equilibrium; nonzero values are
/// accepted for non-equilibrium diagnostics.
///
/// The equilibrium gate evaluates the first variation on 12 seeded
/// boundary-vanishing test pairs; if any exceeds the scale-aware threshold
/// the result is flagged non-equilibrated (no throw).
SecondVariation second_variation(const FieldGrid& grid, const Material& mat,
                                 const VariationPair& pair, const DeadLoad& loads,
                                 const VariationPair* second_pair = nullptr);

/// Deterministic boundary-vanishing test pairs used by the equilibrium gate;
/// exposed so tests and diagnostics can reuse them.
VariationPair gate_test_pair(const FieldGrid& grid, unsigned index);

}  // namespace cosserat

#endif  // COSSERAT_VARIATION_HPP
