// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_KINEMATICS_HPP
#define COSSERAT_KINEMATICS_HPP

#include <vector>

#include "cosserat/grid.hpp"
#include "cosserat/material.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Pointwise kinematic state (F, R, E, Gamma). E = R^t F by construction;
/// validate_state() re-checks the invariant for externally assembled states.
struct CosseratState {
  Mat3 deformation_gradient;  ///< F
  Mat3 rotation;              ///< R
  Mat3 strain;                ///< E = R^t F
  Mat3 wryness;               ///< Gamma, units 1/length
};

/// Throws NotRotation or Error if E != R^t F to tol (relative).
void validate_state(const CosseratState& state, double tol = 1e-12);

/// F at a node: chi differentiated with the grid stencil.
Mat3 deformation_gradient(const FieldGrid& grid, int i, int j, int k);

/// E = R^t F. Throws NotRotation unless R is orthogonal with det > 0.
Mat3 strain_measure(const Mat3& f, const Mat3& r, double rotation_tol = 1e-10);

/// Wryness tensor at a node, Gamma_DC = 1/2 e_{BAD} R_iA R_iB,C, with dR by
/// the grid stencil. Throws SkewnessViolated when the symmetric part of
/// R^t dR/dX_C exceeds skew_tol relative to ||dR/dX_C|| — the sampled field
/// is not a rotation field, or the grid is too coarse for it.
Mat3 wryness(const FieldGrid& grid, int i, int j, int k, double skew_tol = 1e-2);

/// Same value assembled column-by-column from axial vectors,
/// Gamma = sum_C axl(skew(R^t dR/dX_C)) (x) E_C. Bit-identical to wryness().
Mat3 wryness_from_axial(const FieldGrid& grid, int i, int j, int k,
                        double skew_tol = 1e-2);

/// max over C of ||sym(R^t dR/dX_C)|| / ||dR/dX_C|| at a node (0 when the
/// rotation field is locally constant).
double skewness_residual(const FieldGrid& grid, int i, int j, int k);

/// Full state at a node.
CosseratState state_at(const FieldGrid& grid, int i, int j, int k,
                       double skew_tol = 1e-2);

struct ResidualFields {
  std::vector<Vec3> force;   ///< g  = -Div(R sigma)
  std::vector<Vec3> couple;  ///< pi = -Div(R m) - 2 axl[R skew(sigma E^t) R^t]
};

/// Equilibrium residuals of the sampled state under `mat` at every node.
/// sigma = W_E and m = W_Gamma are evaluated pointwise; divergences use the
/// grid stencil.
ResidualFields equilibrium_residuals(const FieldGrid& grid, const Material& mat,
                                     double skew_tol = 1e-2);

/// Tractions on one face: t = (R sigma) nu and c = (R m) nu per face node.
/// Face-local indexing is row-major over the two transverse axes in
/// increasing axis order.
struct FaceFields {
  std::vector<Vec3> traction;
  std::vector<Vec3> couple;
};

FaceFields tractions(const FieldGrid& grid, const Material& mat, Face face,
                     double skew_tol = 1e-2);

/// Node indices of a face in face-local order.
std::vector<std::size_t> face_nodes(const FieldGrid& grid, Face face);

}  // namespace cosserat

#endif  // COSSERAT_KINEMATICS_HPP
