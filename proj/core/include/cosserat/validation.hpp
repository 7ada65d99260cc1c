// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_VALIDATION_HPP
#define COSSERAT_VALIDATION_HPP

#include <string>
#include <vector>

#include "cosserat/material.hpp"

namespace cosserat {

struct CheckResult {
  std::string name;
  double value = 0.0;      ///< measured residual (or order, for order checks)
  double threshold = 0.0;  ///< bound it was compared against
  bool pass = false;
};

bool all_pass(const std::vector<CheckResult>& checks);

/// Analytic derivatives against the finite-difference oracle on random
/// states, plus major symmetry and the decoupling of W_EGamma.
std::vector<CheckResult> derivative_checks(const Material& mat, unsigned seed,
                                           int n_states = 100);

/// Algebraic tensor identities on random instances: trace pairing, axl,
/// skew inner products, fourth-order transpose, stress-power reductions.
std::vector<CheckResult> tensor_identity_checks(unsigned seed, int n_instances = 50);

/// Grid kinematics: skewness convergence order of the twist field, Galilean
/// invariance of (E, Gamma), agreement of the two wryness routes.
std::vector<CheckResult> kinematics_checks(unsigned seed);

/// Rotation-family integrator against the closed-form exponential, with
/// orthogonality/determinant drift and endpoint derivative extraction.
std::vector<CheckResult> rotation_integrator_checks();

/// Everything above in one suite.
std::vector<CheckResult> run_validation(const Material& mat, unsigned seed);

}  // namespace cosserat

#endif  // COSSERAT_VALIDATION_HPP
