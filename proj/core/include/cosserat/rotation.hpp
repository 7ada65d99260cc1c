// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_ROTATION_HPP
#define COSSERAT_ROTATION_HPP

#include <functional>
#include <vector>

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Rotation exp(skew_from_axial(w)) about axis w by angle |w| (Rodrigues).
Mat3 rodrigues(const Vec3& w);

using SkewFunction = std::function<Mat3(double)>;

struct RotationTrajectory {
  std::vector<double> eps;     ///< sample parameters, eps[0] == 0
  std::vector<Mat3> q;         ///< Q(eps), q[0] == initial rotation
  double max_orthogonality_drift = 0.0;  ///< max over samples of ||QQ^t - I||
};

struct RotationIntegrationOptions {
  double step = 1e-3;
  double skew_tol = 1e-10;   ///< relative tolerance for rejecting W(eps)
  double drift_tol = 1e-8;   ///< orthogonality drift abort threshold
};

/// Integrates Q' = W(eps) Q from Q(0) = R with a classical 4th-order
/// one-step method. W(eps) is checked for skewness at every stage and the
/// orthogonality of Q is monitored along the trajectory.
///
/// Throws NotSkew, NotRotation or DriftExceeded. eps_end may be negative.
RotationTrajectory rotation_family_integrate(const Mat3& r, const SkewFunction& w,
                                             double eps_end,
                                             const RotationIntegrationOptions& opts = {});

/// Max of |det Q - 1| along a trajectory.
double det_preservation_check(const RotationTrajectory& traj);

struct RotationDerivatives {
  Mat3 first;   ///< Q'(0)
  Mat3 second;  ///< Q''(0)
};

/// Q'(0) and Q''(0) estimated from short two-sided integrations with
/// Richardson extrapolation of the central differences.
RotationDerivatives rotation_family_derivatives(const Mat3& r, const SkewFunction& w,
                                                double h = 1e-2,
                                                const RotationIntegrationOptions& opts = {});

}  // namespace cosserat

#endif  // COSSERAT_ROTATION_HPP
