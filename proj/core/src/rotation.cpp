// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/rotation.hpp"

#include <cmath>
#include <cstdlib>

#include "cosserat/errors.hpp"

namespace cosserat {

Mat3 rodrigues(const Vec3& w) {
  const double theta = norm(w);
  const Mat3 k = skew_from_axial(w);
  if (theta < 1e-8) {
    // Series for sin(t)/t and (1-cos t)/t^2; adequate below the threshold.
    const double t2 = theta * theta;
    return Mat3::identity() + (1.0 - t2 / 6.0) * k + (0.5 - t2 / 24.0) * (k * k);
  }
  const double s = std::sin(theta) / theta;
  const double c = (1.0 - std::cos(theta)) / (theta * theta);
  return Mat3::identity() + s * k + c * (k * k);
}

namespace {

Mat3 checked_skew(const SkewFunction& w, double eps, double tol) {
  const Mat3 m = w(eps);
  if (norm(sym(m)) > tol * norm(m))
    throw NotSkew("rotation_family_integrate: W(eps) is not skew");
  return m;
}

}  // namespace

RotationTrajectory rotation_family_integrate(const Mat3& r, const SkewFunction& w,
                                             double eps_end,
                                             const RotationIntegrationOptions& opts) {
  if (!is_rotation(r, 1e-10))
    throw NotRotation("rotation_family_integrate: initial value is not a rotation");
  const double dir = eps_end < 0.0 ? -1.0 : 1.0;
  const double span = std::abs(eps_end);
  const std::size_t n_steps =
      span == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(span / opts.step - 1e-12));

  RotationTrajectory traj;
  traj.eps.reserve(n_steps + 1);
  traj.q.reserve(n_steps + 1);
  traj.eps.push_back(0.0);
  traj.q.push_back(r);

  Mat3 q = r;
  double eps = 0.0;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double h = dir * std::min(opts.step, span - std::abs(eps));
    const Mat3 k1 = checked_skew(w, eps, opts.skew_tol) * q;
    const Mat3 k2 = checked_skew(w, eps + 0.5 * h, opts.skew_tol) * (q + (0.5 * h) * k1);
    const Mat3 k3 = checked_skew(w, eps + 0.5 * h, opts.skew_tol) * (q + (0.5 * h) * k2);
    const Mat3 k4 = checked_skew(w, eps + h, opts.skew_tol) * (q + h * k3);
    q += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    eps += h;

    const double drift = norm(q * transpose(q) - Mat3::identity());
    traj.max_orthogonality_drift = std::max(traj.max_orthogonality_drift, drift);
    if (drift > opts.drift_tol)
      throw DriftExceeded("rotation_family_integrate: ||QQ^t - I|| = " +
                          std::to_string(drift));
    traj.eps.push_back(eps);
    traj.q.push_back(q);
  }
  return traj;
}

double det_preservation_check(const RotationTrajectory& traj) {
  double worst = 0.0;
  for (const Mat3& q : traj.q) worst = std::max(worst, std::abs(det(q) - 1.0));
  return worst;
}

RotationDerivatives rotation_family_derivatives(const Mat3& r, const SkewFunction& w,
                                                double h,
                                                const RotationIntegrationOptions& opts) {
  auto endpoint = [&](double eps) {
    return rotation_family_integrate(r, w, eps, opts).q.back();
  };
  const Mat3 qp = endpoint(h), qm = endpoint(-h);
  const Mat3 qp2 = endpoint(0.5 * h), qm2 = endpoint(-0.5 * h);

  const Mat3 d1_h = (1.0 / (2.0 * h)) * (qp - qm);
  const Mat3 d1_h2 = (1.0 / h) * (qp2 - qm2);
  const Mat3 d2_h = (1.0 / (h * h)) * (qp - 2.0 * r + qm);
  const Mat3 d2_h2 = (4.0 / (h * h)) * (qp2 - 2.0 * r + qm2);

  RotationDerivatives d;
  d.first = (1.0 / 3.0) * (4.0 * d1_h2 - d1_h);
  d.second = (1.0 / 3.0) * (4.0 * d2_h2 - d2_h);
  return d;
}

}  // namespace cosserat
