// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/validation.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cosserat/grid.hpp"
#include "cosserat/kinematics.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct Rng {
  std::mt19937 gen;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};
  explicit Rng(unsigned seed) : gen(seed) {}
  double operator()() { return unit(gen); }
  Vec3 vec3() { return {(*this)(), (*this)(), (*this)()}; }
  Mat3 mat3() {
    Mat3 m;
    for (double& x : m.m) x = (*this)();
    return m;
  }
  Mat3 rotation() { return rodrigues(std::numbers::pi * vec3()); }
  Ten4 ten4() {
    Ten4 t;
    for (double& x : t.c) x = (*this)();
    return t;
  }
};

CheckResult bounded(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}

double rel_diff(const Mat3& a, const Mat3& b) {
  return norm(a - b) / (1.0 + std::max(norm(a), norm(b)));
}

double rel_diff(const Ten4& a, const Ten4& b) {
  return norm(a - b) / (1.0 + std::max(norm(a), norm(b)));
}

double major_symmetry_defect(const Ten4& a) {
  return norm(a - transpose4(a)) / (1.0 + norm(a));
}

}  // namespace

std::vector<CheckResult> derivative_checks(const Material& mat, unsigned seed,
                                           int n_states) {
  Rng rng(seed);
  double worst_stress = 0.0, worst_couple = 0.0;
  double worst_elasticity = 0.0, worst_curvature = 0.0, worst_coupling = 0.0;
  double worst_coupling_mag = 0.0;
  double worst_major_sym = 0.0;
  bool decoupled = true;

  for (int s = 0; s < n_states; ++s) {
    const Mat3 e = Mat3::identity() + rng.mat3();
    const Mat3 gamma = rng.mat3();
    const FdDerivatives fd = fd_derivative_oracle(mat, e, gamma);

    worst_stress = std::max(worst_stress, rel_diff(fd.stress, mat.stress(e, gamma)));
    worst_couple =
        std::max(worst_couple, rel_diff(fd.couple_stress, mat.couple_stress(e, gamma)));
    worst_elasticity =
        std::max(worst_elasticity, rel_diff(fd.elasticity, dense_elasticity(mat, e, gamma)));
    worst_curvature =
        std::max(worst_curvature, rel_diff(fd.curvature, dense_curvature(mat, e, gamma)));
    worst_coupling =
        std::max(worst_coupling, rel_diff(fd.coupling, dense_coupling(mat, e, gamma)));
    worst_major_sym = std::max({worst_major_sym, major_symmetry_defect(fd.elasticity),
                                major_symmetry_defect(fd.curvature)});
    if (norm(dense_coupling(mat, e, gamma)) != 0.0) decoupled = false;
    worst_coupling_mag = std::max(worst_coupling_mag, norm(fd.coupling));
  }

  std::vector<CheckResult> checks;
  checks.push_back(bounded("stress_vs_fd", worst_stress, 1e-6));
  checks.push_back(bounded("couple_stress_vs_fd", worst_couple, 1e-6));
  checks.push_back(bounded("elasticity_vs_fd", worst_elasticity, 1e-6));
  checks.push_back(bounded("curvature_vs_fd", worst_curvature, 1e-6));
  checks.push_back(bounded("coupling_vs_fd", worst_coupling, 1e-6));
  checks.push_back(bounded("fd_major_symmetry", worst_major_sym, 1e-6));
  if (decoupled)
    checks.push_back(bounded("coupling_magnitude", worst_coupling_mag, 1e-8));
  return checks;
}

std::vector<CheckResult> tensor_identity_checks(unsigned seed, int n_instances) {
  Rng rng(seed);
  double pairing = 0.0, axl_identity = 0.0, skew_inner = 0.0;
  double t4_involution = 0.0, t4_defining = 0.0;
  double stress_power = 0.0, spin_reduction = 0.0;

  for (int s = 0; s < n_instances; ++s) {
    {
      const Mat3 a = rng.mat3(), b = rng.mat3(), c = rng.mat3();
      const double lhs = inner(a, b * c);
      const double rhs = inner(a * transpose(c), b);
      pairing = std::max(pairing,
                         std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
    }
    {
      const Vec3 w = rng.vec3(), v = rng.vec3();
      const Mat3 omega = skew_from_axial(w);
      axl_identity = std::max(
          axl_identity, norm(cross(axl(omega), v) - omega * v) / (1.0 + norm(w) * norm(v)));
    }
    {
      const Vec3 w = rng.vec3(), a = rng.vec3();
      const Mat3 omega = skew_from_axial(w), alpha = skew_from_axial(a);
      skew_inner = std::max(skew_inner, std::abs(inner(omega, alpha) - 2.0 * dot(w, a)) /
                                            (1.0 + norm(w) * norm(a)));
    }
    {
      const Ten4 t = rng.ten4();
      t4_involution = std::max(t4_involution, norm(transpose4(transpose4(t)) - t));
      const Mat3 b = rng.mat3(), c = rng.mat3();
      const double lhs = inner(b, apply4(transpose4(t), c));
      const double rhs = inner(c, apply4(t, b));
      t4_defining = std::max(
          t4_defining, std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
    }
    {
      // sigma.Edot = R sigma . grad u - Omega . skew(R sigma F^t)
      //            = R sigma . grad u - 2 axl[R skew(sigma E^t) R^t] . omega
      const Mat3 r = rng.rotation(), f = rng.mat3(), g = rng.mat3(), sigma = rng.mat3();
      const Vec3 w = rng.vec3();
      const Mat3 omega = skew_from_axial(w);
      const Mat3 e = transpose(r) * f;
      const Mat3 edot = transpose(r) * (g - omega * f);
      const double direct = inner(sigma, edot);
      const double reduced =
          inner(r * sigma, g) - inner(omega, skew(r * sigma * transpose(f)));
      const double scale = 1.0 + std::abs(direct);
      stress_power = std::max(stress_power, std::abs(direct - reduced) / scale);
      const Vec3 spin = axl(skew(r * skew(sigma * transpose(e)) * transpose(r)), 1.0);
      const double reduced_axial = inner(r * sigma, g) - 2.0 * dot(spin, w);
      spin_reduction = std::max(spin_reduction, std::abs(direct - reduced_axial) / scale);
    }
  }

  return {bounded("trace_pairing", pairing, 1e-13),
          bounded("axl_defining_identity", axl_identity, 1e-13),
          bounded("skew_inner_axial", skew_inner, 1e-13),
          bounded("transpose4_involution", t4_involution, 0.0),
          bounded("transpose4_defining", t4_defining, 1e-13),
          bounded("stress_power_reduction", stress_power, 1e-12),
          bounded("spin_axial_reduction", spin_reduction, 1e-12)};
}

std::vector<CheckResult> kinematics_checks(unsigned seed) {
  std::vector<CheckResult> checks;

  // Skewness residual of R^t dR under grid refinement for the twist field.
  const AxisTwist twist{{{0.0, 0.0, 1.0}}, 0.9, {{1.0, 0.0, 0.0}}};
  std::array<double, 3> residuals{};
  const std::array<int, 3> sizes{9, 17, 33};
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    const FieldGrid grid = make_grid(CatalogField{twist}, Box{}, sizes[g]);
    double worst = 0.0;
    for (int i = 0; i < grid.n(); ++i)
      for (int j = 0; j < grid.n(); ++j)
        for (int k = 0; k < grid.n(); ++k)
          worst = std::max(worst, skewness_residual(grid, i, j, k));
    residuals[g] = worst;
  }
  const double order1 = std::log2(residuals[0] / residuals[1]);
  const double order2 = std::log2(residuals[1] / residuals[2]);
  const double order = std::min(order1, order2);
  checks.push_back({"twist_skewness_order", order, 1.9, order >= 1.9});

  // Galilean invariance: (Q chi + const, Q R) leaves E and Gamma unchanged.
  {
    Rng rng(seed);
    const Mat3 q = rng.rotation();
    const Vec3 shift = rng.vec3();
    auto chi = [](const Vec3& x) {
      return x + 0.05 * std::sin(std::numbers::pi * x[0]) * Vec3{{0.0, 1.0, 0.0}};
    };
    auto rot = [&](const Vec3& x) { return catalog_rotation(CatalogField{twist}, x); };
    const FieldGrid base = sample_fields(Box{}, 9, chi, rot);
    const FieldGrid moved = sample_fields(
        Box{}, 9, [&](const Vec3& x) { return q * chi(x) + shift; },
        [&](const Vec3& x) { return q * rot(x); });
    double worst = 0.0;
    for (int i = 0; i < base.n(); ++i)
      for (int j = 0; j < base.n(); ++j)
        for (int k = 0; k < base.n(); ++k) {
          const CosseratState s0 = state_at(base, i, j, k);
          const CosseratState s1 = state_at(moved, i, j, k);
          worst = std::max(worst, norm(s0.strain - s1.strain));
          worst = std::max(worst, norm(s0.wryness - s1.wryness));
        }
    checks.push_back(bounded("galilean_invariance", worst, 1e-10));
  }

  // The permutation-symbol contraction and the axial-vector assembly of the
  // wryness tensor must agree bit for bit.
  {
    const FieldGrid grid = make_grid(CatalogField{twist}, Box{}, 9);
    double worst = 0.0;
    for (int i = 0; i < grid.n(); ++i)
      for (int j = 0; j < grid.n(); ++j)
        for (int k = 0; k < grid.n(); ++k)
          worst = std::max(worst,
                           norm(wryness(grid, i, j, k) - wryness_from_axial(grid, i, j, k)));
    checks.push_back(bounded("wryness_route_equivalence", worst, 0.0));
  }

  return checks;
}

std::vector<CheckResult> rotation_integrator_checks() {
  std::vector<CheckResult> checks;
  const Vec3 axis{{0.3, -0.2, 0.5}};
  const Mat3 w0 = skew_from_axial(axis);
  const Mat3 r0 = rodrigues(Vec3{{0.1, 0.7, -0.4}});

  const RotationTrajectory traj =
      rotation_family_integrate(r0, [&](double) { return w0; }, 1.0);
  checks.push_back(
      bounded("constant_w_vs_rodrigues", norm(traj.q.back() - rodrigues(axis) * r0), 1e-10));
  checks.push_back(bounded("orthogonality_drift", traj.max_orthogonality_drift, 1e-10));
  checks.push_back(bounded("determinant_drift", det_preservation_check(traj), 1e-10));

  // W(eps) = (1+eps) W0: Q'(0) = W0 R and Q''(0) = W'(0) R + W0^2 R.
  const RotationDerivatives d = rotation_family_derivatives(
      r0, [&](double eps) { return (1.0 + eps) * w0; }, 1e-2);
  checks.push_back(bounded("first_derivative", norm(d.first - w0 * r0), 1e-6));
  checks.push_back(
      bounded("second_derivative", norm(d.second - (w0 * r0 + w0 * (w0 * r0))), 1e-6));
  return checks;
}

std::vector<CheckResult> run_validation(const Material& mat, unsigned seed) {
  std::vector<CheckResult> all = derivative_checks(mat, seed);
  for (auto&& group :
       {tensor_identity_checks(seed + 1), kinematics_checks(seed + 2),
        rotation_integrator_checks()})
    all.insert(all.end(), group.begin(), group.end());
  return all;
}

}  // namespace cosserat
