// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat/eigen_jacobi.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/parallel.hpp"

namespace cosserat {

LHQuadraticForm make_lh_form(const Material& mat, const Mat3& strain,
                             const Mat3& wryness) {
  LHQuadraticForm form;
  form.elasticity = dense_elasticity(mat, strain, wryness);
  form.coupling = dense_coupling(mat, strain, wryness);
  form.coupling_transpose = dense_coupling_transpose(mat, strain, wryness);
  form.curvature = dense_curvature(mat, strain, wryness);
  form.modulus_scale = mat.modulus_scale();
  return form;
}

LHQuadraticForm make_lh_form(const Material& mat) {
  return make_lh_form(mat, Mat3::identity(), Mat3::zero());
}

double coupling_transpose_defect(const LHQuadraticForm& form) {
  return norm(form.coupling_transpose - transpose4(form.coupling));
}

double lh_form_value(const LHQuadraticForm& form, const Vec3& a, const Vec3& b,
                     const Vec3& n) {
  const Mat3 an = outer(a, n), bn = outer(b, n);
  return inner(an, apply4(form.elasticity, an)) +
         inner(an, apply4(form.coupling, bn)) +
         inner(bn, apply4(form.coupling_transpose, an)) +
         inner(bn, apply4(form.curvature, bn));
}

double necessary_condition_deformation(const LHQuadraticForm& form, const Vec3& a,
                                       const Vec3& n) {
  return lh_form_value(form, a, Vec3{}, n);
}

double necessary_condition_curvature(const LHQuadraticForm& form, const Vec3& b,
                                     const Vec3& n) {
  return lh_form_value(form, Vec3{}, b, n);
}

std::array<double, 36> acoustic_block_matrix(const LHQuadraticForm& form,
                                             const Vec3& n) {
  if (norm(n) == 0.0) throw ZeroDirection("acoustic_block_matrix: n = 0");
  auto block = [&n](const Ten4& t, int i, int k) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) s += t(i, a, k, b) * n[a] * n[b];
    return s;
  };
  std::array<double, 36> m{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      m[static_cast<std::size_t>(6 * i + k)] = block(form.elasticity, i, k);
      m[static_cast<std::size_t>(6 * i + (k + 3))] = block(form.coupling, i, k);
      m[static_cast<std::size_t>(6 * (i + 3) + k)] = block(form.coupling_transpose, i, k);
      m[static_cast<std::size_t>(6 * (i + 3) + (k + 3))] = block(form.curvature, i, k);
    }
  return m;
}

std::string to_string(LHVerdict v) {
  switch (v) {
    case LHVerdict::satisfied: return "satisfied";
    case LHVerdict::violated: return "violated";
    default: return "marginal";
  }
}

std::array<ConditionMargin, 4> isotropic_conditions(const IsotropicQuadraticMaterial& mat) {
  auto entry = [](std::string name, double value) {
    return ConditionMargin{std::move(name), value, value >= 0.0};
  };
  return {entry("2mu+lambda", 2.0 * mat.mu + mat.lambda),
          entry("mu+mu_c", mat.mu + mat.mu_c),
          entry("2a1+a3", 2.0 * mat.a1 + mat.a3),
          entry("a1+a2", mat.a1 + mat.a2)};
}

double isotropic_min_eigenvalue(const IsotropicQuadraticMaterial& mat) {
  return std::min({2.0 * mat.mu + mat.lambda, mat.mu + mat.mu_c,
                   (2.0 / 3.0) * (2.0 * mat.a1 + mat.a3), mat.a1 + mat.a2});
}

std::vector<Vec3> fibonacci_sphere(int count) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

namespace {

struct DirectionSample {
  double min_eig = 0.0;
  std::array<double, 6> eigvec{};
};

DirectionSample smallest_eigenpair(const LHQuadraticForm& form, const Vec3& n) {
  const std::array<double, 36> m = acoustic_block_matrix(form, n);
  const JacobiResult eig =
      jacobi_eigensolve(std::vector<double>(m.begin(), m.end()), 6);
  DirectionSample s;
  s.min_eig = eig.eigenvalues[0];
  for (int i = 0; i < 6; ++i)
    s.eigvec[static_cast<std::size_t>(i)] =
        eig.eigenvectors[static_cast<std::size_t>(6 * i)];
  return s;
}

/// Orthonormal pair spanning the tangent plane at unit n.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& n) {
  const Vec3 seed = std::abs(n[0]) < 0.9 ? Vec3{{1.0, 0.0, 0.0}} : Vec3{{0.0, 1.0, 0.0}};
  const Vec3 t1 = normalized(cross(n, seed));
  return {t1, cross(n, t1)};
}

}  // namespace

LHReport scan_lh(const LHQuadraticForm& form, const ScanResolution& resolution) {
  if (resolution.directions < 64)
    throw Error("scan_lh: at least 64 directions required");

  const std::vector<Vec3> lattice = fibonacci_sphere(resolution.directions);
  std::vector<double> lattice_min(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t i) {
    lattice_min[i] = smallest_eigenpair(form, lattice[i]).min_eig;
  });

  // Best candidates of the global pass.
  std::vector<std::size_t> order(lattice.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lattice_min[x] != lattice_min[y] ? lattice_min[x] < lattice_min[y] : x < y;
  });

  const int n_candidates =
      std::min<int>(resolution.refine_candidates, static_cast<int>(order.size()));
  // Initial cap radius: the lattice covers the sphere with spacing
  // ~ 2/sqrt(N) in angle, so start a bit above it.
  const double initial_radius = 2.5 / std::sqrt(static_cast<double>(lattice.size()));
  constexpr double golden_shrink = 0.6180339887498949;

  Vec3 best_n = lattice[order[0]];
  DirectionSample best = smallest_eigenpair(form, best_n);

  for (int c = 0; c < n_candidates; ++c) {
    Vec3 center = lattice[order[static_cast<std::size_t>(c)]];
    DirectionSample center_s = smallest_eigenpair(form, center);
    double radius = initial_radius;
    for (int it = 0; it < resolution.refine_iterations; ++it) {
      const auto [t1, t2] = tangent_basis(center);
      for (int dir = 0; dir < 8; ++dir) {
        const double phi = 2.0 * std::numbers::pi * dir / 8.0;
        const Vec3 cand =
            normalized(center + radius * std::cos(phi) * t1 + radius * std::sin(phi) * t2);
        const DirectionSample s = smallest_eigenpair(form, cand);
        if (s.min_eig < center_s.min_eig) {
          center = cand;
          center_s = s;
        }
      }
      radius *= golden_shrink;
    }
    if (center_s.min_eig < best.min_eig) {
      best = center_s;
      best_n = center;
    }
  }

  LHReport report;
  report.resolution = resolution;
  report.min_eigenvalue = best.min_eig;
  report.worst_n = normalized(best_n);
  report.worst_ab = best.eigvec;
  report.eig_tol = 1e-9 * (1.0 + form.modulus_scale);
  if (std::abs(best.min_eig) <= report.eig_tol)
    report.verdict = LHVerdict::marginal;
  else if (best.min_eig < 0.0)
    report.verdict = LHVerdict::violated;
  else
    report.verdict = LHVerdict::satisfied;
  return report;
}

LHReport scan_lh(const IsotropicQuadraticMaterial& mat, const ScanResolution& resolution) {
  LHReport report = scan_lh(make_lh_form(mat), resolution);
  report.margins = isotropic_conditions(mat);
  return report;
}

}  // namespace cosserat
