// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_STABILITY_HPP
#define COSSERAT_STABILITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cosserat/material.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// The quadratic form of the Legendre-Hadamard inequality at one material
/// point: A = W_EE, B = W_EGamma, Bt = W_GammaE, C = W_GammaGamma, all dense.
/// B and Bt are stored separately; their transpose relation holds for
/// twice-differentiable energies but is tested, not assumed, for
/// user-supplied materials.
struct LHQuadraticForm {
  Ten4 elasticity;           ///< A
  Ten4 coupling;             ///< B
  Ten4 coupling_transpose;   ///< Bt
  Ten4 curvature;            ///< C
  double modulus_scale = 1.0;
};

LHQuadraticForm make_lh_form(const Material& mat, const Mat3& strain,
                             const Mat3& wryness);

/// Form at the natural state (E = I, Gamma = 0).
LHQuadraticForm make_lh_form(const Material& mat);

/// ||Bt - transpose(B)||, zero for consistent materials.
double coupling_transpose_defect(const LHQuadraticForm& form);

/// a(x)n.A[a(x)n] + a(x)n.B[b(x)n] + b(x)n.Bt[a(x)n] + b(x)n.C[b(x)n].
/// Homogeneous of degree 2 in (a, b) jointly and in n; no unit restriction.
double lh_form_value(const LHQuadraticForm& form, const Vec3& a, const Vec3& b,
                     const Vec3& n);

/// The two decoupled necessary conditions: the form with b = 0 (resp. a = 0).
double necessary_condition_deformation(const LHQuadraticForm& form, const Vec3& a,
                                       const Vec3& n);
double necessary_condition_curvature(const LHQuadraticForm& form, const Vec3& b,
                                     const Vec3& n);

/// 6x6 matrix M(n) with (a, b)^t M(n) (a, b) = lh_form_value(a, b, n):
/// blocks M_aa[i,k] = A_iAkB n_A n_B, M_ab from B, M_ba from Bt, M_bb from C.
/// Row-major. Throws ZeroDirection for n = 0.
std::array<double, 36> acoustic_block_matrix(const LHQuadraticForm& form,
                                             const Vec3& n);

enum class LHVerdict { satisfied, violated, marginal };

std::string to_string(LHVerdict v);

struct ConditionMargin {
  std::string name;
  double value = 0.0;
  bool pass = false;  ///< value >= 0 (marginal zeros pass)
};

/// The four closed-form conditions for the quadratic isotropic energy:
/// 2mu+lambda, mu+mu_c, 2a1+a3, a1+a2, each required nonnegative.
std::array<ConditionMargin, 4> isotropic_conditions(const IsotropicQuadraticMaterial& mat);

/// min{2mu+lambda, mu+mu_c, (2/3)(2a1+a3), a1+a2}: the smallest eigenvalue
/// the direction scan can find for this material.
double isotropic_min_eigenvalue(const IsotropicQuadraticMaterial& mat);

struct ScanResolution {
  int directions = 2048;      ///< Fibonacci sphere lattice size (>= 64)
  int refine_iterations = 20; ///< golden-section cap shrink steps
  int refine_candidates = 5;  ///< lattice minima kept for refinement
};

struct LHReport {
  LHVerdict verdict = LHVerdict::marginal;
  double min_eigenvalue = 0.0;
  Vec3 worst_n;                          ///< unit direction attaining the min
  std::array<double, 6> worst_ab{};      ///< eigenvector at the min, (a, b)
  std::optional<std::array<ConditionMargin, 4>> margins;  ///< isotropic only
  ScanResolution resolution;
  double eig_tol = 0.0;  ///< |min| <= eig_tol classifies as marginal
};

/// Scans unit directions (Fibonacci lattice + local refinement around the
/// best candidates), minimizing the smallest eigenvalue of M(n).
/// Throws Error if resolution.directions < 64.
LHReport scan_lh(const LHQuadraticForm& form, const ScanResolution& resolution = {});

/// Scan with the four closed-form margins attached.
LHReport scan_lh(const IsotropicQuadraticMaterial& mat,
                 const ScanResolution& resolution = {});

/// Deterministic quasi-uniform unit directions.
std::vector<Vec3> fibonacci_sphere(int count);

}  // namespace cosserat

#endif  // COSSERAT_STABILITY_HPP
