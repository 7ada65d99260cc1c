// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_MATERIAL_HPP
#define COSSERAT_MATERIAL_HPP

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Strain-energy density W(E, Gamma) with first derivatives and the linear
/// actions of the second derivatives. E is the stretch strain R^t F and
/// Gamma the wryness tensor. Actions take the state so that energies with
/// state-dependent Hessians (including cross coupling) fit the interface.
///
/// The couple-stress derivative W_Gamma is called `couple_stress` here; the
/// symbol mu is reserved for the shear modulus.
class Material {
 public:
  virtual ~Material() = default;

  virtual double energy(const Mat3& e, const Mat3& gamma) const = 0;
  /// W_E
  virtual Mat3 stress(const Mat3& e, const Mat3& gamma) const = 0;
  /// W_Gamma
  virtual Mat3 couple_stress(const Mat3& e, const Mat3& gamma) const = 0;
  /// W_EE[b]
  virtual Mat3 elasticity_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const = 0;
  /// W_EGamma[b]
  virtual Mat3 coupling_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const = 0;
  /// W_GammaE[b] — the transpose of W_EGamma for twice-differentiable W.
  virtual Mat3 coupling_transpose_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const = 0;
  /// W_GammaGamma[b]
  virtual Mat3 curvature_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const = 0;

  /// Magnitude used for scale-aware tolerances.
  virtual double modulus_scale() const = 0;
};

/// Quadratic decoupled energy of an isotropic Cosserat solid:
///
///   W = mu ||sym(E-I)||^2 + mu_c ||skew(E-I)||^2 + lambda/2 [tr(E-I)]^2
///     + a1 ||dev(sym Gamma)||^2 + a2 ||skew Gamma||^2 + a3/3 (tr Gamma)^2
///
/// No sign restrictions are imposed at construction; the Legendre-Hadamard
/// checker judges admissible parameter ranges.
struct IsotropicQuadraticMaterial final : Material {
  double mu = 0.0;
  double mu_c = 0.0;
  double lambda = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  IsotropicQuadraticMaterial() = default;
  IsotropicQuadraticMaterial(double mu_, double mu_c_, double lambda_, double a1_,
                             double a2_, double a3_)
      : mu(mu_), mu_c(mu_c_), lambda(lambda_), a1(a1_), a2(a2_), a3(a3_) {}

  double energy(const Mat3& e, const Mat3& gamma) const override;
  Mat3 stress(const Mat3& e, const Mat3& gamma) const override;
  Mat3 couple_stress(const Mat3& e, const Mat3& gamma) const override;
  Mat3 elasticity_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const override;
  Mat3 coupling_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const override;
  Mat3 coupling_transpose_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const override;
  Mat3 curvature_action(const Mat3& e, const Mat3& gamma, const Mat3& b) const override;
  double modulus_scale() const override;
};

/// Dense second derivatives assembled by applying the closure actions to the
/// nine basis dyads. The dense tensors are the test oracle representation.
Ten4 dense_elasticity(const Material& mat, const Mat3& e, const Mat3& gamma);
Ten4 dense_coupling(const Material& mat, const Mat3& e, const Mat3& gamma);
Ten4 dense_coupling_transpose(const Material& mat, const Mat3& e, const Mat3& gamma);
Ten4 dense_curvature(const Material& mat, const Mat3& e, const Mat3& gamma);

struct FdDerivatives {
  Mat3 stress;           ///< W_E
  Mat3 couple_stress;    ///< W_Gamma
  Ten4 elasticity;       ///< W_EE
  Ten4 coupling;         ///< W_EGamma
  Ten4 curvature;        ///< W_GammaGamma
};

/// Independent derivative oracle: central finite differences of energy(),
/// component-wise, with step 1e-5 (1 + ||argument||). Never calls the
/// analytic derivative paths it is used to check.
FdDerivatives fd_derivative_oracle(const Material& mat, const Mat3& e, const Mat3& gamma);

}  // namespace cosserat

#endif  // COSSERAT_MATERIAL_HPP
