// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/material.hpp"

#include <algorithm>
#include <cmath>

namespace cosserat {

double IsotropicQuadraticMaterial::energy(const Mat3& e, const Mat3& gamma) const {
  const Mat3 d = e - Mat3::identity();
  const Mat3 sd = sym(d), kd = skew(d);
  const double td = trace(d);
  const Mat3 sg = sym(gamma), kg = skew(gamma);
  const double tg = trace(gamma);
  return mu * inner(sd, sd) + mu_c * inner(kd, kd) + 0.5 * lambda * td * td +
         a1 * inner(dev(sg), dev(sg)) + a2 * inner(kg, kg) + (a3 / 3.0) * tg * tg;
}

Mat3 IsotropicQuadraticMaterial::stress(const Mat3& e, const Mat3& /*gamma*/) const {
  const Mat3 d = e - Mat3::identity();
  Mat3 r = 2.0 * mu * sym(d) + 2.0 * mu_c * skew(d);
  const double t = lambda * trace(d);
  r(0, 0) += t;
  r(1, 1) += t;
  r(2, 2) += t;
  return r;
}

Mat3 IsotropicQuadraticMaterial::couple_stress(const Mat3& /*e*/, const Mat3& gamma) const {
  Mat3 r = 2.0 * a1 * dev(sym(gamma)) + 2.0 * a2 * skew(gamma);
  const double t = (2.0 / 3.0) * a3 * trace(gamma);
  r(0, 0) += t;
  r(1, 1) += t;
  r(2, 2) += t;
  return r;
}

Mat3 IsotropicQuadraticMaterial::elasticity_action(const Mat3& /*e*/, const Mat3& /*gamma*/,
                                                   const Mat3& b) const {
  Mat3 r = 2.0 * mu * sym(b) + 2.0 * mu_c * skew(b);
  const double t = lambda * trace(b);
  r(0, 0) += t;
  r(1, 1) += t;
  r(2, 2) += t;
  return r;
}

Mat3 IsotropicQuadraticMaterial::coupling_action(const Mat3&, const Mat3&, const Mat3&) const {
  return Mat3::zero();  // decoupled energy
}

Mat3 IsotropicQuadraticMaterial::coupling_transpose_action(const Mat3&, const Mat3&,
                                                           const Mat3&) const {
  return Mat3::zero();
}

Mat3 IsotropicQuadraticMaterial::curvature_action(const Mat3& /*e*/, const Mat3& /*gamma*/,
                                                  const Mat3& b) const {
  Mat3 r = 2.0 * a1 * dev(sym(b)) + 2.0 * a2 * skew(b);
  const double t = (2.0 / 3.0) * a3 * trace(b);
  r(0, 0) += t;
  r(1, 1) += t;
  r(2, 2) += t;
  return r;
}

double IsotropicQuadraticMaterial::modulus_scale() const {
  return std::max({std::abs(mu), std::abs(mu_c), std::abs(lambda), std::abs(a1),
                   std::abs(a2), std::abs(a3)});
}

namespace {

Mat3 basis_dyad(int k, int l) {
  Mat3 b;
  b(k, l) = 1.0;
  return b;
}

template <class Action>
Ten4 assemble_dense(Action&& act) {
  Ten4 r;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      const Mat3 col = act(basis_dyad(k, l));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j, k, l) = col(i, j);
    }
  return r;
}

}  // namespace

Ten4 dense_elasticity(const Material& mat, const Mat3& e, const Mat3& gamma) {
  return assemble_dense([&](const Mat3& b) { return mat.elasticity_action(e, gamma, b); });
}

Ten4 dense_coupling(const Material& mat, const Mat3& e, const Mat3& gamma) {
  return assemble_dense([&](const Mat3& b) { return mat.coupling_action(e, gamma, b); });
}

Ten4 dense_coupling_transpose(const Material& mat, const Mat3& e, const Mat3& gamma) {
  return assemble_dense(
      [&](const Mat3& b) { return mat.coupling_transpose_action(e, gamma, b); });
}

Ten4 dense_curvature(const Material& mat, const Mat3& e, const Mat3& gamma) {
  return assemble_dense([&](const Mat3& b) { return mat.curvature_action(e, gamma, b); });
}

FdDerivatives fd_derivative_oracle(const Material& mat, const Mat3& e, const Mat3& gamma) {
  const double he = 1e-5 * (1.0 + norm(e));
  const double hg = 1e-5 * (1.0 + norm(gamma));
  // Second differences divide by h^2, so rounding noise scales as eps/h^2;
  // a 1e-5 step would leave ~1e-6 of noise in the Hessians. The larger step
  // keeps noise near 1e-9 and costs nothing in truncation for quadratic
  // energies (their third and fourth derivatives vanish).
  const double he2 = 5e-3 * (1.0 + norm(e));
  const double hg2 = 5e-3 * (1.0 + norm(gamma));

  auto perturbed = [](const Mat3& base, int i, int j, double h) {
    Mat3 p = base;
    p(i, j) += h;
    return p;
  };

  FdDerivatives out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.stress(i, j) = (mat.energy(perturbed(e, i, j, he), gamma) -
                          mat.energy(perturbed(e, i, j, -he), gamma)) /
                         (2.0 * he);
      out.couple_stress(i, j) = (mat.energy(e, perturbed(gamma, i, j, hg)) -
                                 mat.energy(e, perturbed(gamma, i, j, -hg))) /
                                (2.0 * hg);
    }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          // d^2 W / dE_ij dE_kl
          out.elasticity(i, j, k, l) =
              (mat.energy(perturbed(perturbed(e, i, j, he2), k, l, he2), gamma) -
               mat.energy(perturbed(perturbed(e, i, j, he2), k, l, -he2), gamma) -
               mat.energy(perturbed(perturbed(e, i, j, -he2), k, l, he2), gamma) +
               mat.energy(perturbed(perturbed(e, i, j, -he2), k, l, -he2), gamma)) /
              (4.0 * he2 * he2);
          // d^2 W / dE_ij dGamma_kl
          out.coupling(i, j, k, l) =
              (mat.energy(perturbed(e, i, j, he2), perturbed(gamma, k, l, hg2)) -
               mat.energy(perturbed(e, i, j, he2), perturbed(gamma, k, l, -hg2)) -
               mat.energy(perturbed(e, i, j, -he2), perturbed(gamma, k, l, hg2)) +
               mat.energy(perturbed(e, i, j, -he2), perturbed(gamma, k, l, -hg2))) /
              (4.0 * he2 * hg2);
          // d^2 W / dGamma_ij dGamma_kl
          out.curvature(i, j, k, l) =
              (mat.energy(e, perturbed(perturbed(gamma, i, j, hg2), k, l, hg2)) -
               mat.energy(e, perturbed(perturbed(gamma, i, j, hg2), k, l, -hg2)) -
               mat.energy(e, perturbed(perturbed(gamma, i, j, -hg2), k, l, hg2)) +
               mat.energy(e, perturbed(perturbed(gamma, i, j, -hg2), k, l, -hg2))) /
              (4.0 * hg2 * hg2);
        }
  return out;
}

}  // namespace cosserat
