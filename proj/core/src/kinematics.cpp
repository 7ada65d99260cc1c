// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/kinematics.hpp"

#include <cmath>
#include <string>

#include "cosserat/parallel.hpp"

namespace cosserat {

void validate_state(const CosseratState& state, double tol) {
  if (!is_rotation(state.rotation, 1e-10))
    throw NotRotation("state rotation is not a rotation");
  const Mat3 reconstructed = transpose(state.rotation) * state.deformation_gradient;
  const double scale = 1.0 + norm(state.deformation_gradient);
  if (norm(reconstructed - state.strain) > tol * scale)
    throw Error("state strain does not equal R^t F");
}

Mat3 deformation_gradient(const FieldGrid& grid, int i, int j, int k) {
  return vector_gradient(grid, grid.deformation_field(), i, j, k);
}

Mat3 strain_measure(const Mat3& f, const Mat3& r, double rotation_tol) {
  if (!is_rotation(r, rotation_tol))
    throw NotRotation("strain_measure: R is not a rotation");
  return transpose(r) * f;
}

namespace {

// R^t dR/dX_C for all C, with the skewness residual of each column matrix.
// Residuals are measured against the local gradient scale max_C ||dR/dX_C||:
// a per-column denominator would blow up on axes along which R is constant,
// where the one-sided stencils leave pure roundoff proportional to R itself.
struct RotationRates {
  std::array<Mat3, 3> rt_dr;      // R^t dR/dX_C
  std::array<double, 3> residual; // ||sym|| / gradient scale, 0 for constant R
};

RotationRates rotation_rates(const FieldGrid& grid, int i, int j, int k) {
  const std::array<Mat3, 3> dr = tensor_derivatives(grid, grid.rotation_field(), i, j, k);
  const Mat3 rt = transpose(grid.rotation(i, j, k));
  RotationRates out;
  double scale = 0.0;
  for (int c = 0; c < 3; ++c) {
    out.rt_dr[static_cast<std::size_t>(c)] = rt * dr[static_cast<std::size_t>(c)];
    scale = std::max(scale, norm(dr[static_cast<std::size_t>(c)]));
  }
  for (int c = 0; c < 3; ++c)
    out.residual[static_cast<std::size_t>(c)] =
        scale == 0.0 ? 0.0 : norm(sym(out.rt_dr[static_cast<std::size_t>(c)])) / scale;
  return out;
}

void check_skewness(const RotationRates& rates, double skew_tol) {
  for (int c = 0; c < 3; ++c)
    if (rates.residual[static_cast<std::size_t>(c)] > skew_tol)
      throw SkewnessViolated(
          "sym(R^t dR) residual " +
          std::to_string(rates.residual[static_cast<std::size_t>(c)]) +
          " exceeds tolerance; not a rotation field or grid too coarse");
}

Mat3 wryness_from_rates(const RotationRates& rates) {
  // Gamma_DC = 1/2 e_{BAD} (R^t dR/dX_C)_{AB}
  Mat3 gamma;
  for (int c = 0; c < 3; ++c) {
    const Mat3& m = rates.rt_dr[static_cast<std::size_t>(c)];
    for (int d = 0; d < 3; ++d) {
      double s = 0.0;
      for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) {
          const double e = permutation(b, a, d);
          if (e != 0.0) s += e * m(a, b);
        }
      gamma(d, c) = 0.5 * s;
    }
  }
  return gamma;
}

}  // namespace

Mat3 wryness(const FieldGrid& grid, int i, int j, int k, double skew_tol) {
  const RotationRates rates = rotation_rates(grid, i, j, k);
  check_skewness(rates, skew_tol);
  return wryness_from_rates(rates);
}

Mat3 wryness_from_axial(const FieldGrid& grid, int i, int j, int k, double skew_tol) {
  const RotationRates rates = rotation_rates(grid, i, j, k);
  check_skewness(rates, skew_tol);
  Mat3 gamma;
  for (int c = 0; c < 3; ++c) {
    const Vec3 col = axl(skew(rates.rt_dr[static_cast<std::size_t>(c)]), 1.0);
    for (int d = 0; d < 3; ++d) gamma(d, c) = col[d];
  }
  return gamma;
}

double skewness_residual(const FieldGrid& grid, int i, int j, int k) {
  const RotationRates rates = rotation_rates(grid, i, j, k);
  return std::max({rates.residual[0], rates.residual[1], rates.residual[2]});
}

CosseratState state_at(const FieldGrid& grid, int i, int j, int k, double skew_tol) {
  CosseratState s;
  s.deformation_gradient = deformation_gradient(grid, i, j, k);
  s.rotation = grid.rotation(i, j, k);
  s.strain = transpose(s.rotation) * s.deformation_gradient;
  s.wryness = wryness(grid, i, j, k, skew_tol);
  return s;
}

ResidualFields equilibrium_residuals(const FieldGrid& grid, const Material& mat,
                                     double skew_tol) {
  const int n = grid.n();
  const std::size_t count = grid.node_count();

  std::vector<Mat3> r_sigma(count);  // R sigma
  std::vector<Mat3> r_couple(count); // R m
  std::vector<Vec3> spin(count);     // 2 axl[R skew(sigma E^t) R^t]
  parallel_for(count, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const CosseratState st = state_at(grid, c[0], c[1], c[2], skew_tol);
    const Mat3 sigma = mat.stress(st.strain, st.wryness);
    const Mat3 m = mat.couple_stress(st.strain, st.wryness);
    r_sigma[idx] = st.rotation * sigma;
    r_couple[idx] = st.rotation * m;
    const Mat3 spin_tensor =
        st.rotation * skew(sigma * transpose(st.strain)) * transpose(st.rotation);
    spin[idx] = 2.0 * axl(skew(spin_tensor), 1.0);
  });

  ResidualFields out;
  out.force.resize(count);
  out.couple.resize(count);
  parallel_for(count, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    out.force[idx] = -1.0 * tensor_divergence(grid, r_sigma, c[0], c[1], c[2]);
    out.couple[idx] =
        -1.0 * tensor_divergence(grid, r_couple, c[0], c[1], c[2]) - spin[idx];
  });
  (void)n;
  return out;
}

std::vector<std::size_t> face_nodes(const FieldGrid& grid, Face face) {
  const int n = grid.n();
  const int axis = face_axis(face);
  const int fixed = face_is_high_side(face) ? n - 1 : 0;
  std::vector<std::size_t> nodes;
  nodes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int ijk[3];
      ijk[axis] = fixed;
      const int t1 = (axis == 0) ? 1 : 0;
      const int t2 = (axis == 2) ? 1 : 2;
      ijk[t1] = p;
      ijk[t2] = q;
      nodes.push_back(grid.index(ijk[0], ijk[1], ijk[2]));
    }
  return nodes;
}

FaceFields tractions(const FieldGrid& grid, const Material& mat, Face face,
                     double skew_tol) {
  const Vec3 nu = face_normal(face);
  const std::vector<std::size_t> nodes = face_nodes(grid, face);
  FaceFields out;
  out.traction.resize(nodes.size());
  out.couple.resize(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t f) {
    const auto c = grid.coords(nodes[f]);
    const CosseratState st = state_at(grid, c[0], c[1], c[2], skew_tol);
    const Mat3 sigma = mat.stress(st.strain, st.wryness);
    const Mat3 m = mat.couple_stress(st.strain, st.wryness);
    out.traction[f] = (st.rotation * sigma) * nu;
    out.couple[f] = (st.rotation * m) * nu;
  });
  return out;
}

}  // namespace cosserat
