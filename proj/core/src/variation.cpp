// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/variation.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cosserat/parallel.hpp"

namespace cosserat {

namespace {

double trapezoid_weight_1d(int pos, int n) {
  return (pos == 0 || pos == n - 1) ? 0.5 : 1.0;
}

/// Volume quadrature weight of node (i, j, k), including h1 h2 h3.
double volume_weight(const FieldGrid& g, int i, int j, int k) {
  const int n = g.n();
  return trapezoid_weight_1d(i, n) * trapezoid_weight_1d(j, n) *
         trapezoid_weight_1d(k, n) * g.spacing(0) * g.spacing(1) * g.spacing(2);
}

/// Face quadrature weight of the f-th face-local node, including the area
/// element of the two transverse axes.
double face_weight(const FieldGrid& g, Face face, std::size_t f) {
  const int n = g.n();
  const int p = static_cast<int>(f) / n;
  const int q = static_cast<int>(f) % n;
  const int axis = face_axis(face);
  const int t1 = (axis == 0) ? 1 : 0;
  const int t2 = (axis == 2) ? 1 : 2;
  return trapezoid_weight_1d(p, n) * trapezoid_weight_1d(q, n) * g.spacing(t1) *
         g.spacing(t2);
}

double max_norm(const std::vector<Vec3>& field) {
  double m = 0.0;
  for (const Vec3& v : field) m = std::max(m, norm(v));
  return m;
}

}  // namespace

VariationPair::VariationPair(const FieldGrid& grid, std::vector<Vec3> u,
                             std::vector<Vec3> omega, BoundaryPartition faces)
    : u_(std::move(u)), omega_(std::move(omega)), faces_(faces) {
  if (u_.size() != grid.node_count() || omega_.size() != grid.node_count())
    throw Error("variation fields do not match the grid size");
  const double u_tol = 1e-12 * (1.0 + max_norm(u_));
  const double w_tol = 1e-12 * (1.0 + max_norm(omega_));
  for (Face face : all_faces) {
    const auto fi = static_cast<std::size_t>(face);
    const bool check_u = !faces_.traction_free[fi];
    const bool check_w = !faces_.couple_free[fi];
    if (!check_u && !check_w) continue;
    for (std::size_t idx : face_nodes(grid, face)) {
      if (check_u && norm(u_[idx]) > u_tol)
        throw InadmissiblePair("u nonzero on position-assigned face " + face_name(face));
      if (check_w && norm(omega_[idx]) > w_tol)
        throw InadmissiblePair("omega nonzero on rotation-assigned face " +
                               face_name(face));
    }
  }
}

DeadLoad zero_loads(const FieldGrid& grid) {
  const std::size_t per_face =
      static_cast<std::size_t>(grid.n()) * static_cast<std::size_t>(grid.n());
  DeadLoad loads;
  for (auto& t : loads.traction) t.assign(per_face, Vec3{});
  for (auto& m : loads.couple) m.assign(per_face, Mat3{});
  return loads;
}

DeadLoad matched_dead_loads(const FieldGrid& grid, const Material& mat,
                            const BoundaryPartition& faces) {
  DeadLoad loads = zero_loads(grid);
  for (Face face : all_faces) {
    const auto fi = static_cast<std::size_t>(face);
    if (!faces.traction_free[fi] && !faces.couple_free[fi]) continue;
    const FaceFields fields = tractions(grid, mat, face);
    const std::vector<std::size_t> nodes = face_nodes(grid, face);
    for (std::size_t f = 0; f < nodes.size(); ++f) {
      if (faces.traction_free[fi]) loads.traction[fi][f] = fields.traction[f];
      if (faces.couple_free[fi]) {
        // c = 2 axl[skew(M R^t)] = (R m) nu  <=  M = 1/2 skew_from_axial(c) R
        const Mat3& r = grid.rotation(nodes[f]);
        loads.couple[fi][f] = 0.5 * skew_from_axial(fields.couple[f]) * r;
      }
    }
  }
  return loads;
}

std::pair<Mat3, Mat3> strain_rates(const FieldGrid& grid, const VariationPair& pair,
                                   int i, int j, int k) {
  const Mat3 grad_u = vector_gradient(grid, pair.u(), i, j, k);
  const Mat3 grad_w = vector_gradient(grid, pair.omega(), i, j, k);
  const Mat3 omega_tensor = skew_from_axial(pair.omega()[grid.index(i, j, k)]);
  const Mat3 f = deformation_gradient(grid, i, j, k);
  const Mat3 rt = transpose(grid.rotation(i, j, k));
  return {rt * (grad_u - omega_tensor * f), rt * grad_w};
}

namespace {

/// Surface terms of the first variation: - int t.u da - int c.omega da.
double load_terms(const FieldGrid& grid, const VariationPair& pair,
                  const DeadLoad& loads, const std::vector<Vec3>& u_field,
                  const std::vector<Vec3>& w_field) {
  double total = 0.0;
  for (Face face : all_faces) {
    const auto fi = static_cast<std::size_t>(face);
    const std::vector<std::size_t> nodes = face_nodes(grid, face);
    if (pair.faces().traction_free[fi]) {
      total -= deterministic_sum(nodes.size(), [&](std::size_t f) {
        return face_weight(grid, face, f) * dot(loads.traction[fi][f], u_field[nodes[f]]);
      });
    }
    if (pair.faces().couple_free[fi]) {
      total -= deterministic_sum(nodes.size(), [&](std::size_t f) {
        const Mat3& r = grid.rotation(nodes[f]);
        const Vec3 c = 2.0 * axl(skew(loads.couple[fi][f] * transpose(r)), 1.0);
        return face_weight(grid, face, f) * dot(c, w_field[nodes[f]]);
      });
    }
  }
  return total;
}

double stationarity_terms(const FieldGrid& grid, const Material& mat,
                          const VariationPair& pair, const DeadLoad& loads) {
  const double volume = deterministic_sum(grid.node_count(), [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const CosseratState st = state_at(grid, c[0], c[1], c[2]);
    const Mat3 grad_u = vector_gradient(grid, pair.u(), c[0], c[1], c[2]);
    const Mat3 grad_w = vector_gradient(grid, pair.omega(), c[0], c[1], c[2]);
    const Mat3 omega_tensor = skew_from_axial(pair.omega()[idx]);
    const Mat3 r_stress = st.rotation * mat.stress(st.strain, st.wryness);
    const Mat3 r_couple = st.rotation * mat.couple_stress(st.strain, st.wryness);
    const double density = inner(r_couple, grad_w) + inner(r_stress, grad_u) -
                           inner(r_stress * transpose(st.deformation_gradient),
                                 omega_tensor);
    return volume_weight(grid, c[0], c[1], c[2]) * density;
  });
  return volume + load_terms(grid, pair, loads, pair.u(), pair.omega());
}

}  // namespace

double first_variation(const FieldGrid& grid, const Material& mat,
                       const VariationPair& pair, const DeadLoad& loads) {
  return stationarity_terms(grid, mat, pair, loads);
}

double f_term_integrand(const Material& mat, const Mat3& strain, const Mat3& wry,
                        const Mat3& rotation, const Mat3& deformation_gradient,
                        const Mat3& grad_u, const Mat3& grad_omega,
                        const Mat3& omega_tensor) {
  const Mat3 r_stress = rotation * mat.stress(strain, wry);
  const Mat3 r_couple = rotation * mat.couple_stress(strain, wry);
  const Mat3 rt = transpose(rotation);
  const Mat3 omega_rate = rt * (omega_tensor * deformation_gradient);  // R^t Omega F
  const Mat3 g = rt * grad_u;
  const Mat3 h = rt * grad_omega;

  double f = 2.0 * inner(omega_tensor * r_stress, grad_u);
  f += inner(omega_tensor * r_couple, grad_omega);
  f -= inner(omega_tensor * r_stress * transpose(deformation_gradient), omega_tensor);
  const Mat3 a_of_rate = mat.elasticity_action(strain, wry, omega_rate);
  f += inner(omega_rate, a_of_rate);
  f -= 2.0 * inner(g, a_of_rate);
  f -= inner(h, mat.coupling_transpose_action(strain, wry, omega_rate));
  f -= inner(omega_rate, mat.coupling_action(strain, wry, h));
  return f;
}

double f_term(const FieldGrid& grid, const Material& mat, const VariationPair& pair,
              int i, int j, int k) {
  const CosseratState st = state_at(grid, i, j, k);
  const Mat3 grad_u = vector_gradient(grid, pair.u(), i, j, k);
  const Mat3 grad_w = vector_gradient(grid, pair.omega(), i, j, k);
  const Mat3 omega_tensor = skew_from_axial(pair.omega()[grid.index(i, j, k)]);
  return f_term_integrand(mat, st.strain, st.wryness, st.rotation,
                          st.deformation_gradient, grad_u, grad_w, omega_tensor);
}

VariationPair gate_test_pair(const FieldGrid& grid, unsigned index) {
  std::mt19937 rng(0x9e3779b9u + 97u * index);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::array<double, 8> cu{}, cw{};
  for (double& c : cu) c = unit(rng);
  for (double& c : cw) c = unit(rng);

  const Box& box = grid.box();
  const int n = grid.n();
  std::vector<Vec3> u(grid.node_count()), w(grid.node_count());
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++idx) {
        const Vec3 x = grid.position(i, j, k);
        Vec3 xi;  // coordinates scaled to [0, 1]
        for (int a = 0; a < 3; ++a) xi[a] = (x[a] - box.lo[a]) / (box.hi[a] - box.lo[a]);
        constexpr double pi = std::numbers::pi;
        const double bubble = std::sin(pi * xi[0]) * std::sin(pi * xi[1]) *
                              std::sin(pi * xi[2]);
        for (int c = 0; c < 3; ++c) {
          u[idx][c] = bubble * (cu[c] + cu[c + 3] * xi[(c + 1) % 3] + cu[7] * xi[c]);
          w[idx][c] = bubble * (cw[c] + cw[c + 3] * xi[(c + 2) % 3] + cw[7] * xi[c]);
        }
      }
  return VariationPair(grid, std::move(u), std::move(w), BoundaryPartition{});
}

SecondVariation second_variation(const FieldGrid& grid, const Material& mat,
                                 const VariationPair& pair, const DeadLoad& loads,
                                 const VariationPair* second_pair) {
  SecondVariation out;

  // Equilibrium gate: the expansion below assumes the stationarity terms
  // vanish, so probe them with boundary-vanishing test pairs first.
  double volume = 1.0;
  for (int a = 0; a < 3; ++a) volume *= grid.box().hi[a] - grid.box().lo[a];
  out.gate_threshold = 1e-6 * (1.0 + mat.modulus_scale()) * volume;
  for (unsigned t = 0; t < 12; ++t) {
    const double r = std::abs(first_variation(grid, mat, gate_test_pair(grid, t), loads));
    out.gate_residual = std::max(out.gate_residual, r);
  }
  out.equilibrated = out.gate_residual <= out.gate_threshold;

  const double hessian_and_f =
      deterministic_sum(grid.node_count(), [&](std::size_t idx) {
        const auto c = grid.coords(idx);
        const CosseratState st = state_at(grid, c[0], c[1], c[2]);
        const Mat3 grad_u = vector_gradient(grid, pair.u(), c[0], c[1], c[2]);
        const Mat3 grad_w = vector_gradient(grid, pair.omega(), c[0], c[1], c[2]);
        const Mat3 omega_tensor = skew_from_axial(pair.omega()[idx]);
        const Mat3 rt = transpose(st.rotation);
        const Mat3 g = rt * grad_u;
        const Mat3 h = rt * grad_w;
        const double quad =
            inner(g, mat.elasticity_action(st.strain, st.wryness, g)) +
            inner(g, mat.coupling_action(st.strain, st.wryness, h)) +
            inner(h, mat.coupling_transpose_action(st.strain, st.wryness, g)) +
            inner(h, mat.curvature_action(st.strain, st.wryness, h));
        const double f = f_term_integrand(mat, st.strain, st.wryness, st.rotation,
                                          st.deformation_gradient, grad_u, grad_w,
                                          omega_tensor);
        return volume_weight(grid, c[0], c[1], c[2]) * (quad + f);
      });

  // - int_{dk_c} M R^t . Omega^2 da
  double boundary = 0.0;
  for (Face face : all_faces) {
    const auto fi = static_cast<std::size_t>(face);
    if (!pair.faces().couple_free[fi]) continue;
    const std::vector<std::size_t> nodes = face_nodes(grid, face);
    boundary -= deterministic_sum(nodes.size(), [&](std::size_t f) {
      const Mat3& r = grid.rotation(nodes[f]);
      const Mat3 omega_tensor = skew_from_axial(pair.omega()[nodes[f]]);
      return face_weight(grid, face, f) *
             inner(loads.couple[fi][f] * transpose(r), omega_tensor * omega_tensor);
    });
  }

  out.value = hessian_and_f + boundary;
  if (second_pair != nullptr)
    out.value += stationarity_terms(grid, mat, *second_pair, loads);
  return out;
}

}  // namespace cosserat
