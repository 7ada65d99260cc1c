// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/grid.hpp"

#include <cmath>
#include <string>

#include "cosserat/rotation.hpp"

namespace cosserat {

Vec3 face_normal(Face f) {
  const int axis = face_axis(f);
  Vec3 nu;
  nu[axis] = face_is_high_side(f) ? 1.0 : -1.0;
  return nu;
}

int face_axis(Face f) { return static_cast<int>(f) / 2; }

bool face_is_high_side(Face f) { return static_cast<int>(f) % 2 == 1; }

Face face_from_name(const std::string& name) {
  if (name == "x-") return Face::xlo;
  if (name == "x+") return Face::xhi;
  if (name == "y-") return Face::ylo;
  if (name == "y+") return Face::yhi;
  if (name == "z-") return Face::zlo;
  if (name == "z+") return Face::zhi;
  throw InvalidFace("unknown face name '" + name + "'");
}

std::string face_name(Face f) {
  static const std::array<std::string, 6> names{"x-", "x+", "y-", "y+", "z-", "z+"};
  return names[static_cast<std::size_t>(f)];
}

FieldGrid::FieldGrid(const Box& box, int n_per_axis, std::vector<Vec3> chi,
                     std::vector<Mat3> rotations, double rotation_tol)
    : box_(box), n_(n_per_axis), chi_(std::move(chi)), rot_(std::move(rotations)) {
  if (n_ < 3) throw GridTooCoarse("grid needs at least 3 points per axis");
  const auto expected = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) *
                        static_cast<std::size_t>(n_);
  if (chi_.size() != expected || rot_.size() != expected)
    throw Error("field arrays do not match the grid size");
  for (int a = 0; a < 3; ++a) {
    h_[static_cast<std::size_t>(a)] = (box_.hi[a] - box_.lo[a]) / (n_ - 1);
    if (!(h_[static_cast<std::size_t>(a)] > 0.0))
      throw Error("box extents must be positive");
  }
  for (std::size_t idx = 0; idx < rot_.size(); ++idx) {
    if (!is_rotation(rot_[idx], rotation_tol))
      throw NotRotation("rotation sample at node " + std::to_string(idx) +
                        " is not a rotation");
  }
}

std::array<int, 3> FieldGrid::coords(std::size_t idx) const {
  const auto n = static_cast<std::size_t>(n_);
  return {static_cast<int>(idx / (n * n)), static_cast<int>((idx / n) % n),
          static_cast<int>(idx % n)};
}

bool FieldGrid::is_interior(int i, int j, int k) const {
  return i > 0 && j > 0 && k > 0 && i < n_ - 1 && j < n_ - 1 && k < n_ - 1;
}

Vec3 FieldGrid::position(int i, int j, int k) const {
  return {box_.lo[0] + i * h_[0], box_.lo[1] + j * h_[1], box_.lo[2] + k * h_[2]};
}

Vec3 catalog_deformation(const CatalogField& field, const Vec3& x) {
  return std::visit(
      [&](const auto& f) -> Vec3 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IdentityField>) {
          return x;
        } else if constexpr (std::is_same_v<T, UniformStretch>) {
          return (1.0 + f.stretch) * x;
        } else if constexpr (std::is_same_v<T, AxisTwist>) {
          return x;
        } else {
          return x + f.amplitude * std::sin(dot(f.wavevector, x) + f.phase) * f.direction;
        }
      },
      field);
}

Mat3 catalog_rotation(const CatalogField& field, const Vec3& x) {
  if (const auto* twist = std::get_if<AxisTwist>(&field)) {
    const double angle = twist->rate * dot(twist->direction, x);
    return rodrigues(angle * normalized(twist->axis));
  }
  return Mat3::identity();
}

CatalogField catalog_by_name(const std::string& name) {
  if (name == "identity") return IdentityField{};
  if (name == "uniform_stretch") return UniformStretch{};
  if (name == "axis_twist") return AxisTwist{};
  if (name == "sinusoidal") return SinusoidalPerturbation{};
  throw ConfigError("unknown catalog field '" + name + "'");
}

FieldGrid make_grid(const CatalogField& field, const Box& box, int n_per_axis) {
  return sample_fields(
      box, n_per_axis, [&](const Vec3& x) { return catalog_deformation(field, x); },
      [&](const Vec3& x) { return catalog_rotation(field, x); });
}

FieldGrid sample_fields(const Box& box, int n_per_axis,
                        const std::function<Vec3(const Vec3&)>& chi,
                        const std::function<Mat3(const Vec3&)>& rotation,
                        double rotation_tol) {
  if (n_per_axis < 3) throw GridTooCoarse("grid needs at least 3 points per axis");
  const auto n = static_cast<std::size_t>(n_per_axis);
  std::vector<Vec3> chi_nodes(n * n * n);
  std::vector<Mat3> rot_nodes(n * n * n);
  std::array<double, 3> h{};
  for (int a = 0; a < 3; ++a)
    h[static_cast<std::size_t>(a)] = (box.hi[a] - box.lo[a]) / (n_per_axis - 1);
  std::size_t idx = 0;
  for (int i = 0; i < n_per_axis; ++i)
    for (int j = 0; j < n_per_axis; ++j)
      for (int k = 0; k < n_per_axis; ++k, ++idx) {
        const Vec3 x{box.lo[0] + i * h[0], box.lo[1] + j * h[1], box.lo[2] + k * h[2]};
        chi_nodes[idx] = chi(x);
        rot_nodes[idx] = rotation(x);
      }
  return FieldGrid(box, n_per_axis, std::move(chi_nodes), std::move(rot_nodes),
                   rotation_tol);
}

namespace {

// One-dimensional stencil along `axis` through node (i,j,k): returns the
// three sample offsets and weights (divided by 2h) of the second-order
// formula, central when possible, one-sided at the ends.
struct Stencil {
  std::array<int, 3> offset;
  std::array<double, 3> weight;  // includes the 1/(2h) factor
};

Stencil stencil_1d(int pos, int n, double h) {
  const double s = 1.0 / (2.0 * h);
  if (pos == 0) return {{0, 1, 2}, {-3.0 * s, 4.0 * s, -1.0 * s}};
  if (pos == n - 1) return {{0, -1, -2}, {3.0 * s, -4.0 * s, 1.0 * s}};
  return {{-1, 0, 1}, {-s, 0.0, s}};
}

std::size_t shifted_index(const FieldGrid& g, int i, int j, int k, int axis, int off) {
  switch (axis) {
    case 0: return g.index(i + off, j, k);
    case 1: return g.index(i, j + off, k);
    default: return g.index(i, j, k + off);
  }
}

}  // namespace

Mat3 vector_gradient(const FieldGrid& grid, const std::vector<Vec3>& field, int i,
                     int j, int k) {
  Mat3 g;
  const std::array<int, 3> pos{i, j, k};
  for (int axis = 0; axis < 3; ++axis) {
    const Stencil st = stencil_1d(pos[static_cast<std::size_t>(axis)], grid.n(),
                                  grid.spacing(axis));
    Vec3 d;
    for (int t = 0; t < 3; ++t) {
      const Vec3& f = field[shifted_index(grid, i, j, k, axis, st.offset[t])];
      d += st.weight[t] * f;
    }
    for (int c = 0; c < 3; ++c) g(c, axis) = d[c];
  }
  return g;
}

std::array<Mat3, 3> tensor_derivatives(const FieldGrid& grid,
                                       const std::vector<Mat3>& field, int i, int j,
                                       int k) {
  std::array<Mat3, 3> out;
  const std::array<int, 3> pos{i, j, k};
  for (int axis = 0; axis < 3; ++axis) {
    const Stencil st = stencil_1d(pos[static_cast<std::size_t>(axis)], grid.n(),
                                  grid.spacing(axis));
    Mat3 d;
    for (int t = 0; t < 3; ++t)
      d += st.weight[t] * field[shifted_index(grid, i, j, k, axis, st.offset[t])];
    out[static_cast<std::size_t>(axis)] = d;
  }
  return out;
}

Vec3 tensor_divergence(const FieldGrid& grid, const std::vector<Mat3>& field, int i,
                       int j, int k) {
  const std::array<Mat3, 3> d = tensor_derivatives(grid, field, i, j, k);
  Vec3 r;
  for (int c = 0; c < 3; ++c) r[c] = d[0](c, 0) + d[1](c, 1) + d[2](c, 2);
  return r;
}

}  // namespace cosserat
