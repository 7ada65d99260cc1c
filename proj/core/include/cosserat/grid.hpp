// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_GRID_HPP
#define COSSERAT_GRID_HPP

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "cosserat/tensor.hpp"

namespace cosserat {

struct Box {
  Vec3 lo{{0.0, 0.0, 0.0}};
  Vec3 hi{{1.0, 1.0, 1.0}};
};

/// The six faces of the box, named by axis and side.
enum class Face : int { xlo = 0, xhi = 1, ylo = 2, yhi = 3, zlo = 4, zhi = 5 };

constexpr std::array<Face, 6> all_faces{Face::xlo, Face::xhi, Face::ylo,
                                        Face::yhi, Face::zlo, Face::zhi};

Vec3 face_normal(Face f);
int face_axis(Face f);
bool face_is_high_side(Face f);
Face face_from_name(const std::string& name);  // "x-", "x+", "y-", ...
std::string face_name(Face f);

/// Deformation and rotation fields sampled on a uniform Cartesian grid over
/// an axis-aligned box. Immutable after construction; rotation samples are
/// validated, degenerate inputs are rejected rather than projected.
class FieldGrid {
 public:
  /// Throws GridTooCoarse if n_per_axis < 3 and NotRotation if any rotation
  /// sample fails ||R^t R - I|| <= rotation_tol or has det R <= 0.
  FieldGrid(const Box& box, int n_per_axis, std::vector<Vec3> chi,
            std::vector<Mat3> rotations, double rotation_tol = 1e-10);

  int n() const { return n_; }
  const Box& box() const { return box_; }
  double spacing(int axis) const { return h_[static_cast<std::size_t>(axis)]; }
  std::size_t node_count() const { return chi_.size(); }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(k);
  }
  std::array<int, 3> coords(std::size_t idx) const;
  bool is_interior(int i, int j, int k) const;

  Vec3 position(int i, int j, int k) const;
  const Vec3& deformation(std::size_t idx) const { return chi_[idx]; }
  const Mat3& rotation(std::size_t idx) const { return rot_[idx]; }
  const Vec3& deformation(int i, int j, int k) const { return chi_[index(i, j, k)]; }
  const Mat3& rotation(int i, int j, int k) const { return rot_[index(i, j, k)]; }

  const std::vector<Vec3>& deformation_field() const { return chi_; }
  const std::vector<Mat3>& rotation_field() const { return rot_; }

 private:
  Box box_;
  int n_;
  std::array<double, 3> h_{};
  std::vector<Vec3> chi_;
  std::vector<Mat3> rot_;
};

// Closed-form field catalog. Rotation fields are sampled analytically;
// differentiation acts on the sampled components.
struct IdentityField {};

struct UniformStretch {
  double stretch = 0.1;  ///< chi = (1 + stretch) X
};

/// Rotation about a fixed axis by angle rate * (direction . X); chi = X.
struct AxisTwist {
  Vec3 axis{{0.0, 0.0, 1.0}};
  double rate = 1.0;
  Vec3 direction{{1.0, 0.0, 0.0}};
};

/// chi = X + amplitude sin(wavevector . X + phase) direction; R = I.
struct SinusoidalPerturbation {
  double amplitude = 0.1;
  Vec3 wavevector{{3.141592653589793, 0.0, 0.0}};
  Vec3 direction{{0.0, 1.0, 0.0}};
  double phase = 0.0;
};

using CatalogField =
    std::variant<IdentityField, UniformStretch, AxisTwist, SinusoidalPerturbation>;

Vec3 catalog_deformation(const CatalogField& field, const Vec3& x);
Mat3 catalog_rotation(const CatalogField& field, const Vec3& x);
CatalogField catalog_by_name(const std::string& name);

FieldGrid make_grid(const CatalogField& field, const Box& box = {}, int n_per_axis = 17);

/// Samples arbitrary closed-form fields onto a grid.
FieldGrid sample_fields(const Box& box, int n_per_axis,
                        const std::function<Vec3(const Vec3&)>& chi,
                        const std::function<Mat3(const Vec3&)>& rotation,
                        double rotation_tol = 1e-10);

// Stencil derivatives: second-order central differences at interior nodes,
// second-order one-sided at the boundary.

/// Gradient of a vector-valued node field: result(i, A) = d field_i / d X_A.
Mat3 vector_gradient(const FieldGrid& grid, const std::vector<Vec3>& field, int i,
                     int j, int k);

/// Component-wise derivatives of a tensor-valued node field along each axis.
std::array<Mat3, 3> tensor_derivatives(const FieldGrid& grid,
                                       const std::vector<Mat3>& field, int i, int j,
                                       int k);

/// Divergence of a tensor-valued node field: result_i = d field_iA / d X_A.
Vec3 tensor_divergence(const FieldGrid& grid, const std::vector<Mat3>& field, int i,
                       int j, int k);

}  // namespace cosserat

#endif  // COSSERAT_GRID_HPP
