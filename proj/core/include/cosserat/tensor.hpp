// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_TENSOR_HPP
#define COSSERAT_TENSOR_HPP

#include <array>
#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  Vec3& operator+=(const Vec3& b) {
    for (int i = 0; i < 3; ++i) v[i] += b.v[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& b) {
    for (int i = 0; i < 3; ++i) v[i] -= b.v[i];
    return *this;
  }
  Vec3& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw ZeroDirection("cannot normalize the zero vector");
  return (1.0 / n) * a;
}

/// Second-order tensor on R^3, row-major storage.
struct Mat3 {
  std::array<double, 9> m{};

  constexpr double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(3 * i + j)];
  }
  constexpr double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(3 * i + j)];
  }

  static constexpr Mat3 zero() { return {}; }
  static constexpr Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }

  Mat3& operator+=(const Mat3& b) {
    for (int i = 0; i < 9; ++i) m[i] += b.m[i];
    return *this;
  }
  Mat3& operator-=(const Mat3& b) {
    for (int i = 0; i < 9; ++i) m[i] -= b.m[i];
    return *this;
  }
  Mat3& operator*=(double s) {
    for (double& x : m) x *= s;
    return *this;
  }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }
inline Mat3 operator*(Mat3 a, double s) { return a *= s; }
inline Mat3 operator-(const Mat3& a) { return -1.0 * a; }

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& x) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

/// Inner product A.B = tr(A B^t).
inline double inner(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}

inline double norm(const Mat3& a) { return std::sqrt(inner(a, a)); }

inline Mat3 sym(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
  return r;
}

inline Mat3 skew(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a(i, j) - a(j, i));
  return r;
}

/// Deviatoric part: A - (tr A / 3) I.
inline Mat3 dev(const Mat3& a) {
  Mat3 r = a;
  const double t = trace(a) / 3.0;
  r(0, 0) -= t;
  r(1, 1) -= t;
  r(2, 2) -= t;
  return r;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Skew tensor with axial vector w: skew_from_axial(w) v = w x v.
inline Mat3 skew_from_axial(const Vec3& w) {
  Mat3 r;
  r(0, 1) = -w[2];
  r(0, 2) = w[1];
  r(1, 0) = w[2];
  r(1, 2) = -w[0];
  r(2, 0) = -w[1];
  r(2, 1) = w[0];
  return r;
}

/// Axial vector of a skew tensor, defined by axl(W) ^ v = W v.
/// Inputs coming from differentiated rotation fields carry finite-difference
/// noise, so the skewness precondition is relative: ||sym W|| <= tol ||W||.
inline Vec3 axl(const Mat3& w, double skew_tol = 1e-10) {
  const double nw = norm(w);
  if (norm(sym(w)) > skew_tol * nw)
    throw NotSkew("axl: symmetric part exceeds tolerance");
  return {w(2, 1), w(0, 2), w(1, 0)};
}

/// Orthogonality + orientation test: ||R^t R - I|| <= tol and det R > 0.
inline bool is_rotation(const Mat3& r, double tol = 1e-10) {
  return norm(transpose(r) * r - Mat3::identity()) <= tol && det(r) > 0.0;
}

/// Permutation symbol e_{ijk} (0-based indices).
inline double permutation(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

/// Fourth-order tensor on R^3, dense 81-component storage. The dense form is
/// the oracle representation; material closures supply the fast path.
struct Ten4 {
  std::array<double, 81> c{};

  constexpr double& operator()(int i, int j, int k, int l) {
    return c[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l)];
  }
  constexpr double operator()(int i, int j, int k, int l) const {
    return c[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l)];
  }

  static Ten4 zero() { return {}; }

  /// Identity of the linear action: I[B] = B.
  static Ten4 identity() {
    Ten4 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j, i, j) = 1.0;
    return r;
  }

  Ten4& operator+=(const Ten4& b) {
    for (std::size_t i = 0; i < 81; ++i) c[i] += b.c[i];
    return *this;
  }
  Ten4& operator-=(const Ten4& b) {
    for (std::size_t i = 0; i < 81; ++i) c[i] -= b.c[i];
    return *this;
  }
  Ten4& operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
  }
};

inline Ten4 operator+(Ten4 a, const Ten4& b) { return a += b; }
inline Ten4 operator-(Ten4 a, const Ten4& b) { return a -= b; }
inline Ten4 operator*(double s, Ten4 a) { return a *= s; }

/// Linear action A[B].
inline Mat3 apply4(const Ten4& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += a(i, j, k, l) * b(k, l);
      r(i, j) = s;
    }
  return r;
}

/// Transpose under the pairing B.A^t[C] = C.A[B].
inline Ten4 transpose4(const Ten4& a) {
  Ten4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = a(k, l, i, j);
  return r;
}

inline double norm(const Ten4& a) {
  double s = 0.0;
  for (double x : a.c) s += x * x;
  return std::sqrt(s);
}

inline bool is_major_symmetric(const Ten4& a, double tol = 1e-12) {
  const double scale = 1.0 + norm(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          if (std::abs(a(i, j, k, l) - a(k, l, i, j)) > tol * scale)
            return false;
  return true;
}

}  // namespace cosserat

#endif  // COSSERAT_TENSOR_HPP
