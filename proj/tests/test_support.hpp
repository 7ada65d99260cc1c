// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_TESTS_TEST_SUPPORT_HPP
#define COSSERAT_TESTS_TEST_SUPPORT_HPP

#include <numbers>
#include <random>

#include "cosserat/rotation.hpp"
#include "cosserat/tensor.hpp"

namespace test_support {

using cosserat::Mat3;
using cosserat::Ten4;
using cosserat::Vec3;

struct Rng {
  std::mt19937 gen;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};
  explicit Rng(unsigned seed) : gen(seed) {}
  double operator()() { return unit(gen); }
  double in(double lo, double hi) {
    return lo + (hi - lo) * 0.5 * ((*this)() + 1.0);
  }
  Vec3 vec3() { return {(*this)(), (*this)(), (*this)()}; }
  Vec3 unit_vec3() {
    for (;;) {
      const Vec3 v = vec3();
      const double n = cosserat::norm(v);
      if (n > 0.1) return (1.0 / n) * v;
    }
  }
  Mat3 mat3() {
    Mat3 m;
    for (double& x : m.m) x = (*this)();
    return m;
  }
  Mat3 rotation() { return cosserat::rodrigues(std::numbers::pi * vec3()); }
  Ten4 ten4() {
    Ten4 t;
    for (double& x : t.c) x = (*this)();
    return t;
  }
};

inline Vec3 basis(int i) {
  Vec3 e;
  e[i] = 1.0;
  return e;
}

}  // namespace test_support

#endif  // COSSERAT_TESTS_TEST_SUPPORT_HPP
