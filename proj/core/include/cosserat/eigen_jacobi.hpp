// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_EIGEN_JACOBI_HPP
#define COSSERAT_EIGEN_JACOBI_HPP

#include <vector>

namespace cosserat {

struct JacobiResult {
  std::vector<double> eigenvalues;   ///< ascending
  std::vector<double> eigenvectors;  ///< column-major, column c pairs with eigenvalue c
};

/// Cyclic Jacobi iteration for a dense symmetric n x n matrix (row-major).
/// The input is symmetrized before iterating. Sweeps run until the
/// off-diagonal Frobenius norm drops below tol * ||A||_F.
JacobiResult jacobi_eigensolve(const std::vector<double>& a, int n, double tol = 1e-12,
                               int max_sweeps = 64);

}  // namespace cosserat

#endif  // COSSERAT_EIGEN_JACOBI_HPP
