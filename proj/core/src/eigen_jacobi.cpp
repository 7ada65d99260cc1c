// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "cosserat/eigen_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cosserat {

JacobiResult jacobi_eigensolve(const std::vector<double>& a_in, int n, double tol,
                               int max_sweeps) {
  if (n <= 0 || a_in.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("jacobi_eigensolve: bad dimensions");

  const auto at = [n](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i * n + j)];
  };

  std::vector<double> a(a_in.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i * n + j)] =
          0.5 * (a_in[static_cast<std::size_t>(i * n + j)] +
                 a_in[static_cast<std::size_t>(j * n + i)]);

  std::vector<double> v(a.size(), 0.0);
  for (int i = 0; i < n; ++i) at(v, i, i) = 1.0;

  double norm2 = 0.0;
  for (double x : a) norm2 += x * x;
  const double stop = tol * std::sqrt(norm2);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(a, i, j) * at(a, i, j);
    if (std::sqrt(off) <= stop) break;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int i = 0; i < n; ++i) {
          const double aip = at(a, i, p), aiq = at(a, i, q);
          at(a, i, p) = c * aip - s * aiq;
          at(a, i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = at(a, p, i), aqi = at(a, q, i);
          at(a, p, i) = c * api - s * aqi;
          at(a, q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = at(v, i, p), viq = at(v, i, q);
          at(v, i, p) = c * vip - s * viq;
          at(v, i, q) = s * vip + c * viq;
        }
      }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = at(a, i, i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return diag[static_cast<std::size_t>(x)] <
                                       diag[static_cast<std::size_t>(y)]; });

  JacobiResult out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(a.size());
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    out.eigenvalues[static_cast<std::size_t>(c)] = diag[static_cast<std::size_t>(src)];
    for (int i = 0; i < n; ++i)
      out.eigenvectors[static_cast<std::size_t>(i * n + c)] = at(v, i, src);
  }
  return out;
}

}  // namespace cosserat
