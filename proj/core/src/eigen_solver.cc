// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "mmcoreset/eigen_solver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mmcoreset/errors.h"

namespace mmcoreset {
namespace {

double OffDiagonalNorm(const std::vector<double>& a, std::size_t size) {
  double sum = 0.0;
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      if (p != q) sum += a[p * size + q] * a[p * size + q];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigenResult SymmetricEigen(std::vector<double> a, std::size_t size) {
  if (a.size() != size * size) {
    Fail(ErrorCode::kInternal, "eigensolver input is not square");
  }
  // v holds eigenvectors as rows: v = Q^T with A = Q diag Q^T.
  std::vector<double> v(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) v[i * size + i] = 1.0;

  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);
  const double threshold =
      frobenius > 0.0 ? kJacobiTolerance * frobenius : kJacobiTolerance;

  int sweep = 0;
  while (OffDiagonalNorm(a, size) > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      Fail(ErrorCode::kInternal, "Jacobi eigensolver did not converge in " +
                                     std::to_string(kJacobiMaxSweeps) +
                                     " sweeps");
    }
    for (std::size_t p = 0; p + 1 < size; ++p) {
      for (std::size_t q = p + 1; q < size; ++q) {
        const double apq = a[p * size + q];
        if (apq == 0.0) continue;
        const double app = a[p * size + p];
        const double aqq = a[q * size + q];
        // Rotation annihilating a[p][q] (Golub & Van Loan, sym.schur2).
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < size; ++k) {
          const double akp = a[k * size + p];
          const double akq = a[k * size + q];
          a[k * size + p] = c * akp - s * akq;
          a[k * size + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < size; ++k) {
          const double apk = a[p * size + k];
          const double aqk = a[q * size + k];
          a[p * size + k] = c * apk - s * aqk;
          a[q * size + k] = s * apk + c * aqk;
        }
        a[p * size + q] = 0.0;
        a[q * size + p] = 0.0;
        for (std::size_t k = 0; k < size; ++k) {
          const double vpk = v[p * size + k];
          const double vqk = v[q * size + k];
          v[p * size + k] = c * vpk - s * vqk;
          v[q * size + k] = s * vpk + c * vqk;
        }
      }
    }
  }

  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * size + i] > a[j * size + j];
  });

  SymmetricEigenResult result;
  result.eigenvalues.reserve(size);
  result.eigenvectors.reserve(size * size);
  for (std::size_t i : order) {
    result.eigenvalues.push_back(a[i * size + i]);
    result.eigenvectors.insert(result.eigenvectors.end(), v.begin() + i * size,
                               v.begin() + (i + 1) * size);
  }
  return result;
}

}  // namespace mmcoreset
