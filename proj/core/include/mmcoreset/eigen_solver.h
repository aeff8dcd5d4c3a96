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
#ifndef MMCORESET_EIGEN_SOLVER_H_
#define MMCORESET_EIGEN_SOLVER_H_

#include <cstddef>
#include <vector>

namespace mmcoreset {

struct SymmetricEigenResult {
  // Sorted descending; ties keep the lower diagonal position first.
  std::vector<double> eigenvalues;
  // Row-major size x size; row i is the unit eigenvector of eigenvalues[i].
  std::vector<double> eigenvectors;
};

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi eigensolver for a dense symmetric matrix (row-major,
// size x size). Sweeps rows then columns in fixed order until the
// off-diagonal Frobenius norm is <= kJacobiTolerance * ||A||_F, so the
// result is bitwise reproducible for a given input. Raises InternalError if
// kJacobiMaxSweeps is exhausted.
SymmetricEigenResult SymmetricEigen(std::vector<double> matrix,
                                    std::size_t size);

}  // namespace mmcoreset

#endif  // MMCORESET_EIGEN_SOLVER_H_
