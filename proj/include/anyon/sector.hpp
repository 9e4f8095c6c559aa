// Copyright 2026 The anyonweave Authors
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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "anyon/core.hpp"

namespace anyon {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A dense unitary together with the fusion-path bases it maps between.
/// For braids that permute objects of different charge the input and output
/// object orders differ, so both sides are kept.
struct SectorUnitary {
  ObjectList in_objects;
  ObjectList out_objects;
  std::vector<FusionPath> in_basis;
  std::vector<FusionPath> out_basis;
  Matrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  bool same_basis_as(const SectorUnitary& other) const {
    return in_basis == other.in_basis && out_basis == other.out_basis &&
           in_objects == other.in_objects && out_objects == other.out_objects;
  }

  static SectorUnitary identity(const ObjectList& objects, std::vector<FusionPath> basis) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    return {objects, objects, basis, std::move(basis), Matrix::Identity(n, n)};
  }
};

/// max_ij |(U^dagger U - I)_ij|
inline double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return 1.0;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace anyon
