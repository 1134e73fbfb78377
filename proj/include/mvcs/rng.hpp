// Copyright 2026 The mvcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "mvcs/cstar_matrix.hpp"

namespace mvcs {

/// Deterministic RNG: doubles and normals are derived from raw mt19937_64
/// words (no std distributions), so streams are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // (0, 1]
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_normal() {  // CN(0,1): variance 1/2 per real component
    const double radius = std::sqrt(-std::log(uniform()));
    const double angle = 2.0 * 3.14159265358979323846 * uniform();
    return Complex(radius * std::cos(angle), radius * std::sin(angle));
  }

  double normal() { return complex_normal().real() * std::sqrt(2.0); }

  Matrix ginibre(Eigen::Index rows, Eigen::Index cols) {
    Matrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = complex_normal();
    return g;
  }

  Vector unit_vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal();
    return v / v.norm();
  }

 private:
  std::mt19937_64 gen_;
};

/// Haar-distributed element of U(n): Ginibre + QR with the R-diagonal
/// phase fix.
Matrix haar_unitary_sample(int n, Rng& rng);

/// Haar-distributed element of SU(n): determinant phase divided out.
Matrix haar_special_unitary_sample(int n, Rng& rng);

}  // namespace mvcs
