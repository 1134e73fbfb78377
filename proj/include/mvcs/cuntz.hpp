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

/**
 * @file
 * The pairing bijection t : N -> N x N built on triangular numbers, the
 * truncated isometries S_k phi_n = psi_{k n} := phi_{t^{-1}(k, n)} they
 * induce, and the coherent-state operators sum_k F_k(z) S_k.
 *
 * Indices in this module are 1-based to match the bijection's domain; the
 * rest of the library is 0-based and the boundary is confined to these
 * interfaces.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "mvcs/engine.hpp"

namespace mvcs {

struct Pair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// t(k) for k >= 1; t(1) = (1,1), t(2) = (2,1), t(3) = (1,2), ...
Pair pairing(std::int64_t k);

/// Inverse of t: k = n(n+1)/2 + q with n = p + q - 2.
std::int64_t unpairing(std::int64_t p, std::int64_t q);

/// The unique n with n(n+1)/2 < k <= (n+1)(n+2)/2.
std::int64_t pairing_shell(std::int64_t k);

/// Truncated representation on C^D: S_k sends basis index n to
/// unpairing(k, n) when that lands within D, else the column is zeroed.
/// Columns are elementary, so the matrices are stored as index maps.
class CuntzRep {
 public:
  CuntzRep(std::int64_t dim, std::int64_t k_active);

  std::int64_t dim() const { return dim_; }
  std::int64_t k_active() const { return k_active_; }

  /// Row index hit by S_k e_n (1-based k, n), or 0 when truncated away.
  std::int64_t image(std::int64_t k, std::int64_t n) const;

  /// Dense D x D matrix of S_k (1-based k).
  Matrix dense(std::int64_t k) const;

  /// y = S_k x.
  Vector apply(std::int64_t k, const Vector& x) const;

  /// y = S_k* x.
  Vector apply_adjoint(std::int64_t k, const Vector& x) const;

 private:
  std::int64_t dim_ = 0;
  std::int64_t k_active_ = 0;
  std::vector<std::vector<std::int64_t>> images_;  // [k-1][n-1] -> row or 0
};

struct CuntzReport {
  double isometry_defect = 0.0;       // max_k || S_k* S_k - P_k^dom ||
  double range_overlap_defect = 0.0;  // max_{k != l} || S_k* S_l ||
  double completeness_trace_fraction = 0.0;
};

CuntzReport verify_cuntz(const CuntzRep& rep);

/// Rows of C^D covered by ranges of S_1..S_k, counted through the inverse
/// bijection: #{m <= D : first(t(m)) <= k}.
std::int64_t covered_row_count(const CuntzRep& rep, std::int64_t k);

/// The operator sum_{k <= k_max} F_k(z) S_k with F_k(z) = z^{k-1}/sqrt((k-1)!).
class CuntzCoherentOperator {
 public:
  CuntzCoherentOperator(const CuntzRep& rep, Complex z, std::int64_t k_max);

  Vector apply(const Vector& x) const;
  Matrix dense() const;
  Complex coefficient(std::int64_t k) const;  // F_k(z), 1-based
  std::int64_t k_max() const { return k_max_; }

 private:
  const CuntzRep* rep_;
  std::int64_t k_max_;
  std::vector<Complex> coeff_;
};

CuntzCoherentOperator cuntz_coherent_state(const CuntzRep& rep, Complex z, std::int64_t k_max);

/// Applies the coherent-state operator to xi_{zbar', n} =
/// (zbar'^{n-1}/sqrt((n-1)!)) phi_n; the result expands over the psi_{k n}
/// with coefficients zbar'^{n-1} z^{k-1} / sqrt((k-1)! (n-1)!).
Vector landau_recovery(const CuntzRep& rep, Complex z, Complex z_prime, std::int64_t n,
                       std::int64_t k_max);

/// Coherent-state family over the truncated algebra: E = C with Bargmann
/// components, G = M_D over itself with frame phi_k = S_k, and the spanned
/// block set to the rows covered by the active isometries.
CSFamily cuntz_family(std::int64_t dim, std::int64_t k_active, int k_max, int radial_order,
                      int angular_order);

}  // namespace mvcs
