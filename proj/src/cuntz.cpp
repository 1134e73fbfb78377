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

#include "mvcs/cuntz.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

namespace mvcs {

std::int64_t pairing_shell(std::int64_t k) {
  if (k < 1) throw OutOfDomain("pairing: k must be >= 1");
  // n with n(n+1)/2 < k <= (n+1)(n+2)/2; float estimate, then exact fixup.
  auto tri = [](std::int64_t n) { return n * (n + 1) / 2; };
  std::int64_t n = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(k) - 7.0) - 1.0) / 2.0);
  if (n < 0) n = 0;
  while (tri(n) >= k) --n;
  while (tri(n + 1) < k) ++n;
  return n;
}

Pair pairing(std::int64_t k) {
  const std::int64_t n = pairing_shell(k);
  return Pair{n * (n + 3) / 2 + 2 - k, k - n * (n + 1) / 2};
}

std::int64_t unpairing(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw OutOfDomain("unpairing: need p, q >= 1");
  const std::int64_t n = p + q - 2;
  return n * (n + 1) / 2 + q;
}

CuntzRep::CuntzRep(std::int64_t dim, std::int64_t k_active) : dim_(dim), k_active_(k_active) {
  if (dim < 1 || k_active < 1 || k_active > dim)
    throw OutOfDomain("CuntzRep: need dim >= k_active >= 1");
  images_.resize(static_cast<std::size_t>(k_active));
  for (std::int64_t k = 1; k <= k_active; ++k) {
    auto& col = images_[static_cast<std::size_t>(k - 1)];
    col.resize(static_cast<std::size_t>(dim));
    for (std::int64_t n = 1; n <= dim; ++n) {
      const std::int64_t m = unpairing(k, n);
      col[static_cast<std::size_t>(n - 1)] = m <= dim ? m : 0;
    }
  }
}

std::int64_t CuntzRep::image(std::int64_t k, std::int64_t n) const {
  if (k < 1 || k > k_active_ || n < 1 || n > dim_)
    throw OutOfDomain("CuntzRep::image: index out of range");
  return images_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)];
}

Matrix CuntzRep::dense(std::int64_t k) const {
  Matrix s = Matrix::Zero(dim_, dim_);
  for (std::int64_t n = 1; n <= dim_; ++n) {
    const std::int64_t m = image(k, n);
    if (m > 0) s(m - 1, n - 1) = 1.0;
  }
  return s;
}

Vector CuntzRep::apply(std::int64_t k, const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("CuntzRep::apply: vector size");
  Vector y = Vector::Zero(dim_);
  for (std::int64_t n = 1; n <= dim_; ++n) {
    const std::int64_t m = image(k, n);
    if (m > 0) y(m - 1) += x(n - 1);
  }
  return y;
}

Vector CuntzRep::apply_adjoint(std::int64_t k, const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("CuntzRep::apply_adjoint: vector size");
  Vector y = Vector::Zero(dim_);
  for (std::int64_t n = 1; n <= dim_; ++n) {
    const std::int64_t m = image(k, n);
    if (m > 0) y(n - 1) = x(m - 1);
  }
  return y;
}

CuntzReport verify_cuntz(const CuntzRep& rep) {
  CuntzReport out;
  // Columns are elementary, so S_k* S_l has entries [image(k,n) == image(l,n')].
  // Within one k the images are distinct (the bijection is injective), and
  // across k != l they are disjoint; any collision would contribute a unit
  // defect, so a global duplicate scan decides both defects exactly.
  std::unordered_set<std::int64_t> seen;
  bool within_collision = false, across_collision = false;
  std::int64_t covered = 0;
  for (std::int64_t k = 1; k <= rep.k_active(); ++k) {
    std::unordered_set<std::int64_t> mine;
    for (std::int64_t n = 1; n <= rep.dim(); ++n) {
      const std::int64_t m = rep.image(k, n);
      if (m == 0) continue;
      if (!mine.insert(m).second) within_collision = true;
      if (!seen.insert(m).second) across_collision = true;
      ++covered;
    }
  }
  out.isometry_defect = within_collision ? 1.0 : 0.0;
  out.range_overlap_defect = across_collision ? 1.0 : 0.0;
  out.completeness_trace_fraction =
      static_cast<double>(covered) / static_cast<double>(rep.dim());
  return out;
}

std::int64_t covered_row_count(const CuntzRep& rep, std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t m = 1; m <= rep.dim(); ++m)
    if (pairing(m).p <= k) ++count;
  return count;
}

CuntzCoherentOperator::CuntzCoherentOperator(const CuntzRep& rep, Complex z, std::int64_t k_max)
    : rep_(&rep), k_max_(k_max) {
  if (k_max < 1 || k_max > rep.k_active())
    throw TruncationExceeded("cuntz_coherent_state: k_max exceeds the active isometries");
  coeff_.resize(static_cast<std::size_t>(k_max));
  double fact = 1.0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (k > 1) fact *= static_cast<double>(k - 1);
    coeff_[static_cast<std::size_t>(k - 1)] = cpow(z, static_cast<int>(k) - 1) / std::sqrt(fact);
  }
}

Complex CuntzCoherentOperator::coefficient(std::int64_t k) const {
  if (k < 1 || k > k_max_) throw OutOfDomain("coefficient: k out of range");
  return coeff_[static_cast<std::size_t>(k - 1)];
}

Vector CuntzCoherentOperator::apply(const Vector& x) const {
  Vector y = Vector::Zero(rep_->dim());
  for (std::int64_t k = 1; k <= k_max_; ++k)
    y += coeff_[static_cast<std::size_t>(k - 1)] * rep_->apply(k, x);
  return y;
}

Matrix CuntzCoherentOperator::dense() const {
  Matrix m = Matrix::Zero(rep_->dim(), rep_->dim());
  for (std::int64_t k = 1; k <= k_max_; ++k)
    m += coeff_[static_cast<std::size_t>(k - 1)] * rep_->dense(k);
  return m;
}

CuntzCoherentOperator cuntz_coherent_state(const CuntzRep& rep, Complex z, std::int64_t k_max) {
  return CuntzCoherentOperator(rep, z, k_max);
}

Vector landau_recovery(const CuntzRep& rep, Complex z, Complex z_prime, std::int64_t n,
                       std::int64_t k_max) {
  if (n < 1 || n > rep.dim()) throw OutOfDomain("landau_recovery: n out of range");
  double fact = 1.0;
  for (std::int64_t i = 2; i < n; ++i) fact *= static_cast<double>(i);
  Vector xi = Vector::Zero(rep.dim());
  xi(n - 1) = cpow(std::conj(z_prime), static_cast<int>(n) - 1) / std::sqrt(fact);
  return cuntz_coherent_state(rep, z, k_max).apply(xi);
}

CSFamily cuntz_family(std::int64_t dim, std::int64_t k_active, int k_max, int radial_order,
                      int angular_order) {
  if (dim > 64)
    throw DimensionLimit("cuntz_family: family form materializes D x D frame elements; "
                         "use the CuntzRep interface beyond D = 64");
  if (k_max + 1 > k_active) throw TruncationExceeded("cuntz_family: k_max exceeds k_active");
  const CuntzRep rep(dim, k_active);

  CSFamily f;
  f.name = "cuntz";
  f.E = ModuleSpace{1, 1};
  f.G = ModuleSpace::matrix_algebra(dim);
  f.rule = gaussian_c_rule(radial_order, angular_order);
  f.component = [](int k, const Node& x) {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    Matrix m(1, 1);
    m(0, 0) = cpow(x.as_complex(), k) / std::sqrt(fact);
    return m;
  };
  std::vector<Matrix> frame_values;
  frame_values.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) frame_values.push_back(rep.dense(k + 1));
  f.frame = make_frame(f.G, std::move(frame_values));
  f.k_max = k_max;
  // Spanned block: rows covered by the active window of isometries.
  Matrix span = Matrix::Zero(dim, dim);
  for (int k = 1; k <= k_max + 1; ++k)
    for (std::int64_t nn = 1; nn <= dim; ++nn) {
      const std::int64_t m = rep.image(k, nn);
      if (m > 0) span(m - 1, m - 1) = 1.0;
    }
  f.span_projector = std::move(span);
  validate_family(f);
  return f;
}

}  // namespace mvcs
