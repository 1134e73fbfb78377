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

#include "mvcs/hilbert_module.hpp"

#include <algorithm>
#include <string>

namespace mvcs {

ModuleElement::ModuleElement(ModuleSpace space, Matrix value)
    : space_(space), value_(std::move(value)) {
  if (value_.rows() != space_.rows || value_.cols() != space_.cols)
    throw DimensionMismatch("ModuleElement: value shape does not match space");
  if (!value_.allFinite()) throw InvalidMatrix("ModuleElement: non-finite entry");
}

ModuleElement make_element(ModuleSpace space, Matrix value) {
  return ModuleElement(space, std::move(value));
}

namespace {

// Both frame sums are operator identities realized as left multiplications
// on the row space: sum_k phi_k phi_k* acts as I_G iff it equals I_rows.
void frame_defects(const ModuleSpace& space, const std::vector<ModuleElement>& elems,
                   double* completeness, double* orthonormality) {
  Matrix sum = Matrix::Zero(space.rows, space.rows);
  for (const auto& e : elems) sum += e.value() * e.value().adjoint();
  *completeness = operator_norm(sum - Matrix::Identity(space.rows, space.rows));

  double ortho = 0.0;
  const Matrix id = Matrix::Identity(space.cols, space.cols);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t l = 0; l < elems.size(); ++l) {
      const Matrix gram = elems[k].value().adjoint() * elems[l].value();
      const double d = operator_norm(k == l ? Matrix(gram - id) : gram);
      ortho = std::max(ortho, d);
    }
  *orthonormality = ortho;
}

}  // namespace

Frame make_frame(ModuleSpace space, std::vector<Matrix> values) {
  if (values.empty()) throw Error("make_frame: empty frame");
  Frame fr;
  fr.space = space;
  fr.elements.reserve(values.size());
  for (auto& v : values) fr.elements.emplace_back(space, std::move(v));
  frame_defects(space, fr.elements, &fr.completeness_defect, &fr.orthonormality_defect);
  return fr;
}

Frame standard_basis_frame(Eigen::Index dim) {
  std::vector<Matrix> values;
  values.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) {
    Matrix e = Matrix::Zero(dim, 1);
    e(k, 0) = 1.0;
    values.push_back(std::move(e));
  }
  return make_frame(ModuleSpace::hilbert_space(dim), std::move(values));
}

CStarMatrix module_inner(const ModuleElement& e, const ModuleElement& f) {
  if (!(e.space() == f.space())) throw SpaceMismatch("module_inner: different spaces");
  return CStarMatrix(e.value().adjoint() * f.value());
}

ModuleElement rank_one_apply(const ModuleElement& e, const ModuleElement& f,
                             const ModuleElement& g) {
  if (!(e.space() == f.space()) || !(e.space() == g.space()))
    throw SpaceMismatch("rank_one_apply: different spaces");
  return ModuleElement(e.space(), e.value() * (f.value().adjoint() * g.value()));
}

ModuleElement left_act(const CStarMatrix& a, const ModuleElement& e) {
  if (a.dim() != e.space().rows)
    throw DimensionMismatch("left_act: algebra dim " + std::to_string(a.dim()) +
                            " != rows " + std::to_string(e.space().rows));
  return ModuleElement(e.space(), a.mat() * e.value());
}

FrameReport frame_verify(const Frame& fr, const SpectralTolerance& tol) {
  FrameReport rep;
  frame_defects(fr.space, fr.elements, &rep.completeness_defect, &rep.orthonormality_defect);
  rep.pass = rep.completeness_defect <= tol.equality_tol &&
             rep.orthonormality_defect <= tol.equality_tol;
  return rep;
}

ModuleElement exterior_tensor(const ModuleElement& e, const ModuleElement& g) {
  const ModuleSpace h = ModuleSpace::tensor(e.space(), g.space());
  return ModuleElement(h, kron(e.value(), g.value()));
}

double element_norm(const ModuleElement& e) {
  // ||<e|e>|| = ||e||_2^2 for the concrete matrix model.
  return operator_norm(e.value());
}

}  // namespace mvcs
