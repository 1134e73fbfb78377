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
 * Concrete finite Hilbert C*-modules.  An element of a module over M_c(C) is
 * a rows x c complex matrix; the module-valued inner product is <e|f> = e* f.
 * A module over C is a column vector (c = 1), and M_n over itself is the
 * square case rows = c = n.  Left actions are matrix multiplication from
 * the algebra acting on the row index.
 */

#pragma once

#include <vector>

#include "mvcs/cstar_matrix.hpp"

namespace mvcs {

struct ModuleSpace {
  Eigen::Index rows = 1;
  Eigen::Index cols = 1;  // dimension of the coefficient algebra

  static ModuleSpace matrix_algebra(Eigen::Index n) { return {n, n}; }
  static ModuleSpace hilbert_space(Eigen::Index d) { return {d, 1}; }
  static ModuleSpace tensor(const ModuleSpace& e, const ModuleSpace& g) {
    return {e.rows * g.rows, e.cols * g.cols};
  }

  Eigen::Index algebra_dim() const { return cols; }
  Eigen::Index left_algebra_dim() const { return rows; }

  friend bool operator==(const ModuleSpace&, const ModuleSpace&) = default;
};

class ModuleElement {
 public:
  ModuleElement(ModuleSpace space, Matrix value);

  const ModuleSpace& space() const { return space_; }
  const Matrix& value() const { return value_; }

 private:
  ModuleSpace space_;
  Matrix value_;
};

/// Ordered family {phi_k}; index k is the authoritative identity of phi_k.
/// Both defects are measured at construction and are reported, never
/// asserted: truncated frames satisfy completeness only in the limit.
struct Frame {
  ModuleSpace space;
  std::vector<ModuleElement> elements;
  double completeness_defect = 0.0;
  double orthonormality_defect = 0.0;
};

struct FrameReport {
  double completeness_defect = 0.0;
  double orthonormality_defect = 0.0;
  bool pass = false;
};

ModuleElement make_element(ModuleSpace space, Matrix value);

Frame make_frame(ModuleSpace space, std::vector<Matrix> values);

/// Frame {e_0, ..., e_{dim-1}} in C^dim: both defects are zero.
Frame standard_basis_frame(Eigen::Index dim);

/// <e|f> = e* f in the coefficient algebra; antilinear in e, linear in f.
CStarMatrix module_inner(const ModuleElement& e, const ModuleElement& f);

/// |e><f| applied to g, i.e. e <f|g>.
ModuleElement rank_one_apply(const ModuleElement& e, const ModuleElement& f,
                             const ModuleElement& g);

/// Left action of the algebra on the row index: a . e.
ModuleElement left_act(const CStarMatrix& a, const ModuleElement& e);

/// Recomputes both frame defects; passes iff both are within equality_tol.
FrameReport frame_verify(const Frame& fr, const SpectralTolerance& tol = {});

/// Element of E (x) G with <e1 (x) g1 | e2 (x) g2> = <e1|e2> (x) <g1|g2>.
ModuleElement exterior_tensor(const ModuleElement& e, const ModuleElement& g);

/// ||e|| = ||<e|e>||^{1/2}.
double element_norm(const ModuleElement& e);

}  // namespace mvcs
