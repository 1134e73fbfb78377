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

#include <catch2/catch_amalgamated.hpp>

#include "mvcs/hilbert_module.hpp"
#include "mvcs/rng.hpp"

using namespace mvcs;

namespace {

const ModuleSpace m2 = ModuleSpace::matrix_algebra(2);

ModuleElement elem(const ModuleSpace& s, const Matrix& v) { return make_element(s, v); }

}  // namespace

TEST_CASE("module_inner", "[module]") {
  Rng rng(21);
  const ModuleElement id = elem(m2, Matrix::Identity(2, 2));
  const ModuleElement f = elem(m2, rng.ginibre(2, 2));
  CHECK((module_inner(id, f).mat() - f.value()).norm() == 0.0);

  Matrix e_val(2, 2), f_val(2, 2), expected(2, 2);
  e_val << 0, 1, 0, 0;
  f_val << 1, 0, 0, 0;
  expected << 0, 0, 1, 0;
  CHECK((module_inner(elem(m2, e_val), elem(m2, f_val)).mat() - expected).norm() == 0.0);

  const ModuleElement e = elem(m2, rng.ginibre(2, 2));
  CHECK(psd_check(module_inner(e, e)).psd);

  // Right B-linearity and conjugate symmetry.
  const Matrix b = rng.ginibre(2, 2);
  const ModuleElement fb = elem(m2, f.value() * b);
  CHECK((module_inner(e, fb).mat() - module_inner(e, f).mat() * b).norm() < 1e-13);
  CHECK((module_inner(f, e).mat() - module_inner(e, f).adjoint().mat()).norm() == 0.0);

  const ModuleSpace g = ModuleSpace::hilbert_space(3);
  CHECK_THROWS_AS(module_inner(e, elem(g, Matrix::Zero(3, 1))), SpaceMismatch);
}

TEST_CASE("rank_one_apply", "[module]") {
  Rng rng(22);
  const ModuleElement id = elem(m2, Matrix::Identity(2, 2));
  const ModuleElement g = elem(m2, rng.ginibre(2, 2));
  CHECK((rank_one_apply(id, id, g).value() - g.value()).norm() == 0.0);

  Matrix f_val = Matrix::Zero(2, 2), g_val = Matrix::Zero(2, 2);
  f_val(0, 0) = 1.0;
  g_val(1, 1) = 1.0;
  CHECK(rank_one_apply(id, elem(m2, f_val), elem(m2, g_val)).value().norm() == 0.0);

  // Adjoint: <|e><f| g, h> = <g, |f><e| h>.
  for (int t = 0; t < 20; ++t) {
    const ModuleElement e = elem(m2, rng.ginibre(2, 2));
    const ModuleElement f = elem(m2, rng.ginibre(2, 2));
    const ModuleElement gg = elem(m2, rng.ginibre(2, 2));
    const ModuleElement h = elem(m2, rng.ginibre(2, 2));
    const Matrix lhs = module_inner(rank_one_apply(e, f, gg), h).mat();
    const Matrix rhs = module_inner(gg, rank_one_apply(f, e, h)).mat();
    CHECK((lhs - rhs).norm() < 1e-10);
  }
}

TEST_CASE("rank-one composition", "[module][property]") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const ModuleElement e1 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement e2 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement e3 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement e4 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement g = elem(m2, rng.ginibre(2, 2));
    const Matrix lhs = rank_one_apply(e1, e2, rank_one_apply(e3, e4, g)).value();
    const ModuleElement e1_inner =
        elem(m2, e1.value() * module_inner(e2, e3).mat());
    const Matrix rhs = rank_one_apply(e1_inner, e4, g).value();
    CHECK((lhs - rhs).norm() < 1e-10 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("left_act", "[module]") {
  Rng rng(24);
  const ModuleElement e = elem(m2, rng.ginibre(2, 2));
  CHECK((left_act(CStarMatrix::identity(2), e).value() - e.value()).norm() == 0.0);
  CHECK(left_act(CStarMatrix::zero(2), e).value().norm() == 0.0);

  for (int t = 0; t < 20; ++t) {
    const CStarMatrix a(rng.ginibre(2, 2));
    const ModuleElement x = elem(m2, rng.ginibre(2, 2));
    const ModuleElement y = elem(m2, rng.ginibre(2, 2));
    const Matrix lhs = module_inner(left_act(a, x), y).mat();
    const Matrix rhs = module_inner(x, left_act(a.adjoint(), y)).mat();
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, lhs.norm()));
  }

  CHECK_THROWS_AS(left_act(CStarMatrix::identity(3), e), DimensionMismatch);
}

TEST_CASE("frame_verify", "[module]") {
  const Frame basis = standard_basis_frame(4);
  const FrameReport full = frame_verify(basis);
  CHECK(full.completeness_defect == 0.0);
  CHECK(full.orthonormality_defect == 0.0);
  CHECK(full.pass);

  // Dropping one vector removes exactly one rank-one projector.
  std::vector<Matrix> three;
  for (int k = 0; k < 3; ++k) three.push_back(basis.elements[k].value());
  const FrameReport dropped = frame_verify(make_frame(basis.space, three));
  CHECK(dropped.completeness_defect == Catch::Approx(1.0));
  CHECK(dropped.orthonormality_defect == 0.0);
  CHECK_FALSE(dropped.pass);

  // First K columns of a unitary: projector onto a K-dim subspace.
  Rng rng(25);
  const Matrix u = haar_unitary_sample(5, rng);
  std::vector<Matrix> cols;
  for (int k = 0; k < 3; ++k) cols.push_back(u.col(k));
  const FrameReport partial = frame_verify(make_frame(ModuleSpace::hilbert_space(5), cols));
  CHECK(std::abs(partial.completeness_defect - 1.0) < 1e-12);
  CHECK(partial.orthonormality_defect < 1e-12);
}

TEST_CASE("exterior_tensor", "[module]") {
  Rng rng(26);
  const ModuleSpace g = ModuleSpace::hilbert_space(3);
  for (int t = 0; t < 20; ++t) {
    const ModuleElement e1 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement e2 = elem(m2, rng.ginibre(2, 2));
    const ModuleElement g1 = elem(g, rng.ginibre(3, 1));
    const ModuleElement g2 = elem(g, rng.ginibre(3, 1));
    const Matrix lhs = module_inner(exterior_tensor(e1, g1), exterior_tensor(e2, g2)).mat();
    const Matrix rhs = kron(module_inner(e1, e2).mat(), module_inner(g1, g2).mat());
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
  }
  const ModuleElement zero = elem(m2, Matrix::Zero(2, 2));
  const ModuleElement g1 = elem(g, rng.ginibre(3, 1));
  CHECK(exterior_tensor(zero, g1).value().norm() == 0.0);
}

TEST_CASE("Cauchy-Schwarz and norm inequalities", "[module][property]") {
  Rng rng(27);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index n = 2 + (t % 2);
    const ModuleSpace s = ModuleSpace::matrix_algebra(n);
    Matrix xv = rng.ginibre(n, n), yv = rng.ginibre(n, n);
    xv /= xv.norm();
    yv /= yv.norm();
    const ModuleElement x = elem(s, xv), y = elem(s, yv);
    const Matrix gap = operator_norm(module_inner(x, x).mat()) * module_inner(y, y).mat() -
                       module_inner(y, x).mat() * module_inner(x, y).mat();
    CHECK(psd_check(CStarMatrix(gap)).psd);

    CHECK(op_norm(module_inner(x, y)) <= element_norm(x) * element_norm(y) + 1e-12);
    const ModuleElement sum = elem(s, x.value() + y.value());
    CHECK(element_norm(sum) <= element_norm(x) + element_norm(y) + 1e-12);
  }
}
