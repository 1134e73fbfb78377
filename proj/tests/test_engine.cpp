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

#include "mvcs/families.hpp"
#include "mvcs/rng.hpp"

using namespace mvcs;

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

CanonicalFamily bargmann(int k_max = 12, int radial = 40) {
  return canonical_family(bargmann_basis(k_max, radial, 2 * k_max + 3));
}

CStarMatrix scalar(Complex z) {
  Matrix m(1, 1);
  m(0, 0) = z;
  return CStarMatrix(std::move(m));
}

}  // namespace

TEST_CASE("coherent_state basics", "[engine]") {
  const CanonicalFamily fam = bargmann(8, 12);
  const Node origin{Complex(0.0, 0.0)};

  CHECK(coherent_state(fam.family, origin, scalar(0.0)).value.norm() == 0.0);

  // At the origin only the k = 0 component survives.
  const CoherentState at0 = coherent_state(fam.family, origin, scalar(1.0));
  CHECK(std::abs(at0.value(0, 0) - 1.0) == 0.0);
  CHECK(at0.value.bottomRows(8).norm() == 0.0);

  CHECK_THROWS_AS(coherent_state(fam.family, origin, CStarMatrix::identity(2)),
                  DimensionMismatch);
}

TEST_CASE("overlap computed two ways", "[engine]") {
  const CanonicalFamily fam = bargmann(10, 16);
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const Complex z = rng.complex_normal(), w = rng.complex_normal();
    const Complex a = std::polar(1.0, rng.uniform(0.0, 6.28));
    const Complex ap = std::polar(1.0, rng.uniform(0.0, 6.28));
    const CoherentState cz = coherent_state(fam.family, Node{z}, scalar(a));
    const CoherentState cw = coherent_state(fam.family, Node{w}, scalar(ap));
    const Complex direct = overlap(cz, cw).mat()(0, 0);
    // Componentwise route: sum_k <a F_k(z) | a' F_k(w)> <phi_k | phi_k>.
    Complex sum = 0.0;
    for (int k = 0; k <= 10; ++k) {
      const Complex fz = std::conj(fam.basis.phi(k, z));
      const Complex fw = std::conj(fam.basis.phi(k, w));
      sum += std::conj(a * fz) * (ap * fw);
    }
    CHECK(std::abs(direct - sum) < 1e-10 * std::max(1.0, std::abs(sum)));
  }
}

TEST_CASE("divergence guard", "[engine]") {
  // A spike at the truncation edge fails the Cauchy test.
  CSFamily fam;
  fam.name = "spiky";
  fam.E = ModuleSpace{1, 1};
  fam.G = ModuleSpace::hilbert_space(7);
  fam.rule = gaussian_c_rule(4, 5);
  fam.component = [](int k, const Node&) {
    Matrix m(1, 1);
    m(0, 0) = k == 6 ? 1e6 : 1.0;
    return m;
  };
  fam.frame = standard_basis_frame(7);
  fam.k_max = 6;
  CHECK_THROWS_AS(coherent_state(fam, Node{Complex(0.3, 0.1)}, scalar(1.0)), DivergentSum);
}

TEST_CASE("verify_orthogonality", "[engine]") {
  const CanonicalFamily fam = bargmann();
  const OrthogonalityReport rep = verify_orthogonality(fam.family, 1e-8);
  CHECK(rep.max_defect <= 1e-8);
  CHECK(rep.pass);

  // Duplicated component functions: the (0,1) block integrates to I.
  CSFamily dup = fam.family;
  auto phi = fam.basis.phi;
  dup.component = [phi](int k, const Node& x) {
    Matrix m(1, 1);
    m(0, 0) = std::conj(phi(k == 1 ? 0 : k, x.as_complex()));
    return m;
  };
  const OrthogonalityReport bad = verify_orthogonality(dup, 1e-8);
  CHECK(bad.max_defect >= 1.0 - 1e-10);
  CHECK_FALSE(bad.pass);

  // The SU(2)-extended matrix family.
  const VcsMatrixFamily vcs =
      vcs_matrix_family(cyclic_bargmann_vector_basis(2), 2, 4, gaussian_c_rule(4, 7),
                        haar_sun_rule(2, HaarMode::exact_su2, 4));
  const OrthogonalityReport vrep = verify_orthogonality(vcs.family, 1e-7);
  CHECK(vrep.max_defect <= 1e-7);
  CHECK(vrep.pass);
}

TEST_CASE("normalization element", "[engine]") {
  const CanonicalFamily fam = bargmann(12, 20);
  Rng rng(43);
  for (int t = 0; t < 5; ++t) {
    const Complex z = 1.5 * rng.complex_normal();
    const NormalizationElement n =
        normalization(fam.family, Node{z}, CStarMatrix::identity(1));
    // Partial exponential sum oracle, accumulated term by term.
    double expected = 0.0, term = 1.0;
    for (int k = 0; k <= 12; ++k) {
      if (k > 0) term *= std::norm(z) / k;
      expected += term;
    }
    CHECK(std::abs(n.value.mat()(0, 0) - expected) < 1e-12 * expected);
    CHECK(n.min_eigenvalue > 0.0);
  }

  const NormalizationElement zero =
      normalization(fam.family, Node{Complex(0.7, 0.1)}, scalar(0.0));
  CHECK(zero.value.mat().norm() == 0.0);
  CHECK(zero.min_eigenvalue == 0.0);

  // A unitary parameter with exact entries leaves N unchanged bit for bit.
  const VcsMatrixFamily vcs =
      vcs_matrix_family(cyclic_bargmann_vector_basis(2), 2, 4, gaussian_c_rule(4, 7),
                        haar_sun_rule(2, HaarMode::exact_su2, 3));
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const Node& x = vcs.family.rule.nodes[5];
  const Matrix with_id = normalization(vcs.family, x, CStarMatrix::identity(2)).value.mat();
  const Matrix with_swap = normalization(vcs.family, x, CStarMatrix(swap)).value.mat();
  CHECK((with_id - with_swap).norm() == 0.0);
}

TEST_CASE("normalize", "[engine]") {
  const CanonicalFamily fam = bargmann();
  Rng rng(44);
  for (int t = 0; t < 5; ++t) {
    const Complex z = std::polar(rng.uniform(), rng.uniform(0.0, 6.28));
    const Complex w = std::polar(rng.uniform(), rng.uniform(0.0, 6.28));
    const CoherentState hz = normalize(fam.family, coherent_state(fam.family, Node{z}, scalar(1.0)));
    const CoherentState hw = normalize(fam.family, coherent_state(fam.family, Node{w}, scalar(1.0)));
    // Bargmann kernel oracle for the normalized overlap.
    const Complex expected =
        std::exp(z * std::conj(w)) * std::exp(-0.5 * (std::norm(z) + std::norm(w)));
    CHECK(std::abs(overlap(hz, hw).mat()(0, 0) - expected) < 1e-8);

    // Idempotence and invariance under scaling the left parameter.
    const CoherentState twice = normalize(fam.family, hz);
    CHECK((twice.value - hz.value).norm() < 1e-10);
    const CoherentState scaled =
        normalize(fam.family, coherent_state(fam.family, Node{z}, scalar(2.0)));
    CHECK((scaled.value - hz.value).norm() < 1e-12);
  }
}

TEST_CASE("verify_resolution", "[engine]") {
  const CanonicalFamily fam = bargmann();
  const ResolutionReport rep = verify_resolution(fam.family, scalar(1.0), 1e-8);
  CHECK(rep.defect <= 1e-8);
  CHECK(rep.normalized_route_deviation <= 1e-8);
  CHECK(rep.pass);

  // Removing the last frame vector leaves a missing projector block.
  CSFamily dropped = fam.family;
  std::vector<Matrix> values;
  for (int k = 0; k <= 12; ++k) {
    Matrix e = Matrix::Zero(13, 1);
    if (k < 12) e(k, 0) = 1.0;
    values.push_back(std::move(e));
  }
  dropped.frame = make_frame(dropped.G, values);
  const ResolutionReport miss = verify_resolution(dropped, scalar(1.0), 1e-8);
  CHECK(std::abs(miss.defect - 1.0) < 1e-8);
  CHECK_FALSE(miss.pass);

  CHECK_THROWS_AS(verify_resolution(fam.family, scalar(2.0), 1e-8), NotCoisometry);
}

TEST_CASE("analytic family resolution", "[engine][slow]") {
  const CSFamily fam = analytic_family(2, 8, ginibre_moment_rule(2, 8));
  Rng rng(45);
  const CStarMatrix a(haar_special_unitary_sample(2, rng));
  const ResolutionReport rep = verify_resolution(fam, a, 1e-6);
  CHECK(rep.defect <= 1e-6);
  CHECK(rep.pass);
}

TEST_CASE("engine invariants", "[engine][property]") {
  const VcsMatrixFamily vcs =
      vcs_matrix_family(cyclic_bargmann_vector_basis(2), 2, 4, gaussian_c_rule(4, 7),
                        haar_sun_rule(2, HaarMode::exact_su2, 3));
  const CSFamily& fam = vcs.family;
  Rng rng(46);

  // Left-action covariance: a acts through the E factor of H.
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const Matrix lift = kron(swap, Matrix::Identity(fam.G.rows, fam.G.rows));
  for (int t = 0; t < 5; ++t) {
    const Node& x = fam.rule.nodes[(t * 17) % fam.rule.size()];
    const CoherentState with_a = coherent_state(fam, x, CStarMatrix(swap));
    const CoherentState with_id = coherent_state(fam, x, CStarMatrix::identity(2));
    CHECK((with_a.value - lift * with_id.value).norm() <
          1e-14 * std::max(1.0, with_a.value.norm()));
  }

  // Overlap factorization against the componentwise sum.
  for (int t = 0; t < 5; ++t) {
    const Node& x = fam.rule.nodes[(3 + 11 * t) % fam.rule.size()];
    const Node& y = fam.rule.nodes[(5 + 13 * t) % fam.rule.size()];
    const CStarMatrix a(haar_special_unitary_sample(2, rng));
    const CStarMatrix ap(haar_special_unitary_sample(2, rng));
    const Matrix direct =
        overlap(coherent_state(fam, x, a), coherent_state(fam, y, ap)).mat();
    Matrix sum = Matrix::Zero(2, 2);
    for (int k = 0; k <= fam.k_max; ++k)
      sum += fam.component(k, x).adjoint() * a.mat().adjoint() * ap.mat() *
             fam.component(k, y);
    CHECK((direct - sum).norm() < 1e-10 * std::max(1.0, sum.norm()));
  }

  // Resolution defect does not depend on the unitary left parameter.
  const double base = verify_resolution(fam, CStarMatrix::identity(2), 1e-7).defect;
  const CStarMatrix u(haar_special_unitary_sample(2, rng));
  CHECK(std::abs(verify_resolution(fam, u, 1e-7).defect - base) < 1e-10);

  // Truncation monotonicity on the canonical family (exact rule at each K).
  double previous = 1.0;
  for (int k_max : {8, 10, 12}) {
    const CanonicalFamily fam_k = bargmann(k_max, 2 * k_max);
    const double defect = verify_resolution(fam_k.family, scalar(1.0), 1e-8).defect;
    CHECK(defect <= previous + 1e-12);
    previous = defect;
  }
}
