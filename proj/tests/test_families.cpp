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

}  // namespace

TEST_CASE("canonical family", "[families]") {
  const CanonicalFamily fam = canonical_family(bargmann_basis(12, 24, 27));

  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const Complex z = rng.complex_normal(), w = rng.complex_normal();
    // Truncated exponential accumulated term by term.
    Complex expected = 0.0, term = 1.0;
    for (int k = 0; k <= 12; ++k) {
      if (k > 0) term *= z * std::conj(w) / static_cast<double>(k);
      expected += term;
    }
    CHECK(std::abs(fam.kernel(z, w) - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    CHECK(fam.kernel(z, z).real() >= std::norm(fam.basis.phi(0, z)));
  }
  CHECK(fam.kernel(0.0, 0.0) == Complex(1.0));

  // A non-normalized basis fails the construction Gram check.
  auto bad = [](int k, Complex z) { return cpow(z, k); };
  CHECK_THROWS_AS(
      make_scalar_kernel_basis(bad, gaussian_c_rule(8, 13), 4),
      GramDefect);
}

TEST_CASE("matrix-kernel family", "[families]") {
  const VcsMatrixFamily fam =
      vcs_matrix_family(cyclic_bargmann_vector_basis(2), 2, 8, gaussian_c_rule(6, 11),
                        haar_sun_rule(2, HaarMode::exact_su2, 4));

  // Component orthogonality over X x SU(2).
  const OrthogonalityReport rep = verify_orthogonality(fam.family, 1e-7);
  CHECK(rep.max_defect <= 1e-7);

  // u = I: the matrix components are diagonal with sqrt(N) conj(Phi^i_k).
  const Complex z(0.4, -0.9);
  Node node_id{NodeList{{Node{z}, Node{Matrix(Matrix::Identity(2, 2))}}}};
  for (int k = 0; k <= 8; ++k) {
    const Matrix f = fam.family.component(k, node_id);
    const Vector p = fam.vector_basis(k, z);
    CHECK(std::abs(f(0, 0) - std::sqrt(2.0) * std::conj(p(0))) < 1e-14);
    CHECK(std::abs(f(1, 1) - std::sqrt(2.0) * std::conj(p(1))) < 1e-14);
    CHECK(std::abs(f(0, 1)) < 1e-14);
  }

  // Recovered vector states reproduce the matrix kernel entries.
  Rng rng(62);
  for (int t = 0; t < 6; ++t) {
    const Complex x = 0.8 * rng.complex_normal(), y = 0.8 * rng.complex_normal();
    const Matrix ux = haar_special_unitary_sample(2, rng);
    const Matrix uy = haar_special_unitary_sample(2, rng);
    const Node nx{NodeList{{Node{x}, Node{ux}}}};
    const Node ny{NodeList{{Node{y}, Node{uy}}}};
    const Matrix k_mat = fam.matrix_kernel(x, y);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Complex ov = fam.recover_vcs(nx, i).dot(fam.recover_vcs(ny, j));
        CHECK(std::abs(ov - k_mat(i, j)) < 1e-8);
      }
    // The recovery does not depend on the group coordinate.
    const Node nx2{NodeList{{Node{x}, Node{uy}}}};
    CHECK((fam.recover_vcs(nx, 0) - fam.recover_vcs(nx2, 0)).norm() < 1e-12);
  }

  // A non-orthonormal vector basis is rejected at construction.
  auto skewed = [](int k, Complex z) {
    Vector v = Vector::Zero(2);
    v(k % 2) = cpow(z, k / 2);  // missing the factorial normalization
    return v;
  };
  CHECK_THROWS_AS(vcs_matrix_family(skewed, 2, 4, gaussian_c_rule(4, 7),
                                    haar_sun_rule(2, HaarMode::exact_su2, 3)),
                  GramDefect);
}

TEST_CASE("analytic coefficients", "[families]") {
  for (int n = 1; n <= 16; ++n) CHECK(analytic_ck(n, 0) == Rational(1));
  CHECK(analytic_ck(2, 1) == Rational(2));
  CHECK(analytic_ck(1, 3) == Rational(6));

  // c_k = k! at N = 1, in exact arithmetic.
  boost::multiprecision::cpp_int fact = 1;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) fact *= k;
    CHECK(analytic_ck(1, k) == Rational(fact));
  }

  for (int n = 1; n <= 16; ++n)
    for (int k = 0; k <= 64; ++k) CHECK(analytic_ck(n, k) > 0);

  CHECK_THROWS_AS(analytic_ck(0, 1), OutOfDomain);
}

TEST_CASE("analytic family", "[families]") {
  // N = 1 reduction recovers the canonical components.
  const CSFamily one = analytic_family(1, 8, ginibre_moment_rule(1, 8));
  Rng rng(63);
  for (int t = 0; t < 5; ++t) {
    const Complex z = rng.complex_normal();
    Matrix zm(1, 1);
    zm << z;
    const Node n{zm};
    for (int k = 0; k <= 8; ++k) {
      const Complex got = one.component(k, n)(0, 0);
      const Complex expected = cpow(z, k) / std::sqrt(factorial(k));
      CHECK(std::abs(got - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }

  // Z = 0: only the k = 0 term, so |0, a> = a (x) e_0.
  const CSFamily two = analytic_family(2, 4, ginibre_moment_rule(2, 4));
  const CStarMatrix a(haar_special_unitary_sample(2, rng));
  const CoherentState at0 = coherent_state(two, Node{Matrix(Matrix::Zero(2, 2))}, a);
  Matrix e0 = Matrix::Zero(5, 1);
  e0(0, 0) = 1.0;
  CHECK((at0.value - kron(a.mat(), e0)).norm() == 0.0);

  // Monte Carlo Gram with the reported statistical bound.
  const QuadratureRule mc = ginibre_monte_carlo_rule(2, 1000000, 77);
  const CSFamily mc_fam = analytic_family(2, 4, mc, 1e-5);
  double worst = 0.0, worst_err = 0.0;
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      const IntegrationReport rep = integrate_matrix_fn(mc, [&](const Node& x) {
        return Matrix(mc_fam.component(k, x) * mc_fam.component(l, x).adjoint());
      });
      const Matrix expected = (k == l ? 1.0 : 0.0) * Matrix::Identity(2, 2);
      const double d = operator_norm(rep.value - expected);
      if (d > worst) {
        worst = d;
        worst_err = rep.statistical_error;
      }
    }
  CHECK(worst <= 1e-5 + 5.0 * worst_err);

  // A rule that cannot integrate the component Gram is rejected.
  Matrix lone(2, 2);
  lone << 0.5, 0.2, -0.1, 0.9;
  CHECK_THROWS_AS(analytic_family(2, 4, explicit_rule({Node{lone}}, {1.0})), GramDefect);
}

TEST_CASE("quaternion encoding", "[families]") {
  QuaternionParam p;
  p.r = 1.7;
  p.xi = 0.0;
  p.theta = 1.1;
  p.phi = 2.3;
  CHECK((quaternion_encode(p).mat() - 1.7 * Matrix::Identity(2, 2)).norm() == 0.0);

  Rng rng(64);
  for (int t = 0; t < 1000; ++t) {
    QuaternionParam q;
    q.r = rng.uniform(0.0, 3.0);
    q.xi = rng.uniform(0.0, 6.283185307179586);
    q.theta = std::acos(rng.uniform(-1.0, 1.0));
    q.phi = rng.uniform(0.0, 6.283185307179586);

    const Matrix sigma = quaternion_sigma(q.theta, q.phi);
    CHECK(operator_norm(sigma * sigma - Matrix::Identity(2, 2)) < 1e-14);

    const Matrix qm = quaternion_encode(q).mat();
    CHECK(operator_norm(qm.adjoint() * qm - q.r * q.r * Matrix::Identity(2, 2)) < 1e-12);

    // Conjugated-diagonal form u diag(z, conj z) u* agrees.
    const Matrix u = quaternion_u(q.theta, q.phi);
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = std::polar(q.r, q.xi);
    diag(1, 1) = std::polar(q.r, -q.xi);
    CHECK(operator_norm(qm - u * diag * u.adjoint()) < 1e-12);
  }
}

TEST_CASE("quaternion family", "[families]") {
  const QuaternionFamily fam = quaternion_family(8);
  Rng rng(65);
  for (int t = 0; t < 10; ++t) {
    QuaternionParam q;
    q.r = rng.uniform(0.0, 2.0);
    q.xi = rng.uniform(0.0, 6.28);
    q.theta = std::acos(rng.uniform(-1.0, 1.0));
    q.phi = rng.uniform(0.0, 6.28);
    CHECK(std::abs(fam.norm_sum(q) - 1.0) <= 1e-8 + fam.pointwise_tail(q.r));
    const double direct = fam.vcs_state(q, 0).squaredNorm() + fam.vcs_state(q, 1).squaredNorm();
    CHECK(std::abs(direct - fam.norm_sum(q)) < 1e-14);
  }

  // q = 0 keeps only the k = 0 term; the module state is exactly isometric.
  QuaternionParam zero;
  zero.r = 0.0;
  const Matrix v0 = fam.module_state(zero);
  CHECK((v0.adjoint() * v0 - Matrix::Identity(2, 2)).norm() == 0.0);

  const ResolutionReport rep = verify_resolution(fam.family, CStarMatrix::identity(2), 1e-5);
  CHECK(rep.defect <= 1e-5);
  CHECK(rep.pass);
}

TEST_CASE("complex Hermite polynomials", "[families]") {
  Rng rng(66);
  for (int t = 0; t < 10; ++t) {
    const Complex z = rng.complex_normal();
    CHECK(std::abs(complex_hermite(1, 1, z) - 1.0) < 1e-14);
    CHECK(std::abs(complex_hermite(2, 1, z) - std::conj(z)) < 1e-14);
    CHECK(std::abs(complex_hermite(1, 2, z) - z) < 1e-14);
    CHECK(std::abs(complex_hermite(2, 2, z) - (std::norm(z) - 1.0)) < 1e-14);
  }
  CHECK_THROWS_AS(complex_hermite(0, 1, 0.0), OutOfDomain);

  // Orthonormality for indices <= 4 under the Gaussian rule.
  const QuadratureRule rule = gaussian_c_rule(8, 15);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          const IntegrationReport rep = integrate_matrix_fn(rule, [&](const Node& n) {
            Matrix m(1, 1);
            m(0, 0) = std::conj(complex_hermite(a, b, n.as_complex())) *
                      complex_hermite(c, d, n.as_complex());
            return m;
          });
          const double expected = (a == c && b == d) ? 1.0 : 0.0;
          CHECK(std::abs(rep.value(0, 0) - expected) < 1e-10);
        }
}

TEST_CASE("landau family", "[families]") {
  const LandauFamily fam = landau_family(15, 15, Complex(0.7, 0.3));
  Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    const Complex z = std::polar(rng.uniform(0.0, 1.2), rng.uniform(0.0, 6.28));
    CHECK(std::abs(fam.norm_sum(z) - 1.0) <=
          1e-10 + fam.z_tail(std::abs(z)) + fam.level_tail());
  }

  // z = 0: only the n = 0 component of each level state survives.
  const Vector s = fam.state(0.0, 3);
  CHECK(s.tail(15).norm() == 0.0);
  CHECK(std::abs(s(0)) > 0.0);

  const ResolutionReport rep = fam.verify_resolution(1e-6);
  CHECK(rep.defect <= 1e-6);
  CHECK(rep.pass);
}
