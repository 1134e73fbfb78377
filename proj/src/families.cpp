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

#include "mvcs/families.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "mvcs/rng.hpp"

namespace mvcs {

namespace {

double factorial_d(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Matrix matrix_power(const Matrix& z, int k) {
  Matrix p = Matrix::Identity(z.rows(), z.cols());
  for (int i = 0; i < k; ++i) p = p * z;
  return p;
}

// Max over pairs (k, l) of || integral F_k F_l* dmu - delta_kl I ||, with the
// Monte Carlo error of the worst pair reported through *stat_err.
double component_gram_defect(const CSFamily& fam, double* stat_err) {
  double defect = 0.0, err = 0.0;
  const Matrix id = Matrix::Identity(fam.E.rows, fam.E.rows);
  for (int k = 0; k <= fam.k_max; ++k)
    for (int l = 0; l <= fam.k_max; ++l) {
      const IntegrationReport ir = integrate_matrix_fn(fam.rule, [&](const Node& x) {
        return Matrix(fam.component(k, x) * fam.component(l, x).adjoint());
      });
      const double d = operator_norm(k == l ? Matrix(ir.value - id) : ir.value);
      if (d > defect) {
        defect = d;
        err = ir.statistical_error;
      }
    }
  if (stat_err) *stat_err = err;
  return defect;
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical family

ScalarKernelBasis make_scalar_kernel_basis(std::function<Complex(int, Complex)> phi,
                                           QuadratureRule rule, int k_max, double gram_tol) {
  ScalarKernelBasis basis{std::move(phi), std::move(rule), k_max};
  double defect = 0.0, stat = 0.0;
  const Matrix one = Matrix::Identity(1, 1);
  for (int k = 0; k <= k_max; ++k)
    for (int l = 0; l <= k_max; ++l) {
      const IntegrationReport ir = integrate_matrix_fn(basis.rule, [&](const Node& x) {
        Matrix m(1, 1);
        m(0, 0) = std::conj(basis.phi(k, x.as_complex())) * basis.phi(l, x.as_complex());
        return m;
      });
      defect = std::max(defect, operator_norm(k == l ? Matrix(ir.value - one) : ir.value));
      stat = std::max(stat, ir.statistical_error);
    }
  if (defect > gram_tol + basis.rule.tail_bound + 5.0 * stat)
    throw GramDefect("scalar basis fails orthonormality: defect " + std::to_string(defect));
  return basis;
}

ScalarKernelBasis bargmann_basis(int k_max, int radial_order, int angular_order) {
  auto phi = [](int k, Complex z) {
    return cpow(z, k) / std::sqrt(factorial_d(k));
  };
  return make_scalar_kernel_basis(phi, gaussian_c_rule(radial_order, angular_order), k_max);
}

Complex CanonicalFamily::kernel(Complex x, Complex y) const {
  Complex sum = 0.0;
  for (int k = 0; k <= basis.k_max; ++k) sum += basis.phi(k, x) * std::conj(basis.phi(k, y));
  return sum;
}

CanonicalFamily canonical_family(ScalarKernelBasis basis) {
  CanonicalFamily fam;
  fam.basis = basis;
  CSFamily& f = fam.family;
  f.name = "canonical";
  f.E = ModuleSpace{1, 1};
  f.G = ModuleSpace::hilbert_space(basis.k_max + 1);
  f.rule = basis.rule;
  auto phi = basis.phi;
  f.component = [phi](int k, const Node& x) {
    Matrix m(1, 1);
    m(0, 0) = std::conj(phi(k, x.as_complex()));
    return m;
  };
  f.frame = standard_basis_frame(basis.k_max + 1);
  f.k_max = basis.k_max;
  validate_family(f);
  return fam;
}

// ---------------------------------------------------------------------------
// Matrix-kernel family

Matrix VcsMatrixFamily::matrix_kernel(Complex x, Complex y) const {
  Matrix sum = Matrix::Zero(n, n);
  for (int k = 0; k <= k_max; ++k) {
    const Vector px = vector_basis(k, x);
    const Vector py = vector_basis(k, y);
    sum += px * py.adjoint();
  }
  return sum;
}

Vector VcsMatrixFamily::recover_vcs(const Node& xu, int i) const {
  if (i < 0 || i >= n) throw OutOfDomain("recover_vcs: component index out of range");
  const Matrix& u = xu.part(1).as_matrix();
  const Matrix proj = u.col(i) * u.col(i).adjoint();  // P_i(u) = u P_i u*

  const CoherentState cs = coherent_state(family, xu, CStarMatrix::identity(n));
  const int dim_g = k_max + 1;
  Vector out(dim_g);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < dim_g; ++k) {
    // Block of the H-element at frame index k (E factor outermost).
    Matrix block(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) block(r, c) = cs.value(r * dim_g + k, c);
    out(k) = (proj * block).trace() * scale;
  }
  return out;
}

VcsMatrixFamily vcs_matrix_family(std::function<Vector(int, Complex)> vector_basis, int n,
                                  int k_max, const QuadratureRule& base_rule,
                                  const QuadratureRule& su_rule, double gram_tol) {
  // Orthonormality of the C^N-valued basis over the base measure.
  double defect = 0.0, stat = 0.0;
  for (int k = 0; k <= k_max; ++k)
    for (int l = 0; l <= k_max; ++l) {
      const IntegrationReport ir = integrate_matrix_fn(base_rule, [&](const Node& x) {
        Matrix m(1, 1);
        m(0, 0) = vector_basis(k, x.as_complex()).adjoint() * vector_basis(l, x.as_complex());
        return m;
      });
      const double target = k == l ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(ir.value(0, 0) - target));
      stat = std::max(stat, ir.statistical_error);
    }
  if (defect > gram_tol + base_rule.tail_bound + 5.0 * stat)
    throw GramDefect("vector basis fails orthonormality: defect " + std::to_string(defect));

  VcsMatrixFamily fam;
  fam.n = n;
  fam.vector_basis = vector_basis;
  fam.k_max = k_max;
  CSFamily& f = fam.family;
  f.name = "vcs_matrix";
  f.E = ModuleSpace::matrix_algebra(n);
  f.G = ModuleSpace::hilbert_space(k_max + 1);
  f.rule = product_rule(base_rule, su_rule);
  const double root_n = std::sqrt(static_cast<double>(n));
  f.component = [vector_basis, n, root_n](int k, const Node& xu) {
    const Complex z = xu.part(0).as_complex();
    const Matrix& u = xu.part(1).as_matrix();
    const Vector p = vector_basis(k, z);
    return Matrix(root_n * u * p.conjugate().asDiagonal() * u.adjoint());
  };
  f.frame = standard_basis_frame(k_max + 1);
  f.k_max = k_max;
  validate_family(f);
  return fam;
}

std::function<Vector(int, Complex)> cyclic_bargmann_vector_basis(int n) {
  return [n](int k, Complex z) {
    Vector v = Vector::Zero(n);
    const int m = k / n, j = k % n;
    v(j) = cpow(z, m) / std::sqrt(factorial_d(m));
    return v;
  };
}

// ---------------------------------------------------------------------------
// Analytic family

Rational analytic_ck(int n, int k) {
  if (n < 1 || k < 0) throw OutOfDomain("analytic_ck: need n >= 1, k >= 0");
  using boost::multiprecision::cpp_int;
  cpp_int up = 1, down = 1;
  for (int j = 1; j <= k + 1; ++j) {
    up *= n + j;
    down *= n - j;
  }
  return Rational(up - down, cpp_int(k + 1) * (k + 2));
}

double analytic_ck_double(int n, int k) {
  return analytic_ck(n, k).convert_to<double>();
}

CSFamily analytic_family(int n, int k_max, QuadratureRule rule, double gram_tol) {
  CSFamily f;
  f.name = "analytic";
  f.E = ModuleSpace::matrix_algebra(n);
  f.G = ModuleSpace::hilbert_space(k_max + 1);
  f.rule = std::move(rule);
  std::vector<double> inv_root_c(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    inv_root_c[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(analytic_ck_double(n, k));
  f.component = [inv_root_c](int k, const Node& x) {
    return Matrix(matrix_power(x.as_matrix(), k) * inv_root_c[static_cast<std::size_t>(k)]);
  };
  f.frame = standard_basis_frame(k_max + 1);
  f.k_max = k_max;
  validate_family(f);

  double stat = 0.0;
  const double defect = component_gram_defect(f, &stat);
  if (defect > gram_tol + f.rule.tail_bound + 5.0 * stat)
    throw GramDefect("analytic family components fail orthonormality: defect " +
                     std::to_string(defect) + " (statistical error " + std::to_string(stat) + ")");
  return f;
}

// ---------------------------------------------------------------------------
// Quaternions

Matrix quaternion_sigma(double theta, double phi) {
  Matrix s(2, 2);
  const double st = std::sin(theta), ct = std::cos(theta);
  s << ct, std::polar(st, phi), std::polar(st, -phi), -ct;
  return s;
}

Matrix quaternion_u(double theta, double phi) {
  Matrix u(2, 2);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  u << c, -std::polar(s, phi), std::polar(s, -phi), c;
  return u;
}

CStarMatrix quaternion_encode(const QuaternionParam& p) {
  const Matrix sigma = quaternion_sigma(p.theta, p.phi);
  const Complex i1(0.0, 1.0);
  Matrix q = p.r * (std::cos(p.xi) * Matrix::Identity(2, 2) + i1 * std::sin(p.xi) * sigma);
  return CStarMatrix(std::move(q));
}

Matrix QuaternionFamily::module_state(const QuaternionParam& q) const {
  return coherent_state(family, Node{q}, CStarMatrix::identity(2)).value;
}

Vector QuaternionFamily::vcs_state(const QuaternionParam& q, int j) const {
  if (j < 0 || j > 1) throw OutOfDomain("vcs_state: j must be 0 or 1");
  return Vector(module_state(q).col(j) / std::sqrt(2.0));
}

double QuaternionFamily::norm_sum(const QuaternionParam& q) const {
  return 0.5 * module_state(q).squaredNorm();
}

double QuaternionFamily::pointwise_tail(double r) const {
  return 1.0 - poisson_cdf(k_max, r * r);
}

QuaternionFamily quaternion_family(int k_max, double r_max, int r_order, int xi_order,
                                   int theta_order, int phi_order) {
  if (r_max <= 0.0) r_max = quaternion_r_max_for_tail(k_max, 1e-8);
  if (r_order <= 0) r_order = 2 * k_max + static_cast<int>(r_max * r_max / 2.0) + 8;
  if (xi_order <= 0) xi_order = 2 * k_max + 4;

  QuaternionFamily fam;
  fam.k_max = k_max;
  fam.r_max = r_max;
  CSFamily& f = fam.family;
  f.name = "quaternion";
  f.E = ModuleSpace::matrix_algebra(2);
  f.G = ModuleSpace::hilbert_space(k_max + 1);
  f.rule = quaternion_rule(r_max, r_order, xi_order, theta_order, phi_order,
                           QuaternionDensity::one_quarter, k_max);
  f.component = [](int k, const Node& x) {
    const QuaternionParam& p = x.as_quaternion();
    const Matrix q = quaternion_encode(p).mat();
    const double scale = std::exp(-0.5 * p.r * p.r) / std::sqrt(factorial_d(k));
    return Matrix(matrix_power(q, k) * scale);
  };
  f.frame = standard_basis_frame(k_max + 1);
  f.k_max = k_max;
  // Pointwise series tail at the reference radius r = 2 used by the
  // normalization and overlap thresholds; the radial-domain loss of the
  // rule itself is rule.tail_bound.
  f.truncation_tail = fam.pointwise_tail(2.0);
  validate_family(f);
  return fam;
}

// ---------------------------------------------------------------------------
// Complex Hermite polynomials

namespace {

// Normalized table psi~_{a,b} = G_{a,b} / sqrt(a! b!) for a, b >= 0, where
// G satisfies G_{a+1,b} = zbar G_{a,b} - b G_{a,b-1} and
// G_{a,b+1} = z G_{a,b} - a G_{a-1,b} from the ladder relations.
Eigen::MatrixXcd hermite_table(int a_max, int b_max, Complex z) {
  Eigen::MatrixXcd t(a_max + 1, b_max + 1);
  const Complex zb = std::conj(z);
  t(0, 0) = 1.0;
  for (int a = 0; a < a_max; ++a) t(a + 1, 0) = zb * t(a, 0) / std::sqrt(a + 1.0);
  for (int b = 0; b < b_max; ++b) {
    t(0, b + 1) = z * t(0, b) / std::sqrt(b + 1.0);
    for (int a = 1; a <= a_max; ++a)
      t(a, b + 1) = (z * t(a, b) - std::sqrt(static_cast<double>(a)) * t(a - 1, b)) /
                    std::sqrt(b + 1.0);
  }
  return t;
}

// Explicit differentiation formula, used once to validate the recurrence.
Complex hermite_direct(int a, int b, Complex z) {
  const Complex zb = std::conj(z);
  Complex sum = 0.0;
  for (int j = 0; j <= std::min(a, b); ++j) {
    // j! C(a,j) C(b,j) = a! b! / (j! (a-j)! (b-j)!)
    const double coeff = factorial_d(a) * factorial_d(b) /
                         (factorial_d(j) * factorial_d(a - j) * factorial_d(b - j));
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * coeff * cpow(zb, a - j) * cpow(z, b - j);
  }
  return sum / std::sqrt(factorial_d(a) * factorial_d(b));
}

void validate_hermite_recurrence() {
  const Complex pts[] = {{0.3, -0.7}, {1.1, 0.4}, {-0.8, 0.9}};
  for (const Complex& z : pts) {
    const Eigen::MatrixXcd t = hermite_table(4, 4, z);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        if (std::abs(t(a, b) - hermite_direct(a, b, z)) > 1e-12)
          throw Error("complex_hermite: recurrence disagrees with the direct formula");
  }
}

}  // namespace

Complex complex_hermite(int k, int l, Complex z) {
  if (k < 1 || l < 1) throw OutOfDomain("complex_hermite: indices start at 1");
  static std::once_flag validated;
  std::call_once(validated, validate_hermite_recurrence);
  return hermite_table(k - 1, l - 1, z)(k - 1, l - 1);
}

// ---------------------------------------------------------------------------
// Landau family

Vector LandauFamily::state(Complex z, int ell) const {
  if (ell < 0 || ell > l_max) throw OutOfDomain("LandauFamily::state: level out of range");
  Vector b(k_max + 1);
  const double gauss = std::exp(-0.5 * std::norm(z));
  for (int n = 0; n <= k_max; ++n)
    b(n) = gauss * cpow(z, n) / std::sqrt(factorial_d(n));
  return Vector(level_coeff(ell) * b);
}

double LandauFamily::norm_sum(Complex z) const {
  double sum = 0.0;
  for (int ell = 0; ell <= l_max; ++ell) sum += state(z, ell).squaredNorm();
  return sum;
}

double LandauFamily::z_tail(double abs_z) const {
  return 1.0 - poisson_cdf(k_max, abs_z * abs_z);
}

double LandauFamily::level_tail() const {
  return 1.0 - poisson_cdf(l_max, std::norm(z_prime));
}

ResolutionReport LandauFamily::verify_resolution(double tol) const {
  // The level sum collapses to the scalar ||c||^2: the integrand is
  // ||c||^2 b~(z) b~(z)* with the state Gaussian folded into the measure.
  const double level_mass = level_coeff.squaredNorm();
  const IntegrationReport ir = integrate_matrix_fn(core.rule, [&](const Node& x) {
    const Complex z = x.as_complex();
    Vector b(k_max + 1);
    for (int n = 0; n <= k_max; ++n) b(n) = cpow(z, n) / std::sqrt(factorial_d(n));
    return Matrix(level_mass * b * b.adjoint());
  });
  ResolutionReport rep;
  rep.defect = operator_norm(ir.value - Matrix::Identity(k_max + 1, k_max + 1));
  rep.bound = tol + level_tail() + core.rule.tail_bound;
  rep.pass = rep.defect <= rep.bound;
  return rep;
}

LandauFamily landau_family(int k_max, int l_max, Complex z_prime, int radial_order,
                           int angular_order) {
  if (radial_order <= 0) radial_order = k_max + 2;
  if (angular_order <= 0) angular_order = 2 * k_max + 5;
  LandauFamily fam;
  fam.z_prime = z_prime;
  fam.k_max = k_max;
  fam.l_max = l_max;
  fam.level_coeff.resize(l_max + 1);
  const double gauss = std::exp(-0.5 * std::norm(z_prime));
  for (int ell = 0; ell <= l_max; ++ell)
    fam.level_coeff(ell) =
        gauss * cpow(std::conj(z_prime), ell) / std::sqrt(factorial_d(ell));

  CSFamily& f = fam.core;
  f.name = "landau";
  f.E = ModuleSpace{1, 1};
  f.G = ModuleSpace::hilbert_space(k_max + 1);
  f.rule = gaussian_c_rule(radial_order, angular_order, GaussianConvention::unit);
  f.component = [](int n, const Node& x) {
    Matrix m(1, 1);
    m(0, 0) = cpow(x.as_complex(), n) / std::sqrt(factorial_d(n));
    return m;
  };
  f.frame = standard_basis_frame(k_max + 1);
  f.k_max = k_max;
  validate_family(f);
  return fam;
}

Node sample_moderate_point(const CSFamily& fam, Rng& rng) {
  const Complex z = std::polar(rng.uniform(0.0, 2.0), rng.uniform(0.0, 6.283185307179586));
  if (fam.name == "vcs_matrix") {
    if (fam.E.rows != 2) throw Error("sample_moderate_point: vcs_matrix sampling covers N = 2");
    return Node{NodeList{{Node{z}, Node{haar_special_unitary_sample(2, rng)}}}};
  }
  if (fam.name == "analytic")
    return Node{rng.ginibre(fam.E.rows, fam.E.rows)};
  if (fam.name == "quaternion") {
    QuaternionParam p;
    p.r = rng.uniform(0.0, 2.0);
    p.xi = rng.uniform(0.0, 6.283185307179586);
    p.theta = std::acos(rng.uniform(-1.0, 1.0));
    p.phi = rng.uniform(0.0, 6.283185307179586);
    return Node{p};
  }
  return Node{z};  // canonical, landau, cuntz: points in the complex plane
}

}  // namespace mvcs
