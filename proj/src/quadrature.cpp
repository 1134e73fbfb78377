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

#include "mvcs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mvcs/rng.hpp"

namespace mvcs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// three-term recurrence, weights mu0 * (first eigenvector component)^2.
void golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0,
                  std::vector<double>* nodes, std::vector<double>* weights) {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  jacobi.diagonal() = diag;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = offdiag(i);
    jacobi(i + 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  nodes->resize(static_cast<std::size_t>(n));
  weights->resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    (*nodes)[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    (*weights)[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
}

void check_rule(const QuadratureRule& rule) {
  if (rule.nodes.size() != rule.weights.size())
    throw Error("QuadratureRule: node and weight counts differ");
  for (double w : rule.weights)
    if (!(w >= 0.0)) throw Error("QuadratureRule: negative or non-finite weight");
  if (!(rule.tail_bound >= 0.0)) throw Error("QuadratureRule: negative tail bound");
}

}  // namespace

Matrix haar_unitary_sample(int n, Rng& rng) {
  const Matrix g = rng.ginibre(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : Complex(1.0, 0.0));
  }
  return q;
}

Matrix haar_special_unitary_sample(int n, Rng& rng) {
  Matrix u = haar_unitary_sample(n, rng);
  const double det_phase = std::arg(u.determinant());
  u *= std::polar(1.0, -det_phase / n);
  return u;
}

const Complex& Node::as_complex() const {
  if (const auto* z = std::get_if<Complex>(&value)) return *z;
  throw Error("Node: expected a complex scalar node");
}

const Matrix& Node::as_matrix() const {
  if (const auto* m = std::get_if<Matrix>(&value)) return *m;
  throw Error("Node: expected a matrix node");
}

const QuaternionParam& Node::as_quaternion() const {
  if (const auto* q = std::get_if<QuaternionParam>(&value)) return *q;
  throw Error("Node: expected a quaternion node");
}

const Node& Node::part(std::size_t i) const {
  if (const auto* list = std::get_if<NodeList>(&value)) {
    if (i >= list->parts.size()) throw Error("Node: composite part index out of range");
    return list->parts[i];
  }
  throw Error("Node: expected a composite node");
}

void gauss_legendre(int n, double a, double b, std::vector<double>* nodes,
                    std::vector<double>* weights) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  golub_welsch(diag, off, 2.0, nodes, weights);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    (*nodes)[static_cast<std::size_t>(i)] = mid + half * (*nodes)[static_cast<std::size_t>(i)];
    (*weights)[static_cast<std::size_t>(i)] *= half;
  }
}

void gauss_laguerre(int n, std::vector<double>* nodes, std::vector<double>* weights) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n - 1 > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) off(k - 1) = k;
  golub_welsch(diag, off, 1.0, nodes, weights);
}

QuadratureRule gaussian_c_rule(int radial_order, int angular_order,
                               GaussianConvention /*convention*/) {
  if (radial_order < 1 || angular_order < 1)
    throw Error("gaussian_c_rule: orders must be >= 1");
  // In either coordinate convention the measure normalizes to one and the
  // moments are a! delta_ab, so the node set is shared: t = |z|^2 follows
  // the e^{-t} dt law and arg z is uniform.
  std::vector<double> t, wt;
  gauss_laguerre(radial_order, &t, &wt);
  QuadratureRule rule;
  rule.kind = RuleKind::gaussian_complex;
  rule.nodes.reserve(static_cast<std::size_t>(radial_order) * angular_order);
  rule.weights.reserve(rule.nodes.capacity());
  for (int i = 0; i < radial_order; ++i) {
    const double radius = std::sqrt(t[static_cast<std::size_t>(i)]);
    for (int j = 0; j < angular_order; ++j) {
      const double angle = kTwoPi * j / angular_order;
      rule.nodes.push_back(Node{Complex(radius * std::cos(angle), radius * std::sin(angle))});
      rule.weights.push_back(wt[static_cast<std::size_t>(i)] / angular_order);
    }
  }
  check_rule(rule);
  return rule;
}

QuadratureRule haar_sun_rule(int n, HaarMode mode, int samples_or_order, std::uint64_t seed) {
  if (n < 2) throw Error("haar_sun_rule: n must be >= 2");
  QuadratureRule rule;
  if (mode == HaarMode::exact_su2) {
    if (n != 2)
      throw UnsupportedExact("haar_sun_rule: exact mode is implemented for SU(2) only");
    const int order = std::max(3, samples_or_order);
    const int ns = std::max(1, samples_or_order / 2 + 1);
    std::vector<double> s, ws;
    gauss_legendre(ns, 0.0, 1.0, &s, &ws);
    rule.kind = RuleKind::haar_sun;
    for (int i = 0; i < ns; ++i) {
      const double c = std::sqrt(1.0 - s[static_cast<std::size_t>(i)]);
      const double sn = std::sqrt(s[static_cast<std::size_t>(i)]);
      for (int j = 0; j < order; ++j) {
        const Complex a = std::polar(c, kTwoPi * j / order);
        for (int k = 0; k < order; ++k) {
          const Complex b = std::polar(sn, kTwoPi * k / order);
          Matrix u(2, 2);
          u << a, -std::conj(b), b, std::conj(a);
          rule.nodes.push_back(Node{std::move(u)});
          rule.weights.push_back(ws[static_cast<std::size_t>(i)] / (order * order));
        }
      }
    }
  } else {
    if (samples_or_order < 1) throw Error("haar_sun_rule: need at least one sample");
    Rng rng(seed);
    rule.kind = RuleKind::monte_carlo;
    rule.nodes.reserve(static_cast<std::size_t>(samples_or_order));
    for (int i = 0; i < samples_or_order; ++i) {
      rule.nodes.push_back(Node{haar_special_unitary_sample(n, rng)});
      rule.weights.push_back(1.0 / samples_or_order);
    }
  }
  check_rule(rule);
  return rule;
}

double poisson_cdf(int k, double x) {
  if (x <= 0.0) return 1.0;
  if (x > 700.0) return 0.0;  // e^{-x} underflows; the cdf at k << x is ~0
  double term = std::exp(-x);
  double sum = term;
  for (int m = 1; m <= k; ++m) {
    term *= x / m;
    sum += term;
  }
  return std::min(sum, 1.0);
}

double quaternion_r_max_for_tail(int k_max, double tail) {
  auto total = [&](double r) {
    double s = 0.0;
    for (int k = 0; k <= k_max; ++k) s += poisson_cdf(k, r * r);
    return s;
  };
  double lo = std::sqrt(static_cast<double>(k_max) + 1.0), hi = 40.0;
  if (total(hi) > tail) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) <= tail ? hi : lo) = mid;
  }
  return hi;
}

QuadratureRule quaternion_rule(double r_max, int r_order, int xi_order, int theta_order,
                               int phi_order, QuaternionDensity density, int tail_cutoff) {
  if (r_max <= 0.0) throw Error("quaternion_rule: r_max must be positive");
  if (r_order < 1 || xi_order < 1 || theta_order < 1 || phi_order < 1)
    throw Error("quaternion_rule: orders must be >= 1");
  std::vector<double> rn, rw;
  gauss_legendre(r_order, 0.0, r_max, &rn, &rw);
  std::vector<double> cn, cw;  // cos(theta) on [-1, 1], sin(theta) dtheta = -dc
  gauss_legendre(theta_order, -1.0, 1.0, &cn, &cw);

  const double density_const =
      density == QuaternionDensity::one_eighth ? 1.0 / (8.0 * std::numbers::pi * std::numbers::pi)
                                               : 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  QuadratureRule rule;
  rule.kind = RuleKind::quaternion;
  for (int ir = 0; ir < r_order; ++ir)
    for (int ix = 0; ix < xi_order; ++ix)
      for (int it = 0; it < theta_order; ++it)
        for (int ip = 0; ip < phi_order; ++ip) {
          QuaternionParam q;
          q.r = rn[static_cast<std::size_t>(ir)];
          q.xi = kTwoPi * ix / xi_order;
          q.theta = std::acos(cn[static_cast<std::size_t>(it)]);
          q.phi = kTwoPi * (ip + 1) / phi_order;
          rule.nodes.push_back(Node{q});
          rule.weights.push_back(density_const * rw[static_cast<std::size_t>(ir)] * q.r *
                                 (kTwoPi / xi_order) * cw[static_cast<std::size_t>(it)] *
                                 (kTwoPi / phi_order));
        }
  double tail = 0.0;
  for (int k = 0; k <= tail_cutoff; ++k) tail += poisson_cdf(k, r_max * r_max);
  rule.tail_bound = tail;
  check_rule(rule);
  return rule;
}

QuadratureRule product_rule(const QuadratureRule& a, const QuadratureRule& b) {
  QuadratureRule rule;
  rule.kind = RuleKind::product;
  rule.tail_bound = a.tail_bound + b.tail_bound;
  rule.nodes.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      rule.nodes.push_back(Node{NodeList{{a.nodes[i], b.nodes[j]}}});
      rule.weights.push_back(a.weights[i] * b.weights[j]);
    }
  check_rule(rule);
  return rule;
}

QuadratureRule explicit_rule(std::vector<Node> nodes, std::vector<double> weights,
                             double tail_bound) {
  QuadratureRule rule;
  rule.kind = RuleKind::explicit_list;
  rule.nodes = std::move(nodes);
  rule.weights = std::move(weights);
  rule.tail_bound = tail_bound;
  check_rule(rule);
  return rule;
}

QuadratureRule ginibre_monte_carlo_rule(int n, int samples, std::uint64_t seed) {
  if (n < 1 || samples < 1) throw Error("ginibre_monte_carlo_rule: bad arguments");
  Rng rng(seed);
  QuadratureRule rule;
  rule.kind = RuleKind::monte_carlo;
  rule.nodes.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    Matrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) z(i, j) = rng.complex_normal();
    rule.nodes.push_back(Node{std::move(z)});
    rule.weights.push_back(1.0 / samples);
  }
  check_rule(rule);
  return rule;
}

QuadratureRule ginibre_moment_rule(int n, int k_max, int corner_radial, int corner_angular) {
  if (n == 1) {
    // Scalar case: the matrix moments reduce to z^k zbar^l with moments
    // k! delta_kl, which the polar Gaussian rule integrates exactly.
    QuadratureRule base = gaussian_c_rule(k_max + 1, k_max + 2, GaussianConvention::unit);
    QuadratureRule rule;
    rule.kind = RuleKind::explicit_list;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Matrix z(1, 1);
      z(0, 0) = base.nodes[i].as_complex();
      rule.nodes.push_back(Node{std::move(z)});
      rule.weights.push_back(base.weights[i]);
    }
    check_rule(rule);
    return rule;
  }
  if (n != 2) throw UnsupportedExact("ginibre_moment_rule: deterministic rule covers N <= 2");

  // Triangular factorization Z = u [[l1, t],[0, l2]] u*: l1, l2 carry the
  // squared-difference density against independent Gaussians, t is an
  // independent Gaussian, and u only enters through conjugation, which a
  // four-element unitary average reproduces exactly for the moment class.
  const int a_max = k_max + 2;  // eigenvalue degree incl. the density factor
  QuadratureRule lam = gaussian_c_rule(a_max / 2 + 1, a_max + 1, GaussianConvention::unit);
  QuadratureRule corner = gaussian_c_rule(corner_radial, corner_angular, GaussianConvention::unit);

  std::vector<Matrix> twirl;
  {
    Matrix id = Matrix::Identity(2, 2), sx(2, 2), sy(2, 2), sz(2, 2);
    const Complex i1(0.0, 1.0);
    sx << 0, i1, i1, 0;
    sy << 0, 1, -1, 0;
    sz << i1, 0, 0, -i1;
    twirl = {id, sx, sy, sz};
  }

  QuadratureRule rule;
  rule.kind = RuleKind::explicit_list;
  double mass = 0.0;
  for (std::size_t i1 = 0; i1 < lam.size(); ++i1)
    for (std::size_t i2 = 0; i2 < lam.size(); ++i2) {
      const Complex l1 = lam.nodes[i1].as_complex();
      const Complex l2 = lam.nodes[i2].as_complex();
      const double vdm = std::norm(l1 - l2);
      const double wpair = lam.weights[i1] * lam.weights[i2] * vdm;
      if (wpair == 0.0) continue;  // coincident eigenvalue nodes carry no mass
      for (std::size_t it = 0; it < corner.size(); ++it) {
        Matrix s(2, 2);
        s << l1, corner.nodes[it].as_complex(), 0.0, l2;
        const double w = wpair * corner.weights[it] * 0.25;
        for (const Matrix& u : twirl) {
          rule.nodes.push_back(Node{Matrix(u * s * u.adjoint())});
          rule.weights.push_back(w);
          mass += w;
        }
      }
    }
  // Normalize total mass to one; this fixes the density constant from the
  // rule itself instead of a printed normalizer.
  for (double& w : rule.weights) w /= mass;
  check_rule(rule);
  return rule;
}

IntegrationReport integrate_matrix_fn(const QuadratureRule& rule,
                                      const std::function<Matrix(const Node&)>& f) {
  IntegrationReport rep;
  rep.nodes_used = static_cast<std::int64_t>(rule.size());
  if (rule.size() == 0) {
    rep.value = Matrix::Zero(0, 0);
    return rep;
  }
  Matrix sum;
  double sq_norm_sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Matrix fi = f(rule.nodes[i]);
    if (i == 0) {
      sum = Matrix::Zero(fi.rows(), fi.cols());
    } else if (fi.rows() != sum.rows() || fi.cols() != sum.cols()) {
      throw InconsistentDimensions("integrate_matrix_fn: integrand dimension changed at node " +
                                   std::to_string(i));
    }
    sum.noalias() += rule.weights[i] * fi;
    if (rule.kind == RuleKind::monte_carlo) sq_norm_sum += fi.squaredNorm();
  }
  rep.value = std::move(sum);
  if (rule.kind == RuleKind::monte_carlo && rule.size() > 1) {
    const auto m = static_cast<double>(rule.size());
    const double var = std::max(0.0, (sq_norm_sum - m * rep.value.squaredNorm()) / (m - 1.0));
    rep.statistical_error = std::sqrt(var / m);
  }
  return rep;
}

}  // namespace mvcs
