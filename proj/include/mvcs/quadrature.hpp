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
 * Weighted node sets discretizing the measure spaces the coherent-state
 * families integrate over: Gaussian measure on C, Haar measure on SU(N),
 * the quaternion parameter measure, Ginibre matrix measure, and products.
 *
 * Node order is fixed at construction and integration accumulates in that
 * order, so repeated runs are bit-identical.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "mvcs/cstar_matrix.hpp"

namespace mvcs {

enum class RuleKind { gaussian_complex, haar_sun, quaternion, product, explicit_list, monte_carlo };
enum class GaussianConvention { unit, half };
enum class HaarMode { exact_su2, monte_carlo };
enum class QuaternionDensity { one_eighth, one_quarter };

struct QuaternionParam {
  double r = 0.0;      // radius, >= 0
  double xi = 0.0;     // phase angle in [0, 2pi)
  double theta = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // azimuth in (0, 2pi]
};

struct Node;

struct NodeList {
  std::vector<Node> parts;
};

/// Tagged quadrature point: complex scalar, matrix (SU(N) or Ginibre),
/// quaternion parameter tuple, or a composite of parts.
struct Node {
  std::variant<Complex, Matrix, QuaternionParam, NodeList> value;

  const Complex& as_complex() const;
  const Matrix& as_matrix() const;
  const QuaternionParam& as_quaternion() const;
  const Node& part(std::size_t i) const;
};

struct QuadratureRule {
  RuleKind kind = RuleKind::explicit_list;
  std::vector<Node> nodes;
  std::vector<double> weights;
  double tail_bound = 0.0;  // mass / accuracy lost to domain truncation

  std::size_t size() const { return nodes.size(); }
};

struct IntegrationReport {
  Matrix value;
  double statistical_error = 0.0;  // 0 for deterministic rules
  std::int64_t nodes_used = 0;
};

/// Polar product rule (Gauss-Laguerre in |z|^2, uniform in arg z) for the
/// normalized Gaussian measure on C.  Exact for monomials z^a zbar^b with
/// a + b <= 2*radial_order - 1 and |a - b| < angular_order; in both
/// conventions the moments are integral z^a zbar^b dmu = a! delta_ab.
QuadratureRule gaussian_c_rule(int radial_order, int angular_order,
                               GaussianConvention convention = GaussianConvention::half);

/// Haar measure on SU(n).  exact_su2 (n = 2 only) is a product rule in the
/// sphere coordinates of the first column (uniform phases x Gauss-Legendre
/// in sin^2 of the mixing angle), exact for monomials in the entries of u
/// and conj(u) of phase frequency < order and radial degree <= order.
/// monte_carlo draws samples_or_order i.i.d. Haar points via complex
/// Ginibre + QR with the R-diagonal phase fix, then a determinant phase
/// correction into SU(n); deterministic under seed.
QuadratureRule haar_sun_rule(int n, HaarMode mode, int samples_or_order,
                             std::uint64_t seed = 42);

/// Product rule over the quaternion parameters (r, xi, theta, phi) on
/// [0, r_max] x [0,2pi) x [0,pi] x (0,2pi] with density r dr dxi
/// sin(theta) dtheta dphi scaled by 1/(8 pi^2) or 1/(4 pi^2).
/// tail_bound sums the radial Gaussian mass beyond r_max for the
/// integrand class e^{-r^2} r^{2k+1}, k <= tail_cutoff.
QuadratureRule quaternion_rule(double r_max, int r_order, int xi_order, int theta_order,
                               int phi_order,
                               QuaternionDensity density = QuaternionDensity::one_eighth,
                               int tail_cutoff = 20);

/// Product of two rules; nodes are composites (a-node, b-node).
QuadratureRule product_rule(const QuadratureRule& a, const QuadratureRule& b);

QuadratureRule explicit_rule(std::vector<Node> nodes, std::vector<double> weights,
                             double tail_bound = 0.0);

/// i.i.d. samples of an N x N matrix with independent standard complex
/// Gaussian entries (the normalized Ginibre ensemble), weights 1/M.
QuadratureRule ginibre_monte_carlo_rule(int n, int samples, std::uint64_t seed);

/// Deterministic positive rule on M_N(C), N <= 2, whose matrix moments
/// integral Z^k (Z^l)* dmu match the Ginibre ensemble exactly for
/// k, l <= k_max.  Built from the triangular (Schur) factorization of the
/// ensemble: Gaussian rules for the eigenvalue pair and the corner entry,
/// the squared eigenvalue-difference density folded into the weights, and
/// a four-element unitary conjugation average.  The corner entry enters
/// the moment class at bidegree at most (1,1), so its rule orders may be
/// lowered to (1, 2) when node count matters.
QuadratureRule ginibre_moment_rule(int n, int k_max, int corner_radial = 2,
                                   int corner_angular = 3);

/// Fixed-order weighted sum of a matrix-valued function over the nodes.
/// statistical_error is the entrywise sample std / sqrt(M) (Frobenius
/// aggregate) for monte_carlo rules, else 0.
IntegrationReport integrate_matrix_fn(const QuadratureRule& rule,
                                      const std::function<Matrix(const Node&)>& f);

/// Nodes and weights of the n-point Gauss-Legendre rule on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>* nodes,
                    std::vector<double>* weights);

/// Nodes and weights of the n-point Gauss-Laguerre rule (weight e^{-t} on
/// [0, inf)).
void gauss_laguerre(int n, std::vector<double>* nodes, std::vector<double>* weights);

/// P(Poisson(x) <= k): the regularized upper incomplete gamma Q(k+1, x).
/// Equals the fraction of the radial integrand e^{-r^2} r^{2k+1} mass
/// beyond r = sqrt(x).
double poisson_cdf(int k, double x);

/// Smallest r_max with sum_{k<=k_max} poisson_cdf(k, r_max^2) <= tail.
double quaternion_r_max_for_tail(int k_max, double tail);

}  // namespace mvcs
