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
 * The concrete coherent-state families: canonical (Bargmann-type) states,
 * matrix-kernel states with the SU(N) extension, analytic matrix states
 * with exact c_k coefficients, quaternionic states, and the Landau-type
 * infinite-component states with complex Hermite polynomials.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "mvcs/engine.hpp"

namespace mvcs {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Canonical family

/// Orthonormal scalar functions Phi_k on (X, mu); orthonormality is checked
/// at construction against the rule (GramDefect on failure).
struct ScalarKernelBasis {
  std::function<Complex(int, Complex)> phi;
  QuadratureRule rule;
  int k_max = 0;
};

ScalarKernelBasis make_scalar_kernel_basis(std::function<Complex(int, Complex)> phi,
                                           QuadratureRule rule, int k_max,
                                           double gram_tol = 1e-8);

/// Phi_k(z) = z^k / sqrt(k!) over the normalized Gaussian measure.
ScalarKernelBasis bargmann_basis(int k_max, int radial_order, int angular_order);

struct CanonicalFamily {
  CSFamily family;  // A = B = C = complex scalars, F_k = conj(Phi_k)
  ScalarKernelBasis basis;

  /// K(x, y) = sum_{k<=k_max} Phi_k(x) conj(Phi_k(y)); equals <x|y>.
  Complex kernel(Complex x, Complex y) const;
};

CanonicalFamily canonical_family(ScalarKernelBasis basis);

// ---------------------------------------------------------------------------
// Matrix-kernel family over X x SU(N)

struct VcsMatrixFamily {
  CSFamily family;  // F_k(x, u) = sqrt(N) u diag(conj Phi^i_k(x)) u*
  int n = 0;
  std::function<Vector(int, Complex)> vector_basis;
  int k_max = 0;

  /// Matrix kernel K(x, y) = sum_k Phi_k(x) Phi_k(y)^dag.
  Matrix matrix_kernel(Complex x, Complex y) const;

  /// Vector state recovered from the module state by the partial trace
  /// against P_i(u) = u P_i u*, scaled so that <x,i|y,j> = K(x,y)_ij.
  /// Coordinates are with respect to the basis {Phi_k}.
  Vector recover_vcs(const Node& xu, int i) const;
};

/// vector_basis(k, x) must return orthonormal C^N-valued functions over
/// base_rule (checked; GramDefect on failure).
VcsMatrixFamily vcs_matrix_family(std::function<Vector(int, Complex)> vector_basis, int n,
                                  int k_max, const QuadratureRule& base_rule,
                                  const QuadratureRule& su_rule, double gram_tol = 1e-8);

/// Orthonormal C^N-valued functions built by cycling the Bargmann basis
/// through the N vector components: Phi_{m N + j} = z^m/sqrt(m!) e_j.
std::function<Vector(int, Complex)> cyclic_bargmann_vector_basis(int n);

// ---------------------------------------------------------------------------
// Analytic matrix family

/// c_k = [prod_{j=1}^{k+1}(N+j) - prod_{j=1}^{k+1}(N-j)] / ((k+1)(k+2)),
/// in exact rational arithmetic.  c_0 = 1 and c_k = k! at N = 1.
Rational analytic_ck(int n, int k);
double analytic_ck_double(int n, int k);

/// F_k(Z) = Z^k / sqrt(c_k) over a rule on M_N(C) with Ginibre moments
/// (deterministic for N <= 2 via ginibre_moment_rule, Monte Carlo
/// otherwise).  Component orthonormality is checked at construction with
/// statistical slack for Monte Carlo rules.
CSFamily analytic_family(int n, int k_max, QuadratureRule rule, double gram_tol = 1e-6);

// ---------------------------------------------------------------------------
// Quaternions

/// sigma(n^) for the unit vector with polar angles (theta, phi):
/// [[cos t, e^{i p} sin t], [e^{-i p} sin t, -cos t]]; squares to I.
Matrix quaternion_sigma(double theta, double phi);

/// The SU(2) element u(theta, phi) diagonalizing sigma(n^).
Matrix quaternion_u(double theta, double phi);

/// q = r (I cos xi + i sigma(n^) sin xi) = r e^{i xi sigma(n^)}.
/// The conjugated-diagonal form u diag(z, conj z) u* gives the same matrix.
CStarMatrix quaternion_encode(const QuaternionParam& p);

struct QuaternionFamily {
  CSFamily family;  // module form: F_k(q) = e^{-r^2/2} q^k / sqrt(k!)
  int k_max = 0;
  double r_max = 0.0;

  /// Module state as a matrix V in C^{2(k_max+1) x 2}; <q|q> = V*V = I_2 up
  /// to the pointwise tail.
  Matrix module_state(const QuaternionParam& q) const;

  /// Vector state |q, j> (j = 0, 1) = column j of V / sqrt(2).
  Vector vcs_state(const QuaternionParam& q, int j) const;

  /// sum_j || |q, j> ||^2 = 1 - pointwise_tail(r).
  double norm_sum(const QuaternionParam& q) const;

  /// Truncated mass of the series at radius r.
  double pointwise_tail(double r) const;
};

/// r_max = 0 picks the smallest radius with radial tail <= 1e-8; orders = 0
/// pick defaults adequate for the k_max moment class.
QuaternionFamily quaternion_family(int k_max, double r_max = 0.0, int r_order = 0,
                                   int xi_order = 0, int theta_order = 4, int phi_order = 4);

// ---------------------------------------------------------------------------
// Complex Hermite polynomials and the Landau family

/// psi_{k,l}(zbar, z), k, l >= 1: the orthonormal complex Hermite family
/// under the normalized Gaussian measure (psi_11 = 1, psi_21 = zbar,
/// psi_12 = z, psi_22 = |z|^2 - 1).  Evaluated by the ladder recurrence;
/// the recurrence table is validated against the explicit differentiation
/// formula for indices <= 4 once per process.
Complex complex_hermite(int k, int l, Complex z);

struct LandauFamily {
  // Core z-family F_n(z) = z^n/sqrt(n!); the Gaussian factor of the states
  // is folded into the rule's measure for integration purposes.
  CSFamily core;
  Complex z_prime;
  int k_max = 0;
  int l_max = 0;
  Eigen::VectorXcd level_coeff;  // c_l = e^{-|z'|^2/2} conj(z')^l / sqrt(l!)

  /// |z, zbar'; l> coordinates over {Psi_n}, Gaussian prefactors included.
  Vector state(Complex z, int ell) const;

  /// sum_{l<=l_max} <z,l | z,l> = 1 - tails.
  double norm_sum(Complex z) const;

  double z_tail(double abs_z) const;
  double level_tail() const;

  /// sum_l integral |z,l><z,l| dx dy / pi against the truncated space.
  ResolutionReport verify_resolution(double tol) const;
};

LandauFamily landau_family(int k_max, int l_max, Complex z_prime, int radial_order = 0,
                           int angular_order = 0);

class Rng;

/// A random point of the family's parameter space at moderate scale
/// (disks of radius 2, quaternion radii <= 2, unit-variance matrices),
/// keyed on the family name.  Pointwise checks use these so that kernel
/// Gram matrices stay well conditioned.
Node sample_moderate_point(const CSFamily& fam, Rng& rng);

}  // namespace mvcs
