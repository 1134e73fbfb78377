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
 * Module-valued coherent states |x, a> = sum_k a F_k(x) (x) phi_k over
 * H = E (x) G, together with the numerical certificates for the component
 * orthogonality relations, the normalization elements N(x, a), and the
 * resolution of the identity.
 */

#pragma once

#include <functional>
#include <string>

#include "mvcs/hilbert_module.hpp"
#include "mvcs/quadrature.hpp"

namespace mvcs {

/// A truncated coherent-state family: component functions F_k : X -> E for
/// k = 0..k_max, a frame {phi_k} in G of matching length, and a quadrature
/// rule discretizing (X, mu).  All sums over k are truncated at k_max;
/// truncation_tail records the bound folded into pass thresholds for the
/// pointwise (normalization / overlap) checks at reference scale.
struct CSFamily {
  std::string name;
  ModuleSpace E;
  ModuleSpace G;
  QuadratureRule rule;
  std::function<Matrix(int, const Node&)> component;  // F_k(x), shape of E
  Frame frame;
  int k_max = 0;
  double truncation_tail = 0.0;
  // Projector (on the row space of H) onto the block the truncated family
  // spans; empty means the full identity.
  Matrix span_projector;

  ModuleSpace H() const { return ModuleSpace::tensor(E, G); }
};

struct CoherentState {
  ModuleSpace H;
  Node x;
  CStarMatrix a;
  Matrix value;  // element of H
  bool normalized = false;
};

struct NormalizationElement {
  CStarMatrix value;  // N(x, a) in B (x) C, Hermitian by construction
  double min_eigenvalue = 0.0;
};

struct OrthogonalityReport {
  double max_defect = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct ResolutionReport {
  double defect = 0.0;
  // Deviation between the plain assembly and the normalized-state assembly
  // |x^,a> N(x,a) <x^,a| of the same operator.
  double normalized_route_deviation = 0.0;
  double bound = 0.0;
  bool pass = false;
};

void validate_family(const CSFamily& fam);

/// |x, a> = sum_{k<=k_max} (a F_k(x)) (x) phi_k.  Throws DivergentSum when
/// the partial-sum growth at k_max exceeds the geometric extrapolation of
/// the previous increments (or keeps growing through the last terms).
CoherentState coherent_state(const CSFamily& fam, const Node& x, const CStarMatrix& a);

/// <cs1 | cs2> in B (x) C.
CStarMatrix overlap(const CoherentState& cs1, const CoherentState& cs2);

/// Integrated component orthogonality: for every pair (k, l) assembles
/// integral |F_k(x)><F_l(x)| dmu as the left-multiplication operator on E
/// and reports max_{k,l} || result - delta_kl I ||.
OrthogonalityReport verify_orthogonality(const CSFamily& fam, double tol,
                                         const SpectralTolerance& spectral = {});

/// N(x, a) = sum_k <F_k(x) | a*a F_k(x)> (x) id_C, symmetrized.
NormalizationElement normalization(const CSFamily& fam, const Node& x, const CStarMatrix& a);

/// Right-multiplies the state by N(x,a)^{-1/2}.  Requires N strictly
/// positive, which holds whenever a is invertible and N(x, id) > 0.
CoherentState normalize(const CSFamily& fam, const CoherentState& cs,
                        const SpectralTolerance& tol = {});

/// Assembles M = integral |x,a><x,a| dmu on H (restricted to the family's
/// spanned block) and reports ||M - I||; also recomputes M through the
/// normalized states and reports the deviation between the two routes.
/// Requires aa* = id within equality_tol.
ResolutionReport verify_resolution(const CSFamily& fam, const CStarMatrix& a, double tol,
                                   const SpectralTolerance& spectral = {});

}  // namespace mvcs
