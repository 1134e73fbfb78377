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
 * The completely positive kernel of a coherent-state family, its carrier
 * space, the isometry W into it, the integral-kernel projection, and the
 * dilation of the induced positive-operator-valued measure to a
 * projection-valued one, all over the family's discretized node set.
 *
 * Carrier elements are per-node blocks in B (x) C; internally they are
 * stored prescaled by sqrt(w_i), which makes the carrier inner product the
 * plain Frobenius pairing and every operator an ordinary matrix.
 */

#pragma once

#include <utility>
#include <vector>

#include "mvcs/engine.hpp"

namespace mvcs {

/// K(x, y) a* a' = <x, a | y, a'>_H, a completely positive kernel.
class CPKernel {
 public:
  explicit CPKernel(CSFamily fam);

  const CSFamily& family() const { return fam_; }

  /// K(x, y)[a* a'] in B (x) C.
  CStarMatrix eval(const Node& x, const Node& y, const CStarMatrix& a,
                   const CStarMatrix& a_prime) const;

 private:
  CSFamily fam_;
};

CPKernel cp_kernel(CSFamily fam);

struct CpPositivityReport {
  double min_eigenvalue = 0.0;        // of the contracted quadratic form
  double min_eigenvalue_block = 0.0;  // of the full block Gram matrix
  bool pass = false;
};

/// Assembles sum_{i,j} b_i* K(x_i, x_j)[a_i* a_j] b_j and the block Gram
/// [K(x_i, x_j)[a_i* a_j]]_{ij}, and runs the positivity check on both.
CpPositivityReport cp_positivity_test(const CPKernel& kern,
                                      const std::vector<std::pair<Node, CStarMatrix>>& points,
                                      const std::vector<CStarMatrix>& b,
                                      const SpectralTolerance& tol = {});

struct ReproduceReport {
  double defect = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Checks K(x,z)[a* a'] = integral K(x,y)[a* b] K(y,z)[b* a'] dmu(y) over
/// the family's rule.  a, a' and b must be co-isometries.
ReproduceReport kernel_reproduce_check(const CPKernel& kern, const Node& x, const Node& z,
                                       const CStarMatrix& a, const CStarMatrix& a_prime,
                                       const CStarMatrix& b, double tol);

struct DilationScene {
  CSFamily fam;
  Eigen::Index block_dim = 0;  // dim of B (x) C
  std::vector<Matrix> states;  // V(x_i) at a = id
  Matrix isometry;             // W, (n * block_dim) x rows(H), sqrt(w)-scaled
  Matrix projection;           // P_K = W W* on the carrier
  double isometry_defect = 0.0;    // || W* W - I_H ||
  double projection_defect = 0.0;  // max(|| P^2 - P ||, || P* - P ||)
  double frame_identity_defect = 0.0;  // || sum_i w_i |h_i><h_i| - P ||
  double bound = 0.0;
};

/// Builds W, P_K and the node states h_x = W |x, id>.  Throws
/// DimensionLimit when nodes * block_dim exceeds the composite cap.
DilationScene build_dilation(const CSFamily& fam, double tol);

/// h_x as a carrier element (stacked blocks K(x_i, x), sqrt(w)-scaled).
Matrix carrier_state(const DilationScene& scene, const Node& x);

/// nu(Delta) = sum_{i in Delta} w_i |h_{x_i}><h_{x_i}| as a carrier operator.
Matrix nu_measure(const DilationScene& scene, const std::vector<int>& delta);

/// The projection-valued measure: block-diagonal node indicator.
Matrix pv_measure(const DilationScene& scene, const std::vector<int>& delta);

struct DilationCheckReport {
  double defect_naimark = 0.0;  // || nu(Delta) - P PV(Delta) P ||
  double defect_pvm = 0.0;      // || PV(Delta)^2 - PV(Delta) ||
};

DilationCheckReport dilation_check(const DilationScene& scene, const std::vector<int>& delta);

/// || nu(d1 u d2) - nu(d1) - nu(d2) || for disjoint subsets; additive up to
/// final rounding of the node sums.
double nu_additivity_defect(const DilationScene& scene, const std::vector<int>& d1,
                            const std::vector<int>& d2);

struct MinimalityReport {
  Eigen::Index span_dimension = 0;
  Eigen::Index carrier_dimension = 0;
  bool full = false;
};

/// Rank computation behind the minimality of the dilation: localized
/// blocks P~({x_i}) h span the carrier iff every node block has full rank.
/// Requires strictly positive weights (the support condition).
MinimalityReport minimality_check(const DilationScene& scene);

/// Left action of a on the carrier, pulled back through W; defined only on
/// range(W) (throws NotInRange otherwise).
Matrix carrier_left_action(const DilationScene& scene, const CStarMatrix& a, const Matrix& h,
                           double tol = 1e-6);

}  // namespace mvcs
