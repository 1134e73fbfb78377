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

#include "mvcs/engine.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace mvcs {

void validate_family(const CSFamily& fam) {
  if (fam.k_max < 0) throw Error("CSFamily: k_max must be >= 0");
  if (static_cast<int>(fam.frame.elements.size()) != fam.k_max + 1)
    throw Error("CSFamily: frame length must be k_max + 1");
  if (!(fam.frame.space == fam.G)) throw SpaceMismatch("CSFamily: frame lives in the wrong space");
  if (fam.truncation_tail < 0.0) throw Error("CSFamily: negative truncation tail");
  const ModuleSpace h = fam.H();
  if (h.rows > max_composite_dim() || h.cols > max_composite_dim())
    throw DimensionLimit("CSFamily: H exceeds the composite dimension cap");
}

CoherentState coherent_state(const CSFamily& fam, const Node& x, const CStarMatrix& a) {
  if (a.dim() != fam.E.rows)
    throw DimensionMismatch("coherent_state: left parameter dim " + std::to_string(a.dim()) +
                            " != " + std::to_string(fam.E.rows));
  const ModuleSpace h = fam.H();
  Matrix sum = Matrix::Zero(h.rows, h.cols);
  std::vector<double> term_norms;
  term_norms.reserve(static_cast<std::size_t>(fam.k_max) + 1);
  for (int k = 0; k <= fam.k_max; ++k) {
    const Matrix fk = fam.component(k, x);
    if (fk.rows() != fam.E.rows || fk.cols() != fam.E.cols)
      throw DimensionMismatch("coherent_state: component F_" + std::to_string(k) +
                              " has the wrong shape");
    const Matrix term = kron(a.mat() * fk, fam.frame.elements[static_cast<std::size_t>(k)].value());
    sum += term;
    term_norms.push_back(term.norm());  // Frobenius; a scale proxy for the guard
  }
  // Cauchy guard on the truncated series: the increment at k_max must not
  // overshoot the geometric extrapolation of the previous two increments.
  // Smoothly growing or decaying tails pass; a blow-up at the truncation
  // edge does not.
  const std::size_t n = term_norms.size();
  if (n >= 3) {
    const double t0 = term_norms[n - 3], t1 = term_norms[n - 2], t2 = term_norms[n - 1];
    if (t0 > 0.0 && t1 > 0.0) {
      const double extrapolated = t1 * (t1 / t0);
      if (t2 > 10.0 * extrapolated && t2 > 1e-12 * term_norms[0])
        throw DivergentSum("coherent_state: partial sums fail the Cauchy test at k_max");
    }
  }
  return CoherentState{h, x, a, std::move(sum), false};
}

CStarMatrix overlap(const CoherentState& cs1, const CoherentState& cs2) {
  if (!(cs1.H == cs2.H)) throw SpaceMismatch("overlap: states live in different spaces");
  return CStarMatrix(cs1.value.adjoint() * cs2.value);
}

OrthogonalityReport verify_orthogonality(const CSFamily& fam, double tol,
                                         const SpectralTolerance& /*spectral*/) {
  validate_family(fam);
  OrthogonalityReport rep;
  const int count = fam.k_max + 1;
  const Matrix id = Matrix::Identity(fam.E.rows, fam.E.rows);
  // |F_k(x)><F_l(x)| acts on E as left multiplication by F_k F_l*.  All
  // pair blocks accumulate in one pass, components evaluated once per
  // node; per-pair sums still run in ascending node order.
  std::vector<Matrix> blocks(static_cast<std::size_t>(count) * count,
                             Matrix::Zero(fam.E.rows, fam.E.rows));
  std::vector<Matrix> at_node(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < fam.rule.size(); ++i) {
    const double w = fam.rule.weights[i];
    for (int k = 0; k < count; ++k)
      at_node[static_cast<std::size_t>(k)] = fam.component(k, fam.rule.nodes[i]);
    for (int k = 0; k < count; ++k)
      for (int l = 0; l < count; ++l)
        blocks[static_cast<std::size_t>(k) * count + l].noalias() +=
            w * at_node[static_cast<std::size_t>(k)] *
            at_node[static_cast<std::size_t>(l)].adjoint();
  }
  for (int k = 0; k < count; ++k)
    for (int l = 0; l < count; ++l) {
      const Matrix& block = blocks[static_cast<std::size_t>(k) * count + l];
      const double defect = operator_norm(k == l ? Matrix(block - id) : block);
      rep.max_defect = std::max(rep.max_defect, defect);
    }
  rep.bound = tol + fam.rule.tail_bound;
  rep.pass = rep.max_defect <= rep.bound;
  return rep;
}

NormalizationElement normalization(const CSFamily& fam, const Node& x, const CStarMatrix& a) {
  const Matrix a_star_a = a.mat().adjoint() * a.mat();
  Matrix sum = Matrix::Zero(fam.E.cols, fam.E.cols);
  for (int k = 0; k <= fam.k_max; ++k) {
    const Matrix fk = fam.component(k, x);
    sum += fk.adjoint() * a_star_a * fk;
  }
  Matrix value = kron(sum, Matrix::Identity(fam.G.cols, fam.G.cols));
  value = 0.5 * (value + value.adjoint().eval());
  CStarMatrix n(std::move(value));
  const PsdReport psd = psd_check(n);
  return NormalizationElement{std::move(n), psd.min_eigenvalue};
}

CoherentState normalize(const CSFamily& fam, const CoherentState& cs,
                        const SpectralTolerance& tol) {
  if (cs.normalized) return cs;
  const NormalizationElement n = normalization(fam, cs.x, cs.a);
  if (n.min_eigenvalue <= tol.psd_floor)
    throw NotPositiveDefinite("normalize: N(x, a) is not strictly positive (min eigenvalue " +
                              std::to_string(n.min_eigenvalue) + ")");
  const CStarMatrix r = inv_sqrt_pos(n.value, tol);
  CoherentState out = cs;
  out.value = cs.value * r.mat();
  out.normalized = true;
  return out;
}

ResolutionReport verify_resolution(const CSFamily& fam, const CStarMatrix& a, double tol,
                                   const SpectralTolerance& spectral) {
  validate_family(fam);
  if (!is_coisometry(a, spectral))
    throw NotCoisometry("verify_resolution: the left parameter must satisfy aa* = id");
  const ModuleSpace h = fam.H();

  const IntegrationReport plain = integrate_matrix_fn(fam.rule, [&](const Node& x) {
    const CoherentState cs = coherent_state(fam, x, a);
    return Matrix(cs.value * cs.value.adjoint());
  });
  const IntegrationReport via_normalized = integrate_matrix_fn(fam.rule, [&](const Node& x) {
    const CoherentState cs = coherent_state(fam, x, a);
    const CoherentState hat = normalize(fam, cs, spectral);
    const NormalizationElement n = normalization(fam, x, a);
    return Matrix(hat.value * n.value.mat() * hat.value.adjoint());
  });

  ResolutionReport rep;
  const Matrix id = Matrix::Identity(h.rows, h.rows);
  if (fam.span_projector.size() == 0) {
    rep.defect = operator_norm(plain.value - id);
  } else {
    const Matrix& p = fam.span_projector;
    rep.defect = operator_norm(p * (plain.value - id) * p);
  }
  rep.normalized_route_deviation = operator_norm(plain.value - via_normalized.value);
  rep.bound = tol + fam.rule.tail_bound;
  rep.pass = rep.defect <= rep.bound && rep.normalized_route_deviation <= rep.bound;
  return rep;
}

}  // namespace mvcs
