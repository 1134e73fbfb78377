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

#include "mvcs/cuntz.hpp"

using namespace mvcs;

TEST_CASE("pairing pins", "[cuntz]") {
  CHECK(pairing(1) == Pair{1, 1});
  CHECK(pairing(2) == Pair{2, 1});
  CHECK(pairing(3) == Pair{1, 2});
  CHECK(pairing(4) == Pair{3, 1});
  CHECK(pairing(5) == Pair{2, 2});
  CHECK(pairing(6) == Pair{1, 3});
  CHECK_THROWS_AS(pairing(0), OutOfDomain);
  CHECK_THROWS_AS(unpairing(0, 1), OutOfDomain);
}

TEST_CASE("pairing round trip and shell structure", "[cuntz][property]") {
  std::int64_t prev_shell = 0;
  for (std::int64_t k = 1; k <= 20000; ++k) {
    const Pair pq = pairing(k);
    CHECK(unpairing(pq.p, pq.q) == k);
    // Closed-form inverse: k = n(n+1)/2 + q with n = p + q - 2.
    const std::int64_t n = pq.p + pq.q - 2;
    CHECK(n * (n + 1) / 2 + pq.q == k);

    const std::int64_t shell = pairing_shell(k);
    CHECK(shell * (shell + 1) / 2 < k);
    CHECK(k <= (shell + 1) * (shell + 2) / 2);
    if (k > 1) {
      CHECK(shell >= prev_shell);
      CHECK(shell - prev_shell <= 1);
      // The shell increments exactly when k - 1 closes a triangular block.
      const bool boundary = prev_shell * (prev_shell + 1) / 2 + prev_shell + 1 < k;
      CHECK((shell - prev_shell == 1) == boundary);
    }
    prev_shell = shell;
  }
  // pairing covers each pair exactly once on an initial segment.
  for (std::int64_t p = 1; p <= 80; ++p)
    for (std::int64_t q = 1; q <= 80; ++q)
      if (p + q <= 80) CHECK(pairing(unpairing(p, q)) == Pair{p, q});
}

TEST_CASE("truncated isometries", "[cuntz]") {
  const CuntzRep rep(40, 6);

  // t(1) = (1,1), so S_1 fixes the first basis vector.
  CHECK(rep.image(1, 1) == 1);

  // S_k* S_l = delta_kl times the domain projection, exactly.
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t l = 1; l <= 6; ++l) {
      const Matrix prod = rep.dense(k).adjoint() * rep.dense(l);
      if (k != l) {
        CHECK(prod.norm() == 0.0);
      } else {
        Matrix expected = Matrix::Zero(40, 40);
        for (std::int64_t n = 1; n <= 40; ++n)
          if (rep.image(k, n) > 0) expected(n - 1, n - 1) = 1.0;
        CHECK((prod - expected).norm() == 0.0);
      }
    }

  // sum_k S_k S_k* is a 0/1 diagonal whose trace matches the counting
  // oracle through the inverse bijection.
  Matrix range_sum = Matrix::Zero(40, 40);
  for (std::int64_t k = 1; k <= 6; ++k)
    range_sum += rep.dense(k) * rep.dense(k).adjoint();
  CHECK((range_sum - range_sum.cwiseProduct(range_sum)).norm() == 0.0);
  CHECK(std::abs(range_sum.trace().real() -
                 static_cast<double>(covered_row_count(rep, 6))) == 0.0);
}

TEST_CASE("verify_cuntz", "[cuntz]") {
  const CuntzRep full(100, 100);
  const CuntzReport r = verify_cuntz(full);
  CHECK(r.isometry_defect == 0.0);
  CHECK(r.range_overlap_defect == 0.0);
  CHECK(r.completeness_trace_fraction == 1.0);

  const CuntzRep one(100, 1);
  const CuntzReport r1 = verify_cuntz(one);
  const double expected =
      static_cast<double>(covered_row_count(one, 1)) / 100.0;
  CHECK(r1.completeness_trace_fraction == expected);

  // Monotone coverage in the number of active isometries.
  double prev = 0.0;
  for (std::int64_t k = 1; k <= 20; k += 3) {
    const double frac = verify_cuntz(CuntzRep(100, k)).completeness_trace_fraction;
    CHECK(frac >= prev);
    prev = frac;
  }
}

TEST_CASE("coherent-state operator", "[cuntz]") {
  const CuntzRep rep(300, 20);

  // z = 0 leaves S_1 alone, which fixes phi_1.
  Vector phi1 = Vector::Zero(300);
  phi1(0) = 1.0;
  const CuntzCoherentOperator at0 = cuntz_coherent_state(rep, 0.0, 12);
  CHECK((at0.apply(phi1) - phi1).norm() == 0.0);

  // Norm against the truncated exponential, using range orthogonality.
  const Complex z(0.8, -0.5);
  const CuntzCoherentOperator op = cuntz_coherent_state(rep, z, 12);
  const Vector image = op.apply(phi1);
  double expected = 0.0, term = 1.0;
  for (int k = 0; k <= 11; ++k) {
    if (k > 0) term *= std::norm(z) / k;
    expected += term;
  }
  CHECK(std::abs(image.squaredNorm() - expected) < 1e-12 * expected);

  CHECK_THROWS_AS(cuntz_coherent_state(rep, z, 21), TruncationExceeded);
}

TEST_CASE("landau recovery coefficients", "[cuntz]") {
  const CuntzRep rep(300, 12);
  const Complex z(0.63, 0.41), zp(-0.27, 0.78);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const Vector v = landau_recovery(rep, z, zp, n, 12);
    // Coefficient of psi_{k n} sits at basis index t^{-1}(k, n) and equals
    // zbar'^{n-1} z^{k-1} / sqrt((k-1)! (n-1)!).
    double fk = 1.0, fn = 1.0;
    for (std::int64_t i = 2; i < n; ++i) fn *= static_cast<double>(i);
    for (std::int64_t k = 1; k <= 12; ++k) {
      if (k > 2) fk *= static_cast<double>(k - 1);
      const Complex expected =
          cpow(std::conj(zp), static_cast<int>(n) - 1) * cpow(z, static_cast<int>(k) - 1) /
          std::sqrt(fk * fn);
      const std::int64_t idx = unpairing(k, n);
      REQUIRE(idx <= 300);
      CHECK(std::abs(v(idx - 1) - expected) <= 1e-15 * std::abs(expected));
    }
    // Entries away from the image indices are identically zero.
    std::vector<bool> hit(300, false);
    for (std::int64_t k = 1; k <= 12; ++k) hit[static_cast<std::size_t>(unpairing(k, n) - 1)] = true;
    for (std::int64_t i = 0; i < 300; ++i)
      if (!hit[static_cast<std::size_t>(i)]) CHECK(v(i) == 0.0);
  }
}

TEST_CASE("cuntz family", "[cuntz]") {
  const CSFamily fam = cuntz_family(16, 16, 4, 8, 13);
  // Frame orthonormality holds only block-wise at truncation: defects are
  // reported, not asserted.
  CHECK(fam.frame.orthonormality_defect >= 0.0);
  CHECK(fam.frame.completeness_defect >= 0.0);

  const ResolutionReport rep = verify_resolution(fam, CStarMatrix::identity(1), 1e-8);
  CHECK(rep.defect <= 1e-8);
  CHECK(rep.pass);

  CHECK_THROWS_AS(cuntz_family(128, 128, 4, 8, 13), DimensionLimit);
}
