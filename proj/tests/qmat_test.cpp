// Copyright 2026 The qswitch Authors
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

#include <cmath>

#include <gtest/gtest.h>

#include "qswitch/qmat.hpp"
#include "test_support.hpp"

namespace qswitch {
namespace {

using testing::pauli_x;
using testing::random_state;
using testing::random_unitary;

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_deviation(tensor(identity(2), identity(2)), identity(4)), 0.0);
}

TEST(Tensor, ProjectorTimesProjector) {
  const ComplexMatrix p0 = ket_bra(2, 0, 0);
  EXPECT_EQ(max_abs_deviation(tensor(p0, p0), ket_bra(4, 0, 0)), 0.0);
}

TEST(Tensor, LeftFactorIsSlowIndex) {
  const ComplexMatrix m = tensor(pauli_x(), ket_bra(2, 0, 0));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool expected_nonzero = (r == 0 && c == 2) || (r == 2 && c == 0);
      EXPECT_EQ(std::abs(m(r, c)) > 0.0, expected_nonzero) << r << "," << c;
    }
  }
}

TEST(Tensor, AssociativeAndTraceMultiplicative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix a = random_state(2, seed).matrix() + random_unitary(2, seed);
    const ComplexMatrix b = random_unitary(3, seed + 100);
    const ComplexMatrix c = random_state(2, seed + 200).matrix();
    EXPECT_LE(max_abs_deviation(tensor(tensor(a, b), c), tensor(a, tensor(b, c))),
              tol::kEigen);
    EXPECT_LE(std::abs(tensor(a, b).trace() - a.trace() * b.trace()), tol::kEigen);
  }
}

TEST(PartialTrace, ProductStateKeepsFactor) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_state(3, seed);
    const DensityMatrix sigma = random_state(2, seed + 50);
    const DensityMatrix joint(tensor(rho.matrix(), sigma.matrix()));
    EXPECT_LE(max_abs_deviation(partial_trace(joint, 3, 2, Keep::A).matrix(),
                                rho.matrix()),
              tol::kEigen);
    EXPECT_LE(max_abs_deviation(partial_trace(joint, 3, 2, Keep::B).matrix(),
                                sigma.matrix()),
              tol::kEigen);
  }
}

TEST(PartialTrace, BellStateGivesMaximallyMixed) {
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0;
  const DensityMatrix bell = DensityMatrix::pure(phi);
  const DensityMatrix a = partial_trace(bell, 2, 2, Keep::A);
  EXPECT_LE(max_abs_deviation(a.matrix(), identity(2) / 2.0), 1e-15);
}

TEST(PartialTrace, RejectsBadFactorization) {
  EXPECT_THROW(partial_trace(identity(6) / 6.0, 4, 2, Keep::A), DimensionMismatch);
}

TEST(HermitianSpectrum, IdentityAndPauli) {
  const Spectrum id = hermitian_spectrum(identity(3));
  ASSERT_EQ(id.size(), 3u);
  for (double v : id.eigenvalues) EXPECT_NEAR(v, 1.0, 1e-14);

  const Spectrum x = hermitian_spectrum(pauli_x());
  EXPECT_NEAR(x.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(x.eigenvalues[1], -1.0, 1e-14);
}

TEST(HermitianSpectrum, ControlMarginalQubit) {
  // 1/2 I + 1/(2 d^2) sigma_x at d = 2 has eigenvalues 1/2 +- 1/8.
  ComplexMatrix m(2, 2);
  m << 0.5, 0.125, 0.125, 0.5;
  const Spectrum s = hermitian_spectrum(m);
  EXPECT_NEAR(s.eigenvalues[0], 5.0 / 8.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues[1], 3.0 / 8.0, 1e-15);
}

TEST(HermitianSpectrum, DescendingAndSumsToTrace) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix u = random_unitary(5, seed);
    const ComplexMatrix h = u + u.adjoint();
    const Spectrum s = hermitian_spectrum(h);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
    EXPECT_NEAR(s.sum(), h.trace().real(), tol::kEigen);
  }
}

TEST(HermitianSpectrum, ReconstructsMatrix) {
  const ComplexMatrix u = random_unitary(4, 7);
  const ComplexMatrix h = u + u.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const ComplexMatrix rebuilt = solver.eigenvectors() *
                                solver.eigenvalues().cast<Complex>().asDiagonal() *
                                solver.eigenvectors().adjoint();
  EXPECT_LE(max_abs_deviation(rebuilt, h), tol::kEigen);
  const Spectrum s = hermitian_spectrum(h);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.eigenvalues[i], solver.eigenvalues()(3 - i), tol::kEigen);
  }
}

TEST(HermitianSpectrum, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(hermitian_spectrum(m), InvalidState);
}

TEST(Entropy, MaximallyMixedQubitIsOneBit) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-15);
}

TEST(Entropy, PureStateIsZero) {
  EXPECT_EQ(von_neumann_entropy(DensityMatrix::basis_state(2, 0)), 0.0);
}

TEST(Entropy, FiveEighthsThreeEighths) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 5.0 / 8.0;
  m(1, 1) = 3.0 / 8.0;
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(m)), testing::kEntropyControlD2, 1e-6);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(m)), testing::kEntropyControlD2, 1e-14);
}

TEST(Entropy, ClipsRoundoffNegativesButRejectsRealOnes) {
  const std::vector<double> roundoff{1.0, -1e-12};
  EXPECT_EQ(entropy_bits(roundoff), 0.0);
  const std::vector<double> bad{1.1, -0.1};
  EXPECT_THROW(entropy_bits(bad), InvalidState);
}

TEST(Entropy, UnitarilyInvariant) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4);
    const DensityMatrix rho = random_state(d, seed);
    const ComplexMatrix u = random_unitary(d, seed + 1000);
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
    EXPECT_LE(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)), 1e-9);
  }
}

TEST(DensityMatrix, ValidatesInvariants) {
  ComplexMatrix not_herm(2, 2);
  not_herm << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{not_herm}, InvalidState);

  EXPECT_THROW(DensityMatrix{identity(2)}, InvalidState);  // trace 2

  ComplexMatrix negative(2, 2);
  negative << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(DensityMatrix{negative}, InvalidState);

  EXPECT_THROW(DensityMatrix{ComplexMatrix::Zero(2, 3)}, InvalidState);
}

TEST(DensityMatrix, SpectrumIsCachedAndValid) {
  const DensityMatrix rho = random_state(4, 3);
  EXPECT_NEAR(rho.spectrum().sum(), 1.0, tol::kTrace);
  EXPECT_GE(rho.spectrum().eigenvalues.back(), -tol::kPsd);
}

TEST(SpectrumDeviation, MultisetComparisonIgnoresOrder) {
  Spectrum a{{0.1, 0.5, 0.4}};
  Spectrum b{{0.5, 0.4, 0.1}};
  EXPECT_EQ(spectrum_deviation(a, b), 0.0);
  Spectrum c{{0.5, 0.5}};
  EXPECT_TRUE(std::isinf(spectrum_deviation(a, c)));
}

}  // namespace
}  // namespace qswitch
