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

#ifndef QSWITCH_TESTS_TEST_SUPPORT_HPP
#define QSWITCH_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/oracle.hpp"
#include "qswitch/qmat.hpp"

namespace qswitch::testing {

// Reference constants, evaluated once with mpmath at 40 significant digits
// from the closed-form eigenvalues (q = 0, p = 1/2):
//   control marginal  1/2 +- 1/(2d^2)
//   pure-input output {(d+1)/(2d^2), (d-1)/(2d^2), 1/(2d) with multiplicity 2(d-1)}
inline constexpr double kEntropyControlD2 = 0.954434002924965;
inline constexpr double kEntropyControlD3 = 0.991076059838222;
inline constexpr double kHMinD2 = 1.90563906222957;
inline constexpr double kHMinD3 = 2.55772777873932;
inline constexpr double kChiD2 = 0.0487949406953985;
inline constexpr double kChiD3 = 0.018310781820059;
inline constexpr double kChiD4 = 0.00857189816302289;
inline constexpr double kChiD5 = 0.00465541710426808;
inline constexpr double kChiD6 = 0.00279854031510679;

inline DensityMatrix random_state(int d, std::uint64_t seed) {
  return oracle::random_density_matrix(d, seed);
}

inline ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  return oracle::random_unitary(d, seed);
}

/// Replace {K_j} by {sum_j V_ij K_j} for an isometry V with `extra` more rows
/// than columns. The channel is unchanged; the Kraus list is not.
inline KrausChannel remix_kraus(const KrausChannel& ch, int extra,
                                std::uint64_t seed) {
  const int n = static_cast<int>(ch.size());
  const ComplexMatrix u = random_unitary(n + extra, seed);
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < n + extra; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(ch.dim_out(), ch.dim_in());
    for (int j = 0; j < n; ++j) k += u(i, j) * ch.kraus_ops()[j];
    ops.push_back(std::move(k));
  }
  return KrausChannel(ch.dim_in(), ch.dim_out(), std::move(ops));
}

inline KrausChannel unitary_channel(const ComplexMatrix& u) {
  return KrausChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()),
                      {u});
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace qswitch::testing

#endif  // QSWITCH_TESTS_TEST_SUPPORT_HPP
