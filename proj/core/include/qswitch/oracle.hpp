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

#ifndef QSWITCH_ORACLE_HPP
#define QSWITCH_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/qmat.hpp"
#include "qswitch/switch.hpp"

// Brute-force reference layer. brute_force_switch_output() builds the switch
// output from an explicit Kraus-pair sum using only the qmat primitives and
// none of the channel or switch code.

namespace qswitch::oracle {

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WorstCase {
  int d = 0;
  double q = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct ComparisonReport {
  std::string suite;
  std::string description;
  double tolerance = 0.0;
  double max_abs_deviation = 0.0;
  long instances_tested = 0;
  WorstCase worst;

  bool passed() const { return max_abs_deviation <= tolerance; }
  std::string to_text() const;
  std::string to_json() const;
};

/// Normalized G G^dagger for a d x d matrix G of independent complex Gaussian
/// entries. Bit-identical for a given (d, seed).
DensityMatrix random_density_matrix(int d, std::uint64_t seed);

/// Haar-random unitary from the phase-corrected QR factorization of a complex
/// Gaussian matrix.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

/// S(N_q, N_q)(rho (x) rho_c) summed over all (d^2 + 1)^2 Kraus pairs of the
/// redundant depolarizing representation {sqrt(q) I} u {sqrt(1-q)/d X(i)Z(j)}.
JointState brute_force_switch_output(int d, double q, const ControlState& ctrl,
                                     const DensityMatrix& rho);

/// Names accepted by verify_equivalence().
const std::vector<std::string>& suite_names();

/// Run one comparison family over its fixed parameter grid. Throws
/// UnknownSuite for names outside suite_names().
ComparisonReport verify_equivalence(std::string_view suite, double tolerance);

/// q = 0, p = 1/2 capacity terms evaluated in long double directly from the
/// closed-form eigenvalues: 1/2 +- 1/(2d^2) for the control marginal and
/// {(d+1)/(2d^2), (d-1)/(2d^2), 1/(2d) x 2(d-1)} for a pure input.
struct ReferenceConstants {
  long double entropy_control;
  long double h_min;
  long double chi;
};
ReferenceConstants reference_constants(int d);

}  // namespace qswitch::oracle

#endif  // QSWITCH_ORACLE_HPP
