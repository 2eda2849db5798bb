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

#ifndef QSWITCH_SWITCH_HPP
#define QSWITCH_SWITCH_HPP

#include <array>
#include <optional>

#include "qswitch/channels.hpp"
#include "qswitch/qmat.hpp"

// Tensor ordering is target (x) control throughout: the joint index of
// target level t and control level c is 2 * t + c.

namespace qswitch {

/// Control qubit prepared either in sqrt(p)|0> + sqrt(1-p)|1> (coherent) or in
/// the dephased mixture p|0><0| + (1-p)|1><1|.
class ControlState {
 public:
  static ControlState coherent(double p);
  static ControlState dephased(double p);

  double p() const { return p_; }
  bool is_coherent() const { return coherent_; }
  /// sqrt(p(1-p)) for a coherent control, zero otherwise.
  double coherence() const;
  DensityMatrix density() const;

 private:
  ControlState(double p, bool coherent);

  double p_;
  bool coherent_;
};

struct JointState {
  int d = 0;
  DensityMatrix state;

  /// The d x d target operator <c|state|c'>.
  ComplexMatrix control_block(int c, int c_prime) const;
  DensityMatrix target_marginal() const;
  DensityMatrix control_marginal() const;
};

/// Assemble sum_{c,c'} block[c][c'] (x) |c><c'| in target (x) control order.
ComplexMatrix from_control_blocks(
    const std::array<std::array<ComplexMatrix, 2>, 2>& blocks);

/// Kraus operators W_ij = K2_i K1_j (x) |0><0| + K1_j K2_i (x) |1><1|.
/// Control |0> runs n1 first, then n2.
KrausChannel switch_channel(const KrausChannel& n1, const KrausChannel& n2);

/// The d -> 2d channel rho -> rho (x) rho_c.
KrausChannel control_preparation(int d, const ControlState& ctrl);

/// rho -> S(n1, n2)(rho (x) rho_c) as a single d -> 2d channel, i.e. what a
/// sender sees when the control is fixed and only the receiver holds it.
KrausChannel switch_with_control(const KrausChannel& n1,
                                 const KrausChannel& n2,
                                 const ControlState& ctrl);

JointState switch_apply(const KrausChannel& n1, const KrausChannel& n2,
                        const DensityMatrix& rho, const ControlState& ctrl);

/// Closed form of S(N_q, N_q)(rho (x) rho_c) for two depolarizing channels:
///
///   (1-q)^2 [ ctrl_diag (x) I/d + c (|0><1| + |1><0|) (x) rho/d^2 ]
///     + 2q(1-q) rho_c (x) I/d + q^2 rho_c (x) rho,
///
/// where c = sqrt(p(1-p)) and ctrl_diag = p|0><0| + (1-p)|1><1|. For a
/// dephased control every coherence term vanishes.
JointState switched_depolarizing_analytic(int d, double q,
                                          const ControlState& ctrl,
                                          const DensityMatrix& rho);

struct FourierOutcome {
  double probability = 0.0;
  /// <+-| state |+->, a d x d operator with trace `probability`.
  ComplexMatrix unnormalized;
  /// Normalized conditional state; empty when the outcome has zero weight.
  std::optional<DensityMatrix> state;
};

/// Measure the control in {|+>, |->}. Index 0 is '+', index 1 is '-'.
std::array<FourierOutcome, 2> fourier_measure_control(const JointState& js);

}  // namespace qswitch

#endif  // QSWITCH_SWITCH_HPP
