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

#include "qswitch/capacity.hpp"
#include "qswitch/oracle.hpp"
#include "qswitch/switch.hpp"
#include "test_support.hpp"

namespace qswitch {
namespace {

using testing::random_state;
using testing::random_unitary;
using testing::unitary_channel;

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

ComplexMatrix phase_gate() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = Complex(0, 1);
  return s;
}

TEST(ControlState, DensityAndValidation) {
  const ControlState c = ControlState::coherent(0.25);
  EXPECT_NEAR(c.coherence(), std::sqrt(0.25 * 0.75), 1e-15);
  EXPECT_NEAR(c.density().matrix()(0, 1).real(), std::sqrt(0.1875), 1e-15);
  EXPECT_EQ(ControlState::dephased(0.25).coherence(), 0.0);
  EXPECT_THROW(ControlState::coherent(1.5), std::invalid_argument);
  EXPECT_THROW(ControlState::dephased(-0.1), std::invalid_argument);
}

TEST(SwitchChannel, IdentityChannelsLeaveInputUntouched) {
  const ControlState ctrl = ControlState::coherent(0.3);
  const DensityMatrix rho = random_state(3, 1);
  const JointState out =
      switch_apply(identity_channel(3), identity_channel(3), rho, ctrl);
  EXPECT_LE(max_abs_deviation(out.state.matrix(),
                              tensor(rho.matrix(), ctrl.density().matrix())),
            1e-14);
}

TEST(SwitchChannel, ControlZeroRunsChannelOneFirst) {
  const KrausChannel n1 = unitary_channel(hadamard());
  const KrausChannel n2 = unitary_channel(phase_gate());
  const DensityMatrix rho = random_state(2, 4);
  const ComplexMatrix h = hadamard();
  const ComplexMatrix s = phase_gate();

  const JointState zero = switch_apply(n1, n2, rho, ControlState::coherent(1.0));
  const ComplexMatrix n2_after_n1 = s * h * rho.matrix() * h.adjoint() * s.adjoint();
  EXPECT_LE(max_abs_deviation(zero.state.matrix(),
                              tensor(n2_after_n1, ket_bra(2, 0, 0))),
            1e-14);

  const JointState one = switch_apply(n1, n2, rho, ControlState::coherent(0.0));
  const ComplexMatrix n1_after_n2 = h * s * rho.matrix() * s.adjoint() * h.adjoint();
  EXPECT_LE(max_abs_deviation(one.state.matrix(),
                              tensor(n1_after_n2, ket_bra(2, 1, 1))),
            1e-14);
  // The two orders really differ for this pair.
  EXPECT_GT(max_abs_deviation(n2_after_n1, n1_after_n2), 1e-3);
}

TEST(SwitchChannel, CommutingKrausGiveNoSwitchEffect) {
  const KrausChannel deph = dephasing_channel(2, 0.35);
  const KrausChannel twice = compose_serial(deph, deph);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_state(2, seed);
    const ControlState ctrl = ControlState::coherent(0.1 * static_cast<double>(seed));
    const JointState out = switch_apply(deph, deph, rho, ctrl);
    const ComplexMatrix expected =
        tensor(apply(twice, rho).matrix(), ctrl.density().matrix());
    EXPECT_LE(max_abs_deviation(out.state.matrix(), expected), 1e-10);
  }
}

TEST(SwitchChannel, TracePreserving) {
  for (int d = 2; d <= 4; ++d) {
    for (double q : {0.0, 0.3, 1.0}) {
      const KrausChannel dep = depolarizing_channel(d, q);
      const CptpCheck check = is_cptp(switch_channel(dep, dep), 1e-10);
      EXPECT_TRUE(check.ok);
      EXPECT_LE(check.max_deviation, 1e-12);
    }
  }
}

TEST(SwitchChannel, RejectsMismatchedChannels) {
  EXPECT_THROW(switch_channel(identity_channel(2), identity_channel(3)),
               DimensionMismatch);
  const KrausChannel rect(2, 4, {ComplexMatrix::Zero(4, 2)});
  EXPECT_THROW(switch_channel(rect, rect), DimensionMismatch);
}

TEST(SwitchChannel, IndependentOfKrausRepresentation) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int d = 2 + static_cast<int>(seed % 2);
    const KrausChannel n1 = depolarizing_channel(d, 0.4);
    const KrausChannel n2 = testing::remix_kraus(dephasing_channel(d, 0.3), 0, seed);
    const KrausChannel n1_mixed = testing::remix_kraus(n1, 3, seed + 10);
    const KrausChannel n2_mixed = testing::remix_kraus(n2, 2, seed + 20);
    const DensityMatrix rho = random_state(d, seed);
    const ControlState ctrl = ControlState::coherent(0.6);
    const JointState a = switch_apply(n1, n2, rho, ctrl);
    const JointState b = switch_apply(n1_mixed, n2_mixed, rho, ctrl);
    EXPECT_LE(max_abs_deviation(a.state.matrix(), b.state.matrix()), 1e-10);
  }
}

TEST(SwitchChannel, SwappingChannelsRelabelsControl) {
  const KrausChannel n1 = unitary_channel(hadamard());
  const KrausChannel n2 = dephasing_channel(2, 0.2);
  const ComplexMatrix flip_ctrl = tensor(identity(2), testing::pauli_x());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_state(2, seed);
    const double p = 0.2 * static_cast<double>(seed);
    const JointState a = switch_apply(n1, n2, rho, ControlState::coherent(p));
    const JointState b = switch_apply(n2, n1, rho, ControlState::coherent(1.0 - p));
    EXPECT_LE(max_abs_deviation(a.state.matrix(),
                                flip_ctrl * b.state.matrix() * flip_ctrl),
              1e-12);
  }
}

TEST(SwitchApply, NoiselessDepolarizingReturnsInput) {
  const DensityMatrix rho = random_state(3, 9);
  const ControlState ctrl = ControlState::coherent(0.5);
  const KrausChannel dep = depolarizing_channel(3, 1.0);
  const JointState out = switch_apply(dep, dep, rho, ctrl);
  EXPECT_LE(max_abs_deviation(out.state.matrix(),
                              tensor(rho.matrix(), ctrl.density().matrix())),
            1e-14);
}

TEST(SwitchApply, MatchesClosedFormAtFullNoise) {
  const int d = 2;
  const DensityMatrix rho = DensityMatrix::basis_state(d, 0);
  const ControlState ctrl = ControlState::coherent(0.5);
  const KrausChannel dep = depolarizing_channel(d, 0.0);
  const JointState brute = switch_apply(dep, dep, rho, ctrl);
  const JointState analytic = switched_depolarizing_analytic(d, 0.0, ctrl, rho);
  EXPECT_LE(max_abs_deviation(brute.state.matrix(), analytic.state.matrix()), 1e-10);
}

TEST(SwitchApply, DephasedControlLosesTheInput) {
  for (int d = 2; d <= 3; ++d) {
    const KrausChannel dep = depolarizing_channel(d, 0.0);
    const ControlState ctrl = ControlState::dephased(0.4);
    const ComplexMatrix expected =
        tensor(identity(d) / double(d), ctrl.density().matrix());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const JointState out = switch_apply(dep, dep, random_state(d, seed), ctrl);
      EXPECT_LE(max_abs_deviation(out.state.matrix(), expected), 1e-12);
    }
  }
}

TEST(SwitchApply, MarginalsAtFullNoise) {
  for (int d = 2; d <= 4; ++d) {
    const KrausChannel dep = depolarizing_channel(d, 0.0);
    for (double p : {0.2, 0.5}) {
      const ControlState ctrl = ControlState::coherent(p);
      const DensityMatrix expected_ctrl = reduced_control_state(d, 0.0, ctrl);
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const JointState out = switch_apply(dep, dep, random_state(d, seed), ctrl);
        EXPECT_LE(max_abs_deviation(out.target_marginal().matrix(),
                                    identity(d) / double(d)),
                  1e-12);
        EXPECT_LE(max_abs_deviation(out.control_marginal().matrix(),
                                    expected_ctrl.matrix()),
                  1e-10);
      }
    }
  }
}

TEST(SwitchWithControl, IsTheSwitchWithFixedControl) {
  const KrausChannel dep = depolarizing_channel(3, 0.2);
  for (bool coherent : {true, false}) {
    const ControlState ctrl =
        coherent ? ControlState::coherent(0.7) : ControlState::dephased(0.7);
    const KrausChannel ch = switch_with_control(dep, dep, ctrl);
    EXPECT_EQ(ch.dim_in(), 3);
    EXPECT_EQ(ch.dim_out(), 6);
    EXPECT_TRUE(is_cptp(ch, 1e-12));
    const DensityMatrix rho = random_state(3, 21);
    EXPECT_LE(max_abs_deviation(apply(ch, rho).matrix(),
                                switch_apply(dep, dep, rho, ctrl).state.matrix()),
              1e-12);
  }
}

TEST(Analytic, BlockStructureAtFullNoise) {
  const int d = 2;
  const DensityMatrix rho = DensityMatrix::basis_state(d, 0);
  const JointState js =
      switched_depolarizing_analytic(d, 0.0, ControlState::coherent(0.5), rho);
  EXPECT_LE(max_abs_deviation(js.control_block(0, 0), identity(2) / 4.0), 1e-15);
  EXPECT_LE(max_abs_deviation(js.control_block(1, 1), identity(2) / 4.0), 1e-15);
  EXPECT_LE(max_abs_deviation(js.control_block(0, 1), rho.matrix() / 8.0), 1e-15);
  EXPECT_LE(max_abs_deviation(js.control_block(1, 0), rho.matrix() / 8.0), 1e-15);
}

TEST(Analytic, NoiselessIsProductState) {
  const DensityMatrix rho = random_state(4, 3);
  const ControlState ctrl = ControlState::coherent(0.3);
  const JointState js = switched_depolarizing_analytic(4, 1.0, ctrl, rho);
  EXPECT_LE(max_abs_deviation(js.state.matrix(),
                              tensor(rho.matrix(), ctrl.density().matrix())),
            1e-15);
}

TEST(Analytic, ControlOnOneHasNoCoherence) {
  for (double q : {0.0, 0.4, 0.9}) {
    for (int d = 2; d <= 4; ++d) {
      const DensityMatrix rho = random_state(d, 30 + d);
      const ControlState ctrl = ControlState::coherent(0.0);
      const JointState js = switched_depolarizing_analytic(d, q, ctrl, rho);
      const ComplexMatrix expected_block =
          q * q * rho.matrix() + (1 - q * q) * identity(d) / double(d);
      EXPECT_LE(max_abs_deviation(js.control_block(1, 1), expected_block), 1e-14);
      EXPECT_EQ(js.control_block(0, 1).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ(js.control_block(0, 0).cwiseAbs().maxCoeff(), 0.0);
      const JointState brute = oracle::brute_force_switch_output(d, q, ctrl, rho);
      EXPECT_LE(max_abs_deviation(js.state.matrix(), brute.state.matrix()), 1e-10);
    }
  }
}

TEST(Analytic, AgreesWithGenericSwitch) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const double q = static_cast<double>(seed % 7) / 6.0;
    const double p = static_cast<double>(seed % 5) / 4.0;
    const ControlState ctrl = ControlState::coherent(p);
    const DensityMatrix rho = random_state(d, seed);
    const KrausChannel dep = depolarizing_channel(d, q);
    EXPECT_LE(max_abs_deviation(
                  switched_depolarizing_analytic(d, q, ctrl, rho).state.matrix(),
                  switch_apply(dep, dep, rho, ctrl).state.matrix()),
              1e-10)
        << "d=" << d << " q=" << q << " p=" << p;
  }
}

TEST(Analytic, DephasedControlMatchesGenericSwitch) {
  const ControlState ctrl = ControlState::dephased(0.35);
  for (double q : {0.0, 0.5}) {
    const KrausChannel dep = depolarizing_channel(3, q);
    const DensityMatrix rho = random_state(3, 8);
    EXPECT_LE(max_abs_deviation(
                  switched_depolarizing_analytic(3, q, ctrl, rho).state.matrix(),
                  switch_apply(dep, dep, rho, ctrl).state.matrix()),
              1e-10);
  }
}

TEST(Analytic, RejectsBadParameters) {
  const DensityMatrix rho = random_state(2, 0);
  const ControlState ctrl = ControlState::coherent(0.5);
  EXPECT_THROW(switched_depolarizing_analytic(2, 1.5, ctrl, rho), std::invalid_argument);
  EXPECT_THROW(switched_depolarizing_analytic(1, 0.5, ctrl, rho), std::invalid_argument);
  EXPECT_THROW(switched_depolarizing_analytic(3, 0.5, ctrl, rho), DimensionMismatch);
}

TEST(Fourier, ConditionalStatesAtFullNoise) {
  for (int d = 2; d <= 4; ++d) {
    const DensityMatrix rho = random_state(d, 50 + d);
    const JointState js =
        switched_depolarizing_analytic(d, 0.0, ControlState::coherent(0.5), rho);
    const auto outcomes = fourier_measure_control(js);
    const ComplexMatrix mixed = identity(d) / (2.0 * d);
    const ComplexMatrix signal = rho.matrix() / (2.0 * d * d);
    EXPECT_LE(max_abs_deviation(outcomes[0].unnormalized, mixed + signal), 1e-15);
    EXPECT_LE(max_abs_deviation(outcomes[1].unnormalized, mixed - signal), 1e-15);
    EXPECT_NEAR(outcomes[0].probability, 0.5 + 1.0 / (2.0 * d * d), 1e-15);
    ASSERT_TRUE(outcomes[0].state.has_value());
    EXPECT_NEAR(outcomes[0].state->matrix().trace().real(), 1.0, 1e-15);
  }
}

TEST(Fourier, NoCoherenceMeansNoSignal) {
  const int d = 3;
  const JointState js = switched_depolarizing_analytic(
      d, 0.0, ControlState::coherent(1.0), random_state(d, 2));
  for (const auto& o : fourier_measure_control(js)) {
    EXPECT_LE(max_abs_deviation(o.unnormalized, identity(d) / (2.0 * d)), 1e-15);
  }
}

TEST(Fourier, ProbabilitiesSumToOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const KrausChannel dep = depolarizing_channel(d, 0.1 * (seed % 10));
    const JointState js = switch_apply(dep, dep, random_state(d, seed),
                                       ControlState::coherent(0.05 * (seed % 20)));
    const auto o = fourier_measure_control(js);
    EXPECT_NEAR(o[0].probability + o[1].probability, 1.0, 1e-12);
    // Independent check: the probabilities are <+-| rho_c_marginal |+->.
    const ComplexMatrix ctrl = js.control_marginal().matrix();
    EXPECT_NEAR(o[0].probability, 0.5 * (ctrl.sum().real()), 1e-12);
  }
}

}  // namespace
}  // namespace qswitch
