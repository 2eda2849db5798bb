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

#include "qswitch/switch.hpp"

#include <cmath>
#include <sstream>

namespace qswitch {

namespace {

constexpr int kControlDim = 2;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << p;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ControlState::ControlState(double p, bool coherent)
    : p_(p), coherent_(coherent) {
  require_probability(p, "control weight p");
}

ControlState ControlState::coherent(double p) { return ControlState(p, true); }
ControlState ControlState::dephased(double p) { return ControlState(p, false); }

double ControlState::coherence() const {
  return coherent_ ? std::sqrt(p_ * (1.0 - p_)) : 0.0;
}

DensityMatrix ControlState::density() const {
  ComplexMatrix m(2, 2);
  const double c = coherence();
  m << p_, c, c, 1.0 - p_;
  return DensityMatrix(std::move(m));
}

ComplexMatrix JointState::control_block(int c, int c_prime) const {
  const auto& m = state.matrix();
  ComplexMatrix out(d, d);
  for (int t = 0; t < d; ++t) {
    for (int t2 = 0; t2 < d; ++t2) {
      out(t, t2) = m(kControlDim * t + c, kControlDim * t2 + c_prime);
    }
  }
  return out;
}

DensityMatrix JointState::target_marginal() const {
  return partial_trace(state, d, kControlDim, Keep::A);
}

DensityMatrix JointState::control_marginal() const {
  return partial_trace(state, d, kControlDim, Keep::B);
}

ComplexMatrix from_control_blocks(
    const std::array<std::array<ComplexMatrix, 2>, 2>& blocks) {
  const auto d = blocks[0][0].rows();
  ComplexMatrix out = ComplexMatrix::Zero(kControlDim * d, kControlDim * d);
  for (int c = 0; c < kControlDim; ++c) {
    for (int c2 = 0; c2 < kControlDim; ++c2) {
      out += tensor(blocks[c][c2], ket_bra(kControlDim, c, c2));
    }
  }
  return out;
}

KrausChannel switch_channel(const KrausChannel& n1, const KrausChannel& n2) {
  if (n1.dim_in() != n1.dim_out() || n2.dim_in() != n2.dim_out() ||
      n1.dim_in() != n2.dim_in()) {
    throw DimensionMismatch(
        "switch_channel requires two channels on the same square dimension");
  }
  const int d = n1.dim_in();
  const ComplexMatrix p0 = ket_bra(kControlDim, 0, 0);
  const ComplexMatrix p1 = ket_bra(kControlDim, 1, 1);
  std::vector<ComplexMatrix> ops;
  ops.reserve(n1.size() * n2.size());
  for (const auto& k2 : n2.kraus_ops()) {
    for (const auto& k1 : n1.kraus_ops()) {
      ops.push_back(tensor(k2 * k1, p0) + tensor(k1 * k2, p1));
    }
  }
  return KrausChannel(kControlDim * d, kControlDim * d, std::move(ops));
}

KrausChannel control_preparation(int d, const ControlState& ctrl) {
  if (d < 1) throw DimensionMismatch("dimension must be positive");
  const ComplexMatrix id = identity(d);
  if (ctrl.is_coherent()) {
    ComplexMatrix ket(kControlDim, 1);
    ket << std::sqrt(ctrl.p()), std::sqrt(1.0 - ctrl.p());
    return KrausChannel(d, kControlDim * d, {tensor(id, ket)});
  }
  ComplexMatrix ket0 = ComplexMatrix::Zero(kControlDim, 1);
  ComplexMatrix ket1 = ComplexMatrix::Zero(kControlDim, 1);
  ket0(0, 0) = std::sqrt(ctrl.p());
  ket1(1, 0) = std::sqrt(1.0 - ctrl.p());
  return KrausChannel(d, kControlDim * d, {tensor(id, ket0), tensor(id, ket1)});
}

KrausChannel switch_with_control(const KrausChannel& n1,
                                 const KrausChannel& n2,
                                 const ControlState& ctrl) {
  return compose_serial(control_preparation(n1.dim_in(), ctrl),
                        switch_channel(n1, n2));
}

JointState switch_apply(const KrausChannel& n1, const KrausChannel& n2,
                        const DensityMatrix& rho, const ControlState& ctrl) {
  const KrausChannel sw = switch_channel(n1, n2);
  if (rho.dim() != n1.dim_in()) {
    throw DimensionMismatch("switch_apply: state and channel dimensions differ");
  }
  const ComplexMatrix joint_in = tensor(rho.matrix(), ctrl.density().matrix());
  return JointState{n1.dim_in(), DensityMatrix(apply_kraus(sw, joint_in))};
}

JointState switched_depolarizing_analytic(int d, double q,
                                          const ControlState& ctrl,
                                          const DensityMatrix& rho) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  require_probability(q, "depolarizing parameter q");
  if (rho.dim() != d) {
    throw DimensionMismatch("switched_depolarizing_analytic: rho is not d x d");
  }
  const double p = ctrl.p();
  const double c = ctrl.coherence();
  const double noise = (1.0 - q) * (1.0 - q);
  const double cross = 2.0 * q * (1.0 - q);
  const double clean = q * q;
  const ComplexMatrix mixed = identity(d) / static_cast<double>(d);
  const ComplexMatrix& r = rho.matrix();

  // <c|out|c'> for each control pair; the rho_c weights enter through the
  // 2q(1-q) and q^2 terms, the (1-q)^2 term carries the 1/d^2 coherence.
  const ComplexMatrix diag0 = p * (noise + cross) * mixed + p * clean * r;
  const ComplexMatrix diag1 =
      (1.0 - p) * (noise + cross) * mixed + (1.0 - p) * clean * r;
  const ComplexMatrix off = c * (noise * r / static_cast<double>(d * d) +
                                 cross * mixed + clean * r);

  ComplexMatrix out = from_control_blocks({{{diag0, off}, {off, diag1}}});
  return JointState{d, DensityMatrix(std::move(out))};
}

std::array<FourierOutcome, 2> fourier_measure_control(const JointState& js) {
  const ComplexMatrix b00 = js.control_block(0, 0);
  const ComplexMatrix b01 = js.control_block(0, 1);
  const ComplexMatrix b10 = js.control_block(1, 0);
  const ComplexMatrix b11 = js.control_block(1, 1);

  std::array<FourierOutcome, 2> out;
  for (int k = 0; k < 2; ++k) {
    const double sign = k == 0 ? 1.0 : -1.0;
    // |+-> = (|0> +- |1>)/sqrt(2)
    FourierOutcome& o = out[k];
    o.unnormalized = 0.5 * (b00 + b11 + sign * (b01 + b10));
    o.probability = o.unnormalized.trace().real();
    if (o.probability > tol::kTrace) {
      o.state = DensityMatrix(o.unnormalized / o.probability);
    }
  }
  return out;
}

}  // namespace qswitch
