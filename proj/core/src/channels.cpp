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

#include "qswitch/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qswitch {

KrausChannel::KrausChannel(int dim_in, int dim_out,
                           std::vector<ComplexMatrix> kraus_ops)
    : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(kraus_ops)) {
  if (dim_in_ < 1 || dim_out_ < 1) {
    throw DimensionMismatch("channel dimensions must be positive");
  }
  if (ops_.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    if (ops_[k].rows() != dim_out_ || ops_[k].cols() != dim_in_) {
      std::ostringstream msg;
      msg << "Kraus operator " << k << " is " << ops_[k].rows() << "x"
          << ops_[k].cols() << ", expected " << dim_out_ << "x" << dim_in_;
      throw DimensionMismatch(msg.str());
    }
  }
}

ComplexMatrix weyl_shift(int d, int i) {
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int l = 0; l < d; ++l) x((l + i) % d, l) = 1.0;
  return x;
}

ComplexMatrix weyl_clock(int d, int j) {
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int l = 0; l < d; ++l) {
    // Reduce j*l mod d first so the phase stays exact on the unit circle.
    const double angle = 2.0 * std::numbers::pi * ((j * l) % d) / d;
    z(l, l) = std::polar(1.0, angle);
  }
  return z;
}

WeylBasis weyl_basis(int d) {
  if (d < 2) throw std::invalid_argument("weyl_basis requires d >= 2");
  WeylBasis basis;
  basis.dim = d;
  basis.unitaries.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    const ComplexMatrix x = weyl_shift(d, i);
    for (int j = 0; j < d; ++j) basis.unitaries.push_back(x * weyl_clock(d, j));
  }
  return basis;
}

KrausChannel identity_channel(int d) {
  return KrausChannel(d, d, {identity(d)});
}

KrausChannel depolarizing_channel(int d, double q) {
  if (d < 2) throw std::invalid_argument("depolarizing_channel requires d >= 2");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("depolarizing parameter q must lie in [0, 1]");
  }
  const WeylBasis basis = weyl_basis(d);
  std::vector<ComplexMatrix> ops;
  ops.reserve(basis.unitaries.size() + 1);
  ops.push_back(std::sqrt(q) * identity(d));
  const double weight = std::sqrt(1.0 - q) / d;
  for (const auto& u : basis.unitaries) ops.push_back(weight * u);
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel dephasing_channel(int d, double gamma) {
  if (d < 2) throw std::invalid_argument("dephasing_channel requires d >= 2");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("dephasing strength must lie in [0, 1]");
  }
  return KrausChannel(d, d, {std::sqrt(1.0 - gamma) * identity(d),
                             std::sqrt(gamma) * weyl_clock(d, 1)});
}

ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
    std::ostringstream msg;
    msg << "channel expects a " << ch.dim_in() << "-dimensional input, got "
        << rho.rows() << "x" << rho.cols();
    throw DimensionMismatch(msg.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus_ops()) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_kraus(ch, rho.matrix()));
}

CptpCheck is_cptp(const KrausChannel& ch, double tol) {
  ComplexMatrix acc = ComplexMatrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& k : ch.kraus_ops()) acc.noalias() += k.adjoint() * k;
  const double dev = max_abs_deviation(acc, identity(ch.dim_in()));
  return CptpCheck{dev <= tol, dev};
}

KrausChannel compose_serial(const KrausChannel& first,
                            const KrausChannel& second) {
  if (second.dim_in() != first.dim_out()) {
    std::ostringstream msg;
    msg << "compose_serial: first channel outputs dimension "
        << first.dim_out() << " but second expects " << second.dim_in();
    throw DimensionMismatch(msg.str());
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(first.size() * second.size());
  for (const auto& k2 : second.kraus_ops()) {
    for (const auto& k1 : first.kraus_ops()) ops.push_back(k2 * k1);
  }
  return KrausChannel(first.dim_in(), second.dim_out(), std::move(ops));
}

KrausChannel compose_parallel(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.kraus_ops()) {
    for (const auto& kb : b.kraus_ops()) ops.push_back(tensor(ka, kb));
  }
  return KrausChannel(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(),
                      std::move(ops));
}

}  // namespace qswitch
