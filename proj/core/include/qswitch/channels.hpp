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

#ifndef QSWITCH_CHANNELS_HPP
#define QSWITCH_CHANNELS_HPP

#include <vector>

#include "qswitch/qmat.hpp"

namespace qswitch {

/// A CP map in Kraus form, rho -> sum_i K_i rho K_i^dagger. Every Kraus
/// operator is dim_out x dim_in. Trace preservation is not enforced here;
/// query it with is_cptp().
class KrausChannel {
 public:
  KrausChannel(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus_ops);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

 private:
  int dim_in_;
  int dim_out_;
  std::vector<ComplexMatrix> ops_;
};

/// Heisenberg-Weyl operators U_(i,j) = X(i) Z(j), where X(i)|l> = |l+i mod d>
/// and Z(j)|l> = exp(2 pi i j l / d)|l>. Stored with flat index i * d + j, so
/// element 0 is the identity.
struct WeylBasis {
  int dim = 0;
  std::vector<ComplexMatrix> unitaries;

  const ComplexMatrix& at(int i, int j) const { return unitaries[i * dim + j]; }
};

ComplexMatrix weyl_shift(int d, int i);
ComplexMatrix weyl_clock(int d, int j);
WeylBasis weyl_basis(int d);

KrausChannel identity_channel(int d);

/// q * rho + (1 - q)/d^2 * sum_i U_i rho U_i^dagger over the full Weyl basis.
/// The identity appears twice (once weighted sqrt(q), once inside the basis);
/// the Kraus list is not merged.
KrausChannel depolarizing_channel(int d, double q);

/// (1 - gamma) rho + gamma Z rho Z^dagger with Z the Weyl clock operator.
/// All Kraus operators are diagonal, hence mutually commuting.
KrausChannel dephasing_channel(int d, double gamma);

/// Sum of K rho K^dagger without state validation.
ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& rho);
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

struct CptpCheck {
  bool ok = false;
  double max_deviation = 0.0;

  explicit operator bool() const { return ok; }
};

/// Checks sum_i K_i^dagger K_i = I entrywise within tol.
CptpCheck is_cptp(const KrausChannel& ch, double tol);

/// Kraus set {K2_a K1_b}: `first` acts, then `second`.
KrausChannel compose_serial(const KrausChannel& first,
                            const KrausChannel& second);
KrausChannel compose_parallel(const KrausChannel& a, const KrausChannel& b);

}  // namespace qswitch

#endif  // QSWITCH_CHANNELS_HPP
