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

#ifndef QSWITCH_CAPACITY_HPP
#define QSWITCH_CAPACITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/qmat.hpp"
#include "qswitch/switch.hpp"

namespace qswitch {

struct EnsembleEntry {
  double probability;
  DensityMatrix state;
};

/// Classical-quantum input ensemble {p_x, rho_x}.
class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleEntry> entries);

  const std::vector<EnsembleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int dim() const { return entries_.front().state.dim(); }

  /// d equiprobable computational basis states.
  static Ensemble uniform_orthonormal(int d);

 private:
  std::vector<EnsembleEntry> entries_;
};

struct OptimizerOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  int max_refine_sweeps = 400;
  /// Also score the uniform computational-basis ensemble. Turning this off
  /// makes attainment depend on the random starts alone.
  bool include_canonical = true;
};

struct OptimizerDiagnostics {
  int trials = 0;
  int refine_sweeps = 0;
  long evaluations = 0;
  /// Largest Holevo value among the scored candidates, before refinement.
  double best_sampled = 0.0;
  double refine_gain = 0.0;
  std::string best_description;
};

struct OptimizationResult {
  Ensemble ensemble;
  double chi = 0.0;
  OptimizerDiagnostics diagnostics;
};

struct AnalyticCapacity {
  double chi = 0.0;
  double entropy_control = 0.0;
  double h_min = 0.0;
};

struct CapacityReport {
  int d = 0;
  double q = 0.0;
  double p = 0.5;
  /// Only populated for p = 1/2, where the closed form applies.
  std::optional<double> chi_analytic;
  double chi_numeric = 0.0;
  double entropy_control = 0.0;
  std::optional<double> h_min;
  OptimizerDiagnostics diagnostics;
};

/// Control marginal after two depolarizing channels pass through the switch:
/// (1-q)^2 (p|0><0| + (1-p)|1><1| + c/d^2 (|0><1| + |1><0|)) + q(2-q) rho_c,
/// with c = sqrt(p(1-p)) (zero for a dephased control).
DensityMatrix reduced_control_state(int d, double q, const ControlState& ctrl);

/// Spectrum of [[A, B], [B, A]] as eig(A + B) u eig(A - B). Only valid when
/// the two halves {(v, v)} and {(v, -v)} are invariant, which is the case for
/// the block structure this is used on.
Spectrum block_symmetric_spectrum(const ComplexMatrix& a,
                                  const ComplexMatrix& b);

/// Output spectrum of the switched depolarizing pair at p = 1/2, given the
/// input spectrum. The first d values are the (A + B) branch,
///   ((1-q)^2 + 4q(1-q))/(2d) + (q^2 + (1-q)^2/(2d^2)) lambda_i,
/// the last d the (A - B) branch, (1-q)^2/(2d^2) (d - lambda_i).
Spectrum switched_spectrum(int d, double q, const Spectrum& rho_spectrum);

/// Minimum output entropy at p = 1/2, attained on any pure input.
double h_min(int d, double q);

/// The four-term expanded expression for the minimum output entropy, kept as
/// a regression target for h_min().
double h_min_closed_form(int d, double q);

/// chi = log2 d + H(reduced control) - h_min at p = 1/2 with coherent control.
AnalyticCapacity holevo_analytic(int d, double q);

/// I(X;B) = H(sum_x p_x N(rho_x)) - sum_x p_x H(N(rho_x)).
double holevo_of_ensemble(const KrausChannel& ch, const Ensemble& ens);

/// Multi-start search for the Holevo-maximizing ensemble of pure states.
/// `trials` random ensembles and, unless disabled, the uniform computational
/// basis ensemble are scored. The best is then refined by coordinate
/// perturbation. Results depend only on (channel, options.trials,
/// options.seed), never on the thread count.
OptimizationResult optimize_ensemble(const KrausChannel& ch,
                                     const OptimizerOptions& options);

/// Numerical and (for p = 1/2) analytic capacity of the switched depolarizing
/// pair with a coherent control.
CapacityReport capacity_report(int d, double q, double p,
                               const OptimizerOptions& options);

}  // namespace qswitch

#endif  // QSWITCH_CAPACITY_HPP
