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

#include "qswitch/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace qswitch {

Ensemble::Ensemble(std::vector<EnsembleEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty ensemble");
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!(e.probability >= 0.0)) {
      throw std::invalid_argument("ensemble probabilities must be >= 0");
    }
    if (e.state.dim() != entries_.front().state.dim()) {
      throw DimensionMismatch("ensemble states differ in dimension");
    }
    total += e.probability;
  }
  if (std::abs(total - 1.0) > tol::kTrace) {
    std::ostringstream msg;
    msg << "ensemble probabilities sum to " << total;
    throw std::invalid_argument(msg.str());
  }
}

Ensemble Ensemble::uniform_orthonormal(int d) {
  std::vector<EnsembleEntry> entries;
  for (int x = 0; x < d; ++x) {
    entries.push_back({1.0 / d, DensityMatrix::basis_state(d, x)});
  }
  return Ensemble(std::move(entries));
}

namespace {

void check_params(int d, double q) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("depolarizing parameter q must lie in [0, 1]");
  }
}

double plogp(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

DensityMatrix reduced_control_state(int d, double q, const ControlState& ctrl) {
  check_params(d, q);
  const double p = ctrl.p();
  const double c = ctrl.coherence();
  const double noise = (1.0 - q) * (1.0 - q);
  const double kept = q * (2.0 - q);
  const double off = noise * c / (static_cast<double>(d) * d) + kept * c;
  ComplexMatrix m(2, 2);
  m << p, off, off, 1.0 - p;
  return DensityMatrix(std::move(m));
}

Spectrum block_symmetric_spectrum(const ComplexMatrix& a,
                                  const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionMismatch("block_symmetric_spectrum: blocks differ in shape");
  }
  Spectrum plus = hermitian_spectrum(a + b);
  const Spectrum minus = hermitian_spectrum(a - b);
  plus.eigenvalues.insert(plus.eigenvalues.end(), minus.eigenvalues.begin(),
                          minus.eigenvalues.end());
  std::sort(plus.eigenvalues.begin(), plus.eigenvalues.end(),
            std::greater<>());
  return plus;
}

Spectrum switched_spectrum(int d, double q, const Spectrum& rho_spectrum) {
  check_params(d, q);
  if (rho_spectrum.size() != static_cast<std::size_t>(d)) {
    throw DimensionMismatch("switched_spectrum: input spectrum must have d values");
  }
  const double dd = d;
  const double noise = (1.0 - q) * (1.0 - q);
  const double base = (noise + 4.0 * q * (1.0 - q)) / (2.0 * dd);
  const double slope = q * q + noise / (2.0 * dd * dd);
  const double minus_scale = noise / (2.0 * dd * dd);

  Spectrum out;
  out.eigenvalues.reserve(2 * rho_spectrum.size());
  for (double lambda : rho_spectrum.eigenvalues) {
    out.eigenvalues.push_back(base + slope * lambda);
  }
  for (double lambda : rho_spectrum.eigenvalues) {
    out.eigenvalues.push_back(minus_scale * (dd - lambda));
  }
  return out;
}

double h_min(int d, double q) {
  Spectrum pure;
  pure.eigenvalues.assign(d, 0.0);
  if (d >= 1) pure.eigenvalues[0] = 1.0;
  return entropy_bits(switched_spectrum(d, q, pure));
}

double h_min_closed_form(int d, double q) {
  check_params(d, q);
  const double dd = d;
  const double noise = (1.0 - q) * (1.0 - q);
  const double top =
      (dd + 1.0 + q * (dd - 1.0) * (2.0 + q * (2.0 * dd - 1.0))) /
      (2.0 * dd * dd);
  const double plus_rest = (noise + 4.0 * q * (1.0 - q)) / (2.0 * dd);
  const double minus_first = noise / (2.0 * dd * dd) * (dd - 1.0);
  const double minus_rest = noise / (2.0 * dd);
  return -(plogp(top) + (dd - 1.0) * plogp(plus_rest) + plogp(minus_first) +
           (dd - 1.0) * plogp(minus_rest));
}

AnalyticCapacity holevo_analytic(int d, double q) {
  check_params(d, q);
  AnalyticCapacity out;
  out.entropy_control =
      von_neumann_entropy(reduced_control_state(d, q, ControlState::coherent(0.5)));
  out.h_min = h_min(d, q);
  out.chi = std::log2(static_cast<double>(d)) + out.entropy_control - out.h_min;
  return out;
}

double holevo_of_ensemble(const KrausChannel& ch, const Ensemble& ens) {
  if (ens.dim() != ch.dim_in()) {
    throw DimensionMismatch("holevo_of_ensemble: ensemble and channel dimensions differ");
  }
  ComplexMatrix average = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  double conditional = 0.0;
  for (const auto& e : ens.entries()) {
    const DensityMatrix out = apply(ch, e.state);
    average += e.probability * out.matrix();
    conditional += e.probability * von_neumann_entropy(out);
  }
  return von_neumann_entropy(DensityMatrix(std::move(average))) - conditional;
}

// ---------------------------------------------------------------------------
// Ensemble optimizer

namespace {

/// Channel action as a dense map on row-major vectorized operators:
/// vec(N(rho)) = T vec(rho) with T = sum_k K (x) conj(K).
class TransferMap {
 public:
  explicit TransferMap(const KrausChannel& ch)
      : dim_in_(ch.dim_in()), dim_out_(ch.dim_out()) {
    t_ = ComplexMatrix::Zero(dim_out_ * dim_out_, dim_in_ * dim_in_);
    for (const auto& k : ch.kraus_ops()) t_ += tensor(k, k.conjugate());
  }

  int dim_in() const { return dim_in_; }

  ComplexMatrix apply_pure(const ComplexVector& psi) const {
    ComplexMatrix rho = psi * psi.adjoint();
    const Eigen::Map<const ComplexVector> vin(rho.data(), rho.size());
    const ComplexVector vout = t_ * vin;
    return Eigen::Map<const ComplexMatrix>(vout.data(), dim_out_, dim_out_);
  }

 private:
  int dim_in_;
  int dim_out_;
  ComplexMatrix t_;
};

double hermitian_entropy(const ComplexMatrix& m) {
  // Symmetrize away the roundoff the transfer map leaves in m - m^dagger.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  return entropy_bits(hermitian_spectrum(h));
}

/// Pure-state ensemble with probabilities proportional to weights^2. Outputs
/// and their entropies are cached so single-coordinate moves only pay for
/// one member plus the average.
class Candidate {
 public:
  Candidate(const TransferMap& map, std::vector<ComplexVector> vectors,
            std::vector<double> weights)
      : map_(&map), vectors_(std::move(vectors)), weights_(std::move(weights)) {
    for (auto& v : vectors_) v.normalize();
    outputs_.reserve(vectors_.size());
    entropies_.reserve(vectors_.size());
    for (const auto& v : vectors_) {
      outputs_.push_back(map.apply_pure(v));
      entropies_.push_back(hermitian_entropy(outputs_.back()));
    }
    chi_ = score(weights_);
  }

  double chi() const { return chi_; }
  std::size_t size() const { return vectors_.size(); }
  int dim() const { return map_->dim_in(); }
  long evaluations() const { return evaluations_; }

  /// Try shifting one real coordinate of member s's amplitude vector; keep the
  /// move if chi improves.
  bool try_vector_move(std::size_t s, int coord, double delta) {
    ComplexVector v = vectors_[s];
    const int entry = coord / 2;
    v(entry) += coord % 2 == 0 ? Complex{delta, 0.0} : Complex{0.0, delta};
    if (v.norm() == 0.0) return false;
    v.normalize();
    ComplexMatrix out = map_->apply_pure(v);
    double h = hermitian_entropy(out);
    std::swap(outputs_[s], out);
    std::swap(entropies_[s], h);
    const double trial = score(weights_);
    if (trial > chi_) {
      vectors_[s] = std::move(v);
      chi_ = trial;
      return true;
    }
    std::swap(outputs_[s], out);
    std::swap(entropies_[s], h);
    return false;
  }

  bool try_weight_move(std::size_t s, double delta) {
    std::vector<double> w = weights_;
    w[s] = std::abs(w[s] + delta);
    const double trial = score(w);
    if (trial > chi_) {
      weights_ = std::move(w);
      chi_ = trial;
      return true;
    }
    return false;
  }

  Ensemble to_ensemble() const {
    const auto probs = probabilities(weights_);
    std::vector<EnsembleEntry> entries;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (probs[i] > 0.0) {
        entries.push_back({probs[i], DensityMatrix::pure(vectors_[i])});
      }
    }
    // Renormalize after dropping zero-weight members.
    double total = 0.0;
    for (const auto& e : entries) total += e.probability;
    for (auto& e : entries) e.probability /= total;
    return Ensemble(std::move(entries));
  }

 private:
  static std::vector<double> probabilities(const std::vector<double>& w) {
    double total = 0.0;
    for (double x : w) total += x * x;
    std::vector<double> p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[i] * w[i] / total;
    return p;
  }

  double score(const std::vector<double>& w) {
    ++evaluations_;
    const auto probs = probabilities(w);
    ComplexMatrix average = ComplexMatrix::Zero(outputs_[0].rows(),
                                                outputs_[0].cols());
    double conditional = 0.0;
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
      average += probs[i] * outputs_[i];
      conditional += probs[i] * entropies_[i];
    }
    return hermitian_entropy(average) - conditional;
  }

  const TransferMap* map_;
  std::vector<ComplexVector> vectors_;
  std::vector<double> weights_;
  std::vector<ComplexMatrix> outputs_;
  std::vector<double> entropies_;
  double chi_ = 0.0;
  long evaluations_ = 0;
};

struct TrialOutcome {
  double chi = -1.0;
  std::vector<ComplexVector> vectors;
  std::vector<double> weights;
};

std::mt19937_64 trial_stream(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

TrialOutcome random_trial(const TransferMap& map, std::uint64_t seed,
                          int trial) {
  auto rng = trial_stream(seed, trial);
  const int d = map.dim_in();
  std::uniform_int_distribution<int> size_dist(2, d * d);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  TrialOutcome out;
  const int k = size_dist(rng);
  out.vectors.reserve(k);
  out.weights.reserve(k);
  for (int x = 0; x < k; ++x) {
    ComplexVector v(d);
    for (int l = 0; l < d; ++l) v(l) = Complex{gauss(rng), gauss(rng)};
    out.vectors.push_back(std::move(v));
    // sqrt of an exponential draw makes the probabilities Dirichlet(1).
    out.weights.push_back(std::sqrt(expo(rng)));
  }
  out.chi = Candidate(map, out.vectors, out.weights).chi();
  return out;
}

std::vector<TrialOutcome> run_trials(const TransferMap& map,
                                     const OptimizerOptions& options) {
  std::vector<TrialOutcome> results(static_cast<std::size_t>(options.trials));
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, options.trials));

  auto worker = [&](unsigned w) {
    for (int t = static_cast<int>(w); t < options.trials;
         t += static_cast<int>(threads)) {
      results[t] = random_trial(map, options.seed, t);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  return results;
}

}  // namespace

OptimizationResult optimize_ensemble(const KrausChannel& ch,
                                     const OptimizerOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const TransferMap map(ch);
  const int d = ch.dim_in();

  // Reduction runs in trial order, so the winner does not depend on which
  // thread finished first.
  const auto trials = run_trials(map, options);
  std::size_t winner = 0;
  for (std::size_t t = 1; t < trials.size(); ++t) {
    if (trials[t].chi > trials[winner].chi) winner = t;
  }
  Candidate best(map, trials[winner].vectors, trials[winner].weights);
  std::string description = "random trial " + std::to_string(winner) + " (" +
                            std::to_string(trials[winner].vectors.size()) + " states)";
  long evaluations = static_cast<long>(trials.size()) + best.evaluations();

  if (options.include_canonical) {
    std::vector<ComplexVector> basis;
    for (int x = 0; x < d; ++x) basis.push_back(ComplexVector::Unit(d, x));
    Candidate canonical(map, basis, std::vector<double>(d, 1.0));
    evaluations += canonical.evaluations();
    if (canonical.chi() >= best.chi()) {
      best = std::move(canonical);
      description = "uniform orthonormal basis (" + std::to_string(d) + " states)";
    }
  }
  const double sampled = best.chi();
  const long before_refine = best.evaluations();

  double step = 0.1;
  constexpr double kMinStep = 1e-7;
  constexpr double kMinGain = 1e-10;
  int sweeps = 0;
  while (step > kMinStep && sweeps < options.max_refine_sweeps) {
    ++sweeps;
    const double start = best.chi();
    for (std::size_t s = 0; s < best.size(); ++s) {
      for (int coord = 0; coord < 2 * d; ++coord) {
        if (!best.try_vector_move(s, coord, step)) {
          best.try_vector_move(s, coord, -step);
        }
      }
      if (!best.try_weight_move(s, step)) best.try_weight_move(s, -step);
    }
    if (best.chi() - start < kMinGain) step *= 0.5;
  }

  OptimizationResult result{best.to_ensemble(), best.chi(), {}};
  result.diagnostics.trials = options.trials;
  result.diagnostics.refine_sweeps = sweeps;
  result.diagnostics.evaluations =
      evaluations + (best.evaluations() - before_refine);
  result.diagnostics.best_sampled = sampled;
  result.diagnostics.refine_gain = best.chi() - sampled;
  result.diagnostics.best_description = description;
  return result;
}

CapacityReport capacity_report(int d, double q, double p,
                               const OptimizerOptions& options) {
  check_params(d, q);
  const ControlState ctrl = ControlState::coherent(p);
  const KrausChannel dep = depolarizing_channel(d, q);
  const KrausChannel channel = switch_with_control(dep, dep, ctrl);

  CapacityReport report;
  report.d = d;
  report.q = q;
  report.p = p;
  report.entropy_control = von_neumann_entropy(reduced_control_state(d, q, ctrl));
  if (p == 0.5) {
    const AnalyticCapacity analytic = holevo_analytic(d, q);
    report.chi_analytic = analytic.chi;
    report.h_min = analytic.h_min;
  }
  const OptimizationResult opt = optimize_ensemble(channel, options);
  report.chi_numeric = opt.chi;
  report.diagnostics = opt.diagnostics;
  return report;
}

}  // namespace qswitch
