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

#include "qswitch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qswitch/capacity.hpp"
#include "qswitch/channels.hpp"

namespace qswitch::oracle {

namespace {

std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

ComplexMatrix ginibre(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) g(r, c) = Complex{gauss(rng), gauss(rng)};
  }
  return g;
}

// Generalized Paulis written out from their action on basis vectors, kept
// separate from the channels module on purpose.
ComplexMatrix shift_op(int d, int i) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int l = 0; l < d; ++l) m((i + l) % d, l) = 1.0;
  return m;
}

ComplexMatrix phase_op(int d, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  const Complex two_pi_i{0.0, 2.0 * 3.14159265358979323846};
  for (int l = 0; l < d; ++l) {
    m(l, l) = std::exp(two_pi_i * static_cast<double>(j) *
                       static_cast<double>(l) / static_cast<double>(d));
  }
  return m;
}

ComplexMatrix control_density(const ControlState& ctrl) {
  const double p = ctrl.p();
  const double c = ctrl.is_coherent() ? std::sqrt(p * (1.0 - p)) : 0.0;
  ComplexMatrix m(2, 2);
  m << p, c, c, 1.0 - p;
  return m;
}

constexpr double kQGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

struct Tracker {
  ComparisonReport report;

  void record(double deviation, const WorstCase& where) {
    ++report.instances_tested;
    if (deviation > report.max_abs_deviation || std::isnan(deviation)) {
      report.max_abs_deviation = std::isnan(deviation)
                                     ? std::numeric_limits<double>::infinity()
                                     : deviation;
      report.worst = where;
    }
  }
};

std::uint64_t grid_seed(int d, int qi, int pi, int s) {
  return 1'000'000ull * d + 10'000ull * qi + 100ull * pi + s;
}

ComparisonReport analytic_vs_brute() {
  Tracker t;
  t.report.description =
      "closed-form switched depolarizing output vs explicit Kraus-pair sum";
  constexpr double kPGrid[] = {0.0, 0.3, 0.5, 1.0};
  for (int d = 2; d <= 4; ++d) {
    for (int qi = 0; qi < 5; ++qi) {
      for (int pi = 0; pi < 4; ++pi) {
        const ControlState ctrl = ControlState::coherent(kPGrid[pi]);
        for (int s = 0; s < 20; ++s) {
          const std::uint64_t seed = grid_seed(d, qi, pi, s);
          const DensityMatrix rho = random_density_matrix(d, seed);
          const double q = kQGrid[qi];
          const JointState analytic =
              switched_depolarizing_analytic(d, q, ctrl, rho);
          const JointState brute = brute_force_switch_output(d, q, ctrl, rho);
          t.record(max_abs_deviation(analytic.state.matrix(),
                                     brute.state.matrix()),
                   {d, q, kPGrid[pi], seed});
        }
      }
    }
  }
  return t.report;
}

ComparisonReport spectrum_vs_eigensolver() {
  Tracker t;
  t.report.description =
      "lambda+/lambda- spectrum formulas and block lemma vs generic "
      "eigensolver at p = 1/2";
  const ControlState plus = ControlState::coherent(0.5);
  for (int d = 2; d <= 5; ++d) {
    for (int qi = 0; qi < 5; ++qi) {
      for (int s = 0; s < 10; ++s) {
        const std::uint64_t seed = grid_seed(d, qi, 0, s);
        const DensityMatrix rho = random_density_matrix(d, seed);
        const double q = kQGrid[qi];
        const JointState out = switched_depolarizing_analytic(d, q, plus, rho);
        const Spectrum generic = hermitian_spectrum(out.state.matrix());
        const Spectrum formula = switched_spectrum(d, q, rho.spectrum());
        const Spectrum blocks = block_symmetric_spectrum(
            out.control_block(0, 0), out.control_block(0, 1));
        const double dev = std::max(spectrum_deviation(generic, formula),
                                    spectrum_deviation(generic, blocks));
        t.record(dev, {d, q, 0.5, seed});
      }
    }
  }
  return t.report;
}

ComparisonReport chi_vs_optimizer() {
  Tracker t;
  t.report.description =
      "analytic Holevo information vs numerical ensemble optimizer at p = 1/2";
  constexpr double kQs[] = {0.0, 0.5, 1.0};
  for (int d = 2; d <= 3; ++d) {
    for (int qi = 0; qi < 3; ++qi) {
      const double q = kQs[qi];
      const KrausChannel dep = depolarizing_channel(d, q);
      const KrausChannel ch =
          switch_with_control(dep, dep, ControlState::coherent(0.5));
      OptimizerOptions opts;
      opts.trials = 100;
      opts.seed = grid_seed(d, qi, 0, 0);
      const OptimizationResult opt = optimize_ensemble(ch, opts);
      const double analytic = holevo_analytic(d, q).chi;
      t.record(std::abs(opt.chi - analytic), {d, q, 0.5, opts.seed});
    }
  }
  return t.report;
}

ComparisonReport marginals() {
  Tracker t;
  t.report.description =
      "switch output marginals: target = I/d at q = 0, control = reduced "
      "control state for all q";
  constexpr double kPGrid[] = {0.3, 0.5, 0.8};
  for (int d = 2; d <= 4; ++d) {
    const ComplexMatrix mixed = identity(d) / static_cast<double>(d);
    for (int qi = 0; qi < 5; ++qi) {
      const double q = kQGrid[qi];
      const KrausChannel dep = depolarizing_channel(d, q);
      for (int pi = 0; pi < 3; ++pi) {
        const ControlState ctrl = ControlState::coherent(kPGrid[pi]);
        const DensityMatrix expected_ctrl = reduced_control_state(d, q, ctrl);
        for (int s = 0; s < 5; ++s) {
          const std::uint64_t seed = grid_seed(d, qi, pi, s);
          const DensityMatrix rho = random_density_matrix(d, seed);
          const JointState out = switch_apply(dep, dep, rho, ctrl);
          double dev = max_abs_deviation(out.control_marginal().matrix(),
                                         expected_ctrl.matrix());
          if (q == 0.0) {
            dev = std::max(dev, max_abs_deviation(
                                    out.target_marginal().matrix(), mixed));
          }
          t.record(dev, {d, q, kPGrid[pi], seed});
        }
      }
    }
  }
  return t.report;
}

ComparisonReport cptp() {
  Tracker t;
  t.report.description =
      "trace preservation sum W^dagger W = I of the switched depolarizing pair";
  for (int d = 2; d <= 4; ++d) {
    for (int qi = 0; qi < 5; ++qi) {
      const double q = kQGrid[qi];
      const KrausChannel dep = depolarizing_channel(d, q);
      t.record(is_cptp(switch_channel(dep, dep), 0.0).max_deviation,
               {d, q, 0.5, 0});
      t.record(is_cptp(switch_with_control(dep, dep, ControlState::coherent(0.5)),
                       0.0)
                   .max_deviation,
               {d, q, 0.5, 0});
    }
  }
  return t.report;
}

using SuiteFn = ComparisonReport (*)();

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"analytic-vs-brute", analytic_vs_brute},
    {"spectrum-vs-eigensolver", spectrum_vs_eigensolver},
    {"chi-vs-optimizer", chi_vs_optimizer},
    {"marginals", marginals},
    {"cptp", cptp},
};

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << x;
  return os.str();
}

}  // namespace

DensityMatrix random_density_matrix(int d, std::uint64_t seed) {
  if (d < 1) throw DimensionMismatch("random_density_matrix requires d >= 1");
  auto rng = stream_for(seed, 0x5eed);
  const ComplexMatrix g = ginibre(d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw DimensionMismatch("random_unitary requires d >= 1");
  auto rng = stream_for(seed, 0x0a17);
  const ComplexMatrix g = ginibre(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  return q;
}

JointState brute_force_switch_output(int d, double q, const ControlState& ctrl,
                                     const DensityMatrix& rho) {
  if (d < 2) throw std::invalid_argument("brute force requires d >= 2");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("depolarizing parameter q must lie in [0, 1]");
  }
  if (rho.dim() != d) throw DimensionMismatch("rho must be d x d");

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d) * d + 1);
  kraus.push_back(std::sqrt(q) * identity(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      kraus.push_back(std::sqrt(1.0 - q) / d * shift_op(d, i) * phase_op(d, j));
    }
  }

  const ComplexMatrix proj0 = ket_bra(2, 0, 0);
  const ComplexMatrix proj1 = ket_bra(2, 1, 1);
  const ComplexMatrix input = tensor(rho.matrix(), control_density(ctrl));
  ComplexMatrix out = ComplexMatrix::Zero(2 * d, 2 * d);
  for (const auto& ki : kraus) {
    for (const auto& kj : kraus) {
      const ComplexMatrix w = tensor(ki * kj, proj0) + tensor(kj * ki, proj1);
      out.noalias() += w * input * w.adjoint();
    }
  }
  return JointState{d, DensityMatrix(std::move(out))};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

ComparisonReport verify_equivalence(std::string_view suite, double tolerance) {
  for (const auto& s : kSuites) {
    if (suite == s.name) {
      ComparisonReport report = s.fn();
      report.suite = s.name;
      report.tolerance = tolerance;
      return report;
    }
  }
  throw UnknownSuite("unknown verification suite '" + std::string(suite) + "'");
}

std::string ComparisonReport::to_text() const {
  std::ostringstream os;
  os << "suite:              " << suite << "\n"
     << "description:        " << description << "\n"
     << "instances tested:   " << instances_tested << "\n"
     << "max abs deviation:  " << format_double(max_abs_deviation) << "\n"
     << "tolerance:          " << format_double(tolerance) << "\n"
     << "worst case:         d=" << worst.d << " q=" << worst.q
     << " p=" << worst.p << " seed=" << worst.seed << "\n"
     << "result:             " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string ComparisonReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["description"] = description;
  j["instances_tested"] = instances_tested;
  j["max_abs_deviation"] = max_abs_deviation;
  j["tolerance"] = tolerance;
  j["worst_case_parameters"] = {
      {"d", worst.d}, {"q", worst.q}, {"p", worst.p}, {"seed", worst.seed}};
  j["passed"] = passed();
  return j.dump(2);
}

ReferenceConstants reference_constants(int d) {
  if (d < 2) throw std::invalid_argument("reference constants need d >= 2");
  const long double dd = d;
  auto plogp = [](long double x) {
    return x > 0 ? x * std::log2(x) : 0.0L;
  };
  const long double half = 0.5L;
  const long double split = 1.0L / (2.0L * dd * dd);
  const long double h_ctrl = -(plogp(half + split) + plogp(half - split));
  const long double h_min =
      -(plogp((dd + 1) / (2 * dd * dd)) + plogp((dd - 1) / (2 * dd * dd)) +
        2 * (dd - 1) * plogp(1 / (2 * dd)));
  return {h_ctrl, h_min, std::log2(dd) + h_ctrl - h_min};
}

}  // namespace qswitch::oracle
