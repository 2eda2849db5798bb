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

#ifndef QSWITCH_SWEEP_HPP
#define QSWITCH_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/capacity.hpp"
#include "qswitch/oracle.hpp"

namespace qswitch::cli {

enum class Format { Csv, Json };

struct SweepConfig {
  std::vector<int> dims;
  std::vector<double> q_values;
  std::vector<double> p_values{0.5};
  int optimizer_trials = 200;
  std::uint64_t seed = 0;
  std::string output_path;  // empty means standard output
  Format format = Format::Csv;
  unsigned threads = 0;
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError on empty lists or out-of-range values.
void validate(const SweepConfig& cfg);

/// Parse "2,3,4" or "2..6" (or a mix such as "2,4..6").
std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
Format parse_format(std::string_view text);

/// One report per (d, q, p), in lexicographic (d, q, p) order. Rows run in
/// sequence with optimizer trials spread over cfg.threads; every row seeds its
/// optimizer from cfg.seed and its own grid position, so output is independent
/// of the thread count.
std::vector<CapacityReport> run_sweep(const SweepConfig& cfg);

/// Header: d,q,p,chi_analytic,chi_numeric,entropy_control,h_min. Reals use 12
/// significant digits; chi_analytic and h_min are empty off p = 1/2.
void write_csv(std::ostream& os, const std::vector<CapacityReport>& rows);
void write_json(std::ostream& os, const std::vector<CapacityReport>& rows);

/// Writes to cfg.output_path (or `fallback` when empty) in cfg.format.
void write_report(const SweepConfig& cfg,
                  const std::vector<CapacityReport>& rows,
                  std::ostream& fallback);

struct VerifyOutcome {
  int exit_code = kExitOk;
  oracle::ComparisonReport report;
};

/// Runs one oracle suite; exit_code is 0 iff the deviation is within
/// tolerance. Unknown suites throw oracle::UnknownSuite.
VerifyOutcome run_verify(std::string_view suite, double tolerance);

}  // namespace qswitch::cli

#endif  // QSWITCH_SWEEP_HPP
