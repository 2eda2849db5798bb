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

#include "qswitch/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qswitch::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

int to_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

double to_real(std::string_view s) {
  // strtod honours the C locale, which is "C" unless the program changes it.
  const std::string buf(s);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw UsageError("not a number: '" + buf + "'");
  }
  return value;
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::uint64_t row_seed(std::uint64_t base, std::size_t row) {
  // splitmix64 step, so neighbouring rows get unrelated streams.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (row + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.dims.empty() || cfg.q_values.empty() || cfg.p_values.empty()) {
    throw UsageError("--dims, --q and --p need at least one value each");
  }
  for (int d : cfg.dims) {
    if (d < 2) throw UsageError("dimensions must be >= 2");
  }
  for (double q : cfg.q_values) {
    if (!(q >= 0.0 && q <= 1.0)) throw UsageError("q values must lie in [0, 1]");
  }
  for (double p : cfg.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p values must lie in [0, 1]");
  }
  if (cfg.optimizer_trials < 1) throw UsageError("--trials must be >= 1");
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view part : split_commas(text)) {
    const std::size_t dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(trim(part.substr(0, dots)));
    const int hi = to_int(trim(part.substr(dots + 2)));
    if (hi < lo) throw UsageError("empty range '" + std::string(part) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split_commas(text)) out.push_back(to_real(part));
  return out;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("--format must be csv or json");
}

std::vector<CapacityReport> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const auto dims = sorted_unique(cfg.dims);
  const auto qs = sorted_unique(cfg.q_values);
  const auto ps = sorted_unique(cfg.p_values);

  std::vector<CapacityReport> rows;
  rows.reserve(dims.size() * qs.size() * ps.size());
  for (int d : dims) {
    for (double q : qs) {
      for (double p : ps) {
        OptimizerOptions opts;
        opts.trials = cfg.optimizer_trials;
        opts.seed = row_seed(cfg.seed, rows.size());
        opts.threads = cfg.threads;
        rows.push_back(capacity_report(d, q, p, opts));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<CapacityReport>& rows) {
  os << "d,q,p,chi_analytic,chi_numeric,entropy_control,h_min\n";
  for (const auto& r : rows) {
    os << r.d << ',' << fmt12(r.q) << ',' << fmt12(r.p) << ','
       << (r.chi_analytic ? fmt12(*r.chi_analytic) : "") << ','
       << fmt12(r.chi_numeric) << ',' << fmt12(r.entropy_control) << ','
       << (r.h_min ? fmt12(*r.h_min) : "") << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<CapacityReport>& rows) {
  // Values go through the same 12-digit rounding as the CSV writer.
  auto rounded = [](double x) { return std::strtod(fmt12(x).c_str(), nullptr); };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["d"] = r.d;
    row["q"] = rounded(r.q);
    row["p"] = rounded(r.p);
    row["chi_analytic"] = r.chi_analytic
                              ? nlohmann::ordered_json(rounded(*r.chi_analytic))
                              : nlohmann::ordered_json(nullptr);
    row["chi_numeric"] = rounded(r.chi_numeric);
    row["entropy_control"] = rounded(r.entropy_control);
    row["h_min"] = r.h_min ? nlohmann::ordered_json(rounded(*r.h_min))
                           : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << '\n';
}

void write_report(const SweepConfig& cfg,
                  const std::vector<CapacityReport>& rows,
                  std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (cfg.format == Format::Csv) {
      write_csv(os, rows);
    } else {
      write_json(os, rows);
    }
  };
  if (cfg.output_path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot open output file '" + cfg.output_path + "'");
  emit(out);
  out.flush();
  if (!out) throw UsageError("failed writing '" + cfg.output_path + "'");
}

VerifyOutcome run_verify(std::string_view suite, double tolerance) {
  VerifyOutcome outcome;
  outcome.report = oracle::verify_equivalence(suite, tolerance);
  outcome.exit_code = outcome.report.passed() ? kExitOk : kExitVerifyFailed;
  return outcome;
}

}  // namespace qswitch::cli
