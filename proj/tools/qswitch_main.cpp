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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qswitch/oracle.hpp"
#include "qswitch/sweep.hpp"

namespace {

using qswitch::cli::kExitOk;
using qswitch::cli::kExitUsage;

int run_sweep_command(const std::string& dims, const std::string& qs,
                      const std::string& ps, int trials, std::uint64_t seed,
                      const std::string& out, const std::string& format,
                      unsigned threads) {
  qswitch::cli::SweepConfig cfg;
  cfg.dims = qswitch::cli::parse_int_list(dims);
  cfg.q_values = qswitch::cli::parse_real_list(qs);
  cfg.p_values = qswitch::cli::parse_real_list(ps);
  cfg.optimizer_trials = trials;
  cfg.seed = seed;
  cfg.output_path = out;
  cfg.format = qswitch::cli::parse_format(format);
  cfg.threads = threads;
  qswitch::cli::validate(cfg);
  const auto rows = qswitch::cli::run_sweep(cfg);
  qswitch::cli::write_report(cfg, rows, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Capacity of two depolarizing channels combined in a superposition of "
      "orders"};
  app.require_subcommand(1);

  std::string dims;
  std::string qs;
  std::string ps = "0.5";
  int trials = 200;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;

  auto* sweep = app.add_subcommand("sweep", "tabulate capacities over (d, q, p)");
  sweep->add_option("--dims", dims, "dimensions, e.g. 2,3 or 2..6")->required();
  sweep->add_option("--q", qs, "depolarizing parameters in [0,1], comma separated")
      ->required();
  sweep->add_option("--p", ps, "control weights in [0,1], comma separated")
      ->capture_default_str();
  sweep->add_option("--trials", trials, "random ensembles per row")
      ->capture_default_str();
  sweep->add_option("--seed", seed, "base random seed")->capture_default_str();
  sweep->add_option("--out", out, "output file (default: standard output)");
  sweep->add_option("--format", format, "csv or json")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)")
      ->capture_default_str();

  std::string suite;
  double tolerance = 1e-9;
  std::string report_format = "text";
  auto* verify = app.add_subcommand("verify", "run an oracle comparison suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--tol", tolerance, "maximum allowed deviation")
      ->capture_default_str();
  verify->add_option("--format", report_format, "text or json")
      ->capture_default_str();
  verify->add_option("--out", out, "also write the report to this file");
  verify->footer("suites: analytic-vs-brute, spectrum-vs-eigensolver, "
                 "chi-vs-optimizer, marginals, cptp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) {
      return run_sweep_command(dims, qs, ps, trials, seed, out, format, threads);
    }
    if (report_format != "text" && report_format != "json") {
      throw qswitch::cli::UsageError("--format must be text or json");
    }
    const auto outcome = qswitch::cli::run_verify(suite, tolerance);
    const std::string body = report_format == "json" ? outcome.report.to_json() + "\n"
                                              : outcome.report.to_text();
    std::cout << body;
    if (!out.empty()) {
      std::ofstream file(out, std::ios::binary | std::ios::trunc);
      if (!file) throw qswitch::cli::UsageError("cannot open output file '" + out + "'");
      file << body;
    }
    return outcome.exit_code;
  } catch (const qswitch::oracle::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n\n" << verify->help();
    return kExitUsage;
  } catch (const qswitch::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
