// SPDX-License-Identifier: Apache-2.0
//
// doflab: degrees-of-freedom toolkit for multicell MIMO multiple access channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DOFLAB_CLI_HPP
#define DOFLAB_CLI_HPP

#include "doflab/bounds.hpp"
#include "doflab/report_io.hpp"
#include "doflab/simulation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace doflab::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

enum class Command { Bound, Zf, Nsia, Slope, Lemma1, Lemma2, Sweep };

// Everything one batch run needs. Mirrors the JSON config document:
//
//   {"command": "slope",
//    "network": {"L", "K", "M", "N", "beta", "seed", "dist", "rel_rank_tol"},
//    "grid": {"snr_db": "60:10:100"},
//    "trials": 1000,
//    "scheme": "zf" | "nsia" | "random",
//    "assert": true, "tol_slope": 0.03, "min_r_squared": 0.999,
//    "max_baseline_slope": 0.5,
//    "lemma": {"m", "n", "l", "M", "N", "p_source"},
//    "sweep": {"K_range": "1:3", "beta_range": "1:1",
//              "schemes": ["zf", "nsia"], "seeds": "1:1"},
//    "channels_in": "...", "channels_out": "...",
//    "timestamp": true, "workers": 0,
//    "output_format": "json" | "csv", "output_path": "..."}
//
// Every key is optional except "command"; unknown keys are rejected.
struct ExperimentConfig {
  Command command = Command::Bound;

  int L = 2;
  int K = 1;
  std::optional<int> M;
  std::optional<int> N;
  int beta = 1;
  std::optional<std::uint64_t> seed; // falls back to DOFLAB_SEED, then 0
  std::string dist = "complex-gaussian";
  double rel_rank_tol = linalg::Tolerance::kDefault;

  std::string snr = "60:10:100";
  std::uint64_t trials = 1000;

  std::string scheme = "nsia";
  bool assert_thresholds = false;
  double tol_slope = 0.03;
  double min_r_squared = 0.999;
  double max_baseline_slope = 0.5;

  int lemma_m = 2, lemma_n = 4, lemma_l = 3;
  int lemma_M = 2, lemma_N = 3;
  std::string p_source = "random";

  std::string k_range = "1:3";
  std::string beta_range = "1:1";
  std::vector<std::string> schemes{"zf", "nsia"};
  std::string seeds = "1:1";

  std::string channels_in;
  std::string channels_out;

  bool timestamp = true;
  unsigned workers = 0;
  std::string output_format = "json";
  std::string output_path; // empty = standard output
};

ExperimentConfig experiment_config_from_json(const report_io::Json& j);

// "start:step:stop" in dB.
simulation::SnrGrid parse_snr_range(const std::string& text);
// "a:b" or "a" inclusive integer range; empty ranges are rejected.
std::vector<int> parse_int_range(const std::string& text);

// One (K, beta, scheme, seed) slope experiment on freshly generated channels.
struct SlopeCase {
  int K = 0;
  int beta = 0;
  std::string scheme;
  std::uint64_t seed = 0;
  NetworkConfig network;
  std::int64_t bound = 0; // 2*K*beta, cross-checked against the outer bound
  schemes::SchemeReport scheme_report;
  simulation::SlopeEstimate estimate;
  double relative_error = 0.0;
};

SlopeCase evaluate_slope_case(int K, int beta, const std::string& scheme, std::uint64_t seed,
                              const simulation::SnrGrid& grid, linalg::Distribution dist, linalg::Tolerance tol,
                              unsigned workers, const std::optional<ChannelSet>& replay = std::nullopt);

// Column order of the sweep CSV.
extern const std::vector<std::string> kSweepColumns;

// Parses argv (without the program name), runs, writes the report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace doflab::cli

#endif // DOFLAB_CLI_HPP
