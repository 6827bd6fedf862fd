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

#ifndef DOFLAB_SIMULATION_HPP
#define DOFLAB_SIMULATION_HPP

#include "doflab/schemes.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doflab::simulation {

using schemes::PrecoderSet;
using schemes::ProjectorSet;

// Strictly increasing SNR points in dB.
class SnrGrid {
public:
  explicit SnrGrid(std::vector<double> points_db);
  // start, start + step, ... up to and including stop (within step/1e6).
  static SnrGrid from_range(double start_db, double step_db, double stop_db);

  const std::vector<double>& points_db() const { return points_db_; }
  std::size_t size() const { return points_db_.size(); }
  static double to_linear(double db);
  static double to_log2_linear(double db);

private:
  std::vector<double> points_db_;
};

struct SlopeEstimate {
  SnrGrid grid;
  std::vector<double> sum_rates; // bits per channel use
  double slope = 0.0;            // bits per unit of log2(rho)
  double intercept = 0.0;
  double r_squared = 0.0;

  double relative_error(double target) const;
  bool clean() const { return r_squared >= 0.99; }
};

struct LemmaTrialReport {
  std::string lemma;
  std::vector<int> dims; // (m, n, l) or (M, N)
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  // Lemma 2: how often each common dimension value was observed in passing
  // trials. Lemma 1: rank values observed.
  std::map<Eigen::Index, std::uint64_t> observed;

  bool all_passed() const { return passes == trials; }
};

enum class PSource { Random, Nsia };
std::string_view to_string(PSource source);
PSource parse_p_source(std::string_view name);

// Runs body(i) for i in [0, count) on `workers` threads (0 = hardware
// concurrency). Exceptions from any worker are rethrown on the caller.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

// Sum over cells of log2 det(I + (rho/beta) G G*), with G = G_m or P_m G_m.
// Throws ContractError for a non-decodable scheme or projectors without
// orthonormal rows, InputError for rho <= 0.
double sum_rate(const ChannelSet& cs, const PrecoderSet& precoders, const std::optional<ProjectorSet>& projectors,
                double rho);

// Projected rate with the coloured noise covariance P P* written out:
// log2 det(P P* + (rho/beta) P G G* P*) - log2 det(P P*). Valid for any
// full-row-rank P; equals sum_rate when the rows are orthonormal.
double projected_rate_general(const ChannelSet& cs, const PrecoderSet& precoders, const ProjectorSet& projectors,
                              double rho);

// Per cell log2 det(I + Q_int + Q_sig) - log2 det(I + Q_int), treating
// out-of-cell streams as noise.
double interference_limited_rate(const ChannelSet& cs, const PrecoderSet& precoders, double rho);

// Ordinary least squares of rates against log2(rho).
SlopeEstimate fit_slope(const SnrGrid& grid, std::vector<double> rates);

SlopeEstimate estimate_dof_slope(const ChannelSet& cs, const PrecoderSet& precoders,
                                 const std::optional<ProjectorSet>& projectors, const SnrGrid& grid,
                                 unsigned workers = 0);

SlopeEstimate estimate_interference_limited_slope(const ChannelSet& cs, const PrecoderSet& precoders,
                                                  const SnrGrid& grid, unsigned workers = 0);

// Independent A (m x n), B (n x l); passes when rank(AB) = min(m, l).
// Requires n >= max(m, l).
LemmaTrialReport monte_carlo_lemma1(int m, int n, int l, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers = 0, linalg::Tolerance tol = {});

struct Lemma2Sides {
  Eigen::Index null_dim;         // dim null(P H)
  Eigen::Index intersection_dim; // dim(ran(H) ∩ null(P))
};
Lemma2Sides lemma2_sides(const ComplexMatrix& p, const ComplexMatrix& h, linalg::Tolerance tol = {});

// Full-column-rank H (N x M) against P (M x N). With PSource::Nsia, P is the
// aligned projector for K = M / (N - M) cross channels including H, which
// needs (N - M) to divide M. Requires N > M.
LemmaTrialReport monte_carlo_lemma2(int M, int N, std::uint64_t trials, std::uint64_t seed, PSource source,
                                    unsigned workers = 0, linalg::Tolerance tol = {});

} // namespace doflab::simulation

#endif // DOFLAB_SIMULATION_HPP
