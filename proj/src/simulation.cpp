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

#include "doflab/simulation.hpp"

#include "doflab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace doflab::simulation {

namespace {

constexpr std::uint64_t kLemma1Stream = 0x4c31;
constexpr std::uint64_t kLemma2Stream = 0x4c32;

double log2_det_hpd(const ComplexMatrix& a) {
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw InputError("eigen-decomposition failed");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lambda = eig.eigenvalues()(i);
    if (!(lambda > 0.0))
      throw InputError("covariance is not positive definite");
    sum += std::log2(lambda);
  }
  return sum;
}

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw InputError("rho must be a positive finite number");
}

double stream_power(const PrecoderSet& precoders, double rho) {
  return PowerPolicy(rho, static_cast<int>(precoders.at(1, 1).cols())).per_stream_power();
}

} // namespace

SnrGrid::SnrGrid(std::vector<double> points_db) : points_db_(std::move(points_db)) {
  if (points_db_.size() < 2)
    throw InputError("SNR grid needs at least 2 points");
  for (std::size_t i = 0; i < points_db_.size(); ++i) {
    if (!std::isfinite(points_db_[i]))
      throw InputError("SNR grid points must be finite");
    if (i > 0 && !(points_db_[i] > points_db_[i - 1]))
      throw InputError("SNR grid must be strictly increasing");
  }
}

SnrGrid SnrGrid::from_range(double start_db, double step_db, double stop_db) {
  if (!std::isfinite(start_db) || !std::isfinite(step_db) || !std::isfinite(stop_db) || !(step_db > 0.0))
    throw InputError("SNR range needs finite start/stop and a positive step");
  std::vector<double> points;
  const double slack = step_db * 1e-6;
  for (std::size_t i = 0;; ++i) {
    const double p = start_db + static_cast<double>(i) * step_db;
    if (p > stop_db + slack)
      break;
    points.push_back(p);
  }
  return SnrGrid(std::move(points));
}

double SnrGrid::to_linear(double db) { return std::pow(10.0, db / 10.0); }

double SnrGrid::to_log2_linear(double db) { return db / 10.0 * std::log2(10.0); }

double SlopeEstimate::relative_error(double target) const {
  if (target == 0.0)
    return std::abs(slope);
  return std::abs(slope - target) / std::abs(target);
}

std::string_view to_string(PSource source) { return source == PSource::Random ? "random" : "nsia"; }

PSource parse_p_source(std::string_view name) {
  if (name == "random")
    return PSource::Random;
  if (name == "nsia" || name == "nsia-constructed")
    return PSource::Nsia;
  throw InputError("unknown P source '" + std::string(name) + "'");
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

double sum_rate(const ChannelSet& cs, const PrecoderSet& precoders, const std::optional<ProjectorSet>& projectors,
                double rho) {
  require_rho(rho);
  if (projectors) {
    for (int m = 1; m <= projectors->L(); ++m)
      if (!projectors->row_orthonormalized() || linalg::orthonormality_error(projectors->at(m).adjoint()) > 1e-8)
        throw ContractError("sum_rate needs projectors with orthonormal rows (white projected noise)");
  }
  const auto report = schemes::verify_scheme(cs, precoders, projectors);
  if (!report.decodable)
    throw ContractError("sum_rate called on a scheme that is not decodable");

  const double power = stream_power(precoders, rho);
  double total = 0.0;
  for (int m = 1; m <= cs.config().L; ++m) {
    const ComplexMatrix g = schemes::aggregate_desired_channel(cs, precoders, m);
    const ComplexMatrix effective = projectors ? ComplexMatrix(projectors->at(m) * g) : g;
    // log2 det(I + c G G*) = sum log2(1 + c s_i^2)
    const Eigen::VectorXd s = linalg::singular_values(effective);
    for (Eigen::Index i = 0; i < s.size(); ++i)
      total += std::log2(1.0 + power * s(i) * s(i));
  }
  return total;
}

double projected_rate_general(const ChannelSet& cs, const PrecoderSet& precoders, const ProjectorSet& projectors,
                              double rho) {
  require_rho(rho);
  const double power = stream_power(precoders, rho);
  double total = 0.0;
  for (int m = 1; m <= cs.config().L; ++m) {
    const ComplexMatrix& p = projectors.at(m);
    const ComplexMatrix pg = p * schemes::aggregate_desired_channel(cs, precoders, m);
    const ComplexMatrix noise = p * p.adjoint();
    total += log2_det_hpd(noise + power * pg * pg.adjoint()) - log2_det_hpd(noise);
  }
  return total;
}

double interference_limited_rate(const ChannelSet& cs, const PrecoderSet& precoders, double rho) {
  require_rho(rho);
  const NetworkConfig& c = cs.config();
  if (precoders.L() != c.L || precoders.K() != c.K || precoders.at(1, 1).rows() != c.M)
    throw DimensionError("precoder set does not match the channel set");
  const double power = stream_power(precoders, rho);
  double total = 0.0;
  for (int m = 1; m <= c.L; ++m) {
    ComplexMatrix interference = ComplexMatrix::Identity(c.N, c.N);
    ComplexMatrix signal = ComplexMatrix::Zero(c.N, c.N);
    for (int l = 1; l <= c.L; ++l)
      for (int k = 1; k <= c.K; ++k) {
        const ComplexMatrix hw = cs.at(m, l, k) * precoders.at(l, k);
        (l == m ? signal : interference) += power * hw * hw.adjoint();
      }
    total += log2_det_hpd(interference + signal) - log2_det_hpd(interference);
  }
  return total;
}

SlopeEstimate fit_slope(const SnrGrid& grid, std::vector<double> rates) {
  if (rates.size() != grid.size())
    throw DimensionError("one rate per grid point is required");
  const auto n = static_cast<double>(grid.size());
  std::vector<double> x;
  for (double db : grid.points_db())
    x.push_back(SnrGrid::to_log2_linear(db));

  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(rates.begin(), rates.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (rates[i] - mean_y);
    syy += (rates[i] - mean_y) * (rates[i] - mean_y);
  }

  SlopeEstimate est{grid, std::move(rates)};
  est.slope = sxy / sxx;
  est.intercept = mean_y - est.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = est.sum_rates[i] - (est.intercept + est.slope * x[i]);
    ss_res += r * r;
  }
  // A perfectly flat series is fitted exactly.
  est.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return est;
}

SlopeEstimate estimate_dof_slope(const ChannelSet& cs, const PrecoderSet& precoders,
                                 const std::optional<ProjectorSet>& projectors, const SnrGrid& grid,
                                 unsigned workers) {
  std::vector<double> rates(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    rates[i] = sum_rate(cs, precoders, projectors, SnrGrid::to_linear(grid.points_db()[i]));
  });
  return fit_slope(grid, std::move(rates));
}

SlopeEstimate estimate_interference_limited_slope(const ChannelSet& cs, const PrecoderSet& precoders,
                                                  const SnrGrid& grid, unsigned workers) {
  std::vector<double> rates(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    rates[i] = interference_limited_rate(cs, precoders, SnrGrid::to_linear(grid.points_db()[i]));
  });
  return fit_slope(grid, std::move(rates));
}

LemmaTrialReport monte_carlo_lemma1(int m, int n, int l, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers, linalg::Tolerance tol) {
  if (m < 1 || n < 1 || l < 1)
    throw InputError("lemma1: dimensions must be >= 1");
  if (n < std::max(m, l))
    throw InputError("lemma1: requires n >= max(m, l)");
  if (trials < 1)
    throw InputError("lemma1: trials must be >= 1");

  const Eigen::Index expected = std::min(m, l);
  std::vector<Eigen::Index> ranks(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    linalg::Rng rng(linalg::mix_seed(seed, kLemma1Stream, t));
    const ComplexMatrix a = linalg::random_matrix(m, n, linalg::Distribution::ComplexGaussian, rng);
    const ComplexMatrix b = linalg::random_matrix(n, l, linalg::Distribution::ComplexGaussian, rng);
    ranks[t] = linalg::numeric_rank_of_product(a, b, tol);
  });

  LemmaTrialReport report{"lemma1", {m, n, l}, trials, 0, {}};
  for (auto r : ranks) {
    ++report.observed[r];
    if (r == expected)
      ++report.passes;
  }
  return report;
}

Lemma2Sides lemma2_sides(const ComplexMatrix& p, const ComplexMatrix& h, linalg::Tolerance tol) {
  if (p.cols() != h.rows())
    throw DimensionError("lemma2: P must have as many columns as H has rows");
  return {linalg::null_space_basis_of_product(p, h, tol).dim(),
          linalg::intersection_dim(linalg::range_basis(h, tol), linalg::null_space_basis(p, tol), tol)};
}

LemmaTrialReport monte_carlo_lemma2(int M, int N, std::uint64_t trials, std::uint64_t seed, PSource source,
                                    unsigned workers, linalg::Tolerance tol) {
  if (M < 1 || N < 1)
    throw InputError("lemma2: dimensions must be >= 1");
  if (N <= M)
    throw InputError("lemma2: requires N > M");
  if (trials < 1)
    throw InputError("lemma2: trials must be >= 1");
  const int beta = N - M;
  if (source == PSource::Nsia && M % beta != 0)
    throw InputError("lemma2: aligned P needs (N - M) to divide M");
  const int users = M / beta;

  std::vector<std::optional<Lemma2Sides>> sides(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    linalg::Rng rng(linalg::mix_seed(seed, kLemma2Stream, t));
    const auto draw_h = [&] {
      ComplexMatrix h = linalg::random_matrix(N, M, linalg::Distribution::ComplexGaussian, rng);
      while (linalg::numeric_rank(h, tol) < M)
        h = linalg::random_matrix(N, M, linalg::Distribution::ComplexGaussian, rng);
      return h;
    };
    const ComplexMatrix h = draw_h();
    ComplexMatrix p;
    if (source == PSource::Random) {
      p = linalg::random_matrix(M, N, linalg::Distribution::ComplexGaussian, rng);
    } else {
      std::vector<ComplexMatrix> cross{h};
      for (int k = 1; k < users; ++k)
        cross.push_back(draw_h());
      p = schemes::nsia_projector(cross, beta, tol);
    }
    sides[t] = lemma2_sides(p, h, tol);
  });

  LemmaTrialReport report{"lemma2", {M, N}, trials, 0, {}};
  for (const auto& s : sides)
    if (s->null_dim == s->intersection_dim) {
      ++report.passes;
      ++report.observed[s->null_dim];
    }
  return report;
}

} // namespace doflab::simulation
