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

#include "doflab/schemes.hpp"

#include "doflab/errors.hpp"

#include <algorithm>
#include <string>

namespace doflab::schemes {

namespace {

int other_cell(int m) { return m == 1 ? 2 : 1; }

void require_two_cells(const NetworkConfig& c, std::string_view scheme) {
  if (c.L != 2)
    throw ConfigurationError(std::string(scheme) + " is defined for L = 2 only (got L = " + std::to_string(c.L) + ")");
}

void require_profile(const NetworkConfig& c, int beta, int want_m, int want_n, std::string_view scheme) {
  if (beta < 1)
    throw InputError("beta must be >= 1");
  if (c.M != want_m || c.N != want_n)
    throw ConfigurationError(std::string(scheme) + " needs M = " + std::to_string(want_m) + ", N = " +
                             std::to_string(want_n) + " for K = " + std::to_string(c.K) + ", beta = " +
                             std::to_string(beta) + " (got M = " + std::to_string(c.M) + ", N = " +
                             std::to_string(c.N) + ")");
}

} // namespace

std::string_view to_string(Scheme scheme) { return scheme == Scheme::ZF ? "ZF" : "NSIA"; }

PrecoderSet::PrecoderSet(int L, int K, std::vector<ComplexMatrix> precoders)
    : L_(L), K_(K), precoders_(std::move(precoders)) {
  if (L < 1 || K < 1 || precoders_.size() != static_cast<std::size_t>(L) * K)
    throw DimensionError("precoder set must hold L*K matrices");
  const auto cols = precoders_.front().cols();
  for (const auto& w : precoders_) {
    if (w.cols() != cols || w.rows() != precoders_.front().rows())
      throw DimensionError("precoders must share one M x beta shape");
    linalg::require_finite(w, "precoder");
    if (linalg::orthonormality_error(w) > 1e-8)
      throw InputError("precoder columns must be orthonormal");
  }
}

const ComplexMatrix& PrecoderSet::at(int l, int k) const {
  if (l < 1 || l > L_ || k < 1 || k > K_)
    throw IndexError("precoder index (" + std::to_string(l) + ", " + std::to_string(k) + ") out of range");
  return precoders_[static_cast<std::size_t>(l - 1) * K_ + (k - 1)];
}

ProjectorSet::ProjectorSet(std::vector<ComplexMatrix> projectors, bool row_orthonormalized)
    : projectors_(std::move(projectors)), row_orthonormalized_(row_orthonormalized) {
  if (projectors_.empty())
    throw DimensionError("projector set is empty");
  for (const auto& p : projectors_) {
    if (p.rows() != projectors_.front().rows() || p.cols() != projectors_.front().cols())
      throw DimensionError("projectors must share one shape");
    linalg::require_finite(p, "projector");
  }
}

const ComplexMatrix& ProjectorSet::at(int m) const {
  if (m < 1 || m > L())
    throw IndexError("projector index " + std::to_string(m) + " out of range");
  return projectors_[static_cast<std::size_t>(m - 1)];
}

PrecoderSet build_zf_precoders(const ChannelSet& cs, int beta) {
  const NetworkConfig& c = cs.config();
  require_two_cells(c, "zero forcing");
  require_profile(c, beta, c.K * beta + beta, c.K * beta, "zero forcing");

  std::vector<ComplexMatrix> precoders;
  for (int user_cell = 1; user_cell <= 2; ++user_cell) {
    const int victim = other_cell(user_cell);
    for (int k = 1; k <= c.K; ++k) {
      auto null = linalg::null_space_basis(cs.at(victim, user_cell, k), c.tol);
      if (null.dim() != beta)
        throw DegeneracyError("cross channel H_{" + std::to_string(victim) + "," + std::to_string(user_cell) +
                              std::to_string(k) + "} has null space of dimension " + std::to_string(null.dim()) +
                              ", expected " + std::to_string(beta));
      precoders.push_back(null.basis());
    }
  }
  return PrecoderSet(2, c.K, std::move(precoders));
}

ComplexMatrix nsia_projector(const std::vector<ComplexMatrix>& cross_channels, int beta, linalg::Tolerance tol,
                             bool orthonormalize) {
  if (cross_channels.empty())
    throw DimensionError("nsia_projector needs at least one cross channel");
  const auto n = cross_channels.front().rows();
  const auto rows = static_cast<Eigen::Index>(cross_channels.size()) * beta;

  // Row block k of P is N_k*, where N_k spans the left null space of H_k.
  ComplexMatrix p(rows, n);
  for (std::size_t k = 0; k < cross_channels.size(); ++k) {
    if (cross_channels[k].rows() != n)
      throw DimensionError("cross channels must share a row count");
    auto left_null = linalg::null_space_basis(cross_channels[k].adjoint(), tol);
    if (left_null.dim() != beta)
      throw DegeneracyError("left null space of cross channel " + std::to_string(k + 1) + " has dimension " +
                            std::to_string(left_null.dim()) + ", expected " + std::to_string(beta));
    p.middleRows(static_cast<Eigen::Index>(k) * beta, beta) = left_null.basis().adjoint();
  }
  if (linalg::numeric_rank(p, tol) != rows)
    throw DegeneracyError("stacked projector lost rank");
  return orthonormalize ? linalg::orthonormalize_rows(p, tol) : p;
}

NsiaScheme build_nsia(const ChannelSet& cs, int beta, bool orthonormalize_projectors) {
  const NetworkConfig& c = cs.config();
  require_two_cells(c, "null-space alignment");
  require_profile(c, beta, c.K * beta, c.K * beta + beta, "null-space alignment");

  std::vector<ComplexMatrix> projectors;
  for (int m = 1; m <= 2; ++m)
    projectors.push_back(nsia_projector(interference_channels(cs, m), beta, c.tol, orthonormalize_projectors));

  std::vector<ComplexMatrix> precoders;
  for (int user_cell = 1; user_cell <= 2; ++user_cell) {
    const int victim = other_cell(user_cell);
    for (int k = 1; k <= c.K; ++k) {
      auto null = linalg::null_space_basis_of_product(projectors[victim - 1], cs.at(victim, user_cell, k), c.tol);
      if (null.dim() != beta)
        throw DegeneracyError("projected cross channel P_" + std::to_string(victim) + " H_{" +
                              std::to_string(victim) + "," + std::to_string(user_cell) + std::to_string(k) +
                              "} has null space of dimension " + std::to_string(null.dim()) + ", expected " +
                              std::to_string(beta));
      precoders.push_back(null.basis());
    }
  }
  return {ProjectorSet(std::move(projectors), orthonormalize_projectors), PrecoderSet(2, c.K, std::move(precoders))};
}

ComplexMatrix aggregate_desired_channel(const ChannelSet& cs, const PrecoderSet& precoders, int m) {
  const NetworkConfig& c = cs.config();
  const auto beta = precoders.at(1, 1).cols();
  ComplexMatrix g(c.N, c.K * beta);
  for (int k = 1; k <= c.K; ++k)
    g.middleCols((k - 1) * beta, beta) = cs.at(m, m, k) * precoders.at(m, k);
  return g;
}

SchemeReport verify_scheme(const ChannelSet& cs, const PrecoderSet& precoders,
                           const std::optional<ProjectorSet>& projectors) {
  const NetworkConfig& c = cs.config();
  if (precoders.L() != c.L || precoders.K() != c.K)
    throw DimensionError("precoder set does not match the channel set's L, K");
  const ComplexMatrix& w0 = precoders.at(1, 1);
  if (w0.rows() != c.M)
    throw DimensionError("precoders must have M rows");
  const auto beta = w0.cols();
  const auto streams = c.K * beta;
  if (projectors) {
    if (projectors->L() != c.L)
      throw DimensionError("projector set does not match the channel set's L");
    if (projectors->at(1).rows() != streams || projectors->at(1).cols() != c.N)
      throw DimensionError("projectors must be K*beta x N");
  }

  SchemeReport report;
  report.scheme = projectors ? Scheme::NSIA : Scheme::ZF;
  report.beta = static_cast<int>(beta);
  report.residual_threshold = 10.0 * c.tol.rel();

  for (int m = 1; m <= c.L; ++m) {
    const double p_norm = projectors ? linalg::singular_values(projectors->at(m))(0) : 1.0;
    for (int l = 1; l <= c.L; ++l) {
      if (l == m)
        continue;
      for (int k = 1; k <= c.K; ++k) {
        const ComplexMatrix& h = cs.at(m, l, k);
        const ComplexMatrix seen = projectors ? ComplexMatrix(projectors->at(m) * h) : h;
        const double residual = (seen * precoders.at(l, k)).norm() / (p_norm * h.norm());
        report.residual_interference = std::max(report.residual_interference, residual);
        if (projectors)
          report.null_dims.push_back({m, k, linalg::null_space_basis_of_product(projectors->at(m), h, c.tol).dim()});
      }
    }
    const ComplexMatrix g = aggregate_desired_channel(cs, precoders, m);
    report.effective_rank.push_back(projectors ? linalg::numeric_rank_of_product(projectors->at(m), g, c.tol)
                                               : linalg::numeric_rank(g, c.tol));
  }

  report.decodable = report.residual_interference <= report.residual_threshold &&
                     std::all_of(report.effective_rank.begin(), report.effective_rank.end(),
                                 [&](Eigen::Index r) { return r == streams; });
  return report;
}

ProjectorSet pi_transform(const ProjectorSet& projectors, const std::vector<ComplexMatrix>& pi,
                          linalg::Tolerance tol) {
  if (pi.size() != static_cast<std::size_t>(projectors.L()))
    throw DimensionError("pi_transform needs one Pi per cell");
  const auto rows = projectors.at(1).rows();
  std::vector<ComplexMatrix> out;
  for (int m = 1; m <= projectors.L(); ++m) {
    const ComplexMatrix& p = pi[static_cast<std::size_t>(m - 1)];
    if (p.rows() != rows || p.cols() != rows)
      throw DimensionError("Pi must be K*beta x K*beta");
    if (linalg::numeric_rank(p, tol) != rows)
      throw RankError("Pi for cell " + std::to_string(m) + " is singular");
    out.push_back(p * projectors.at(m));
  }
  return ProjectorSet(std::move(out), false);
}

PrecoderSet random_precoders(const NetworkConfig& config, int beta, std::uint64_t seed) {
  config.validate();
  if (beta < 1 || beta > config.M)
    throw InputError("random precoders need 1 <= beta <= M");
  std::vector<ComplexMatrix> precoders;
  for (int l = 1; l <= config.L; ++l)
    for (int k = 1; k <= config.K; ++k) {
      linalg::Rng rng(linalg::mix_seed(seed, 0x7072ULL, l, k));
      const ComplexMatrix raw = linalg::random_matrix(config.M, beta, config.dist, rng);
      precoders.push_back(linalg::orthonormalize_rows(raw.adjoint(), config.tol).adjoint());
    }
  return PrecoderSet(config.L, config.K, std::move(precoders));
}

} // namespace doflab::schemes
