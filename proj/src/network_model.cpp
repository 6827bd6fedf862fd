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

#include "doflab/network_model.hpp"

#include "doflab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

namespace doflab {

void NetworkConfig::validate() const {
  if (L < 1 || K < 1 || M < 1 || N < 1 || beta < 1)
    throw InputError("network dimensions L, K, M, N, beta must all be >= 1");
}

PowerPolicy::PowerPolicy(double rho, int beta) : rho_(rho), beta_(beta) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw InputError("rho must be a positive finite number");
  if (beta < 1)
    throw InputError("beta must be >= 1");
}

ChannelSet::ChannelSet(NetworkConfig config, std::vector<ComplexMatrix> channels)
    : config_(config), channels_(std::move(channels)) {
  config_.validate();
  const auto expected = static_cast<std::size_t>(config_.L) * config_.L * config_.K;
  if (channels_.size() != expected)
    throw DimensionError("channel set holds " + std::to_string(channels_.size()) + " matrices, expected " +
                         std::to_string(expected));
  for (const auto& h : channels_) {
    if (h.rows() != config_.N || h.cols() != config_.M)
      throw DimensionError("channel matrix shape differs from N x M");
    linalg::require_finite(h, "channel matrix");
  }
}

std::size_t ChannelSet::flat_index(int m, int l, int k) const {
  if (m < 1 || m > config_.L || l < 1 || l > config_.L)
    throw IndexError("cell index out of range 1.." + std::to_string(config_.L));
  if (k < 1 || k > config_.K)
    throw IndexError("user index out of range 1.." + std::to_string(config_.K));
  return (static_cast<std::size_t>(m - 1) * config_.L + (l - 1)) * config_.K + (k - 1);
}

const ComplexMatrix& ChannelSet::at(int m, int l, int k) const { return channels_[flat_index(m, l, k)]; }

ChannelSet generate_channels(const NetworkConfig& config) {
  config.validate();
  const Eigen::Index full_rank = std::min(config.M, config.N);
  std::vector<ComplexMatrix> channels;
  channels.reserve(static_cast<std::size_t>(config.L) * config.L * config.K);

  for (int m = 1; m <= config.L; ++m)
    for (int l = 1; l <= config.L; ++l)
      for (int k = 1; k <= config.K; ++k) {
        linalg::Rng rng(linalg::mix_seed(config.seed, m, l, k));
        ComplexMatrix h = linalg::random_matrix(config.N, config.M, config.dist, rng);
        while (linalg::numeric_rank(h, config.tol) < full_rank) {
          std::clog << "doflab: degenerate channel H_{" << m << "," << l << k << "} redrawn\n";
          h = linalg::random_matrix(config.N, config.M, config.dist, rng);
        }
        channels.push_back(std::move(h));
      }
  return ChannelSet(config, std::move(channels));
}

std::vector<ComplexMatrix> desired_channels(const ChannelSet& cs, int m) {
  std::vector<ComplexMatrix> out;
  for (int k = 1; k <= cs.config().K; ++k)
    out.push_back(cs.at(m, m, k));
  return out;
}

std::vector<ComplexMatrix> interference_channels(const ChannelSet& cs, int m) {
  if (m < 1 || m > cs.config().L)
    throw IndexError("cell index out of range 1.." + std::to_string(cs.config().L));
  std::vector<ComplexMatrix> out;
  for (int l = 1; l <= cs.config().L; ++l) {
    if (l == m)
      continue;
    for (int k = 1; k <= cs.config().K; ++k)
      out.push_back(cs.at(m, l, k));
  }
  return out;
}

} // namespace doflab
