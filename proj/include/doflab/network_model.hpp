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

#ifndef DOFLAB_NETWORK_MODEL_HPP
#define DOFLAB_NETWORK_MODEL_HPP

#include "doflab/linalg.hpp"

#include <cstdint>
#include <vector>

namespace doflab {

using linalg::ComplexMatrix;

// Dimensions of an L-cell network with K users per cell, M antennas per user
// and N per base station. Cells and users are numbered from 1 at every
// public interface.
struct NetworkConfig {
  int L = 2;
  int K = 1;
  int M = 1;
  int N = 1;
  int beta = 1; // streams per user; only the schemes read it
  std::uint64_t seed = 0;
  linalg::Distribution dist = linalg::Distribution::ComplexGaussian;
  linalg::Tolerance tol{};

  // Throws InputError unless every dimension is >= 1.
  void validate() const;
};

// Per-user transmit power rho (linear SNR over unit noise), split evenly over
// beta streams.
class PowerPolicy {
public:
  PowerPolicy(double rho, int beta);
  double rho() const { return rho_; }
  double per_stream_power() const { return rho_ / beta_; }

private:
  double rho_;
  int beta_;
};

// The constant channel family H_{m, lk} in C^{N x M}: base station m, user k
// of cell l.
class ChannelSet {
public:
  ChannelSet(NetworkConfig config, std::vector<ComplexMatrix> channels);

  const NetworkConfig& config() const { return config_; }
  std::size_t size() const { return channels_.size(); }

  // 1-based (m, l, k). Throws IndexError when out of range.
  const ComplexMatrix& at(int m, int l, int k) const;

private:
  std::size_t flat_index(int m, int l, int k) const;

  NetworkConfig config_;
  std::vector<ComplexMatrix> channels_; // ordered by (m, l, k), 0-based
};

// Draws all L*L*K matrices. Matrix (m, l, k) uses its own generator seeded
// from mix_seed(seed, m, l, k), so its value does not depend on the others.
ChannelSet generate_channels(const NetworkConfig& config);

// [H_{m,m1}, ..., H_{m,mK}].
std::vector<ComplexMatrix> desired_channels(const ChannelSet& cs, int m);

// H_{m,lk} for every l != m, ordered by (l, k).
std::vector<ComplexMatrix> interference_channels(const ChannelSet& cs, int m);

} // namespace doflab

#endif // DOFLAB_NETWORK_MODEL_HPP
