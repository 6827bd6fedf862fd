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

#ifndef DOFLAB_SCHEMES_HPP
#define DOFLAB_SCHEMES_HPP

#include "doflab/network_model.hpp"

#include <optional>
#include <string_view>
#include <vector>

// Linear two-cell schemes reaching 2*K*beta degrees of freedom.
//
// Transmit zero forcing (M = K*beta + beta, N = K*beta): user k of cell mbar
// precodes inside null(H_{m, mbar k}), so it is invisible at the other base
// station.
//
// Null-space interference alignment (M = K*beta, N = K*beta + beta): base
// station m builds its receive plane P_m from the left null spaces of the K
// out-of-cell channels. Each projected cross channel P_m H_{m, mbar k} then
// loses beta dimensions of rank, and user mbar k precodes inside that null
// space.
namespace doflab::schemes {

enum class Scheme { ZF, NSIA };
std::string_view to_string(Scheme scheme);

// W_{lk} in C^{M x beta}, 1-based (l, k).
class PrecoderSet {
public:
  PrecoderSet(int L, int K, std::vector<ComplexMatrix> precoders);

  int L() const { return L_; }
  int K() const { return K_; }
  const ComplexMatrix& at(int l, int k) const;

private:
  int L_;
  int K_;
  std::vector<ComplexMatrix> precoders_; // (l, k) row-major, 0-based
};

// P_m in C^{K*beta x N}, 1-based m.
class ProjectorSet {
public:
  ProjectorSet(std::vector<ComplexMatrix> projectors, bool row_orthonormalized);

  int L() const { return static_cast<int>(projectors_.size()); }
  const ComplexMatrix& at(int m) const;
  bool row_orthonormalized() const { return row_orthonormalized_; }

private:
  std::vector<ComplexMatrix> projectors_;
  bool row_orthonormalized_;
};

struct NsiaScheme {
  ProjectorSet projectors;
  PrecoderSet precoders;
};

struct NullDim {
  int m;
  int k; // out-of-cell user k of the other cell
  Eigen::Index dim;
};

struct SchemeReport {
  Scheme scheme = Scheme::ZF;
  int beta = 0;
  // max over (m, l != m, k) of ||[P_m] H_{m,lk} W_{lk}||_F / (||P_m||_2 ||H_{m,lk}||_F)
  double residual_interference = 0.0;
  double residual_threshold = 0.0;
  std::vector<Eigen::Index> effective_rank; // per cell: rank(G_m) or rank(P_m G_m)
  std::vector<NullDim> null_dims;           // NSIA only
  bool decodable = false;
};

// Requires L = 2, M = K*beta + beta, N = K*beta.
PrecoderSet build_zf_precoders(const ChannelSet& cs, int beta);

// Requires L = 2, M = K*beta, N = K*beta + beta. Rows of each P_m are
// orthonormalised unless `orthonormalize_projectors` is false, in which case
// P_m is the raw stack [N_{m,mbar 1} ... N_{m,mbar K}]*.
NsiaScheme build_nsia(const ChannelSet& cs, int beta, bool orthonormalize_projectors = true);

// P_m built from the out-of-cell channels of one base station. Exposed for the
// lemma harnesses, which reuse the construction on ad-hoc channel lists.
ComplexMatrix nsia_projector(const std::vector<ComplexMatrix>& cross_channels, int beta, linalg::Tolerance tol,
                             bool orthonormalize = true);

// G_m = [H_{m,m1} W_{m1} ... H_{m,mK} W_{mK}].
ComplexMatrix aggregate_desired_channel(const ChannelSet& cs, const PrecoderSet& precoders, int m);

SchemeReport verify_scheme(const ChannelSet& cs, const PrecoderSet& precoders,
                           const std::optional<ProjectorSet>& projectors = std::nullopt);

// {Pi_m P_m}. Each Pi_m must be an invertible K*beta x K*beta matrix.
ProjectorSet pi_transform(const ProjectorSet& projectors, const std::vector<ComplexMatrix>& pi,
                          linalg::Tolerance tol = {});

// Orthonormal M x beta precoders drawn independently of the channels; the
// non-designed baseline.
PrecoderSet random_precoders(const NetworkConfig& config, int beta, std::uint64_t seed);

} // namespace doflab::schemes

#endif // DOFLAB_SCHEMES_HPP
