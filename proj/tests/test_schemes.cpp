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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "doflab/bounds.hpp"
#include "doflab/errors.hpp"
#include "doflab/schemes.hpp"
#include "oracles.hpp"

using namespace doflab;
using namespace doflab::schemes;
using bounds::AntennaProfile;

namespace {

ChannelSet channels_for(AntennaProfile profile, int K, int beta, std::uint64_t seed) {
  const auto a = bounds::antennas_for(profile, K, beta);
  NetworkConfig c;
  c.L = 2;
  c.K = K;
  c.M = a.M;
  c.N = a.N;
  c.beta = beta;
  c.seed = seed;
  return generate_channels(c);
}

int other(int m) { return m == 1 ? 2 : 1; }

std::vector<ComplexMatrix> random_pis(Eigen::Index n, std::uint64_t seed) {
  std::vector<ComplexMatrix> out;
  for (std::uint64_t m = 0; m < 2; ++m) {
    linalg::Rng rng(linalg::mix_seed(seed, 0x5049, m));
    out.push_back(linalg::random_matrix(n, n, linalg::Distribution::ComplexGaussian, rng));
  }
  return out;
}

} // namespace

TEST_CASE("zero forcing, K=2 beta=1") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraTransmit, 2, 1, 3);
  const PrecoderSet w = build_zf_precoders(cs, 1);
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k) {
      const ComplexMatrix& wk = w.at(l, k);
      CHECK(wk.rows() == 3);
      CHECK(wk.cols() == 1);
      const ComplexMatrix& h = cs.at(other(l), l, k);
      CHECK((h * wk).norm() / h.norm() <= 1e-10);
    }
  const SchemeReport r = verify_scheme(cs, w);
  CHECK(r.decodable);
  CHECK(r.scheme == Scheme::ZF);
  CHECK(r.effective_rank == std::vector<Eigen::Index>{2, 2});
  CHECK(r.null_dims.empty());
}

TEST_CASE("zero forcing with one user: the null vector of a 1x2 row") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraTransmit, 1, 1, 8);
  const PrecoderSet w = build_zf_precoders(cs, 1);
  for (int l = 1; l <= 2; ++l) {
    const ComplexMatrix& h = cs.at(other(l), l, 1);
    // (h1, h2) annihilates (-h2, h1); the precoder is a unit multiple of it.
    Eigen::VectorXcd closed(2);
    closed << -h(0, 1), h(0, 0);
    closed.normalize();
    CHECK((h * closed).norm() <= 1e-14);
    const linalg::Complex overlap = closed.dot(w.at(l, 1).col(0));
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("zero forcing rejects other antenna profiles") {
  NetworkConfig c;
  c.K = 2;
  c.M = 4;
  c.N = 2;
  CHECK_THROWS_AS(build_zf_precoders(generate_channels(c), 1), ConfigurationError);
  c.M = 3;
  c.L = 3;
  CHECK_THROWS_AS(build_zf_precoders(generate_channels(c), 1), ConfigurationError);
  const ChannelSet nsia_shape = channels_for(AntennaProfile::ExtraReceive, 2, 1, 0);
  CHECK_THROWS_AS(build_zf_precoders(nsia_shape, 1), ConfigurationError);
}

TEST_CASE("null-space alignment, K=2 beta=1") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 1, 5);
  const NsiaScheme s = build_nsia(cs, 1);
  for (int m = 1; m <= 2; ++m) {
    const ComplexMatrix& p = s.projectors.at(m);
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 3);
    CHECK((p * p.adjoint() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int k = 1; k <= 2; ++k)
      CHECK(linalg::null_space_basis_of_product(p, cs.at(m, other(m), k)).dim() == 1);
    const ComplexMatrix g = aggregate_desired_channel(cs, s.precoders, m);
    CHECK(oracle::lu_rank(p * g) == 2);
  }
  const SchemeReport r = verify_scheme(cs, s.precoders, s.projectors);
  CHECK(r.scheme == Scheme::NSIA);
  CHECK(r.decodable);
  CHECK(r.residual_interference <= 1e-10);
  REQUIRE(r.null_dims.size() == 4);
  for (const auto& nd : r.null_dims)
    CHECK(nd.dim == 1);
}

TEST_CASE("null-space alignment with one user: P annihilates the cross channel") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 1, 1, 2);
  const NsiaScheme s = build_nsia(cs, 1);
  for (int m = 1; m <= 2; ++m) {
    const ComplexMatrix& h = cs.at(m, other(m), 1);
    const ComplexMatrix& p = s.projectors.at(m);
    REQUIRE(p.rows() == 1);
    REQUIRE(p.cols() == 2);
    // Closed form in C^2: the row (b, -a) annihilates the column (a, b).
    Eigen::RowVectorXcd closed(2);
    closed << h(1, 0), -h(0, 0);
    closed.normalize();
    CHECK(std::abs((closed * h)(0, 0)) <= 1e-14);
    CHECK(std::abs(closed.dot(p.row(0))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs((p * h)(0, 0)) <= 1e-14);
    CHECK(linalg::null_space_basis_of_product(p, h).dim() == 1);
  }
  CHECK(verify_scheme(cs, s.precoders, s.projectors).decodable);
}

TEST_CASE("null-space alignment, K=2 beta=2") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 2, 11);
  const NsiaScheme s = build_nsia(cs, 2);
  const SchemeReport r = verify_scheme(cs, s.precoders, s.projectors);
  REQUIRE(r.null_dims.size() == 4);
  for (const auto& nd : r.null_dims)
    CHECK(nd.dim == 2);
  for (int m = 1; m <= 2; ++m) {
    CHECK(r.effective_rank[m - 1] == 4);
    CHECK(oracle::lu_rank(s.projectors.at(m) * aggregate_desired_channel(cs, s.precoders, m)) == 4);
  }
  CHECK(r.decodable);
}

TEST_CASE("null-space alignment rejects other antenna profiles") {
  const ChannelSet zf_shape = channels_for(AntennaProfile::ExtraTransmit, 2, 1, 0);
  CHECK_THROWS_AS(build_nsia(zf_shape, 1), ConfigurationError);
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 1, 0);
  CHECK_THROWS_AS(build_nsia(cs, 2), ConfigurationError);
}

TEST_CASE("raw stacked projectors give the same dimensions") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 3, 1, 21);
  const NsiaScheme raw = build_nsia(cs, 1, false);
  CHECK_FALSE(raw.projectors.row_orthonormalized());
  const SchemeReport r = verify_scheme(cs, raw.precoders, raw.projectors);
  CHECK(r.decodable);
  for (const auto& nd : r.null_dims)
    CHECK(nd.dim == 1);
}

TEST_CASE("random precoders are not aligned") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 1, 4);
  const PrecoderSet w = random_precoders(cs.config(), 1, 99);
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k)
      CHECK(linalg::orthonormality_error(w.at(l, k)) <= 1e-12);
  const SchemeReport r = verify_scheme(cs, w);
  CHECK(r.residual_interference > 0.05);
  CHECK(r.residual_interference <= 1.0);
  CHECK(r.effective_rank == std::vector<Eigen::Index>{2, 2});
  CHECK_FALSE(r.decodable);
}

TEST_CASE("pi_transform") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 1, 6);
  const NsiaScheme s = build_nsia(cs, 1);
  const SchemeReport before = verify_scheme(cs, s.precoders, s.projectors);

  SUBCASE("identity leaves projectors unchanged") {
    const ProjectorSet same = pi_transform(s.projectors, {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)});
    for (int m = 1; m <= 2; ++m)
      CHECK(same.at(m) == s.projectors.at(m));
  }
  SUBCASE("random invertible Pi keeps the dimensions") {
    const ProjectorSet turned = pi_transform(s.projectors, random_pis(2, 1));
    CHECK_FALSE(turned.row_orthonormalized());
    const SchemeReport after = verify_scheme(cs, s.precoders, turned);
    REQUIRE(after.null_dims.size() == before.null_dims.size());
    for (std::size_t i = 0; i < after.null_dims.size(); ++i)
      CHECK(after.null_dims[i].dim == 1);
    CHECK(after.effective_rank == before.effective_rank);
  }
  SUBCASE("singular Pi") {
    CHECK_THROWS_AS(pi_transform(s.projectors, {ComplexMatrix::Zero(2, 2), ComplexMatrix::Identity(2, 2)}),
                    RankError);
  }
  SUBCASE("wrong shape or count") {
    CHECK_THROWS_AS(pi_transform(s.projectors, {ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3)}),
                    DimensionError);
    CHECK_THROWS_AS(pi_transform(s.projectors, {ComplexMatrix::Identity(2, 2)}), DimensionError);
  }
}

TEST_CASE("verify_scheme shape checks") {
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 2, 1, 6);
  const ChannelSet other_k = channels_for(AntennaProfile::ExtraReceive, 1, 1, 6);
  const NsiaScheme s = build_nsia(cs, 1);
  CHECK_THROWS_AS(verify_scheme(other_k, s.precoders, s.projectors), DimensionError);
  const ProjectorSet wide({ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3)}, true);
  CHECK_THROWS_AS(verify_scheme(cs, s.precoders, wide), DimensionError);
}

TEST_CASE("set containers") {
  CHECK_THROWS_AS(PrecoderSet(2, 1, {ComplexMatrix::Identity(2, 1)}), DimensionError);
  CHECK_THROWS_AS(PrecoderSet(1, 1, {ComplexMatrix::Constant(2, 1, 1.0)}), InputError);
  const PrecoderSet w(1, 2, {ComplexMatrix::Identity(2, 1), ComplexMatrix::Identity(2, 1)});
  CHECK_THROWS_AS(w.at(1, 3), IndexError);
  CHECK_THROWS_AS(ProjectorSet({}, true), DimensionError);
  const ProjectorSet p({ComplexMatrix::Identity(1, 2)}, true);
  CHECK_THROWS_AS(p.at(2), IndexError);
}

TEST_CASE("property: zero forcing invariants over K, beta and seeds") {
  for (int K = 1; K <= 4; ++K)
    for (int beta = 1; beta <= 3; ++beta)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ChannelSet cs = channels_for(AntennaProfile::ExtraTransmit, K, beta, seed);
        const PrecoderSet w = build_zf_precoders(cs, beta);
        for (int l = 1; l <= 2; ++l)
          for (int k = 1; k <= K; ++k) {
            const ComplexMatrix& h = cs.at(other(l), l, k);
            CHECK((h * w.at(l, k)).norm() <= 10.0 * cs.config().tol.rel() * h.norm());
          }
        const SchemeReport r = verify_scheme(cs, w);
        CHECK(r.decodable);
        for (int m = 1; m <= 2; ++m)
          CHECK(oracle::lu_rank(aggregate_desired_channel(cs, w, m)) == K * beta);
        CHECK(2 * K * beta == bounds::converse_two_cell(K, beta, AntennaProfile::ExtraTransmit));
      }
}

TEST_CASE("property: alignment dimension chain over K, beta and seeds") {
  for (int K = 1; K <= 4; ++K)
    for (int beta = 1; beta <= 3; ++beta)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, K, beta, seed);
        const NsiaScheme s = build_nsia(cs, beta);
        for (int m = 1; m <= 2; ++m) {
          const ComplexMatrix& p = s.projectors.at(m);
          const auto null_p = linalg::null_space_basis(p);
          for (int k = 1; k <= K; ++k) {
            const ComplexMatrix& h = cs.at(m, other(m), k);
            CHECK(linalg::null_space_basis_of_product(p, h).dim() == beta);
            CHECK(linalg::intersection_dim(linalg::range_basis(h), null_p) == beta);
          }
        }
        const SchemeReport r = verify_scheme(cs, s.precoders, s.projectors);
        CHECK(r.decodable);
        int streams = 0;
        for (auto rank : r.effective_rank)
          streams += static_cast<int>(rank);
        CHECK(streams == bounds::converse_two_cell(K, beta, AntennaProfile::ExtraReceive));
      }
}

TEST_CASE("property: user order in the projector stack does not matter") {
  // Reversing the blocks is a permutation Pi, so the projector row space and
  // the resulting dimensions stay the same.
  const ChannelSet cs = channels_for(AntennaProfile::ExtraReceive, 3, 1, 17);
  for (int m = 1; m <= 2; ++m) {
    auto cross = interference_channels(cs, m);
    const ComplexMatrix forward = nsia_projector(cross, 1, {});
    std::reverse(cross.begin(), cross.end());
    const ComplexMatrix backward = nsia_projector(cross, 1, {});
    CHECK(linalg::intersection_dim(linalg::range_basis(forward.adjoint()), linalg::range_basis(backward.adjoint())) ==
          3);
  }
}
