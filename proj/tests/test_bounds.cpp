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
#include "oracles.hpp"

#include <random>

using namespace doflab;
using namespace doflab::bounds;

TEST_CASE("two_user_ic_dof") {
  CHECK(two_user_ic_dof(1, 1, 1, 1) == 1);
  CHECK(two_user_ic_dof(4, 2, 2, 2) == 2);
  for (int m = 1; m <= 6; ++m)
    CHECK(two_user_ic_dof(m, m, m, m) == m);
  CHECK_THROWS_AS(two_user_ic_dof(0, 1, 1, 1), InputError);
  CHECK_THROWS_AS(two_user_ic_dof(1, 1, 1, -2), InputError);
}

TEST_CASE("per_message_set_bound") {
  CHECK(per_message_set_bound(2, 2, 3, 2) == 3);
  CHECK(per_message_set_bound(1, 2, 1, 1) == 1);
  CHECK_THROWS_AS(per_message_set_bound(1, 1, 1, 1), InputError);
  CHECK_THROWS_AS(per_message_set_bound(0, 2, 1, 1), InputError);
}

TEST_CASE("property: per-set bound is the two-user IC value of the split") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> k_dist(1, 10), l_dist(2, 6), a_dist(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int K = k_dist(rng), L = l_dist(rng), M = a_dist(rng), N = a_dist(rng);
    CAPTURE(K);
    CAPTURE(L);
    CAPTURE(M);
    CAPTURE(N);
    CHECK(per_message_set_bound(K, L, M, N) ==
          two_user_ic_dof(std::int64_t{K} * M, N, std::int64_t{L - 1} * M, std::int64_t{L - 1} * N));
  }
}

TEST_CASE("dof_outer_bound examples") {
  const auto a = dof_outer_bound(2, 2, 3, 2);
  CHECK(a.final_bound == Rational(4));
  CHECK(a.cooperative_bound == 4);
  CHECK(a.binding_term == BindingTerm::LN);

  CHECK(dof_outer_bound(2, 2, 2, 3).final_bound == Rational(4));

  const auto c = dof_outer_bound(1, 2, 2, 2);
  CHECK(c.final_bound == Rational(two_user_ic_dof(2, 2, 2, 2)));
  CHECK(c.final_bound == Rational(2));

  const auto d = dof_outer_bound(1, 2, 1, 1);
  CHECK(d.final_bound == Rational(1));
  CHECK(d.lambda_d == Rational(1));
  // KL = 2 sets of a one-DoF channel, each message counted twice.
  CHECK(d.per_set_bound == Rational(1));
}

TEST_CASE("dof_outer_bound rational values and binding terms") {
  // K=2, L=3, M=1, N=1: lambda = 6 * min(max(2,2), max(2,1)) / 4 = 3, LN = 3.
  const auto r = dof_outer_bound(2, 3, 1, 1);
  CHECK(r.lambda_d == Rational(3));
  CHECK(r.final_bound == Rational(3));
  CHECK(r.binding_term == BindingTerm::LN);

  // K=3, L=2, M=1, N=4: lambda = 6 * min(max(3,4), max(1,4)) / 4 = 6, KLM = 6.
  const auto tie = dof_outer_bound(3, 2, 1, 4);
  CHECK(tie.final_bound == Rational(6));
  CHECK(tie.binding_term == BindingTerm::KLM);

  // K=2, L=2, M=1, N=5: lambda = 4 * min(max(2,5), max(1,5)) / 3 = 20/3, KLM = 4.
  CHECK(dof_outer_bound(2, 2, 1, 5).lambda_d == Rational(20, 3));

  // K=2, L=2, M=3, N=4: first lambda 4*6/3 = 8, second 4*4/3 = 16/3 < LN = 8.
  const auto frac = dof_outer_bound(2, 2, 3, 4);
  CHECK(frac.final_bound == Rational(16, 3));
  CHECK(frac.binding_term == BindingTerm::LambdaSecond);
  CHECK(to_string(frac.final_bound) == "16/3");
  CHECK(to_double(frac.final_bound) == doctest::Approx(16.0 / 3.0));
  CHECK(to_string(BindingTerm::LambdaFirst) == "lambda_first");

  // K=1, L=3, M=4, N=1: first lambda 3*max(4,2)/3 = 4, second 3*max(8,1)/3 = 8, LN = 3.
  const auto ln = dof_outer_bound(1, 3, 4, 1);
  CHECK(ln.final_bound == Rational(3));
  CHECK(ln.binding_term == BindingTerm::LN);

  // K=2, L=3, M=1, N=4: KLM = 6, LN = 12, first lambda 6*8/4 = 12, second 6*4/4 = 6.
  const auto first = dof_outer_bound(2, 3, 1, 4);
  CHECK(first.lambda_d == Rational(6));
  CHECK(first.binding_term == BindingTerm::KLM);
}

TEST_CASE("dof_outer_bound matches the integer oracle on a grid") {
  for (int K = 1; K <= 6; ++K)
    for (int L = 2; L <= 5; ++L)
      for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= 8; ++N) {
          const auto r = dof_outer_bound(K, L, M, N);
          CHECK(r.final_bound * (K + L - 1) == Rational(oracle::scaled_outer_bound(K, L, M, N)));
          CHECK(r.final_bound <= Rational(r.cooperative_bound));
          CHECK(r.final_bound == std::min(Rational(r.cooperative_bound), r.per_set_bound));
        }
}

TEST_CASE("dof_outer_bound is non-decreasing in M and N") {
  for (int K = 1; K <= 5; ++K)
    for (int L = 2; L <= 4; ++L)
      for (int M = 1; M <= 10; ++M)
        for (int N = 1; N <= 10; ++N) {
          const Rational here = dof_outer_bound(K, L, M, N).final_bound;
          CHECK(dof_outer_bound(K, L, M + 1, N).final_bound >= here);
          CHECK(dof_outer_bound(K, L, M, N + 1).final_bound >= here);
        }
}

TEST_CASE("dof_outer_bound input errors") {
  CHECK_THROWS_AS(dof_outer_bound(1, 1, 2, 2), InputError);
  CHECK_THROWS_AS(dof_outer_bound(0, 2, 2, 2), InputError);
  CHECK_THROWS_AS(dof_outer_bound(1, 2, 0, 2), InputError);
  CHECK_THROWS_AS(dof_outer_bound(1, 2, 2, 0), InputError);
}

TEST_CASE("antennas_for") {
  const Antennas t = antennas_for(AntennaProfile::ExtraTransmit, 3, 2);
  CHECK(t.M == 8);
  CHECK(t.N == 6);
  const Antennas r = antennas_for(AntennaProfile::ExtraReceive, 5, 1);
  CHECK(r.M == 5);
  CHECK(r.N == 6);
  CHECK_THROWS_AS(antennas_for(AntennaProfile::ExtraReceive, 0, 1), InputError);
}

TEST_CASE("converse_two_cell examples") {
  CHECK(converse_two_cell(3, 2, AntennaProfile::ExtraTransmit) == 12);
  CHECK(converse_two_cell(1, 1, AntennaProfile::ExtraTransmit) == 2);
  CHECK(converse_two_cell(5, 1, AntennaProfile::ExtraReceive) == 10);
}

TEST_CASE("property: the two-cell bound equals 2 K beta for both antenna profiles") {
  for (int K = 1; K <= 20; ++K)
    for (int beta = 1; beta <= 8; ++beta)
      for (auto profile : {AntennaProfile::ExtraTransmit, AntennaProfile::ExtraReceive}) {
        const Antennas a = antennas_for(profile, K, beta);
        const std::int64_t target = 2 * K * beta;
        CHECK(dof_outer_bound(K, 2, a.M, a.N).final_bound == Rational(target));
        CHECK(converse_two_cell(K, beta, profile) == target);
        // Two independent integer routes: the general L-cell bound and the
        // L = 2 closed form.
        CHECK(oracle::scaled_outer_bound(K, 2, a.M, a.N) == target * (K + 1));
        CHECK(oracle::scaled_two_cell_bound(K, a.M, a.N) == target * (K + 1));
      }
}

TEST_CASE("Rational rendering") {
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
}
