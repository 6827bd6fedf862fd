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

#ifndef DOFLAB_BOUNDS_HPP
#define DOFLAB_BOUNDS_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Degrees-of-freedom outer bound for the homogeneous L-cell, K-user MIMO
// multiple access channel, evaluated in exact rational arithmetic.
//
// The bound is min(KLM, LN, lambda_d) with
//
//   lambda_d = KL * min(max(KM, (L-1)N), max((L-1)M, N)) / (K + L - 1).
//
// lambda_d comes from splitting the KL messages into KL overlapping sets,
// each a two-user MIMO interference channel with antenna pairs (KM, N) and
// ((L-1)M, (L-1)N). Every message lands in K + L - 1 of the sets, which
// gives the KL / (K + L - 1) scaling when the per-set bounds are summed.
namespace doflab::bounds {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

enum class BindingTerm { KLM, LN, LambdaFirst, LambdaSecond };
std::string_view to_string(BindingTerm term);

struct DofBoundReport {
  int K = 0, L = 0, M = 0, N = 0;
  std::int64_t cooperative_bound = 0; // min(KLM, LN)
  Rational per_set_bound;             // KL / (K+L-1) times the per-message-set bound
  Rational lambda_d;
  Rational final_bound;
  BindingTerm binding_term = BindingTerm::KLM;
};

// min(M1 + M2, N1 + N2, max(M1, N2), max(M2, N1)) for the two-user MIMO
// interference channel with antenna pairs (M1, N1) and (M2, N2).
std::int64_t two_user_ic_dof(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2);

// min((K+L-1)M, LN, max(KM, (L-1)N), max((L-1)M, N)). Requires L >= 2.
std::int64_t per_message_set_bound(int K, int L, int M, int N);

DofBoundReport dof_outer_bound(int K, int L, int M, int N);

enum class AntennaProfile {
  ExtraTransmit, // M = K*beta + beta, N = K*beta (transmit zero forcing)
  ExtraReceive,  // M = K*beta, N = K*beta + beta (null-space alignment)
};

struct Antennas {
  int M;
  int N;
};
Antennas antennas_for(AntennaProfile profile, int K, int beta);

// Two-cell optimum 2*K*beta. Cross-checks it against dof_outer_bound and
// throws FormulaRegressionError on disagreement.
std::int64_t converse_two_cell(int K, int beta, AntennaProfile profile);

} // namespace doflab::bounds

#endif // DOFLAB_BOUNDS_HPP
