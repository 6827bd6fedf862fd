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

#include "doflab/bounds.hpp"

#include "doflab/errors.hpp"

#include <algorithm>
#include <array>

namespace doflab::bounds {

namespace {

void require_positive(std::initializer_list<std::int64_t> values, std::string_view what) {
  for (auto v : values)
    if (v < 1)
      throw InputError(std::string(what) + ": dimensions must be >= 1");
}

void require_network(int K, int L, int M, int N, std::string_view what) {
  require_positive({K, M, N}, what);
  if (L < 2)
    throw InputError(std::string(what) + ": requires L >= 2");
}

} // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

std::string_view to_string(BindingTerm term) {
  switch (term) {
  case BindingTerm::KLM:
    return "KLM";
  case BindingTerm::LN:
    return "LN";
  case BindingTerm::LambdaFirst:
    return "lambda_first";
  case BindingTerm::LambdaSecond:
    return "lambda_second";
  }
  return "unknown";
}

std::int64_t two_user_ic_dof(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2) {
  require_positive({m1, n1, m2, n2}, "two_user_ic_dof");
  return std::min({m1 + m2, n1 + n2, std::max(m1, n2), std::max(m2, n1)});
}

std::int64_t per_message_set_bound(int K, int L, int M, int N) {
  require_network(K, L, M, N, "per_message_set_bound");
  const std::int64_t k = K, l = L, m = M, n = N;
  return std::min({(k + l - 1) * m, l * n, std::max(k * m, (l - 1) * n), std::max((l - 1) * m, n)});
}

DofBoundReport dof_outer_bound(int K, int L, int M, int N) {
  require_network(K, L, M, N, "dof_outer_bound");
  const std::int64_t k = K, l = L, m = M, n = N;
  const std::int64_t sets = k * l;
  const std::int64_t overlap = k + l - 1;

  const Rational lambda_first(sets * std::max(k * m, (l - 1) * n), overlap);
  const Rational lambda_second(sets * std::max((l - 1) * m, n), overlap);

  DofBoundReport report;
  report.K = K;
  report.L = L;
  report.M = M;
  report.N = N;
  report.cooperative_bound = std::min(k * l * m, l * n);
  report.per_set_bound = Rational(sets * per_message_set_bound(K, L, M, N), overlap);
  report.lambda_d = std::min(lambda_first, lambda_second);

  const std::array<std::pair<Rational, BindingTerm>, 4> terms{{
      {Rational(k * l * m), BindingTerm::KLM},
      {Rational(l * n), BindingTerm::LN},
      {lambda_first, BindingTerm::LambdaFirst},
      {lambda_second, BindingTerm::LambdaSecond},
  }};
  // First term in listed order wins ties.
  auto best = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (it->first < best->first)
      best = it;
  report.final_bound = best->first;
  report.binding_term = best->second;
  return report;
}

Antennas antennas_for(AntennaProfile profile, int K, int beta) {
  require_positive({K, beta}, "antennas_for");
  if (profile == AntennaProfile::ExtraTransmit)
    return {K * beta + beta, K * beta};
  return {K * beta, K * beta + beta};
}

std::int64_t converse_two_cell(int K, int beta, AntennaProfile profile) {
  const Antennas a = antennas_for(profile, K, beta);
  const std::int64_t optimum = 2 * static_cast<std::int64_t>(K) * beta;
  const DofBoundReport report = dof_outer_bound(K, 2, a.M, a.N);
  if (report.final_bound != Rational(optimum))
    throw FormulaRegressionError("two-cell outer bound " + to_string(report.final_bound) + " != 2K*beta = " +
                                 std::to_string(optimum));
  return optimum;
}

} // namespace doflab::bounds
