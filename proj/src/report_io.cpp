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

#include "doflab/report_io.hpp"

#include "doflab/errors.hpp"

#include <iomanip>
#include <sstream>

namespace doflab::report_io {

namespace {

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    out += (i ? "x" : "") + std::to_string(dims[i]);
  return out;
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

} // namespace

Json to_json(const NetworkConfig& config) {
  return Json{{"L", config.L},
              {"K", config.K},
              {"M", config.M},
              {"N", config.N},
              {"beta", config.beta},
              {"seed", config.seed},
              {"dist", std::string(linalg::to_string(config.dist))},
              {"rel_rank_tol", config.tol.rel()}};
}

NetworkConfig network_config_from_json(const Json& j) {
  NetworkConfig c;
  c.L = required<int>(j, "L");
  c.K = required<int>(j, "K");
  c.M = required<int>(j, "M");
  c.N = required<int>(j, "N");
  c.beta = required<int>(j, "beta");
  c.seed = required<std::uint64_t>(j, "seed");
  c.dist = linalg::parse_distribution(required<std::string>(j, "dist"));
  c.tol = linalg::Tolerance(required<double>(j, "rel_rank_tol"));
  c.validate();
  return c;
}

Json to_json(const ChannelSet& cs) {
  const NetworkConfig& c = cs.config();
  Json channels = Json::array();
  for (int m = 1; m <= c.L; ++m)
    for (int l = 1; l <= c.L; ++l)
      for (int k = 1; k <= c.K; ++k) {
        const ComplexMatrix& h = cs.at(m, l, k);
        Json re = Json::array(), im = Json::array();
        for (Eigen::Index i = 0; i < h.rows(); ++i)
          for (Eigen::Index jj = 0; jj < h.cols(); ++jj) {
            re.push_back(h(i, jj).real());
            im.push_back(h(i, jj).imag());
          }
        channels.push_back(Json{{"m", m}, {"l", l}, {"k", k}, {"rows", h.rows()}, {"cols", h.cols()},
                                {"re", std::move(re)}, {"im", std::move(im)}});
      }
  return Json{{"config", to_json(c)}, {"channels", std::move(channels)}};
}

ChannelSet channel_set_from_json(const Json& j) {
  const NetworkConfig c = network_config_from_json(required<Json>(j, "config"));
  const Json entries = required<Json>(j, "channels");
  if (!entries.is_array())
    throw InputError("'channels' must be an array");

  const std::size_t count = static_cast<std::size_t>(c.L) * c.L * c.K;
  std::vector<ComplexMatrix> channels(count);
  std::vector<bool> seen(count, false);
  for (const auto& e : entries) {
    const int m = required<int>(e, "m"), l = required<int>(e, "l"), k = required<int>(e, "k");
    if (m < 1 || m > c.L || l < 1 || l > c.L || k < 1 || k > c.K)
      throw IndexError("channel index out of range in JSON document");
    const auto re = required<std::vector<double>>(e, "re");
    const auto im = required<std::vector<double>>(e, "im");
    if (re.size() != static_cast<std::size_t>(c.N) * c.M || im.size() != re.size())
      throw DimensionError("channel entry count differs from N*M");
    ComplexMatrix h(c.N, c.M);
    for (int i = 0; i < c.N; ++i)
      for (int jj = 0; jj < c.M; ++jj) {
        const auto idx = static_cast<std::size_t>(i) * c.M + jj;
        h(i, jj) = linalg::Complex(re[idx], im[idx]);
      }
    const std::size_t flat = (static_cast<std::size_t>(m - 1) * c.L + (l - 1)) * c.K + (k - 1);
    if (seen[flat])
      throw InputError("duplicate channel entry in JSON document");
    seen[flat] = true;
    channels[flat] = std::move(h);
  }
  for (bool s : seen)
    if (!s)
      throw InputError("JSON document is missing channel matrices");
  return ChannelSet(c, std::move(channels));
}

Json to_json(const bounds::DofBoundReport& r) {
  return Json{{"K", r.K},
              {"L", r.L},
              {"M", r.M},
              {"N", r.N},
              {"cooperative_bound", r.cooperative_bound},
              {"per_set_bound", bounds::to_string(r.per_set_bound)},
              {"lambda_d", bounds::to_string(r.lambda_d)},
              {"lambda_d_decimal", bounds::to_double(r.lambda_d)},
              {"final_bound", bounds::to_string(r.final_bound)},
              {"final_bound_decimal", bounds::to_double(r.final_bound)},
              {"binding_term", std::string(bounds::to_string(r.binding_term))}};
}

Json to_json(const schemes::SchemeReport& r) {
  Json null_dims = Json::array();
  for (const auto& d : r.null_dims)
    null_dims.push_back(Json{{"m", d.m}, {"k", d.k}, {"dim", d.dim}});
  return Json{{"scheme", std::string(schemes::to_string(r.scheme))},
              {"beta", r.beta},
              {"residual_interference", r.residual_interference},
              {"residual_threshold", r.residual_threshold},
              {"effective_rank", r.effective_rank},
              {"null_dims", std::move(null_dims)},
              {"decodable", r.decodable}};
}

Json to_json(const simulation::SlopeEstimate& e) {
  return Json{{"snr_db", e.grid.points_db()},
              {"sum_rates", e.sum_rates},
              {"slope", e.slope},
              {"intercept", e.intercept},
              {"r_squared", e.r_squared}};
}

Json to_json(const simulation::LemmaTrialReport& r) {
  Json observed = Json::object();
  for (const auto& [dim, count] : r.observed)
    observed[std::to_string(dim)] = count;
  return Json{{"lemma", r.lemma},
              {"dims", r.dims},
              {"trials", r.trials},
              {"passes", r.passes},
              {"observed", std::move(observed)}};
}

std::string to_csv(const bounds::DofBoundReport& r) {
  std::ostringstream os;
  os << "K,L,M,N,cooperative_bound,per_set_bound,lambda_d,final_bound,final_bound_decimal,binding_term\n";
  os << r.K << ',' << r.L << ',' << r.M << ',' << r.N << ',' << r.cooperative_bound << ','
     << bounds::to_string(r.per_set_bound) << ',' << bounds::to_string(r.lambda_d) << ','
     << bounds::to_string(r.final_bound) << ',' << number(bounds::to_double(r.final_bound)) << ','
     << bounds::to_string(r.binding_term) << '\n';
  return os.str();
}

std::string to_csv(const schemes::SchemeReport& r) {
  std::ostringstream os;
  os << "scheme,beta,residual_interference,residual_threshold,min_effective_rank,decodable\n";
  Eigen::Index min_rank = r.effective_rank.empty() ? 0 : r.effective_rank.front();
  for (auto v : r.effective_rank)
    min_rank = std::min(min_rank, v);
  os << schemes::to_string(r.scheme) << ',' << r.beta << ',' << number(r.residual_interference) << ','
     << number(r.residual_threshold) << ',' << min_rank << ',' << (r.decodable ? "true" : "false") << '\n';
  return os.str();
}

std::string to_csv(const simulation::SlopeEstimate& e) {
  std::ostringstream os;
  os << "snr_db,log2_rho,sum_rate,slope,intercept,r_squared\n";
  for (std::size_t i = 0; i < e.grid.size(); ++i) {
    const double db = e.grid.points_db()[i];
    os << number(db) << ',' << number(simulation::SnrGrid::to_log2_linear(db)) << ',' << number(e.sum_rates[i])
       << ',' << number(e.slope) << ',' << number(e.intercept) << ',' << number(e.r_squared) << '\n';
  }
  return os.str();
}

std::string to_csv(const simulation::LemmaTrialReport& r) {
  std::ostringstream os;
  os << "lemma,dims,trials,passes\n";
  os << r.lemma << ',' << join_dims(r.dims) << ',' << r.trials << ',' << r.passes << '\n';
  return os.str();
}

} // namespace doflab::report_io
