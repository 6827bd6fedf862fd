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

#include "doflab/cli.hpp"

#include "doflab/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace doflab::cli {

using report_io::Json;

const std::vector<std::string> kSweepColumns{"K",     "beta",           "scheme",    "seed",
                                             "M",     "N",              "bound",     "slope",
                                             "relative_error", "r_squared", "residual_interference",
                                             "decodable"};

namespace {

const std::map<std::string, Command> kCommands{
    {"bound", Command::Bound},   {"zf", Command::Zf},         {"nsia", Command::Nsia},
    {"slope", Command::Slope},   {"lemma1", Command::Lemma1}, {"lemma2", Command::Lemma2},
    {"sweep", Command::Sweep}};

std::string command_name(Command c) {
  for (const auto& [name, value] : kCommands)
    if (value == c)
      return name;
  return "unknown";
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object())
    throw InputError(where + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw InputError("unknown key '" + item.key() + "' in " + where);
}

template <typename T>
void read_if(const Json& j, const char* key, T& target) {
  if (!j.contains(key))
    return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config key '") + key + "': " + e.what());
  }
}

template <typename T>
void read_if(const Json& j, const char* key, std::optional<T>& target) {
  if (!j.contains(key))
    return;
  T value{};
  read_if(j, key, value);
  target = value;
}

std::uint64_t resolve_seed(const ExperimentConfig& cfg) {
  if (cfg.seed)
    return *cfg.seed;
  if (const char* env = std::getenv("DOFLAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size())
        return value;
    } catch (const std::exception&) {
    }
    throw InputError("DOFLAB_SEED is not an unsigned integer");
  }
  return 0;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::optional<ChannelSet> load_replay(const ExperimentConfig& cfg) {
  if (cfg.channels_in.empty())
    return std::nullopt;
  return report_io::channel_set_from_json(read_json_file(cfg.channels_in));
}

bounds::AntennaProfile profile_for(const std::string& scheme) {
  if (scheme == "zf" || scheme == "random")
    return bounds::AntennaProfile::ExtraTransmit;
  if (scheme == "nsia")
    return bounds::AntennaProfile::ExtraReceive;
  throw InputError("unknown scheme '" + scheme + "' (expected zf, nsia or random)");
}

// Explicit --M/--N must agree with the scheme's antenna profile.
void check_antennas(const ExperimentConfig& cfg, const NetworkConfig& network) {
  if ((cfg.M && *cfg.M != network.M) || (cfg.N && *cfg.N != network.N))
    throw ConfigurationError("requested M/N do not match the scheme's antenna profile (M = " +
                             std::to_string(network.M) + ", N = " + std::to_string(network.N) + ")");
}

struct Output {
  Json json;
  std::string csv;
};

Json slope_case_json(const SlopeCase& sc) {
  return Json{{"network", report_io::to_json(sc.network)},
              {"scheme", sc.scheme},
              {"bound", sc.bound},
              {"scheme_report", report_io::to_json(sc.scheme_report)},
              {"slope", report_io::to_json(sc.estimate)},
              {"relative_error", sc.relative_error}};
}

Json sweep_row(const SlopeCase& sc) {
  return Json{{"K", sc.K},
              {"beta", sc.beta},
              {"scheme", sc.scheme},
              {"seed", sc.seed},
              {"M", sc.network.M},
              {"N", sc.network.N},
              {"bound", sc.bound},
              {"slope", sc.estimate.slope},
              {"relative_error", sc.relative_error},
              {"r_squared", sc.estimate.r_squared},
              {"residual_interference", sc.scheme_report.residual_interference},
              {"decodable", sc.scheme_report.decodable}};
}

std::string sweep_csv(const Json& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kSweepColumns.size(); ++i)
    os << (i ? "," : "") << kSweepColumns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < kSweepColumns.size(); ++i) {
      const Json& v = row.at(kSweepColumns[i]);
      os << (i ? "," : "");
      if (v.is_string())
        os << v.get<std::string>();
      else if (v.is_number_float())
        os << std::setprecision(17) << v.get<double>();
      else
        os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

// Threshold check for one slope case under --assert.
std::string slope_violation(const ExperimentConfig& cfg, const SlopeCase& sc) {
  std::ostringstream why;
  if (sc.scheme == "random") {
    if (!(sc.estimate.slope <= cfg.max_baseline_slope))
      why << "baseline slope " << sc.estimate.slope << " exceeds " << cfg.max_baseline_slope;
  } else {
    if (!sc.scheme_report.decodable)
      why << sc.scheme << " scheme is not decodable";
    else if (!(sc.relative_error <= cfg.tol_slope))
      why << "slope " << sc.estimate.slope << " is off 2K*beta = " << sc.bound << " by " << sc.relative_error
          << " (tolerance " << cfg.tol_slope << ")";
    else if (!(sc.estimate.r_squared >= cfg.min_r_squared))
      why << "r_squared " << sc.estimate.r_squared << " below " << cfg.min_r_squared;
  }
  return why.str();
}

Output run_command(const ExperimentConfig& cfg, std::vector<std::string>& failures) {
  const linalg::Tolerance tol(cfg.rel_rank_tol);
  const linalg::Distribution dist = linalg::parse_distribution(cfg.dist);
  Output out;
  out.json["command"] = command_name(cfg.command);

  switch (cfg.command) {
  case Command::Bound: {
    if (!cfg.M || !cfg.N)
      throw InputError("bound needs --M and --N");
    const auto report = bounds::dof_outer_bound(cfg.K, cfg.L, *cfg.M, *cfg.N);
    out.json["bound"] = report_io::to_json(report);
    // Flatten the headline numbers for quick grepping.
    out.json["final_bound"] = bounds::to_string(report.final_bound);
    out.json["final_bound_decimal"] = bounds::to_double(report.final_bound);
    out.csv = report_io::to_csv(report);
    break;
  }
  case Command::Zf:
  case Command::Nsia: {
    const bool zf = cfg.command == Command::Zf;
    auto replay = load_replay(cfg);
    NetworkConfig network;
    if (replay) {
      network = replay->config();
    } else {
      const auto a = bounds::antennas_for(profile_for(zf ? "zf" : "nsia"), cfg.K, cfg.beta);
      network = NetworkConfig{cfg.L, cfg.K, a.M, a.N, cfg.beta, resolve_seed(cfg), dist, tol};
      check_antennas(cfg, network);
    }
    const ChannelSet cs = replay ? *replay : generate_channels(network);
    if (!cfg.channels_out.empty())
      write_json_file(cfg.channels_out, report_io::to_json(cs));

    schemes::SchemeReport report;
    if (zf) {
      report = schemes::verify_scheme(cs, schemes::build_zf_precoders(cs, network.beta));
    } else {
      auto built = schemes::build_nsia(cs, network.beta);
      report = schemes::verify_scheme(cs, built.precoders, built.projectors);
    }
    out.json["network"] = report_io::to_json(network);
    out.json["bound"] = bounds::converse_two_cell(
        network.K, network.beta, zf ? bounds::AntennaProfile::ExtraTransmit : bounds::AntennaProfile::ExtraReceive);
    out.json["scheme_report"] = report_io::to_json(report);
    out.csv = report_io::to_csv(report);
    if (!report.decodable)
      failures.push_back(std::string(schemes::to_string(report.scheme)) + " scheme is not decodable");
    break;
  }
  case Command::Slope: {
    const auto grid = parse_snr_range(cfg.snr);
    auto replay = load_replay(cfg);
    const int K = replay ? replay->config().K : cfg.K;
    const int beta = replay ? replay->config().beta : cfg.beta;
    const auto sc = evaluate_slope_case(K, beta, cfg.scheme, resolve_seed(cfg), grid, dist, tol, cfg.workers, replay);
    if (!replay)
      check_antennas(cfg, sc.network);
    if (!cfg.channels_out.empty())
      write_json_file(cfg.channels_out,
                      report_io::to_json(replay ? *replay : generate_channels(sc.network)));
    out.json.update(slope_case_json(sc));
    out.csv = report_io::to_csv(sc.estimate);
    if (auto why = slope_violation(cfg, sc); !why.empty())
      failures.push_back(why);
    break;
  }
  case Command::Lemma1: {
    const auto report = simulation::monte_carlo_lemma1(cfg.lemma_m, cfg.lemma_n, cfg.lemma_l, cfg.trials,
                                                       resolve_seed(cfg), cfg.workers, tol);
    out.json["report"] = report_io::to_json(report);
    out.json["passes"] = report.passes;
    out.csv = report_io::to_csv(report);
    if (!report.all_passed())
      failures.push_back("lemma1: " + std::to_string(report.trials - report.passes) + " failing trials");
    break;
  }
  case Command::Lemma2: {
    const auto report =
        simulation::monte_carlo_lemma2(cfg.lemma_M, cfg.lemma_N, cfg.trials, resolve_seed(cfg),
                                       simulation::parse_p_source(cfg.p_source), cfg.workers, tol);
    out.json["report"] = report_io::to_json(report);
    out.json["passes"] = report.passes;
    out.csv = report_io::to_csv(report);
    if (!report.all_passed())
      failures.push_back("lemma2: " + std::to_string(report.trials - report.passes) + " failing trials");
    break;
  }
  case Command::Sweep: {
    const auto grid = parse_snr_range(cfg.snr);
    const auto ks = parse_int_range(cfg.k_range);
    const auto betas = parse_int_range(cfg.beta_range);
    const auto seeds = parse_int_range(cfg.seeds);
    if (cfg.schemes.empty())
      throw InputError("sweep needs at least one scheme");
    Json rows = Json::array();
    for (int K : ks)
      for (int beta : betas)
        for (const auto& scheme : cfg.schemes)
          for (int seed : seeds) {
            if (seed < 0)
              throw InputError("seeds must be non-negative");
            const auto sc = evaluate_slope_case(K, beta, scheme, static_cast<std::uint64_t>(seed), grid, dist, tol,
                                                cfg.workers);
            rows.push_back(sweep_row(sc));
            if (auto why = slope_violation(cfg, sc); !why.empty())
              failures.push_back("K=" + std::to_string(K) + " beta=" + std::to_string(beta) + " " + scheme +
                                 " seed=" + std::to_string(seed) + ": " + why);
          }
    out.csv = sweep_csv(rows);
    out.json["columns"] = kSweepColumns;
    out.json["rows"] = std::move(rows);
    break;
  }
  }
  if (cfg.timestamp)
    out.json["timestamp"] = utc_timestamp();
  return out;
}

void add_network_options(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--K", cfg.K, "users per cell");
  sub->add_option("--beta", cfg.beta, "streams per user");
  sub->add_option("--L", cfg.L, "cells");
  sub->add_option("--M", cfg.M, "antennas per user");
  sub->add_option("--N", cfg.N, "antennas per base station");
}

void add_common_options(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed (default: $DOFLAB_SEED, else 0)");
  sub->add_option("--dist", cfg.dist, "complex-gaussian | uniform-square");
  sub->add_option("--rel-rank-tol", cfg.rel_rank_tol, "relative singular-value cutoff");
  sub->add_option("--format", cfg.output_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", cfg.output_path, "report path (default: stdout)");
  sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
  sub->add_flag("--assert", cfg.assert_thresholds, "exit 2 when a verification threshold fails");
  sub->add_flag("!--no-timestamp", cfg.timestamp, "omit the report timestamp");
}

void add_slope_thresholds(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--snr", cfg.snr, "SNR grid start:step:stop in dB");
  sub->add_option("--tol-slope", cfg.tol_slope, "relative slope tolerance against 2K*beta");
  sub->add_option("--min-r2", cfg.min_r_squared, "minimum fit r^2");
  sub->add_option("--max-baseline-slope", cfg.max_baseline_slope, "ceiling for the random-precoder slope");
}

} // namespace

simulation::SnrGrid parse_snr_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size())
        throw InputError("");
    } catch (const std::exception&) {
      throw InputError("SNR range '" + text + "' is not start:step:stop");
    }
  }
  if (parts.size() != 3)
    throw InputError("SNR range '" + text + "' is not start:step:stop");
  return simulation::SnrGrid::from_range(parts[0], parts[1], parts[2]);
}

std::vector<int> parse_int_range(const std::string& text) {
  int lo = 0, hi = 0;
  char colon = 0;
  std::istringstream is(text);
  if (!(is >> lo))
    throw InputError("range '" + text + "' is not a:b");
  if (is >> colon) {
    if (colon != ':' || !(is >> hi))
      throw InputError("range '" + text + "' is not a:b");
  } else {
    hi = lo;
  }
  if (is >> colon)
    throw InputError("range '" + text + "' is not a:b");
  if (hi < lo)
    throw InputError("range '" + text + "' is empty");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    out.push_back(v);
  return out;
}

SlopeCase evaluate_slope_case(int K, int beta, const std::string& scheme, std::uint64_t seed,
                              const simulation::SnrGrid& grid, linalg::Distribution dist, linalg::Tolerance tol,
                              unsigned workers, const std::optional<ChannelSet>& replay) {
  const auto profile = profile_for(scheme);
  NetworkConfig network;
  if (replay) {
    network = replay->config();
  } else {
    const auto a = bounds::antennas_for(profile, K, beta);
    network = NetworkConfig{2, K, a.M, a.N, beta, seed, dist, tol};
  }
  const std::int64_t bound = bounds::converse_two_cell(K, beta, profile);

  const ChannelSet cs = replay ? *replay : generate_channels(network);
  schemes::SchemeReport report;
  std::optional<simulation::SlopeEstimate> estimate;
  if (scheme == "zf") {
    const auto w = schemes::build_zf_precoders(cs, beta);
    report = schemes::verify_scheme(cs, w);
    estimate = simulation::estimate_dof_slope(cs, w, std::nullopt, grid, workers);
  } else if (scheme == "nsia") {
    const auto built = schemes::build_nsia(cs, beta);
    report = schemes::verify_scheme(cs, built.precoders, built.projectors);
    estimate = simulation::estimate_dof_slope(cs, built.precoders, built.projectors, grid, workers);
  } else {
    const auto w = schemes::random_precoders(network, beta, linalg::mix_seed(seed, 0x726e64));
    report = schemes::verify_scheme(cs, w);
    estimate = simulation::estimate_interference_limited_slope(cs, w, grid, workers);
  }
  SlopeCase sc{K, beta, scheme, seed, network, bound, report, *estimate};
  sc.relative_error = sc.estimate.relative_error(static_cast<double>(sc.bound));
  return sc;
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  reject_unknown_keys(j,
                      {"command", "network", "grid", "trials", "scheme", "assert", "tol_slope", "min_r_squared",
                       "max_baseline_slope", "lemma", "sweep", "channels_in", "channels_out", "timestamp",
                       "workers", "output_format", "output_path"},
                      "config");
  ExperimentConfig cfg;
  std::string command;
  read_if(j, "command", command);
  const auto it = kCommands.find(command);
  if (it == kCommands.end())
    throw InputError("config 'command' must be one of bound, zf, nsia, slope, lemma1, lemma2, sweep");
  cfg.command = it->second;

  if (j.contains("network")) {
    const Json& n = j.at("network");
    reject_unknown_keys(n, {"L", "K", "M", "N", "beta", "seed", "dist", "rel_rank_tol"}, "network");
    read_if(n, "L", cfg.L);
    read_if(n, "K", cfg.K);
    read_if(n, "M", cfg.M);
    read_if(n, "N", cfg.N);
    read_if(n, "beta", cfg.beta);
    read_if(n, "seed", cfg.seed);
    read_if(n, "dist", cfg.dist);
    read_if(n, "rel_rank_tol", cfg.rel_rank_tol);
  }
  if (j.contains("grid")) {
    reject_unknown_keys(j.at("grid"), {"snr_db"}, "grid");
    read_if(j.at("grid"), "snr_db", cfg.snr);
  }
  if (j.contains("lemma")) {
    const Json& l = j.at("lemma");
    reject_unknown_keys(l, {"m", "n", "l", "M", "N", "p_source"}, "lemma");
    read_if(l, "m", cfg.lemma_m);
    read_if(l, "n", cfg.lemma_n);
    read_if(l, "l", cfg.lemma_l);
    read_if(l, "M", cfg.lemma_M);
    read_if(l, "N", cfg.lemma_N);
    read_if(l, "p_source", cfg.p_source);
  }
  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    reject_unknown_keys(s, {"K_range", "beta_range", "schemes", "seeds"}, "sweep");
    read_if(s, "K_range", cfg.k_range);
    read_if(s, "beta_range", cfg.beta_range);
    read_if(s, "schemes", cfg.schemes);
    read_if(s, "seeds", cfg.seeds);
  }
  read_if(j, "trials", cfg.trials);
  read_if(j, "scheme", cfg.scheme);
  read_if(j, "assert", cfg.assert_thresholds);
  read_if(j, "tol_slope", cfg.tol_slope);
  read_if(j, "min_r_squared", cfg.min_r_squared);
  read_if(j, "max_baseline_slope", cfg.max_baseline_slope);
  read_if(j, "channels_in", cfg.channels_in);
  read_if(j, "channels_out", cfg.channels_out);
  read_if(j, "timestamp", cfg.timestamp);
  read_if(j, "workers", cfg.workers);
  read_if(j, "output_format", cfg.output_format);
  read_if(j, "output_path", cfg.output_path);
  if (cfg.output_format != "json" && cfg.output_format != "csv")
    throw InputError("output_format must be json or csv");
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"doflab: degrees-of-freedom bounds and two-cell alignment schemes for the multicell MIMO MAC"};
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON experiment config (replaces subcommand flags)");

  ExperimentConfig cfg;

  auto* bound = app.add_subcommand("bound", "outer bound min(KLM, LN, lambda_d)");
  add_network_options(bound, cfg);
  add_common_options(bound, cfg);

  auto* zf = app.add_subcommand("zf", "build and verify transmit zero forcing");
  auto* nsia = app.add_subcommand("nsia", "build and verify null-space interference alignment");
  for (auto* sub : {zf, nsia}) {
    add_network_options(sub, cfg);
    add_common_options(sub, cfg);
    sub->add_option("--channels-in", cfg.channels_in, "replay a saved channel set");
    sub->add_option("--channels-out", cfg.channels_out, "save the channel set as JSON");
  }

  auto* slope = app.add_subcommand("slope", "fit the high-SNR sum-rate slope");
  add_network_options(slope, cfg);
  add_common_options(slope, cfg);
  add_slope_thresholds(slope, cfg);
  slope->add_option("--scheme", cfg.scheme, "zf | nsia | random")->check(CLI::IsMember({"zf", "nsia", "random"}));
  slope->add_option("--channels-in", cfg.channels_in, "replay a saved channel set");
  slope->add_option("--channels-out", cfg.channels_out, "save the channel set as JSON");

  auto* lemma1 = app.add_subcommand("lemma1", "Monte Carlo: rank(AB) = min(m, l)");
  add_common_options(lemma1, cfg);
  lemma1->add_option("--m", cfg.lemma_m);
  lemma1->add_option("--n", cfg.lemma_n);
  lemma1->add_option("--l", cfg.lemma_l);
  lemma1->add_option("--trials", cfg.trials);

  auto* lemma2 = app.add_subcommand("lemma2", "Monte Carlo: dim null(PH) = dim(ran H ∩ null P)");
  add_common_options(lemma2, cfg);
  lemma2->add_option("--M", cfg.lemma_M);
  lemma2->add_option("--N", cfg.lemma_N);
  lemma2->add_option("--trials", cfg.trials);
  lemma2->add_option("--p-source", cfg.p_source, "random | nsia");

  auto* sweep = app.add_subcommand("sweep", "bound and slope table over K, beta, scheme, seed");
  add_common_options(sweep, cfg);
  add_slope_thresholds(sweep, cfg);
  sweep->add_option("--K-range", cfg.k_range, "a:b");
  sweep->add_option("--beta-range", cfg.beta_range, "a:b");
  sweep->add_option("--schemes", cfg.schemes, "zf nsia random")->delimiter(',');
  sweep->add_option("--seeds", cfg.seeds, "a:b");

  const std::map<CLI::App*, Command> by_sub{{bound, Command::Bound}, {zf, Command::Zf},
                                            {nsia, Command::Nsia},   {slope, Command::Slope},
                                            {lemma1, Command::Lemma1}, {lemma2, Command::Lemma2},
                                            {sweep, Command::Sweep}};

  std::vector<std::string> storage{"doflab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (!config_path.empty()) {
      if (!app.get_subcommands().empty())
        throw InputError("--config cannot be combined with a subcommand");
      cfg = experiment_config_from_json(read_json_file(config_path));
    } else if (app.get_subcommands().empty()) {
      err << app.help();
      return kInvalidInput;
    } else {
      cfg.command = by_sub.at(app.get_subcommands().front());
    }

    std::vector<std::string> failures;
    const Output result = run_command(cfg, failures);
    const std::string text = cfg.output_format == "csv" ? result.csv : result.json.dump(2) + "\n";
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output_path);
      if (!file)
        throw InputError("cannot write '" + cfg.output_path + "'");
      file << text;
    }

    if (cfg.assert_thresholds && !failures.empty()) {
      for (const auto& f : failures)
        err << "doflab: verification failed: " << f << '\n';
      return kVerificationFailed;
    }
    return kOk;
  } catch (const Error& e) {
    err << "doflab: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "doflab: " << e.what() << '\n';
    return kInvalidInput;
  }
}

} // namespace doflab::cli
