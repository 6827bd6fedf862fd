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

#ifndef DOFLAB_REPORT_IO_HPP
#define DOFLAB_REPORT_IO_HPP

#include "doflab/bounds.hpp"
#include "doflab/simulation.hpp"

#include <json.hpp>

#include <string>

// JSON and CSV encodings of every report the CLI emits. JSON is canonical;
// CSV drops nested fields.
namespace doflab::report_io {

using Json = nlohmann::ordered_json;

Json to_json(const NetworkConfig& config);
NetworkConfig network_config_from_json(const Json& j);

// {"config": {...}, "channels": [{"m", "l", "k", "rows", "cols", "re": [...],
// "im": [...]}]} with entries flattened row-major, indices 1-based.
Json to_json(const ChannelSet& cs);
ChannelSet channel_set_from_json(const Json& j);

Json to_json(const bounds::DofBoundReport& report);
Json to_json(const schemes::SchemeReport& report);
Json to_json(const simulation::SlopeEstimate& estimate);
Json to_json(const simulation::LemmaTrialReport& report);

std::string to_csv(const bounds::DofBoundReport& report);
std::string to_csv(const schemes::SchemeReport& report);
// One row per grid point.
std::string to_csv(const simulation::SlopeEstimate& estimate);
std::string to_csv(const simulation::LemmaTrialReport& report);

} // namespace doflab::report_io

#endif // DOFLAB_REPORT_IO_HPP
