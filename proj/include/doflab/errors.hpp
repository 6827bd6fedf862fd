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

#ifndef DOFLAB_ERRORS_HPP
#define DOFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace doflab {

// Base of every error raised by the library. The CLI reports any Error as
// invalid input (exit code 1).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shape or ambient-dimension mismatch, or a zero dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Invalid argument value (non-finite entries, rho <= 0, bad ranges, ...).
class InputError : public Error {
public:
  using Error::Error;
};

// A matrix required to have full rank does not.
class RankError : public Error {
public:
  using Error::Error;
};

// Cell or user index outside 1..L / 1..K.
class IndexError : public Error {
public:
  using Error::Error;
};

// Antenna profile does not match the requested scheme.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

// A probability-zero rank loss during scheme construction.
class DegeneracyError : public Error {
public:
  using Error::Error;
};

// Operation called on inputs that violate its contract (e.g. rate of a
// non-decodable scheme).
class ContractError : public Error {
public:
  using Error::Error;
};

// Internal consistency check between two closed-form evaluations failed.
class FormulaRegressionError : public Error {
public:
  using Error::Error;
};

} // namespace doflab

#endif // DOFLAB_ERRORS_HPP
