// Copyright 2026 The pathsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATHSYM_ERRORS_HPP
#define PATHSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathsym {

/// Two states or operators were combined across different photon-number
/// sectors, or a matrix had the wrong shape for its sector.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated single-mode or two-mode expansion left more probability
/// mass outside the kept range than the configured tolerance allows.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double remainder, int n_max_hint)
      : std::runtime_error(what), remainder(remainder), n_max_hint(n_max_hint) {}

  double remainder;  // probability mass lost at the offending n_max
  int n_max_hint;    // smallest adequate n_max found, or -1 if none below the cap
};

/// A state had no usable amplitudes for the requested analysis
/// (e.g. every component below the amplitude floor).
class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The state carries no phase information (Var(J3) = 0), so estimator
/// normalization, robustness, and phase estimation are undefined.
class ZeroSensitivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum-likelihood phase estimation failed (flat likelihood, bad window).
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state-spec string or state file failed to parse. `position` is the
/// byte offset into the input; `expected` describes what would have been valid.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : std::runtime_error(what), position(position), expected(std::move(expected)) {}

  std::size_t position;
  std::string expected;
};

}  // namespace pathsym

#endif
