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

#ifndef PATHSYM_CONFIG_HPP
#define PATHSYM_CONFIG_HPP

#include <map>
#include <string>

namespace pathsym {

/// Controls how infinite-dimensional single-mode inputs are truncated.
/// n_max is grown in powers of two until the discarded probability mass
/// drops below eps_trunc, up to n_max_cap.
struct TruncationPolicy {
  double eps_trunc = 1e-10;
  int n_max_cap = 4096;
};

struct Tolerances {
  double symmetry = 1e-8;   // residual threshold for the path-symmetry verdict
  double estimator = 1e-8;  // imaginary-part threshold for estimator tables
};

struct RunConfig {
  TruncationPolicy trunc;
  Tolerances tol;
  double report_tolerance_scale = 1.0;  // scales headline-report tolerances
};

/// Parses a key=value config file ('#' comments, blank lines ignored).
/// Unknown keys are an error so typos do not silently fall back to defaults.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Applies a single key=value override to a config, same keys as the file.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace pathsym

#endif
