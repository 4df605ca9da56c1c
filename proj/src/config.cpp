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

#include "pathsym/config.hpp"

#include <fstream>
#include <stdexcept>

namespace pathsym {

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "eps_trunc") {
      cfg.trunc.eps_trunc = std::stod(value);
    } else if (key == "n_max_cap") {
      cfg.trunc.n_max_cap = std::stoi(value);
    } else if (key == "tol_symmetry") {
      cfg.tol.symmetry = std::stod(value);
    } else if (key == "tol_estimator") {
      cfg.tol.estimator = std::stod(value);
    } else if (key == "report_tolerance_scale") {
      cfg.report_tolerance_scale = std::stod(value);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "' has non-numeric value '" +
                                value + "'");
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected key=value");
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    apply_config_entry(base, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return base;
}

}  // namespace pathsym
