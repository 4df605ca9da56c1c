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

#include "pathsym/statespec.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <vector>

namespace pathsym {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct KeyValue {
  std::string key;
  double value;
  std::size_t value_pos;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

/// family ':' key '=' number (',' key '=' number)*
struct ParsedSpec {
  std::string family;
  std::vector<KeyValue> entries;
};

ParsedSpec parse_grammar(const std::string& text) {
  ParsedSpec out;
  std::size_t pos = 0;
  while (pos < text.size() && is_ident_char(text[pos])) ++pos;
  if (pos == 0) throw ParseError("state spec must start with a family name", 0, "family name");
  out.family = text.substr(0, pos);
  if (pos >= text.size() || text[pos] != ':') {
    throw ParseError("expected ':' after family '" + out.family + "'", pos, "':'");
  }
  ++pos;
  while (true) {
    const std::size_t key_start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    if (pos == key_start) {
      throw ParseError("expected a key name", pos, "key name");
    }
    KeyValue kv;
    kv.key = text.substr(key_start, pos - key_start);
    if (pos >= text.size() || text[pos] != '=') {
      throw ParseError("expected '=' after key '" + kv.key + "'", pos, "'='");
    }
    ++pos;
    kv.value_pos = pos;
    char* end = nullptr;
    kv.value = std::strtod(text.c_str() + pos, &end);
    const std::size_t consumed = end - (text.c_str() + pos);
    if (consumed == 0) {
      throw ParseError("value of '" + kv.key + "' is not numeric", pos, "number");
    }
    pos += consumed;
    out.entries.push_back(std::move(kv));
    if (pos >= text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("unexpected character after value", pos, "',' or end of spec");
    }
    ++pos;
  }
  return out;
}

std::map<std::string, KeyValue> require_keys(const ParsedSpec& spec,
                                             std::initializer_list<const char*> keys) {
  std::map<std::string, KeyValue> got;
  for (const KeyValue& kv : spec.entries) {
    if (!got.emplace(kv.key, kv).second) {
      throw ParseError("duplicate key '" + kv.key + "'", kv.value_pos, "distinct keys");
    }
  }
  for (const char* k : keys) {
    if (!got.count(k)) {
      throw ParseError("family '" + spec.family + "' needs key '" + k + "'",
                       spec.family.size(), std::string("key '") + k + "'");
    }
  }
  for (const auto& [key, kv] : got) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) {
      throw ParseError("family '" + spec.family + "' does not take key '" + key + "'",
                       kv.value_pos, "one of the documented keys");
    }
  }
  return got;
}

int require_integer(const KeyValue& kv) {
  if (kv.value != std::floor(kv.value) || std::abs(kv.value) > 1e9) {
    throw ParseError("key '" + kv.key + "' must be an integer", kv.value_pos, "integer");
  }
  return int(kv.value);
}

}  // namespace

MultiSectorState parse_state_spec(const std::string& text,
                                  const TruncationPolicy& policy) {
  if (text.rfind("file:", 0) == 0) {
    const std::string path = text.substr(5);
    if (path.empty()) throw ParseError("file spec needs a path", 5, "path");
    return load_state_file(path);
  }
  const ParsedSpec spec = parse_grammar(text);
  if (spec.family == "noon") {
    const auto kv = require_keys(spec, {"N"});
    const int n = require_integer(kv.at("N"));
    if (n < 1) {
      throw ParseError("noon needs N >= 1 (N=0 carries no phase information)",
                       kv.at("N").value_pos, "N >= 1");
    }
    return from_sector(noon(n));
  }
  if (spec.family == "twin") {
    const auto kv = require_keys(spec, {"n"});
    const int n = require_integer(kv.at("n"));
    if (n < 1) {
      throw ParseError("twin needs n >= 1", kv.at("n").value_pos, "n >= 1");
    }
    return twin_fock(n);
  }
  if (spec.family == "cs") {
    const auto kv = require_keys(spec, {"alpha", "r"});
    return squeezed_coherent_state(kv.at("alpha").value, kv.at("r").value, policy);
  }
  if (spec.family == "pairs") {
    const auto kv = require_keys(spec, {"r"});
    return pair_state(kv.at("r").value, policy);
  }
  if (spec.family == "numcoh") {
    const auto kv = require_keys(spec, {"n", "alpha"});
    return number_coherent_state(require_integer(kv.at("n")), kv.at("alpha").value,
                                 policy);
  }
  throw ParseError("unknown state family '" + spec.family + "'", 0,
                   "noon, twin, cs, pairs, numcoh, or file");
}

std::string canonical_spec(const std::string& text) {
  if (text.rfind("file:", 0) == 0) return text;
  const ParsedSpec spec = parse_grammar(text);
  static const std::map<std::string, std::vector<std::string>> kOrder = {
      {"noon", {"N"}},
      {"twin", {"n"}},
      {"cs", {"alpha", "r"}},
      {"pairs", {"r"}},
      {"numcoh", {"n", "alpha"}},
  };
  const auto it = kOrder.find(spec.family);
  if (it == kOrder.end()) {
    throw ParseError("unknown state family '" + spec.family + "'", 0,
                     "noon, twin, cs, pairs, numcoh, or file");
  }
  std::map<std::string, double> values;
  for (const KeyValue& kv : spec.entries) values[kv.key] = kv.value;
  std::string out = spec.family + ":";
  bool first = true;
  for (const std::string& key : it->second) {
    if (!values.count(key)) {
      throw ParseError("family '" + spec.family + "' needs key '" + key + "'",
                       spec.family.size(), "key '" + key + "'");
    }
    if (!first) out += ",";
    out += key + "=" + fmt12(values.at(key));
    first = false;
  }
  return out;
}

MultiSectorState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("state file is not valid JSON: " + std::string(e.what()),
                     e.byte, "JSON document");
  }
  if (!doc.contains("sectors") || !doc["sectors"].is_array()) {
    throw ParseError("state file needs a top-level 'sectors' array", 0,
                     "'sectors' array");
  }
  std::vector<WeightedSector> sectors;
  double kept = 0.0;
  for (const json& sec : doc["sectors"]) {
    const int n = sec.at("N").get<int>();
    if (n < 0) throw std::runtime_error("sector N must be non-negative");
    const double w = sec.at("weight").get<double>();
    const std::string basis_name = sec.value("basis", "j3");
    Basis basis;
    if (basis_name == "j3") {
      basis = Basis::InternalJ3;
    } else if (basis_name == "j1") {
      basis = Basis::CountingJ1;
    } else {
      throw std::runtime_error("sector basis must be 'j3' or 'j1', got '" +
                               basis_name + "'");
    }
    const json& amps = sec.at("amps");
    if (int(amps.size()) != n + 1) {
      throw std::runtime_error("sector N=" + std::to_string(n) + " needs " +
                               std::to_string(n + 1) + " amplitudes, got " +
                               std::to_string(amps.size()));
    }
    VectorXcd v(n + 1);
    for (int i = 0; i <= n; ++i) {
      v[i] = std::complex<double>(amps[i].at(0).get<double>(),
                                  amps[i].at(1).get<double>());
    }
    if (std::abs(v.norm() - 1.0) > 1e-8) {
      throw std::runtime_error("sector N=" + std::to_string(n) +
                               " amplitudes are not normalized (norm " +
                               std::to_string(v.norm()) + ")");
    }
    v /= v.norm();
    sectors.push_back(WeightedSector{w, PureSector(SpinSector{n}, basis, std::move(v))});
    kept += w;
  }
  if (kept > 1.0 + 1e-10) {
    throw std::runtime_error("sector weights sum to " + std::to_string(kept) +
                             ", above 1");
  }
  return MultiSectorState(std::move(sectors), std::max(0.0, 1.0 - kept));
}

void save_state_file(const MultiSectorState& state, const std::string& path) {
  json doc;
  doc["sectors"] = json::array();
  for (const WeightedSector& ws : state.sectors()) {
    json sec;
    sec["N"] = ws.state.sector().n_photons;
    sec["weight"] = ws.weight;
    sec["basis"] = ws.state.basis() == Basis::InternalJ3 ? "j3" : "j1";
    json amps = json::array();
    for (int i = 0; i < ws.state.amps().size(); ++i) {
      amps.push_back({ws.state.amps()[i].real(), ws.state.amps()[i].imag()});
    }
    sec["amps"] = std::move(amps);
    doc["sectors"].push_back(std::move(sec));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace pathsym
