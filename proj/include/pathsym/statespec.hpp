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

// Textual state specs:
//   noon:N=4        NOON state with N photons
//   twin:n=2        twin-Fock input |n,n>
//   cs:alpha=2,r=1  coherent + squeezed vacuum
//   pairs:r=1.5     two interfering squeezed vacua
//   numcoh:n=1,alpha=2   photon number + coherent
//   file:PATH       sector list from a JSON file
//
// Grammar: family ':' key '=' value (',' key '=' value)*, except `file`,
// whose payload is the verbatim path. Parse errors carry the byte
// position and what was expected there.
//
// The JSON file format:
//   {"sectors":[{"N":2,"weight":1.0,"basis":"j3","amps":[[re,im],...]}]}
// with basis "j3" (internal) or "j1" (counting); weights may sum to less
// than 1, the gap is recorded as truncation remainder.

#ifndef PATHSYM_STATESPEC_HPP
#define PATHSYM_STATESPEC_HPP

#include <string>

#include "pathsym/config.hpp"
#include "pathsym/states.hpp"

namespace pathsym {

/// Parses a state spec into a multi-sector state. Throws ParseError with
/// position and expectation on malformed input.
MultiSectorState parse_state_spec(const std::string& text,
                                  const TruncationPolicy& policy = {});

/// Re-renders a spec in canonical form (fixed key order, 12 significant
/// digits). Parsing the result yields the same state.
std::string canonical_spec(const std::string& text);

/// Loads the JSON sector-list format.
MultiSectorState load_state_file(const std::string& path);

/// Writes a multi-sector state in the JSON sector-list format.
void save_state_file(const MultiSectorState& state, const std::string& path);

}  // namespace pathsym

#endif
