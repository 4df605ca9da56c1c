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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pathsym/estimation.hpp"
#include "pathsym/metrology.hpp"

using namespace pathsym;

TEST_CASE("config files: parsing, overrides, unknown keys") {
  const std::string path = "test_config.cfg";
  std::ofstream out(path);
  out << "# comment line\n"
      << "eps_trunc = 1e-8\n"
      << "n_max_cap=512\n"
      << "report_tolerance_scale = 2.0\n";
  out.close();
  const RunConfig cfg = load_config_file(path);
  CHECK(cfg.trunc.eps_trunc == doctest::Approx(1e-8));
  CHECK(cfg.trunc.n_max_cap == 512);
  CHECK(cfg.report_tolerance_scale == doctest::Approx(2.0));
  CHECK(cfg.tol.symmetry == doctest::Approx(1e-8));  // untouched default
  std::remove(path.c_str());

  RunConfig direct;
  apply_config_entry(direct, "tol_symmetry", "1e-6");
  CHECK(direct.tol.symmetry == doctest::Approx(1e-6));
  CHECK_THROWS_AS(apply_config_entry(direct, "no_such_key", "1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(direct, "eps_trunc", "abc"),
                  std::invalid_argument);
  CHECK_THROWS(load_config_file("/nonexistent.cfg"));
}

TEST_CASE("state specs parse into the right families") {
  const MultiSectorState n2 = parse_state_spec("noon:N=2");
  REQUIRE(n2.sectors().size() == 1);
  CHECK(n2.sectors()[0].state.sector().n_photons == 2);
  CHECK(total_qfi(n2) == doctest::Approx(4.0));

  const MultiSectorState tf = parse_state_spec("twin:n=2");
  CHECK(tf.sectors()[0].state.sector().n_photons == 4);

  const MultiSectorState cs = parse_state_spec("cs:alpha=2,r=1");
  CHECK(cs.sectors().size() > 10);
  CHECK(total_qfi(cs) ==
        doctest::Approx(squeezed_coherent_moments(2.0, 1.0).qfi).epsilon(1e-7));

  const MultiSectorState pr = parse_state_spec("pairs:r=1.5");
  for (const WeightedSector& ws : pr.sectors()) {
    CHECK(ws.state.sector().n_photons % 2 == 0);
  }

  CHECK(parse_state_spec("numcoh:n=1,alpha=2").sectors().size() > 3);
}

TEST_CASE("parse errors carry positions and expectations") {
  auto expect_error = [](const std::string& text, std::size_t pos) {
    try {
      parse_state_spec(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
      CHECK_FALSE(e.expected.empty());
    }
  };
  expect_error("gibberish:N=2", 0);        // unknown family
  expect_error("noon", 4);                 // missing ':'
  expect_error("noon:N", 6);               // missing '='
  expect_error("noon:N=x", 7);             // non-numeric
  expect_error("noon:N=2,extra=1", 15);    // extra key
  expect_error("noon:N=2,N=3", 11);        // duplicate key
  expect_error("noon:N=0", 7);             // degenerate
  expect_error("noon:N=2.5", 7);           // non-integer
  expect_error("cs:alpha=2", 2);           // missing key r
  expect_error("noon:N=2;", 8);            // trailing junk

  CHECK_THROWS_AS(parse_state_spec("twin:n=0"), ParseError);
}

TEST_CASE("canonical rendering fixes key order and round-trips") {
  CHECK(canonical_spec("cs:r=1,alpha=2") == "cs:alpha=2,r=1");
  CHECK(canonical_spec("noon:N=4") == "noon:N=4");
  CHECK(canonical_spec("pairs:r=1.25") == "pairs:r=1.25");
  const std::string canon = canonical_spec("cs:alpha=0.5,r=0.25");
  CHECK(canonical_spec(canon) == canon);
  CHECK(total_qfi(parse_state_spec(canon)) ==
        doctest::Approx(total_qfi(parse_state_spec("cs:r=0.25,alpha=0.5"))));
}

TEST_CASE("state files: save, load, and validation") {
  const std::string path = "test_state_roundtrip.json";
  const MultiSectorState original = parse_state_spec("cs:alpha=1,r=0.5");
  save_state_file(original, path);
  const MultiSectorState loaded = load_state_file(path);
  REQUIRE(loaded.sectors().size() == original.sectors().size());
  CHECK(total_qfi(loaded) == doctest::Approx(total_qfi(original)).epsilon(1e-12));
  CHECK(loaded.remainder() == doctest::Approx(original.remainder()).epsilon(1e-12));
  std::remove(path.c_str());

  // spec text reaches the loader through the file: family
  save_state_file(original, path);
  const MultiSectorState via_spec = parse_state_spec("file:" + path);
  CHECK(total_qfi(via_spec) == doctest::Approx(total_qfi(original)).epsilon(1e-12));
  std::remove(path.c_str());

  // malformed inputs are rejected with diagnostics
  std::ofstream bad(path);
  bad << "{\"sectors\":[{\"N\":1,\"weight\":1.0,\"basis\":\"j3\",\"amps\":[[0.9,0],[0.1,0]]}]}";
  bad.close();
  CHECK_THROWS(load_state_file(path));  // not normalized
  std::remove(path.c_str());

  std::ofstream bad2(path);
  bad2 << "{\"sectors\":[{\"N\":1,\"weight\":1.0,\"basis\":\"zz\",\"amps\":[[1,0],[0,0]]}]}";
  bad2.close();
  CHECK_THROWS(load_state_file(path));  // unknown basis
  std::remove(path.c_str());

  CHECK_THROWS(parse_state_spec("file:/nonexistent/path.json"));
  CHECK_THROWS_AS(parse_state_spec("file:"), ParseError);
}
