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

// Command-line front end: sensitivity, Fisher-information scans, symmetry
// checks, estimator tables, Monte-Carlo bound checks, and the headline
// benchmark report. All subcommands support --format json; scans support
// csv. Exit codes: 0 success, 1 computation/validation failure, 2
// usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pathsym/config.hpp"
#include "pathsym/estimation.hpp"
#include "pathsym/metrology.hpp"
#include "pathsym/simulate.hpp"
#include "pathsym/statespec.hpp"
#include "pathsym/symmetry.hpp"

namespace {

using nlohmann::json;
using namespace pathsym;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Index-sharded parallel map over [0, n); the computations are pure, so
/// output order is fixed by index and assembly stays single-threaded.
void parallel_for_index(int n, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min<int>(std::thread::hardware_concurrency(), n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += workers) fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

json sector_label(const WeightedSector& ws) {
  return json{{"N", ws.state.sector().n_photons}, {"weight", ws.weight}};
}

json report_to_json(const SensitivityReport& rep) {
  json out;
  out["total_qfi"] = rep.total_qfi;
  out["heisenberg_limit"] = rep.heisenberg_limit;
  out["ratio"] = rep.ratio;
  out["mean_n"] = rep.mean_n;
  out["remainder"] = rep.remainder;
  out["per_sector"] = json::array();
  for (const SectorSensitivity& s : rep.per_sector) {
    out["per_sector"].push_back(
        {{"N", s.n_photons}, {"weight", s.weight}, {"qfi", s.qfi}});
  }
  if (!rep.cfi_samples.empty()) {
    out["cfi"] = json::array();
    for (const auto& [phi, f] : rep.cfi_samples) {
      out["cfi"].push_back({{"phi", phi}, {"cfi", f}});
    }
  }
  return out;
}

void print_report_text(const SensitivityReport& rep) {
  std::cout << "total_qfi:        " << fmt12(rep.total_qfi) << "\n"
            << "heisenberg_limit: " << fmt12(rep.heisenberg_limit) << "\n"
            << "ratio:            " << fmt12(rep.ratio) << "\n"
            << "mean_n:           " << fmt12(rep.mean_n) << "\n"
            << "remainder:        " << fmt12(rep.remainder) << "\n"
            << "sectors:          " << rep.per_sector.size() << "\n";
}

struct HeadlineRow {
  std::string name;
  double value;
  double target;
  double tol;  // |value - target| must stay within this
  bool pass() const { return std::abs(value - target) <= tol; }
};

std::vector<HeadlineRow> headline_rows(const RunConfig& cfg) {
  std::vector<HeadlineRow> rows;
  const double scale = cfg.report_tolerance_scale;

  double worst_noon = 0.0;
  for (int n = 1; n <= 10; ++n) {
    worst_noon = std::max(worst_noon, std::abs(qfi_sector(noon(n)) - double(n) * n));
  }
  rows.push_back({"noon_qfi_max_abs_dev", worst_noon, 0.0, 1e-10 * scale});

  const char* families[] = {"noon:N=2",          "noon:N=4",       "twin:n=2",
                            "cs:alpha=2,r=0.8",  "pairs:r=1.0",    "numcoh:n=1,alpha=1.5"};
  double worst_flat = 0.0;
  for (const char* spec : families) {
    const MultiSectorState st = parse_state_spec(spec, cfg.trunc);
    for (const WeightedSector& ws : st.sectors()) {
      if (ws.weight < 1e-12) continue;
      const double qfi = qfi_sector(ws.state);
      if (qfi < 1e-12) continue;
      for (int k = 0; k < 64; ++k) {
        const double f = cfi_counting(ws.state, 2.0 * M_PI * k / 64.0);
        worst_flat = std::max(worst_flat, std::abs(f - qfi) / qfi);
      }
    }
  }
  rows.push_back({"cfi_flatness_max_rel_dev", worst_flat, 0.0, 1e-8 * scale});

  const QOptimum opt = optimize_q(1000.0);
  rows.push_back({"q_star_nbar_1000", opt.q_star, 1.735, 0.025 * scale});
  rows.push_back({"ratio_star_nbar_1000", opt.ratio_star, 0.732, 0.005 * scale});

  rows.push_back({"pair_ratio_r_1.5", pair_state_ratio(1.5, cfg.trunc), 0.5, 0.05 * scale});

  rows.push_back({"single_photon_db", equivalent_squeezing_db(1), 4.77, 0.01 * scale});
  return rows;
}

MultiSectorState load_state(const std::string& spec, const RunConfig& cfg) {
  return parse_state_spec(spec, cfg.trunc);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Two-path interferometer phase sensitivity toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file")
      ->check(CLI::ExistingFile);
  std::optional<double> eps_override;
  std::optional<int> cap_override;
  app.add_option("--eps-trunc", eps_override, "truncation tolerance override");
  app.add_option("--nmax-cap", cap_override, "single-mode n_max cap override");

  auto finalize_config = [&]() {
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (eps_override) cfg.trunc.eps_trunc = *eps_override;
    if (cap_override) cfg.trunc.n_max_cap = *cap_override;
  };

  std::string state_spec, format = "text";
  double phi = 0.0;

  // ------------------------------------------------------------------ qfi
  CLI::App* qfi_cmd = app.add_subcommand("qfi", "total and per-sector QFI of a state");
  qfi_cmd->add_option("--state", state_spec, "state spec")->required();
  qfi_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  qfi_cmd->callback([&] {
    finalize_config();
    const MultiSectorState st = load_state(state_spec, cfg);
    const SensitivityReport rep = sensitivity_report(st);
    if (format == "json") {
      json out;
      out["total_qfi"] = rep.total_qfi;
      out["per_sector"] = json::array();
      for (const SectorSensitivity& s : rep.per_sector) {
        out["per_sector"].push_back(
            {{"N", s.n_photons}, {"weight", s.weight}, {"qfi", s.qfi}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "total_qfi: " << fmt12(rep.total_qfi) << "\n";
    }
  });

  // ------------------------------------------------------------------ cfi
  CLI::App* cfi_cmd = app.add_subcommand("cfi", "CFI scan over a phase range");
  double phi_start = 0.0, phi_end = 2.0 * M_PI;
  int steps = 64;
  std::string cfi_format = "csv";
  cfi_cmd->add_option("--state", state_spec, "state spec")->required();
  cfi_cmd->add_option("--phi-start", phi_start);
  cfi_cmd->add_option("--phi-end", phi_end);
  cfi_cmd->add_option("--steps", steps)->check(CLI::PositiveNumber);
  cfi_cmd->add_option("--format", cfi_format)->check(CLI::IsMember({"csv", "json"}));
  cfi_cmd->callback([&] {
    finalize_config();
    const MultiSectorState st = load_state(state_spec, cfg);
    const double qfi = total_qfi(st);
    std::vector<double> phis(steps), cfis(steps);
    for (int k = 0; k < steps; ++k) {
      phis[k] = steps == 1 ? phi_start
                           : phi_start + (phi_end - phi_start) * k / double(steps - 1);
    }
    parallel_for_index(steps, [&](int k) { cfis[k] = cfi_total(st, phis[k]); });
    if (cfi_format == "csv") {
      std::cout << "phi,cfi,qfi,gap\n";
      for (int k = 0; k < steps; ++k) {
        std::cout << fmt12(phis[k]) << "," << fmt12(cfis[k]) << "," << fmt12(qfi)
                  << "," << fmt12(qfi - cfis[k]) << "\n";
      }
    } else {
      json rows = json::array();
      for (int k = 0; k < steps; ++k) {
        rows.push_back({{"phi", phis[k]},
                        {"cfi", cfis[k]},
                        {"qfi", qfi},
                        {"gap", qfi - cfis[k]}});
      }
      std::cout << rows.dump(2) << "\n";
    }
  });

  // ------------------------------------------------------------ estimator
  CLI::App* est_cmd =
      app.add_subcommand("estimator", "optimal estimator table at a bias phase");
  est_cmd->add_option("--state", state_spec, "state spec")->required();
  est_cmd->add_option("--phi", phi, "bias phase")->required();
  double est_tol = -1.0;
  est_cmd->add_option("--tol", est_tol, "imaginary-part tolerance");
  std::string est_format = "json";
  est_cmd->add_option("--format", est_format)->check(CLI::IsMember({"text", "json"}));
  est_cmd->callback([&] {
    finalize_config();
    const double tol = est_tol > 0.0 ? est_tol : cfg.tol.estimator;
    const MultiSectorState st = load_state(state_spec, cfg);
    json out = json::array();
    for (const WeightedSector& ws : st.sectors()) {
      const EstimatorTable table = optimal_estimator(ws.state, phi, tol);
      json sec = sector_label(ws);
      sec["phi"] = table.phi;
      sec["lambda"] = table.lambda;
      sec["imag_residual"] = table.imag_residual;
      sec["achievable"] = table.achievable;
      sec["zero_sensitivity"] = table.zero_sensitivity;
      sec["informative_outcome_excluded"] = table.informative_outcome_excluded;
      sec["excluded"] = table.excluded;
      sec["g"] = std::vector<double>(table.g.data(), table.g.data() + table.g.size());
      if (!table.zero_sensitivity && !table.informative_outcome_excluded &&
          table.g.squaredNorm() > 0.0) {
        sec["robustness"] = 1.0 / table.g.squaredNorm();
      }
      out.push_back(std::move(sec));
    }
    if (est_format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      for (const json& sec : out) {
        std::cout << "N=" << sec["N"] << " lambda=" << fmt12(sec["lambda"])
                  << " imag_residual=" << fmt12(sec["imag_residual"])
                  << " achievable=" << sec["achievable"] << "\n";
      }
    }
  });

  // ------------------------------------------------------------- symmetry
  CLI::App* sym_cmd = app.add_subcommand("symmetry", "path-symmetry report per sector");
  sym_cmd->add_option("--state", state_spec, "state spec")->required();
  double sym_tol = -1.0;
  sym_cmd->add_option("--tol", sym_tol, "residual tolerance");
  std::string sym_format = "json";
  sym_cmd->add_option("--format", sym_format)->check(CLI::IsMember({"text", "json"}));
  sym_cmd->callback([&] {
    finalize_config();
    const double tol = sym_tol > 0.0 ? sym_tol : cfg.tol.symmetry;
    const MultiSectorState st = load_state(state_spec, cfg);
    json out;
    out["sectors"] = json::array();
    bool all = true;
    for (const WeightedSector& ws : st.sectors()) {
      const SymmetryReport counting = check_symmetry_counting(ws.state, tol);
      const SymmetryReport internal = check_symmetry_internal(ws.state, tol);
      all = all && counting.symmetric;
      json sec = sector_label(ws);
      sec["counting"] = {{"symmetric", counting.symmetric},
                         {"chi0", counting.chi0},
                         {"residual", counting.residual},
                         {"chi0_ambiguous", counting.chi0_ambiguous}};
      sec["internal"] = {{"symmetric", internal.symmetric},
                         {"chi0", internal.chi0},
                         {"residual", internal.residual}};
      out["sectors"].push_back(std::move(sec));
    }
    out["all_symmetric"] = all;
    if (sym_format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (all ? "path-symmetric" : "not path-symmetric") << " ("
                << out["sectors"].size() << " sectors)\n";
    }
  });

  // --------------------------------------------------------------- report
  CLI::App* rep_cmd =
      app.add_subcommand("report", "sensitivity report with optional CFI samples");
  rep_cmd->add_option("--state", state_spec, "state spec")->required();
  int phi_steps = 0;
  rep_cmd->add_option("--phi-steps", phi_steps, "sample CFI on a [0,2pi) grid");
  std::string rep_format = "json";
  rep_cmd->add_option("--format", rep_format)->check(CLI::IsMember({"text", "json"}));
  rep_cmd->callback([&] {
    finalize_config();
    const MultiSectorState st = load_state(state_spec, cfg);
    SensitivityReport rep = sensitivity_report(st);
    if (phi_steps > 0) {
      rep.cfi_samples.resize(phi_steps);
      parallel_for_index(phi_steps, [&](int k) {
        const double phi = 2.0 * M_PI * k / phi_steps;
        rep.cfi_samples[k] = {phi, cfi_total(st, phi)};
      });
    }
    if (rep_format == "json") {
      std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
      print_report_text(rep);
    }
  });

  // ----------------------------------------------------------- optimize-q
  CLI::App* opt_cmd =
      app.add_subcommand("optimize-q", "best coherent/squeezed intensity split");
  double nbar = 0.0;
  opt_cmd->add_option("--nbar", nbar, "total mean photon number")->required();
  std::string opt_format = "json";
  opt_cmd->add_option("--format", opt_format)->check(CLI::IsMember({"text", "json"}));
  opt_cmd->callback([&] {
    finalize_config();
    const QOptimum opt = optimize_q(nbar);
    if (opt_format == "json") {
      std::cout << json{{"q_star", opt.q_star}, {"ratio_star", opt.ratio_star}}.dump(2)
                << "\n";
    } else {
      std::cout << "q_star:     " << fmt12(opt.q_star) << "\n"
                << "ratio_star: " << fmt12(opt.ratio_star) << "\n";
    }
  });

  // --------------------------------------------------------------- simulate
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Monte-Carlo bound check with ML estimation");
  TrialRun run;
  double window = -1.0;
  sim_cmd->add_option("--state", state_spec, "state spec")->required();
  sim_cmd->add_option("--phi", run.phi_true, "true phase")->required();
  sim_cmd->add_option("--samples", run.samples_per_trial, "samples per trial")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--trials", run.trials, "independent trials")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", run.seed, "master seed")->required();
  sim_cmd->add_option("--window", window, "estimation window (default auto)");
  sim_cmd->add_option("--grid", run.grid_points, "likelihood grid points")
      ->check(CLI::Range(3, 100000));
  std::string sim_format = "json";
  sim_cmd->add_option("--format", sim_format)->check(CLI::IsMember({"text", "json"}));
  sim_cmd->callback([&] {
    finalize_config();
    const MultiSectorState st = load_state(state_spec, cfg);
    int n_max = 0;
    for (const WeightedSector& ws : st.sectors()) {
      n_max = std::max(n_max, ws.state.sector().n_photons);
    }
    run.window = window > 0.0
                     ? window
                     : std::min(0.4, n_max >= 1 ? 0.5 * M_PI / n_max : 0.4);
    const TrialSummary sum = crb_trial_suite(st, run);
    json out;
    out["state"] = canonical_spec(state_spec);
    out["phi_true"] = run.phi_true;
    out["samples_per_trial"] = run.samples_per_trial;
    out["trials"] = run.trials;
    out["seed"] = run.seed;
    out["window"] = run.window;
    out["grid_points"] = run.grid_points;
    out["empirical_mse"] = sum.empirical_mse;
    out["empirical_variance"] = sum.empirical_variance;
    out["bias"] = sum.bias;
    out["crb"] = sum.crb;
    out["ratio"] = sum.ratio;
    out["trial_seeds"] = sum.trial_seeds;
    if (sim_format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "mse:   " << fmt12(sum.empirical_mse) << "\n"
                << "crb:   " << fmt12(sum.crb) << "\n"
                << "ratio: " << fmt12(sum.ratio) << "\n";
    }
  });

  // ----------------------------------------------------------- paper-report
  CLI::App* headline_cmd = app.add_subcommand(
      "paper-report", "headline benchmark table with pass/fail and exit code");
  bool headline_json = false;
  headline_cmd->add_flag("--json", headline_json, "machine-readable rows");
  std::string headline_format = "text";
  headline_cmd->add_option("--format", headline_format)
      ->check(CLI::IsMember({"text", "json"}));
  double tol_scale = -1.0;
  headline_cmd->add_option("--tolerance-scale", tol_scale,
                           "scale all row tolerances (diagnostic)");
  headline_cmd->callback([&] {
    finalize_config();
    if (headline_format == "json") headline_json = true;
    if (tol_scale > 0.0) cfg.report_tolerance_scale = tol_scale;
    const std::vector<HeadlineRow> rows = headline_rows(cfg);
    bool all = true;
    if (headline_json) {
      json out = json::array();
      for (const HeadlineRow& r : rows) {
        all = all && r.pass();
        out.push_back({{"name", r.name},
                       {"value", r.value},
                       {"target", r.target},
                       {"tolerance", r.tol},
                       {"pass", r.pass()}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::printf("%-28s %16s %16s %12s  %s\n", "row", "value", "target", "tol",
                  "status");
      for (const HeadlineRow& r : rows) {
        all = all && r.pass();
        std::printf("%-28s %16s %16s %12s  %s\n", r.name.c_str(),
                    fmt12(r.value).c_str(), fmt12(r.target).c_str(),
                    fmt12(r.tol).c_str(), r.pass() ? "pass" : "FAIL");
      }
    }
    if (!all) throw std::runtime_error("headline rows out of tolerance");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, usage errors as 2
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what()
              << " (expected " << e.expected << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
