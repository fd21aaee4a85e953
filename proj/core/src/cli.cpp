// Copyright 2026 The hamrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamrec/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hamrec/examples.hpp"
#include "hamrec/forward.hpp"
#include "hamrec/orbit.hpp"
#include "json_detail.hpp"

namespace hamrec::cli {

namespace {

using nlohmann::ordered_json;

ordered_json descriptor_json(const OrbitDescriptor& d) {
  ordered_json j;
  j["spectrum"] = d.canonical_spectrum;
  j["multiplicities"] = d.multiplicities;
  j["c"] = d.c_coeffs;
  j["b"] = d.b_coeffs;
  j["dimension"] = d.dimension;
  j["paper_dimension"] = d.paper_dimension;
  j["pure"] = d.is_pure;
  return j;
}

void write_hamiltonian_csv(const HamiltonianTrajectory& h,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const int n = h.dim();
  out << "t";
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out << ",H_" << r << c << "_re,H_" << r << c << "_im";
  out << "\n";
  for (std::size_t j = 0; j < h.samples(); ++j) {
    out << detail::fmt17(h.times[j]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out << "," << detail::fmt17(h.hamiltonians[j](r, c).real()) << ","
            << detail::fmt17(h.hamiltonians[j](r, c).imag());
    out << "\n";
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = load_trajectory_file(cfg.input, cfg.state_tol);
  ordered_json j;
  j["valid"] = true;
  j["n"] = traj.dim();
  j["samples"] = traj.samples();
  j["hbar"] = traj.hbar;
  j["max_spectral_drift"] = traj.spectral_drift;
  out << j.dump() << "\n";
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = load_trajectory_file(cfg.input, cfg.state_tol);
  out << descriptor_json(classify(traj.states.front())).dump() << "\n";
  return 0;
}

Reconstruction reconstruct_auto(const Trajectory& traj, const DiffOptions& opts,
                                std::size_t basepoint) {
  return classify(traj.states.front()).is_pure
             ? reconstruct_pure(traj, opts, basepoint)
             : reconstruct_mixed(traj, opts, basepoint);
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = load_trajectory_file(cfg.input, cfg.state_tol);
  DiffOptions opts;
  opts.method = cfg.method;
  opts.richardson_levels = cfg.refine;
  opts.periodic = cfg.periodic;
  const Reconstruction rec = reconstruct_auto(traj, opts, cfg.basepoint);
  save_hamiltonian_file(rec.hamiltonian, cfg.output);
  if (!cfg.csv.empty()) write_hamiltonian_csv(rec.hamiltonian, cfg.csv);

  ordered_json j;
  j["method"] = cfg.method == DiffMethod::central_difference ? "central" : "log";
  j["n"] = traj.dim();
  j["samples"] = traj.samples();
  j["basepoint"] = cfg.basepoint;
  j["pure_pipeline"] = rec.orbit.is_pure;
  j["max_conjugation_defect"] = rec.max_conjugation_defect;
  j["hermitize_residual_max"] = rec.hamiltonian.max_hermitize_residual();
  j["orbit"] = descriptor_json(rec.orbit);
  j["output"] = cfg.output.string();
  out << j.dump() << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = load_trajectory_file(cfg.input, cfg.state_tol);
  const HamiltonianTrajectory h = load_hamiltonian_file(cfg.second_input);
  const ResidualReport report = residual(traj, h);
  const bool pass =
      report.max_residual <= cfg.tol && report.trajectory_distance <= cfg.tol;
  ordered_json j;
  j["pass"] = pass;
  j["tol"] = cfg.tol;
  j["max_residual"] = report.max_residual;
  j["trajectory_distance"] = report.trajectory_distance;
  j["invariant_drift"] = report.invariant_drift;
  j["per_sample"] = report.per_sample;
  out << j.dump() << "\n";
  return pass ? 0 : 1;
}

int cmd_example(const RunConfig& cfg, std::ostream& out) {
  const auto param = [&cfg](const std::string& key, double fallback) {
    const auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
  };
  const double hbar = cfg.hbar.value_or(param("hbar", 1.0));

  ParametricExample ex;
  if (cfg.input == "qutrit_pure") {
    ex = qutrit_pure(param("omega", 1.0), hbar);
  } else if (cfg.input == "qubit_mixed") {
    ex = qubit_mixed(param("g", 1.0), hbar);
  } else if (cfg.input == "random_smooth") {
    ex = random_smooth_instance(static_cast<int>(param("n", 2)), cfg.seed,
                                static_cast<int>(param("terms", 3)), hbar);
  } else {
    throw Error("unknown example '" + cfg.input.string() +
                "' (expected qutrit_pure, qubit_mixed or random_smooth)");
  }

  const Trajectory traj = sample_trajectory(ex, 0.0, cfg.t_max, cfg.samples);
  save_trajectory_file(traj, cfg.output);

  ordered_json j;
  j["name"] = ex.name;
  j["n"] = ex.n;
  j["samples"] = cfg.samples;
  j["t_max"] = cfg.t_max;
  ordered_json params;
  for (const auto& [k, v] : ex.parameters) params[k] = v;
  j["params"] = params;
  j["output"] = cfg.output.string();
  out << j.dump() << "\n";
  return 0;
}

int cmd_gauge(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = load_trajectory_file(cfg.input, cfg.state_tol);
  const HamiltonianTrajectory h = load_hamiltonian_file(cfg.second_input);
  if (h.samples() != traj.samples())
    throw GridMismatch("trajectory and hamiltonian grids differ");

  DiffOptions opts;
  const Reconstruction rec = reconstruct_auto(traj, opts, cfg.basepoint);
  const GaugeElement v = sample_stabilizer(rec.orbit, cfg.seed, cfg.smoothness);
  const GaugeResult shifted = gauge_transform(rec.path, h, v, rec.u_samples);
  save_hamiltonian_file(shifted.hamiltonian, cfg.output);
  if (!cfg.csv.empty()) write_hamiltonian_csv(shifted.hamiltonian, cfg.csv);

  ordered_json j;
  j["seed"] = cfg.seed;
  j["smoothness"] = cfg.smoothness;
  j["blocks"] = v.block_sizes;
  j["output"] = cfg.output.string();
  out << j.dump() << "\n";
  return 0;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& what) {
  err << "hamrec: " << what << "\n";
  ordered_json j;
  j["error"] = ordered_json{{"type", kind}, {"message", what}};
  out << j.dump() << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "validate") return cmd_validate(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "reconstruct") return cmd_reconstruct(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "example") return cmd_example(config, out);
    if (config.command == "gauge") return cmd_gauge(config, out);
    err << "hamrec: unknown command '" << config.command << "'\n";
    return 2;
  } catch (const ParseError& e) {
    emit_error(out, err, "parse", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(out, err, "validation", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(out, err, "io", e.what());
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reconstruct time-dependent Hamiltonians from density-matrix trajectories"};
  app.require_subcommand(1);

  std::string method = "central";
  std::vector<std::string> params;

  auto* validate = app.add_subcommand("validate", "Validate a trajectory file");
  validate->add_option("input", cfg.input)->required();
  validate->add_option("--tol", cfg.state_tol, "State validation tolerance");

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify the adjoint orbit of a trajectory");
  classify_cmd->add_option("input", cfg.input)->required();
  classify_cmd->add_option("--tol", cfg.state_tol, "State validation tolerance");

  auto* reconstruct =
      app.add_subcommand("reconstruct", "Reconstruct a Hamiltonian family member");
  reconstruct->add_option("input", cfg.input)->required();
  reconstruct->add_option("-o,--output", cfg.output)->required();
  reconstruct->add_option("--method", method, "central or log")
      ->check(CLI::IsMember({"central", "log"}));
  reconstruct->add_option("--basepoint", cfg.basepoint, "Index of the t0 sample");
  reconstruct->add_option("--refine", cfg.refine,
                          "Richardson levels (0, 1 or 2; uniform grid)");
  reconstruct->add_flag("--periodic", cfg.periodic,
                        "Treat the trajectory as a closed loop");
  reconstruct->add_option("--csv", cfg.csv, "Also emit a plot-ready CSV");

  auto* verify = app.add_subcommand("verify", "Check a Hamiltonian against a trajectory");
  verify->add_option("trajectory", cfg.input)->required();
  verify->add_option("hamiltonian", cfg.second_input)->required();
  verify->add_option("--tol", cfg.tol, "Residual tolerance");

  auto* example = app.add_subcommand("example", "Materialize a built-in example");
  example->add_option("name", cfg.input, "qutrit_pure, qubit_mixed or random_smooth")
      ->required();
  example->add_option("--param", params, "name=value pairs (omega, g, n, terms, hbar)");
  example->add_option("--samples", cfg.samples);
  example->add_option("--t-max", cfg.t_max)->required();
  example->add_option("-o,--output", cfg.output)->required();
  example->add_option("--seed", cfg.seed);
  double hbar_override = 0.0;
  auto* hbar_opt = example->add_option("--hbar", hbar_override, "Override hbar");

  auto* gauge = app.add_subcommand("gauge", "Emit a gauge-equivalent Hamiltonian");
  gauge->add_option("trajectory", cfg.input)->required();
  gauge->add_option("hamiltonian", cfg.second_input)->required();
  gauge->add_option("--seed", cfg.seed)->required();
  gauge->add_option("-o,--output", cfg.output)->required();
  gauge->add_option("--smoothness", cfg.smoothness, "Stabilizer envelope size");
  gauge->add_option("--csv", cfg.csv, "Also emit a plot-ready CSV");

  std::vector<std::string> argv_storage = {"hamrec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.method = method == "log" ? DiffMethod::unitary_log
                               : DiffMethod::central_difference;
  if (hbar_opt->count() > 0) cfg.hbar = hbar_override;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) {
      err << "hamrec: --param expects name=value, got '" << p << "'\n";
      return 2;
    }
    try {
      cfg.params[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
    } catch (const std::exception&) {
      err << "hamrec: cannot parse value in '" << p << "'\n";
      return 2;
    }
  }

  for (const auto* sub :
       {validate, classify_cmd, reconstruct, verify, example, gauge})
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      return run(cfg, out, err);
    }
  err << "hamrec: no command given\n";
  return 2;
}

}  // namespace hamrec::cli
