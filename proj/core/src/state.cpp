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

#include "hamrec/state.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json_detail.hpp"

namespace hamrec {

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
  if (m.dim() < 1) throw Error("density matrix must have dimension >= 1");
  if (!m.all_finite()) throw Error("density matrix has non-finite entries");
  const double hdef = hermitian_defect(m);
  if (hdef > tol) throw NotHermitian(hdef);
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol) throw TraceNotOne(tr);
  const auto eig = hermitian_eig(m, std::max(tol, kDefaultTol));
  const double min_eig = eig.values.back();
  if (min_eig < -tol) throw NotPositiveSemidefinite(min_eig);
  return DensityMatrix{m};
}

std::vector<double> trace_powers(const DensityMatrix& rho, int kmax) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax));
  ComplexMatrix power = rho.matrix;
  out.push_back(power.trace().real());
  for (int k = 2; k <= kmax; ++k) {
    power = power * rho.matrix;
    out.push_back(power.trace().real());
  }
  return out;
}

TracelessState to_traceless(const DensityMatrix& rho) {
  const int n = rho.dim();
  ComplexMatrix m = rho.matrix;
  const cd shift = cd(1.0 / n, 0.0);
  for (int i = 0; i < n; ++i) m(i, i) -= shift;
  return TracelessState{m};
}

Trajectory Trajectory::create(std::vector<double> times,
                              std::vector<DensityMatrix> states, double hbar,
                              double iso_tol) {
  if (times.size() != states.size())
    throw Error("times and states must have equal length");
  if (times.size() < 2) throw Error("a trajectory needs at least 2 samples");
  if (!(hbar > 0.0)) throw Error("hbar must be positive");
  for (std::size_t j = 1; j < times.size(); ++j)
    if (!(times[j] > times[j - 1]))
      throw Error("times must be strictly increasing (sample " +
                  std::to_string(j) + ")");
  const int n = states.front().dim();
  for (std::size_t j = 1; j < states.size(); ++j)
    if (states[j].dim() != n)
      throw ValidationError(j, "dimension differs from first state");

  // Unitary evolution fixes the whole spectrum, so every trace power must
  // be constant along the grid.
  const std::vector<double> ref = trace_powers(states.front(), n);
  double drift_max = 0.0;
  for (std::size_t j = 1; j < states.size(); ++j) {
    const std::vector<double> tp = trace_powers(states[j], n);
    for (int k = 1; k <= n; ++k) {
      const double drift = std::abs(tp[static_cast<std::size_t>(k - 1)] -
                                    ref[static_cast<std::size_t>(k - 1)]);
      if (drift > iso_tol * std::max(1.0, std::abs(ref[static_cast<std::size_t>(k - 1)])))
        throw IsospectralityViolation(j, k, drift);
      drift_max = std::max(drift_max, drift);
    }
  }

  Trajectory traj;
  traj.times = std::move(times);
  traj.states = std::move(states);
  traj.hbar = hbar;
  traj.spectral_drift = drift_max;
  return traj;
}

Trajectory load_trajectory(const std::string& json_text, double tol,
                           double iso_tol) {
  const nlohmann::json j = detail::parse_checked(json_text);
  if (!j.is_object() || !j.contains("n") || !j.contains("times") ||
      !j.contains("states"))
    throw ParseError(0, "expected an object with n, times and states");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw ParseError(0, "n must be a positive integer");
  const int n = j["n"].get<int>();
  const double hbar = j.value("hbar", 1.0);

  const auto& jt = j["times"];
  if (!jt.is_array() || jt.size() < 2)
    throw ParseError(0, "times must be an array with at least 2 entries");
  std::vector<double> times;
  times.reserve(jt.size());
  for (const auto& t : jt) {
    if (!t.is_number()) throw ParseError(0, "times entries must be numbers");
    times.push_back(t.get<double>());
  }

  const auto& js = j["states"];
  if (!js.is_array() || js.size() != times.size())
    throw ParseError(0, "states must match times in length");
  std::vector<DensityMatrix> states;
  states.reserve(js.size());
  for (std::size_t i = 0; i < js.size(); ++i) {
    const ComplexMatrix m = detail::matrix_from_json(js[i], n, i);
    try {
      states.push_back(validate_density(m, tol));
    } catch (const Error& e) {
      throw ValidationError(i, e.what());
    }
  }
  return Trajectory::create(std::move(times), std::move(states), hbar, iso_tol);
}

Trajectory load_trajectory_file(const std::filesystem::path& path, double tol,
                                double iso_tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_trajectory(buf.str(), tol, iso_tol);
}

std::string serialize_trajectory(const Trajectory& traj) {
  std::string out = "{\"n\":" + std::to_string(traj.dim()) +
                    ",\"hbar\":" + detail::fmt17(traj.hbar) + ",\"times\":";
  detail::append_times(out, traj.times);
  out += ",\"states\":[";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    if (i) out += ',';
    detail::append_matrix(out, traj.states[i].matrix);
  }
  out += "]}";
  return out;
}

void save_trajectory_file(const Trajectory& traj,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_trajectory(traj) << '\n';
}

}  // namespace hamrec
