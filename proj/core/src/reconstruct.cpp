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

#include "hamrec/reconstruct.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hamrec/rng.hpp"
#include "json_detail.hpp"

namespace hamrec {

double HamiltonianTrajectory::max_hermitize_residual() const {
  double m = 0.0;
  for (double r : hermitize_residuals) m = std::max(m, r);
  return m;
}

namespace {

constexpr double kEigTol = 1e-6;  // validated states are Hermitian to kStateTol

bool grid_is_uniform(const std::vector<double>& times) {
  if (times.size() < 2) return true;
  const double h = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  for (std::size_t j = 0; j + 1 < times.size(); ++j)
    if (std::abs(times[j + 1] - times[j] - h) > 1e-8 * std::max(1.0, std::abs(h)))
      return false;
  return true;
}

// Lagrange first-derivative weights of a quadratic through (ta, tb, tc),
// evaluated at te.
std::array<double, 3> three_point_weights(double te, double ta, double tb,
                                          double tc) {
  return {(2.0 * te - tb - tc) / ((ta - tb) * (ta - tc)),
          (2.0 * te - ta - tc) / ((tb - ta) * (tb - tc)),
          (2.0 * te - ta - tb) / ((tc - ta) * (tc - tb))};
}

// Richardson weights for even-power error expansions on stencil widths
// w, 2w, 4w, ...
std::vector<double> richardson_weights(int levels) {
  switch (levels) {
    case 0: return {1.0};
    case 1: return {4.0 / 3.0, -1.0 / 3.0};
    case 2: return {64.0 / 45.0, -20.0 / 45.0, 1.0 / 45.0};
    default:
      throw std::invalid_argument("richardson_levels must be 0, 1 or 2");
  }
}

// Operators of a closed loop repeat with period N-1 (the last sample
// duplicates the first).
std::size_t wrap_index(std::ptrdiff_t j, std::size_t samples) {
  const std::ptrdiff_t period = static_cast<std::ptrdiff_t>(samples) - 1;
  std::ptrdiff_t r = j % period;
  if (r < 0) r += period;
  return static_cast<std::size_t>(r);
}

ComplexMatrix central_derivative(const EvolutionPath& path,
                                 const DiffOptions& opts, std::size_t j) {
  const auto& t = path.times;
  const auto& u = path.operators;
  const std::size_t n = t.size();

  if (opts.richardson_levels > 0 || opts.periodic) {
    const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
    int levels = opts.richardson_levels;
    if (!opts.periodic) {
      // Shrink to the widths that fit; the extreme samples fall back to
      // one-sided quadratics below.
      while (levels > 0) {
        const std::size_t w = std::size_t{1} << levels;
        if (j >= w && j + w < n) break;
        --levels;
      }
      const std::size_t w0 = 1;
      if (j < w0 || j + w0 >= n) {
        if (j == 0) {
          const auto w3 = three_point_weights(t[0], t[0], t[1], t[2]);
          return w3[0] * u[0] + w3[1] * u[1] + w3[2] * u[2];
        }
        const auto w3 = three_point_weights(t[n - 1], t[n - 3], t[n - 2], t[n - 1]);
        return w3[0] * u[n - 3] + w3[1] * u[n - 2] + w3[2] * u[n - 1];
      }
    }
    const std::vector<double> rw = richardson_weights(levels);
    ComplexMatrix d(path.dim());
    for (int level = 0; level <= levels; ++level) {
      const std::ptrdiff_t w = std::ptrdiff_t{1} << level;
      const ComplexMatrix& up =
          opts.periodic ? u[wrap_index(static_cast<std::ptrdiff_t>(j) + w, n)]
                        : u[j + static_cast<std::size_t>(w)];
      const ComplexMatrix& um =
          opts.periodic ? u[wrap_index(static_cast<std::ptrdiff_t>(j) - w, n)]
                        : u[j - static_cast<std::size_t>(w)];
      d += (rw[static_cast<std::size_t>(level)] / (2.0 * static_cast<double>(w) * h)) *
           (up - um);
    }
    return d;
  }

  if (j == 0) {
    const auto w3 = three_point_weights(t[0], t[0], t[1], t[2]);
    return w3[0] * u[0] + w3[1] * u[1] + w3[2] * u[2];
  }
  if (j + 1 == n) {
    const auto w3 = three_point_weights(t[n - 1], t[n - 3], t[n - 2], t[n - 1]);
    return w3[0] * u[n - 3] + w3[1] * u[n - 2] + w3[2] * u[n - 1];
  }
  return (1.0 / (t[j + 1] - t[j - 1])) * (u[j + 1] - u[j - 1]);
}

ComplexMatrix log_generator(const EvolutionPath& path, const DiffOptions& opts,
                            std::size_t j) {
  const auto& t = path.times;
  const auto& u = path.operators;
  const std::size_t n = t.size();

  const auto step_log = [&](std::size_t lo, std::size_t hi, double dt) {
    try {
      const ComplexMatrix w = u[hi] * u[lo].adjoint();
      return (cd(0.0, path.hbar) / dt) * unitary_log(w, opts.log_phase_tol);
    } catch (const StepTooLarge&) {
      throw StepTooLarge(j);
    }
  };

  if (opts.richardson_levels > 0 || opts.periodic) {
    const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
    int levels = opts.richardson_levels;
    bool symmetric_ok = true;
    if (!opts.periodic) {
      while (levels > 0) {
        const std::size_t w = std::size_t{1} << levels;
        if (j >= w && j + w < n) break;
        --levels;
      }
      symmetric_ok = (j >= 1 && j + 1 < n);
    }
    if (symmetric_ok) {
      const std::vector<double> rw = richardson_weights(levels);
      ComplexMatrix g(path.dim());
      for (int level = 0; level <= levels; ++level) {
        const std::ptrdiff_t w = std::ptrdiff_t{1} << level;
        const std::size_t hi =
            opts.periodic ? wrap_index(static_cast<std::ptrdiff_t>(j) + w, n)
                          : j + static_cast<std::size_t>(w);
        const std::size_t lo =
            opts.periodic ? wrap_index(static_cast<std::ptrdiff_t>(j) - w, n)
                          : j - static_cast<std::size_t>(w);
        g += rw[static_cast<std::size_t>(level)] * step_log(lo, hi, 2.0 * static_cast<double>(w) * h);
      }
      return g;
    }
  }

  // Single-interval principal log, midpoint-accurate; the last sample
  // replicates its predecessor's interval.
  if (j + 1 < n) return step_log(j, j + 1, t[j + 1] - t[j]);
  return step_log(n - 2, n - 1, t[n - 1] - t[n - 2]);
}

void hermitize(ComplexMatrix& h, double& residual) {
  const int n = h.dim();
  ComplexMatrix anti(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) anti(r, c) = 0.5 * (h(r, c) - std::conj(h(c, r)));
  residual = anti.frobenius_norm();
  h -= anti;
}

}  // namespace

HamiltonianTrajectory hamiltonian_from_path(const EvolutionPath& path,
                                            const DiffOptions& opts) {
  const std::size_t n = path.samples();
  if (opts.method == DiffMethod::central_difference && n < 3)
    throw std::invalid_argument("central differences need at least 3 samples");
  if (n < 2) throw std::invalid_argument("need at least 2 samples");
  if ((opts.richardson_levels > 0 || opts.periodic) && !grid_is_uniform(path.times))
    throw std::invalid_argument(
        "richardson refinement and periodic wrap require a uniform grid");
  if (opts.periodic &&
      frobenius_diff(path.operators.front(), path.operators.back()) > 1e-8)
    throw std::invalid_argument("periodic wrap requires a closed operator loop");

  HamiltonianTrajectory out;
  out.times = path.times;
  out.method = opts.method;
  out.hbar = path.hbar;
  out.hamiltonians.reserve(n);
  out.hermitize_residuals.reserve(n);

  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix h(path.dim());
    if (opts.method == DiffMethod::central_difference) {
      const ComplexMatrix d = central_derivative(path, opts, j);
      h = cd(0.0, path.hbar) * (d * path.operators[j].adjoint());
    } else {
      h = log_generator(path, opts, j);
    }
    double residual = 0.0;
    hermitize(h, residual);
    out.hamiltonians.push_back(std::move(h));
    out.hermitize_residuals.push_back(residual);
  }
  return out;
}

namespace {

std::vector<int> cluster_pattern(const std::vector<double>& values,
                                 double cluster_tol) {
  std::vector<int> pattern{1};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] - values[i] <= cluster_tol)
      ++pattern.back();
    else
      pattern.push_back(1);
  }
  return pattern;
}

// Unitary polar factor of P, via the eigendecomposition of P^dagger P.
// Small singular values mean the subspaces barely overlap.
ComplexMatrix polar_unitary(const ComplexMatrix& p, double min_sq,
                            std::size_t sample) {
  const ComplexMatrix gram = p.adjoint() * p;
  const EigenDecomposition eig = hermitian_eig(gram, 1e-9);
  if (eig.values.back() < min_sq) throw EigenvalueCrossing(sample);
  const int m = p.dim();
  ComplexMatrix inv_sqrt(m);
  for (int k = 0; k < m; ++k) {
    const double f = 1.0 / std::sqrt(eig.values[static_cast<std::size_t>(k)]);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        inv_sqrt(r, c) += eig.vectors(r, k) * f * std::conj(eig.vectors(c, k));
  }
  return p * inv_sqrt;
}

// Align each eigenvalue cluster of `cur` to the same columns of `prev` by
// the unitary Procrustes rotation; reduces to a phase fix for clusters of
// size one.
void align_to_previous(ComplexMatrix& cur, const ComplexMatrix& prev,
                       const std::vector<int>& pattern, std::size_t sample) {
  int lo = 0;
  for (int m : pattern) {
    ComplexMatrix p(m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        cd s = 0.0;
        for (int k = 0; k < cur.dim(); ++k)
          s += std::conj(cur(k, lo + r)) * prev(k, lo + c);
        p(r, c) = s;
      }
    const ComplexMatrix x = polar_unitary(p, 0.25, sample);
    ComplexMatrix block(cur.dim());
    for (int k = 0; k < cur.dim(); ++k)
      for (int c = 0; c < m; ++c) {
        cd s = 0.0;
        for (int r = 0; r < m; ++r) s += cur(k, lo + r) * x(r, c);
        block(k, c) = s;
      }
    for (int k = 0; k < cur.dim(); ++k)
      for (int c = 0; c < m; ++c) cur(k, lo + c) = block(k, c);
    lo += m;
  }
}

double principal_arg(cd z) { return std::atan2(z.imag(), z.real()); }

// Divide each operator by an n-th root of its determinant, with the root
// branch tracked continuously along the path; returns the removed phases.
std::vector<double> normalize_special_unitary(std::vector<ComplexMatrix>& ops) {
  std::vector<double> removed;
  removed.reserve(ops.size());
  double phi_prev = 0.0;
  cd det_prev = 1.0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const cd det = determinant(ops[j]);
    const double phi =
        j == 0 ? principal_arg(det)
               : phi_prev + principal_arg(det * std::conj(det_prev));
    const int n = ops[j].dim();
    ops[j] *= std::exp(cd(0.0, -phi / n));
    removed.push_back(phi / n);
    phi_prev = phi;
    det_prev = det;
  }
  return removed;
}

Reconstruction assemble(const Trajectory& traj, std::vector<ComplexMatrix> u,
                        const DiffOptions& opts, std::size_t basepoint,
                        OrbitDescriptor orbit, const ZMask& mask) {
  Reconstruction rec;
  rec.orbit = std::move(orbit);
  rec.path.times = traj.times;
  rec.path.hbar = traj.hbar;
  rec.path.basepoint_index = basepoint;
  rec.path.removed_phases = normalize_special_unitary(u);

  const ComplexMatrix base_adj = u[basepoint].adjoint();
  rec.path.operators.reserve(u.size());
  for (const auto& uj : u) rec.path.operators.push_back(uj * base_adj);

  const ComplexMatrix& rho0 = traj.states[basepoint].matrix;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const ComplexMatrix image =
        rec.path.operators[j] * rho0 * rec.path.operators[j].adjoint();
    rec.max_conjugation_defect = std::max(
        rec.max_conjugation_defect, frobenius_diff(image, traj.states[j].matrix));
  }

  rec.z_samples.reserve(u.size());
  for (const auto& uj : u) {
    try {
      rec.z_samples.push_back(extract_z(uj, mask).z);
    } catch (const Error&) {
      rec.z_samples.push_back(std::nullopt);
    }
  }

  rec.u_samples = std::move(u);
  rec.hamiltonian = hamiltonian_from_path(rec.path, opts);
  return rec;
}

}  // namespace

Reconstruction reconstruct_pure(const Trajectory& traj, const DiffOptions& opts,
                                std::size_t basepoint, double chart_tol) {
  if (basepoint >= traj.samples())
    throw std::invalid_argument("basepoint out of range");
  const int n = traj.dim();

  std::vector<ComplexMatrix> u;
  u.reserve(traj.samples());
  OrbitDescriptor orbit;
  for (std::size_t j = 0; j < traj.samples(); ++j) {
    const OrbitDescriptor d = classify(traj.states[j]);
    if (!d.is_pure) throw NotPure(j);
    if (j == basepoint) orbit = d;

    const EigenDecomposition eig = hermitian_eig(traj.states[j].matrix, kEigTol);
    const std::vector<cd> psi = column(eig.vectors, 0);
    if (std::abs(psi[0]) <= chart_tol) throw ChartSingularity(j);
    std::vector<cd> z(static_cast<std::size_t>(n) - 1);
    for (int k = 1; k < n; ++k)
      z[static_cast<std::size_t>(k - 1)] = psi[static_cast<std::size_t>(k)] / psi[0];
    u.push_back(pure_state_factors(z).u);
  }
  return assemble(traj, std::move(u), opts, basepoint, std::move(orbit),
                  ZMask::pure(n));
}

Reconstruction reconstruct_mixed(const Trajectory& traj, const DiffOptions& opts,
                                 std::size_t basepoint, double cluster_tol) {
  if (basepoint >= traj.samples())
    throw std::invalid_argument("basepoint out of range");

  std::vector<ComplexMatrix> u;
  u.reserve(traj.samples());
  std::vector<int> pattern;
  for (std::size_t j = 0; j < traj.samples(); ++j) {
    const EigenDecomposition eig = hermitian_eig(traj.states[j].matrix, kEigTol);
    const std::vector<int> pat = cluster_pattern(eig.values, cluster_tol);
    if (j == 0)
      pattern = pat;
    else if (pat != pattern)
      throw EigenvalueCrossing(j);
    u.push_back(eig.vectors);
    if (j > 0) align_to_previous(u[j], u[j - 1], pattern, j);
  }

  return assemble(traj, std::move(u), opts, basepoint,
                  classify(traj.states[basepoint], cluster_tol),
                  ZMask::from_multiplicities(pattern));
}

GaugeResult gauge_transform(const EvolutionPath& path,
                            const HamiltonianTrajectory& h,
                            const GaugeElement& v,
                            const std::vector<ComplexMatrix>& u_samples) {
  const std::size_t n = path.samples();
  if (h.samples() != n || u_samples.size() != n)
    throw GridMismatch("path, hamiltonian and u samples must share the grid");
  int block_sum = 0;
  for (int b : v.block_sizes) block_sum += b;
  if (block_sum != path.dim())
    throw BlockMismatch("block sizes sum to " + std::to_string(block_sum) +
                        ", dimension is " + std::to_string(path.dim()));

  // Materialize v and normalize to the basepoint by right translation,
  // which leaves the generator W = v' v^{-1} unchanged.
  std::vector<ComplexMatrix> vs;
  vs.reserve(n);
  if (v.v_at) {
    for (double t : path.times) vs.push_back(v.v_at(t));
  } else if (v.v_samples.size() == n) {
    vs = v.v_samples;
  } else {
    throw BlockMismatch("gauge element provides neither v_at nor v_samples");
  }
  const ComplexMatrix v0_adj = vs[path.basepoint_index].adjoint();
  for (auto& m : vs) m = m * v0_adj;

  std::vector<ComplexMatrix> w;
  w.reserve(n);
  if (v.generator_at) {
    for (double t : path.times) w.push_back(v.generator_at(t));
  } else {
    // Central differences of the samples; W = v' v^{-1} stays
    // anti-Hermitian after projection.
    EvolutionPath vpath;
    vpath.times = path.times;
    vpath.operators = vs;
    vpath.hbar = 1.0;
    DiffOptions fd;
    const HamiltonianTrajectory hv = hamiltonian_from_path(vpath, fd);
    for (std::size_t j = 0; j < n; ++j) w.push_back(cd(0.0, -1.0) * hv.hamiltonians[j]);
  }

  GaugeResult out;
  out.path.times = path.times;
  out.path.basepoint_index = path.basepoint_index;
  out.path.hbar = path.hbar;
  out.path.removed_phases = path.removed_phases;
  const ComplexMatrix u0_adj = u_samples[path.basepoint_index].adjoint();
  out.path.operators.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.path.operators.push_back(u_samples[j] * vs[j] * u0_adj);

  out.hamiltonian.times = h.times;
  out.hamiltonian.method = h.method;
  out.hamiltonian.hbar = h.hbar;
  out.hamiltonian.hamiltonians.reserve(n);
  out.hamiltonian.hermitize_residuals.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix hj = h.hamiltonians[j] +
                       cd(0.0, h.hbar) * (u_samples[j] * w[j] * u_samples[j].adjoint());
    double residual = 0.0;
    hermitize(hj, residual);
    out.hamiltonian.hamiltonians.push_back(std::move(hj));
    out.hamiltonian.hermitize_residuals.push_back(residual);
  }
  out.v_samples = std::move(vs);
  return out;
}

GaugeElement sample_stabilizer(const OrbitDescriptor& descriptor,
                               std::uint64_t seed, double smoothness) {
  std::mt19937_64 rng(seed);
  const int n = descriptor.n;
  ComplexMatrix g(n);
  int lo = 0;
  for (int m : descriptor.multiplicities) {
    const ComplexMatrix block = random_hermitian(m, rng);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) g(lo + r, lo + c) = block(r, c);
    lo += m;
  }
  const double norm = g.frobenius_norm();
  if (norm > 0.0) g *= cd(1.0 / norm, 0.0);
  const double kappa = 0.5 + uniform_unit(rng);

  GaugeElement v;
  v.block_sizes = descriptor.multiplicities;
  v.v_at = [g, kappa, smoothness](double t) {
    return expm_i_hermitian(g, -smoothness * std::sin(kappa * t));
  };
  v.generator_at = [g, kappa, smoothness](double t) {
    return cd(0.0, smoothness * kappa * std::cos(kappa * t)) * g;
  };
  return v;
}

std::string serialize_hamiltonian(const HamiltonianTrajectory& h) {
  std::string out = "{\"n\":" + std::to_string(h.dim()) +
                    ",\"hbar\":" + detail::fmt17(h.hbar) + ",\"times\":";
  detail::append_times(out, h.times);
  out += ",\"hamiltonians\":[";
  for (std::size_t i = 0; i < h.hamiltonians.size(); ++i) {
    if (i) out += ',';
    detail::append_matrix(out, h.hamiltonians[i]);
  }
  out += "],\"method\":\"";
  out += h.method == DiffMethod::central_difference ? "central_difference"
                                                    : "unitary_log";
  out += "\",\"hermitize_residual_max\":";
  out += detail::fmt17(h.max_hermitize_residual());
  out += "}";
  return out;
}

HamiltonianTrajectory load_hamiltonian(const std::string& json_text, double tol) {
  const nlohmann::json j = detail::parse_checked(json_text);
  if (!j.is_object() || !j.contains("n") || !j.contains("times") ||
      !j.contains("hamiltonians"))
    throw ParseError(0, "expected an object with n, times and hamiltonians");
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError(0, "n must be a positive integer");

  HamiltonianTrajectory h;
  h.hbar = j.value("hbar", 1.0);
  const std::string method = j.value("method", "central_difference");
  if (method == "central_difference")
    h.method = DiffMethod::central_difference;
  else if (method == "unitary_log")
    h.method = DiffMethod::unitary_log;
  else
    throw ParseError(0, "unknown method '" + method + "'");

  const auto& jt = j["times"];
  if (!jt.is_array() || jt.size() < 2)
    throw ParseError(0, "times must be an array with at least 2 entries");
  for (const auto& t : jt) {
    if (!t.is_number()) throw ParseError(0, "times entries must be numbers");
    h.times.push_back(t.get<double>());
  }
  for (std::size_t i = 1; i < h.times.size(); ++i)
    if (!(h.times[i] > h.times[i - 1]))
      throw ParseError(0, "times must be strictly increasing");

  const auto& jh = j["hamiltonians"];
  if (!jh.is_array() || jh.size() != h.times.size())
    throw ParseError(0, "hamiltonians must match times in length");
  for (std::size_t i = 0; i < jh.size(); ++i) {
    ComplexMatrix m = detail::matrix_from_json(jh[i], n, i);
    const double defect = hermitian_defect(m);
    if (defect > tol)
      throw ValidationError(i, "hamiltonian sample is not Hermitian (defect " +
                                   std::to_string(defect) + ")");
    double residual = 0.0;
    hermitize(m, residual);
    h.hamiltonians.push_back(std::move(m));
    h.hermitize_residuals.push_back(residual);
  }
  return h;
}

HamiltonianTrajectory load_hamiltonian_file(const std::filesystem::path& path,
                                            double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_hamiltonian(buf.str(), tol);
}

void save_hamiltonian_file(const HamiltonianTrajectory& h,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_hamiltonian(h) << '\n';
}

}  // namespace hamrec
