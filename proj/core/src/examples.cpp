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

#include "hamrec/examples.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "hamrec/rng.hpp"

namespace hamrec {

namespace {

constexpr double kFineSubstep = 5e-4;

// Midpoint stepping with the Hamiltonian evaluated analytically at each
// substep midpoint; dt may be negative.
ComplexMatrix step_analytic(const ComplexMatrix& rho, double ta, double tb,
                            double hbar,
                            const std::function<ComplexMatrix(double)>& h_at) {
  const double span = tb - ta;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / kFineSubstep)));
  const double dt = span / steps;
  ComplexMatrix out = rho;
  for (int k = 0; k < steps; ++k) {
    const double mid = ta + (k + 0.5) * dt;
    const ComplexMatrix prop = expm_i_hermitian(h_at(mid), dt / hbar);
    out = prop * out * prop.adjoint();
  }
  const int n = out.dim();
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const cd x = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = x;
      out(c, r) = std::conj(x);
    }
  return out;
}

}  // namespace

ParametricExample qutrit_pure(double omega, double hbar) {
  if (omega == 0.0) throw std::invalid_argument("omega must be nonzero");
  const cd phase = std::exp(cd(0.0, M_PI / 6.0));

  ParametricExample ex;
  ex.name = "qutrit_pure";
  ex.n = 3;
  ex.parameters = {{"omega", omega}, {"hbar", hbar}};

  ex.state_at = [omega](double t) {
    const double c = std::cos(omega * t);
    const double norm = std::sqrt(2.0 + c * c);
    const std::vector<cd> psi = {cd(1.0 / norm, 0.0), cd(c / norm, 0.0),
                                 std::exp(cd(0.0, M_PI / 6.0)) / norm};
    return validate_density(outer_projector(psi), 1e-9);
  };

  ex.reference_hamiltonian_at = [omega, hbar, phase](double t) {
    const double c = std::cos(omega * t);
    const double f = hbar * omega * std::sin(omega * t) / (2.0 + c * c);
    ComplexMatrix h(3);
    h(0, 1) = cd(0.0, f);
    h(1, 0) = cd(0.0, -f);
    h(1, 2) = cd(0.0, -f) * phase;
    h(2, 1) = cd(0.0, f) * std::conj(phase);
    return h;
  };

  // The explicit evolution matrix, transcribed entry by entry as a golden
  // reference against transcription slips elsewhere.
  ex.reference_evolution_at = [omega, phase](double t) {
    const double c = std::cos(omega * t);
    const double root = std::sqrt(3.0 * (2.0 + c * c));
    ComplexMatrix u(3);
    u(0, 0) = (2.0 + c + root) / (2.0 * root);
    u(0, 1) = (1.0 - c) / root;
    u(0, 2) = std::conj(phase) * (2.0 + c - root) / (2.0 * root);
    u(1, 0) = (c - 1.0) / (2.0 * root);
    u(1, 1) = (2.0 + c) / root;
    u(1, 2) = std::conj(phase) * (c - 1.0) / (2.0 * root);
    u(2, 0) = phase * (2.0 + c - root) / (2.0 * root);
    u(2, 1) = phase * (1.0 - c) / root;
    u(2, 2) = (2.0 + c + root) / (2.0 * root);
    return u;
  };
  return ex;
}

ParametricExample qubit_mixed(double g, double hbar) {
  if (g == 0.0) throw std::invalid_argument("g must be nonzero");

  ParametricExample ex;
  ex.name = "qubit_mixed";
  ex.n = 2;
  ex.parameters = {{"g", g}, {"hbar", hbar}};

  ex.state_at = [g](double t) {
    const double c = std::cos(g * t);
    ComplexMatrix m(2);
    m(0, 0) = 0.75 - 0.5 * c * c;
    m(1, 1) = 0.25 + 0.5 * c * c;
    m(0, 1) = 0.25 * std::sin(2.0 * g * t);
    m(1, 0) = m(0, 1);
    return validate_density(m, 1e-9);
  };

  ex.reference_hamiltonian_at = [g, hbar](double) {
    ComplexMatrix h(2);
    h(0, 1) = cd(0.0, hbar * g);
    h(1, 0) = cd(0.0, -hbar * g);
    return h;
  };

  ex.reference_evolution_at = [g](double t) {
    ComplexMatrix u(2);
    u(0, 0) = std::cos(g * t);
    u(0, 1) = std::sin(g * t);
    u(1, 0) = -std::sin(g * t);
    u(1, 1) = std::cos(g * t);
    return u;
  };
  return ex;
}

ParametricExample random_smooth_instance(int n, std::uint64_t seed, int terms,
                                         double hbar) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");

  std::mt19937_64 rng(seed);
  auto amps = std::make_shared<std::vector<ComplexMatrix>>();
  const double scale = 0.1 / terms;
  for (int m = 0; m < 2 * terms; ++m) {
    ComplexMatrix a = random_hermitian(n, rng);
    const double norm = a.frobenius_norm();
    if (norm > 0.0) a *= cd(scale / norm, 0.0);
    amps->push_back(a);
  }
  const double nu = 0.4 + 0.1 * uniform_unit(rng);

  const ComplexMatrix w = random_complex(n, rng);
  ComplexMatrix gram = w * w.adjoint();
  gram *= cd(1.0 / gram.trace().real(), 0.0);
  const DensityMatrix rho0 = validate_density(gram, 1e-9);

  auto h_at = [amps, nu, terms](double t) {
    ComplexMatrix h((*amps)[0].dim());
    for (int m = 1; m <= terms; ++m) {
      h += cd(std::cos(m * nu * t), 0.0) * (*amps)[static_cast<std::size_t>(2 * m - 2)];
      h += cd(std::sin(m * nu * t), 0.0) * (*amps)[static_cast<std::size_t>(2 * m - 1)];
    }
    return h;
  };

  ParametricExample ex;
  ex.name = "random_smooth";
  ex.n = n;
  ex.parameters = {{"n", static_cast<double>(n)},
                   {"seed", static_cast<double>(seed)},
                   {"terms", static_cast<double>(terms)},
                   {"nu", nu},
                   {"hbar", hbar}};
  ex.reference_hamiltonian_at = h_at;
  ex.state_at = [rho0, hbar, h_at](double t) {
    return DensityMatrix{step_analytic(rho0.matrix, 0.0, t, hbar, h_at)};
  };
  return ex;
}

Trajectory sample_trajectory(const ParametricExample& ex, double t0, double t1,
                             int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(t1 > t0)) throw std::invalid_argument("t1 must exceed t0");
  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    times[static_cast<std::size_t>(j)] =
        t0 + (t1 - t0) * static_cast<double>(j) / (samples - 1);

  const double hbar = ex.parameters.count("hbar") ? ex.parameters.at("hbar") : 1.0;
  std::vector<DensityMatrix> states;
  states.reserve(times.size());
  if (ex.name == "random_smooth") {
    // One sequential integration pass instead of repeated from-zero runs.
    ComplexMatrix rho = ex.state_at(0.0).matrix;
    rho = step_analytic(rho, 0.0, times[0], hbar, ex.reference_hamiltonian_at);
    states.push_back(DensityMatrix{rho});
    for (std::size_t j = 1; j < times.size(); ++j) {
      rho = step_analytic(rho, times[j - 1], times[j], hbar,
                          ex.reference_hamiltonian_at);
      states.push_back(DensityMatrix{rho});
    }
  } else {
    for (double t : times) states.push_back(ex.state_at(t));
  }
  return Trajectory::create(std::move(times), std::move(states), hbar);
}

HamiltonianTrajectory sample_reference_hamiltonian(const ParametricExample& ex,
                                                   double t0, double t1,
                                                   int samples) {
  if (!ex.reference_hamiltonian_at)
    throw Error("example '" + ex.name + "' has no reference hamiltonian");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  HamiltonianTrajectory h;
  h.hbar = ex.parameters.count("hbar") ? ex.parameters.at("hbar") : 1.0;
  h.times.resize(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    h.times[static_cast<std::size_t>(j)] =
        t0 + (t1 - t0) * static_cast<double>(j) / (samples - 1);
  for (double t : h.times) {
    h.hamiltonians.push_back(ex.reference_hamiltonian_at(t));
    h.hermitize_residuals.push_back(0.0);
  }
  return h;
}

}  // namespace hamrec
