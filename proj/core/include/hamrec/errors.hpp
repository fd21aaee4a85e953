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

#ifndef HAMREC_ERRORS_HPP
#define HAMREC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamrec {

/// Base class for all hamrec domain errors. Each carries the measured
/// defect that triggered it, so callers can report magnitudes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
 public:
  double defect;
  explicit NotHermitian(double d)
      : Error("matrix is not Hermitian (defect " + std::to_string(d) + ")"),
        defect(d) {}
};

class NoConvergence : public Error {
 public:
  int sweeps;
  explicit NoConvergence(int s)
      : Error("eigensolver did not converge after " + std::to_string(s) +
              " sweeps"),
        sweeps(s) {}
};

// k is 1-based: the k-th leading principal minor vanished.
class SingularMinor : public Error {
 public:
  int k;
  double magnitude;
  SingularMinor(int k_, double m)
      : Error("leading principal minor " + std::to_string(k_) +
              " is singular (|minor| " + std::to_string(m) + ")"),
        k(k_),
        magnitude(m) {}
};

class TraceNotOne : public Error {
 public:
  double trace;
  explicit TraceNotOne(double t)
      : Error("trace is " + std::to_string(t) + ", expected 1"), trace(t) {}
};

class NotPositiveSemidefinite : public Error {
 public:
  double min_eigenvalue;
  explicit NotPositiveSemidefinite(double e)
      : Error("smallest eigenvalue " + std::to_string(e) + " is negative"),
        min_eigenvalue(e) {}
};

class ParseError : public Error {
 public:
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at byte " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

class ValidationError : public Error {
 public:
  std::size_t sample_index;
  ValidationError(std::size_t idx, const std::string& msg)
      : Error("state " + std::to_string(idx) + ": " + msg),
        sample_index(idx) {}
};

// The trajectory drifts off its isospectral orbit: no von Neumann
// equation can generate it.
class IsospectralityViolation : public Error {
 public:
  std::size_t sample_index;
  int power;
  double drift;
  IsospectralityViolation(std::size_t idx, int k, double d)
      : Error("Tr rho^" + std::to_string(k) + " drifts by " +
              std::to_string(d) + " at sample " + std::to_string(idx) +
              "; the trajectory cannot satisfy any von Neumann equation"),
        sample_index(idx),
        power(k),
        drift(d) {}
};

class NotDiagonal : public Error {
 public:
  double offdiagonal_norm;
  explicit NotDiagonal(double d)
      : Error("matrix is not diagonal (off-diagonal norm " +
              std::to_string(d) + ")"),
        offdiagonal_norm(d) {}
};

class NotInChamber : public Error {
 public:
  int index;
  double value;
  NotInChamber(int k, double v)
      : Error("coefficient b_" + std::to_string(k) + " = " +
              std::to_string(v) + " is negative"),
        index(k),
        value(v) {}
};

class NumericallySingular : public Error {
 public:
  int index;
  double value;
  NumericallySingular(int k, double v)
      : Error("factorization pivot " + std::to_string(k) +
              " is not positive (" + std::to_string(v) + ")"),
        index(k),
        value(v) {}
};

// The state sits outside the stereographic chart (e.g. vanishing first
// component of a pure state).
class ChartSingularity : public Error {
 public:
  std::size_t index;
  explicit ChartSingularity(std::size_t k)
      : Error("stereographic chart is singular at index " +
              std::to_string(k)),
        index(k) {}
};

class DegenerateDenominator : public Error {
 public:
  double magnitude;
  explicit DegenerateDenominator(double m)
      : Error("branch denominator magnitude " + std::to_string(m) +
              " is too small"),
        magnitude(m) {}
};

class NotPure : public Error {
 public:
  std::size_t sample_index;
  explicit NotPure(std::size_t idx)
      : Error("state " + std::to_string(idx) + " is not pure"),
        sample_index(idx) {}
};

class EigenvalueCrossing : public Error {
 public:
  std::size_t sample_index;
  explicit EigenvalueCrossing(std::size_t idx)
      : Error("eigenvalue cluster structure changes at sample " +
              std::to_string(idx) + "; alignment is ambiguous"),
        sample_index(idx) {}
};

class StepTooLarge : public Error {
 public:
  std::size_t sample_index;
  explicit StepTooLarge(std::size_t idx)
      : Error("propagator step at sample " + std::to_string(idx) +
              " has an eigenphase too close to +-pi for a principal log"),
        sample_index(idx) {}
};

class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& msg)
      : Error("grid mismatch: " + msg) {}
};

class BlockMismatch : public Error {
 public:
  explicit BlockMismatch(const std::string& msg)
      : Error("block mismatch: " + msg) {}
};

}  // namespace hamrec

#endif  // HAMREC_ERRORS_HPP
