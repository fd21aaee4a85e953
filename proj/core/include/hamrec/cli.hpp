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

#ifndef HAMREC_CLI_HPP
#define HAMREC_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamrec/reconstruct.hpp"

namespace hamrec::cli {

/// Parsed command configuration. Machine-readable JSON goes to the output
/// stream, human-readable diagnostics to the error stream. Exit codes:
/// 0 success, 1 validation/verification failure, 2 I/O or parse errors.
struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::filesystem::path second_input;
  std::filesystem::path output;
  std::filesystem::path csv;
  DiffMethod method = DiffMethod::central_difference;
  int refine = 0;
  bool periodic = false;
  double tol = 1e-6;
  double state_tol = kStateTol;
  std::size_t basepoint = 0;
  std::uint64_t seed = 0;
  double smoothness = 0.25;
  std::optional<double> hbar;
  std::map<std::string, double> params;
  int samples = 101;
  double t_max = 1.0;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hamrec::cli

#endif  // HAMREC_CLI_HPP
