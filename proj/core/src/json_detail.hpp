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

// Internal helpers shared by the trajectory and Hamiltonian JSON codecs.

#ifndef HAMREC_SRC_JSON_DETAIL_HPP
#define HAMREC_SRC_JSON_DETAIL_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamrec/errors.hpp"
#include "hamrec/linalg.hpp"

namespace hamrec::detail {

inline std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline void append_matrix(std::string& out, const ComplexMatrix& m) {
  out += '[';
  for (int r = 0; r < m.dim(); ++r) {
    if (r) out += ',';
    out += '[';
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out += ',';
      out += '[';
      out += fmt17(m(r, c).real());
      out += ',';
      out += fmt17(m(r, c).imag());
      out += ']';
    }
    out += ']';
  }
  out += ']';
}

inline void append_times(std::string& out, const std::vector<double>& times) {
  out += '[';
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i) out += ',';
    out += fmt17(times[i]);
  }
  out += ']';
}

inline nlohmann::json parse_checked(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j, int n,
                                      std::size_t index) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    throw ParseError(0, "state " + std::to_string(index) + ": expected " +
                            std::to_string(n) + " rows");
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError(0, "state " + std::to_string(index) + " row " +
                              std::to_string(r) + ": expected " +
                              std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError(0, "state " + std::to_string(index) +
                                ": entries must be [re, im] pairs");
      m(r, c) = cd(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace hamrec::detail

#endif  // HAMREC_SRC_JSON_DETAIL_HPP
