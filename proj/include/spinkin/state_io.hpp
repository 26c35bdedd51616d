// Copyright 2026 The spinkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINKIN_STATE_IO_HPP
#define SPINKIN_STATE_IO_HPP

#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>

#include "spinkin/spin_algebra.hpp"
#include "spinkin/states.hpp"

namespace spinkin {

enum class StateKind { ket, density, constellation };

// Parsed state file. Spin 1 with a 4x4 density is read as a two-qubit state
// rotated by the collective spin.
struct StateInput {
  StateKind kind = StateKind::ket;
  Spin spin;
  bool two_qubit = false;
  ComplexMatrix rho;
  std::optional<PureState> ket;

  int dim() const { return static_cast<int>(rho.rows()); }
  SpinMatrices generators() const { return two_qubit ? collective_spin() : spin_matrices(spin); }
};

namespace detail {

inline Complex parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidInput("complex entries must be numbers or [re, im] pairs");
}

inline ComplexVector parse_ket(const nlohmann::json& data) {
  if (!data.is_array()) throw InvalidInput("ket data must be an array");
  ComplexVector v(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) v(i) = parse_complex(data[i]);
  return v;
}

inline ComplexMatrix parse_matrix(const nlohmann::json& data) {
  if (!data.is_array() || data.empty()) throw InvalidInput("density data must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(data.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = data[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InvalidInput("density matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(row[j]);
  }
  return m;
}

}  // namespace detail

inline StateInput parse_state(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("state file must hold a JSON object");
  for (const char* key : {"kind", "spin", "data"})
    if (!j.contains(key)) throw InvalidInput(std::string("state file lacks \"") + key + "\"");
  if (!j["spin"].is_number()) throw InvalidInput("\"spin\" must be a number");
  StateInput in;
  in.spin = Spin::from_double(j["spin"].get<double>());
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const bool normalize = j.value("normalize", false);
  if (kind == "ket") {
    in.kind = StateKind::ket;
    const ComplexVector v = detail::parse_ket(j["data"]);
    in.ket = normalize ? PureState::normalized(in.spin, v) : PureState(in.spin, v);
    in.rho = in.ket->density();
  } else if (kind == "density") {
    in.kind = StateKind::density;
    ComplexMatrix m = detail::parse_matrix(j["data"]);
    if (in.spin.two_s == 2 && m.rows() == 4) {
      in.two_qubit = true;
    } else if (m.rows() != in.spin.dim()) {
      throw InvalidInput("density dimension " + std::to_string(m.rows()) + " does not match spin");
    }
    in.rho = DensityMatrix(std::move(m)).matrix();
  } else if (kind == "constellation") {
    in.kind = StateKind::constellation;
    const auto& data = j["data"];
    if (!data.is_array()) throw InvalidInput("constellation data must be an array of [theta, phi]");
    std::vector<std::pair<double, double>> angles;
    for (const auto& p : data) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw InvalidInput("constellation entries must be [theta, phi] pairs");
      angles.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    if (static_cast<int>(angles.size()) != in.spin.two_s)
      throw InvalidInput("constellation of spin s needs 2s stars");
    in.ket = constellation_to_state(Constellation::from_angles(angles));
    in.rho = in.ket->density();
  } else {
    throw InvalidInput("\"kind\" must be ket, density or constellation");
  }
  return in;
}

inline StateInput load_state_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return parse_state(j);
}

}  // namespace spinkin

#endif  // SPINKIN_STATE_IO_HPP
