// Copyright 2026 The qbec Authors.
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

#include "qbec/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbec/pauli.hpp"

namespace qbec {
namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) {
  return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) +
                                " entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string(what) + " object needs a \"" +
                                key + "\" field");
  }
  return j.at(key);
}

std::uint64_t require_dim(const json& j, const char* what) {
  const json& dim = require_field(j, "dim", what);
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) {
    throw std::invalid_argument(std::string(what) +
                                " \"dim\" must be a positive integer");
  }
  return dim.get<std::uint64_t>();
}

std::vector<double> double_list(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) +
                                " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string(what) +
                                  " must be an array of numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

GateKind kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> kinds = {
      {"x", GateKind::x},
      {"y", GateKind::y},
      {"z", GateKind::z},
      {"h", GateKind::h},
      {"s", GateKind::s},
      {"sdg", GateKind::sdg},
      {"t", GateKind::t},
      {"tdg", GateKind::tdg},
      {"rx", GateKind::rx},
      {"ry", GateKind::ry},
      {"rz", GateKind::rz},
      {"phase", GateKind::phase},
      {"global_phase", GateKind::global_phase},
      {"cx", GateKind::cx},
      {"mcx", GateKind::mcx},
      {"measure", GateKind::measure},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) {
    throw std::invalid_argument("unknown gate kind \"" + name + "\"");
  }
  return it->second;
}

std::vector<std::uint32_t> index_list(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) +
                                " must be an array of qubit indices");
  }
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_unsigned()) {
      throw std::invalid_argument(std::string(what) +
                                  " must be an array of qubit indices");
    }
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back(complex_to_json(m(r, c)));
    }
  }
  return json{{"dim", m.rows()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const json& j) {
  const std::uint64_t dim = require_dim(j, "matrix");
  const json& data = require_field(j, "data", "matrix");
  if (!data.is_array() || data.size() != dim * dim) {
    throw std::invalid_argument(
        "matrix \"data\" must hold dim * dim row-major entries");
  }
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim * dim; ++i) {
    m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
        complex_from_json(data[i], "matrix data");
  }
  return m;
}

json vector_to_json(const CVector& v) {
  json data = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    data.push_back(complex_to_json(v(i)));
  }
  return json{{"dim", v.size()}, {"data", std::move(data)}};
}

CVector vector_from_json(const json& j) {
  const std::uint64_t dim = require_dim(j, "vector");
  const json& data = require_field(j, "data", "vector");
  if (!data.is_array() || data.size() != dim) {
    throw std::invalid_argument("vector \"data\" must hold dim entries");
  }
  CVector v(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    v(static_cast<Eigen::Index>(i)) =
        complex_from_json(data[i], "vector data");
  }
  return v;
}

json statevector_to_json(const StateVector& s) {
  json data = json::array();
  for (const Complex& a : s.amps) {
    data.push_back(complex_to_json(a));
  }
  return json{{"dim", s.amps.size()}, {"data", std::move(data)}};
}

json pauli_to_json(const PauliSum& p) {
  json terms = json::array();
  for (const PauliTerm& term : p.terms()) {
    json paulis = json::object();
    for (const auto& [qubit, op] : term.ops) {
      const char* letter = op == PauliOp::x ? "X" : op == PauliOp::y ? "Y"
                                                                     : "Z";
      paulis[std::to_string(qubit)] = letter;
    }
    terms.push_back(json{{"coeff", term.coeff}, {"paulis", std::move(paulis)}});
  }
  return json{{"terms", std::move(terms)}};
}

PauliSum pauli_from_json(const json& j) {
  const json& terms = require_field(j, "terms", "Pauli sum");
  if (!terms.is_array()) {
    throw std::invalid_argument("Pauli sum \"terms\" must be an array");
  }
  std::vector<PauliTerm> parsed;
  parsed.reserve(terms.size());
  for (const json& t : terms) {
    const json& coeff = require_field(t, "coeff", "Pauli term");
    if (!coeff.is_number()) {
      throw std::invalid_argument("Pauli term \"coeff\" must be a number");
    }
    const json& paulis = require_field(t, "paulis", "Pauli term");
    if (!paulis.is_object()) {
      throw std::invalid_argument(
          "Pauli term \"paulis\" must map qubit index strings to letters");
    }
    PauliTerm term;
    term.coeff = coeff.get<double>();
    for (const auto& [key, value] : paulis.items()) {
      std::size_t consumed = 0;
      unsigned long qubit = 0;
      try {
        qubit = std::stoul(key, &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed != key.size()) {
        throw std::invalid_argument("Pauli qubit key \"" + key +
                                    "\" is not a nonnegative integer");
      }
      if (!value.is_string()) {
        throw std::invalid_argument("Pauli letter must be X, Y, or Z");
      }
      const std::string letter = value.get<std::string>();
      PauliOp op;
      if (letter == "X") {
        op = PauliOp::x;
      } else if (letter == "Y") {
        op = PauliOp::y;
      } else if (letter == "Z") {
        op = PauliOp::z;
      } else {
        throw std::invalid_argument("Pauli letter must be X, Y, or Z, got \"" +
                                    letter + "\"");
      }
      term.ops[static_cast<std::uint32_t>(qubit)] = op;
    }
    parsed.push_back(std::move(term));
  }
  return PauliSum(std::move(parsed));
}

json series_to_json(const ChebSeries& s) {
  json coeffs = json::array();
  for (const Complex& c : s.coeffs) {
    coeffs.push_back(complex_to_json(c));
  }
  return json{{"basis", s.basis == ChebSeries::Basis::chebyshev ? "chebyshev"
                                                                : "monomial"},
              {"coeffs", std::move(coeffs)}};
}

ChebSeries series_from_json(const json& j) {
  const json& basis = require_field(j, "basis", "series");
  if (!basis.is_string()) {
    throw std::invalid_argument(
        "series \"basis\" must be \"chebyshev\" or \"monomial\"");
  }
  ChebSeries s;
  const std::string name = basis.get<std::string>();
  if (name == "chebyshev") {
    s.basis = ChebSeries::Basis::chebyshev;
  } else if (name == "monomial") {
    s.basis = ChebSeries::Basis::monomial;
  } else {
    throw std::invalid_argument(
        "series \"basis\" must be \"chebyshev\" or \"monomial\", got \"" +
        name + "\"");
  }
  const json& coeffs = require_field(j, "coeffs", "series");
  if (!coeffs.is_array()) {
    throw std::invalid_argument("series \"coeffs\" must be an array");
  }
  s.coeffs.reserve(coeffs.size());
  for (const json& c : coeffs) {
    s.coeffs.push_back(complex_from_json(c, "series coeffs"));
  }
  return s;
}

json phases_to_json(const GQSPPhases& p) {
  return json{{"thetas", p.thetas}, {"phis", p.phis}, {"lambda", p.lambda}};
}

GQSPPhases phases_from_json(const json& j) {
  GQSPPhases p;
  p.thetas = double_list(require_field(j, "thetas", "phases"),
                         "phases \"thetas\"");
  p.phis = double_list(require_field(j, "phis", "phases"), "phases \"phis\"");
  const json& lambda = require_field(j, "lambda", "phases");
  if (!lambda.is_number()) {
    throw std::invalid_argument("phases \"lambda\" must be a number");
  }
  p.lambda = lambda.get<double>();
  if (p.thetas.size() != p.phis.size() || p.thetas.empty()) {
    throw std::invalid_argument(
        "phases need equally sized, nonempty theta and phi lists");
  }
  return p;
}

json circuit_to_json(const Circuit& c) {
  json registers = json::array();
  for (const Register& r : c.registers()) {
    registers.push_back(
        json{{"name", r.name},
             {"size", r.size},
             {"role", r.role == RegisterRole::ancilla ? "ancilla" : "system"}});
  }
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    gates.push_back(json{{"kind", kind_name(g.kind)},
                         {"targets", g.targets},
                         {"controls", g.controls},
                         {"polarity", g.polarity},
                         {"angle", g.angle}});
  }
  return json{{"registers", std::move(registers)}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  const json& registers = require_field(j, "registers", "circuit");
  if (!registers.is_array()) {
    throw std::invalid_argument("circuit \"registers\" must be an array");
  }
  Circuit c;
  for (const json& r : registers) {
    const json& name = require_field(r, "name", "register");
    const json& size = require_field(r, "size", "register");
    const json& role = require_field(r, "role", "register");
    if (!name.is_string() || !size.is_number_unsigned() || !role.is_string()) {
      throw std::invalid_argument(
          "register needs a string name, unsigned size, and string role");
    }
    const std::string role_name = role.get<std::string>();
    if (role_name != "system" && role_name != "ancilla") {
      throw std::invalid_argument(
          "register role must be \"system\" or \"ancilla\"");
    }
    c.add_register(name.get<std::string>(), size.get<std::uint32_t>(),
                   role_name == "ancilla" ? RegisterRole::ancilla
                                          : RegisterRole::system);
  }
  const json& gates = require_field(j, "gates", "circuit");
  if (!gates.is_array()) {
    throw std::invalid_argument("circuit \"gates\" must be an array");
  }
  for (const json& g : gates) {
    const json& kind = require_field(g, "kind", "gate");
    if (!kind.is_string()) {
      throw std::invalid_argument("gate \"kind\" must be a string");
    }
    Gate gate;
    gate.kind = kind_from_name(kind.get<std::string>());
    gate.targets = index_list(require_field(g, "targets", "gate"),
                              "gate \"targets\"");
    gate.controls = index_list(require_field(g, "controls", "gate"),
                               "gate \"controls\"");
    const json& polarity = require_field(g, "polarity", "gate");
    if (!polarity.is_array()) {
      throw std::invalid_argument("gate \"polarity\" must be an array");
    }
    for (const json& p : polarity) {
      if (!p.is_number_unsigned() || p.get<std::uint32_t>() > 1) {
        throw std::invalid_argument("gate polarity entries must be 0 or 1");
      }
      gate.polarity.push_back(static_cast<std::uint8_t>(p.get<std::uint32_t>()));
    }
    if (kind_has_angle(gate.kind)) {
      const json& angle = require_field(g, "angle", "gate");
      if (!angle.is_number()) {
        throw std::invalid_argument("gate \"angle\" must be a number");
      }
      gate.angle = angle.get<double>();
    }
    try {
      c.append(std::move(gate));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("invalid gate: ") + e.what());
    }
  }
  return c;
}

CMatrix load_operator_file(const std::string& path, std::uint32_t& n) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("terms")) {
    const PauliSum p = pauli_from_json(j);
    if (p.empty()) {
      throw std::invalid_argument(path + ": Pauli sum has no terms");
    }
    n = std::max<std::uint32_t>(1, p.min_qubits());
    return p.to_dense(n);
  }
  const CMatrix m = matrix_from_json(j);
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument(
        path + ": matrix dimension must be a power of 2, at least 2");
  }
  n = 0;
  while ((std::uint64_t{1} << n) < dim) {
    ++n;
  }
  return m;
}

PauliSum load_pauli_file(const std::string& path) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("terms")) {
    return pauli_from_json(j);
  }
  return pauli_decompose(matrix_from_json(j));
}

CVector load_vector_file(const std::string& path) {
  return vector_from_json(read_json_file(path));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace qbec
