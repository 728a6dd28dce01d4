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

#pragma once

#include <string>

#include "json.hpp"

#include "qbec/approx.hpp"
#include "qbec/circuit.hpp"
#include "qbec/gqsp.hpp"
#include "qbec/pauli.hpp"
#include "qbec/simulator.hpp"
#include "qbec/types.hpp"

namespace qbec {

// JSON conventions: complex numbers are [re, im] pairs; matrices are
// {"dim": N, "data": [[re, im], ...]} in row-major order; vectors use the
// same layout with N entries; Pauli sums are {"terms": [{"coeff": c,
// "paulis": {"0": "Z", ...}}]}; series are {"basis": "...", "coeffs":
// [[re, im], ...]}; phases are {"thetas": [...], "phis": [...],
// "lambda": x}. All loaders throw std::invalid_argument with a
// human-readable message on malformed input.

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

nlohmann::json statevector_to_json(const StateVector& s);

nlohmann::json pauli_to_json(const PauliSum& p);
PauliSum pauli_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const ChebSeries& s);
ChebSeries series_from_json(const nlohmann::json& j);

nlohmann::json phases_to_json(const GQSPPhases& p);
GQSPPhases phases_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// Parses the file as either a matrix object or a Pauli-sum object
/// (detected by the presence of "terms"), returning a dense matrix either
/// way. `n` receives the qubit count.
CMatrix load_operator_file(const std::string& path, std::uint32_t& n);

/// Loads a matrix or Pauli-sum file as a PauliSum (dense input is
/// decomposed; it must be Hermitian).
PauliSum load_pauli_file(const std::string& path);

/// Loads a {"dim", "data"} vector file.
CVector load_vector_file(const std::string& path);

nlohmann::json read_json_file(const std::string& path);

}  // namespace qbec
