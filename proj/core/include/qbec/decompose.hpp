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

#include <cstdint>
#include <map>
#include <string>

#include "qbec/circuit.hpp"

namespace qbec {

/// Gate counts after lowering to single-qubit gates plus CX.
struct ResourceReport {
  std::map<std::string, std::uint64_t> gate_counts;
  std::uint64_t total_gates = 0;
  std::uint64_t depth = 0;
  std::uint32_t qubits = 0;

  std::uint64_t count(const std::string& kind) const {
    auto it = gate_counts.find(kind);
    return it == gate_counts.end() ? 0 : it->second;
  }
};

/// Lowers every gate to the base set: uncontrolled single-qubit gates,
/// positively controlled CX, global phases, and measurements.
///
/// Controlled rotations use the half-angle two-CX identities, two-control
/// X uses the standard 15-gate realization, and wider controls use a
/// compute-uncompute AND ladder over clean ancillas. Any ancillas needed
/// are appended as one register named "aux"; they start and end in |0>,
/// so on the original qubits (with aux in |0>) the lowered circuit acts
/// exactly like the input.
Circuit decompose(const Circuit& circuit);

/// Resource counts of the lowered circuit. Depth is the longest qubit
/// timeline, counting each lowered gate as one step; global phases touch
/// no qubit and add no depth.
ResourceReport resources(const Circuit& circuit);

}  // namespace qbec
