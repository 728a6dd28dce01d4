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
#include <optional>
#include <vector>

#include "qbec/circuit.hpp"
#include "qbec/encoding.hpp"
#include "qbec/types.hpp"

namespace qbec {

/// Dense statevector, amplitude index read little endian (qubit k is
/// bit k).
struct StateVector {
  std::uint32_t num_qubits = 0;
  std::vector<Complex> amps;

  static StateVector zero(std::uint32_t num_qubits);
  static StateVector basis(std::uint32_t num_qubits, std::uint64_t index);
  double norm() const;
};

struct RunOptions {
  /// Hard cap on simulated qubits; raising it is the caller's explicit
  /// opt-in to exponential memory.
  std::uint32_t max_qubits = 22;
};

/// Applies the circuit to |0...0>. Measure gates are rejected here; use
/// postselect_zero or sampling on the final state instead.
StateVector run(const Circuit& circuit, const RunOptions& options = {});

/// Applies the circuit to the given initial state.
StateVector run(const Circuit& circuit, StateVector state,
                const RunOptions& options = {});

/// Outcome of projecting a qubit subset onto |0>.
struct PostSelectResult {
  /// Renormalized state on the remaining qubits; empty if the projection
  /// has zero probability.
  std::optional<StateVector> state;
  double success_probability = 0.0;
};

/// Projects the listed qubits onto |0> and drops them from the state.
PostSelectResult postselect_zero(const StateVector& state,
                                 const std::vector<std::uint32_t>& qubits);

/// Dense matrix of the encoded block: columns are the zero-ancilla block
/// of U applied to basis states, times nothing (no alpha factor). The
/// encoding's operand registers index the rows little endian.
CMatrix extract_block(const BlockEncoding& encoding,
                      const RunOptions& options = {});

/// Dense unitary of a full circuit (operand + ancilla space).
CMatrix circuit_unitary(const Circuit& circuit, const RunOptions& options = {});

/// Exact <psi|U|psi> of the encoding unitary on prep|0...0> via one
/// auxiliary qubit: real part by default, imaginary with `imaginary_part`.
/// Returns the raw expectation of Z on the auxiliary qubit, not rescaled.
double hadamard_test(const BlockEncoding& encoding, const Circuit& state_prep,
                     bool imaginary_part = false,
                     const RunOptions& options = {});

/// Runs apply(encoding, state_prep) and projects all ancillas onto zero,
/// emulating repeat-until-success exactly. Throws std::runtime_error if
/// the success probability falls below 1e-12.
PostSelectResult apply_rus_emulated(const BlockEncoding& encoding,
                                    const Circuit& state_prep,
                                    const RunOptions& options = {});

/// Draws geometric attempt counts (1 + failures until first success) for
/// a repeat-until-success loop with the given success probability.
std::vector<std::uint32_t> sample_rus_attempts(double success_probability,
                                               std::uint32_t trials,
                                               std::uint64_t seed);

}  // namespace qbec
