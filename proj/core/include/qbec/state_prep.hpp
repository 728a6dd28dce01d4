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
#include <string>
#include <utility>
#include <vector>

#include "qbec/circuit.hpp"

namespace qbec {

/// Real amplitude list of length 2^n, signs allowed. Inputs are normalized
/// internally; complex amplitudes are out of scope.
using AmplitudeSpec = std::vector<double>;

/// Emits gates mapping |0...0> of `reg` to the normalized amplitudes, using
/// recursive multiplexed Y-rotations. Signs are folded into the last-level
/// rotation angles. Throws std::invalid_argument for a zero vector or if
/// the length differs from 2^reg.size.
void emit_prepare(Circuit& circuit, const Register& reg,
                  const AmplitudeSpec& amplitudes);

/// Standalone preparation circuit on a fresh register named `reg_name`.
Circuit prepare(const AmplitudeSpec& amplitudes,
                const std::string& reg_name = "psi");

/// Emits the LCU coefficient oracle: |0...0> -> sum_k sqrt(c_k / sum c) |k>
/// with the list zero-padded to 2^reg.size. All coefficients must be
/// positive; fold signs into the selected unitaries instead.
void emit_prep_pair(Circuit& circuit, const Register& reg,
                    const std::vector<double>& coeffs);

/// Standalone coefficient oracle on a fresh register sized ceil(log2 k).
/// A single coefficient needs no qubits and yields an empty circuit.
Circuit prep_pair(const std::vector<double>& coeffs,
                  const std::string& reg_name = "prep");

/// Prepares (|01> - |10>)/sqrt(2) on each pair (a, b), reading |01> as
/// a = 0, b = 1; unmatched qubits stay |0>. `n` of 0 sizes the register to
/// the largest matched qubit plus one. Throws std::invalid_argument if a
/// qubit repeats across pairs or n is too small.
Circuit singlet_prep(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& matching,
                     std::uint32_t n = 0);

}  // namespace qbec
