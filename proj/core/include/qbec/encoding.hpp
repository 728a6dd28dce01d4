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
#include <functional>
#include <string>
#include <vector>

#include "qbec/circuit.hpp"
#include "qbec/decompose.hpp"
#include "qbec/pauli.hpp"
#include "qbec/types.hpp"

namespace qbec {

/// Shape of one ancilla register an encoding will request from apply().
struct AncillaSpec {
  std::string name;
  std::uint32_t size = 0;
};

/// Emits the encoding unitary into `circuit`, whose registers are the
/// operand registers followed by ancilla registers matching the specs.
using UnitaryEmitter = std::function<void(
    Circuit& circuit, const std::vector<Register>& operands,
    const std::vector<Register>& ancillas)>;

/// A unitary U together with bookkeeping (alpha, ancilla count, epsilon)
/// such that the upper-left block of U on zeroed ancillas approximates
/// A / alpha: ||A - alpha (<0| x I) U (|0> x I)|| <= epsilon.
///
/// operand_shape lists the operand register sizes; the first entry is the
/// least significant block of a basis index. is_hermitian promises both
/// that the block is Hermitian and that U itself is an involution, which
/// qubitization requires.
struct BlockEncoding {
  double alpha = 1.0;
  double epsilon = 0.0;
  bool is_hermitian = false;
  std::vector<std::uint32_t> operand_shape;
  std::vector<AncillaSpec> ancillas;
  UnitaryEmitter emit;

  std::uint32_t operand_qubits() const;
  std::uint32_t ancilla_qubits() const;
  std::uint32_t total_qubits() const;
};

/// apply() output: the compiled circuit plus the register bookkeeping the
/// caller needs for post-selection.
struct AppliedEncoding {
  Circuit circuit;
  std::vector<Register> operands;
  std::vector<Register> ancilla_registers;
  std::vector<std::uint32_t> ancilla_qubits;
};

/// Compiles the encoding onto fresh registers: operands first (named op0,
/// op1, ...), then the requested ancillas. Ancillas start at |0> and the
/// caller projects them back onto |0>.
AppliedEncoding apply(const BlockEncoding& encoding);

/// Same, but runs `operand_prep` on the operand registers first. The prep
/// circuit must cover exactly the operand qubits and not measure.
AppliedEncoding apply(const BlockEncoding& encoding,
                      const Circuit& operand_prep);

/// Resource counts of the compiled apply() circuit after lowering.
ResourceReport resources(const BlockEncoding& encoding);

/// Encodes a dense matrix by Pauli-basis LCU with coefficients
/// tr(P A) / N. Coefficient phases fold into the selected unitaries as
/// global-phase gates, so all PREP weights are positive. alpha is the sum
/// of absolute coefficients; epsilon = 0; is_hermitian is true iff A is
/// Hermitian within 1e-12. Throws std::invalid_argument for non-square or
/// non-power-of-2 dimensions.
BlockEncoding from_array(const CMatrix& a);

/// Encodes a Hermitian Pauli sum as PREP-SELECT-PREP^dag with one branch
/// per term (signs folded as global phases). alpha is the coefficient
/// 1-norm. `n` of 0 sizes the operand register to the highest qubit used.
BlockEncoding from_operator(const PauliSum& op, std::uint32_t n = 0);

/// General LCU from positive weights and caller-supplied branch circuits,
/// each acting on identical registers (these become the operand shape).
/// alpha is the plain left-to-right sum of coeffs. Set `self_inverse` only
/// if every branch squares to identity; that marks the result Hermitian.
BlockEncoding from_lcu(const std::vector<double>& coeffs,
                       const std::vector<Circuit>& unitaries,
                       bool self_inverse = false);

/// Encodes the N x N matrix with ones on diagonal k (k = 0 main, k > 0
/// above, k < 0 below) using a modular shift plus a wrap-around flag on
/// one ancilla. alpha = 1. Throws std::invalid_argument if |k| >= 2^n.
BlockEncoding from_eye(std::int64_t k, std::uint32_t n);

/// Encodes |L><R| (alpha = 1) from the two state preparation circuits,
/// which must have equal qubit counts. With kernel = true the flag
/// polarity inverts and the block becomes U_L U_R^dag - |L><R|, which for
/// left = right is the kernel projector I - |L><L|.
BlockEncoding from_projector(const Circuit& left, const Circuit& right,
                             bool kernel = false);

/// Basis-state overload: |left><right| on n qubits.
BlockEncoding from_projector(std::uint64_t left, std::uint64_t right,
                             std::uint32_t n, bool kernel = false);

/// Wraps caller-supplied parts verbatim. Throws std::invalid_argument for
/// alpha <= 0, epsilon < 0, or an empty operand shape.
BlockEncoding custom_encoding(double alpha,
                              std::vector<std::uint32_t> operand_shape,
                              std::vector<AncillaSpec> ancillas,
                              UnitaryEmitter emit, bool is_hermitian = false,
                              double epsilon = 0.0);

/// <psi| A |psi> estimated by a Hadamard test on the encoding unitary and
/// rescaled by alpha. Exact expectation by default; positive `shots` draws
/// seeded Bernoulli samples instead.
double expectation_value(const BlockEncoding& encoding,
                         const Circuit& state_prep, std::uint64_t shots = 0,
                         std::uint64_t seed = 0);

}  // namespace qbec
