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

#include "qbec/encoding.hpp"

namespace qbec {

/// Encodes A + B with one extra selector qubit: alpha = alpha_A + alpha_B,
/// epsilon = eps_A + eps_B, Hermitian iff both are. Operand shapes must
/// match (std::invalid_argument otherwise).
BlockEncoding add(const BlockEncoding& a, const BlockEncoding& b);

/// Encodes A - B, implemented as add(a, scale(b, -1)).
BlockEncoding sub(const BlockEncoding& a, const BlockEncoding& b);

/// Encodes c * A without new qubits: |c| folds into alpha and a negative
/// sign becomes a global phase. c must be nonzero real.
BlockEncoding scale(const BlockEncoding& a, double c);

/// Encodes -A.
BlockEncoding neg(const BlockEncoding& a);

/// Encodes the product A B (B's circuit first, then A's on the same
/// operands with separate ancillas): alpha = alpha_A alpha_B, epsilon =
/// alpha_A eps_B + alpha_B eps_A. The product of two Hermitian blocks is
/// generally not Hermitian and the compiled unitary is not an involution
/// even when a and b coincide, so is_hermitian is always false.
BlockEncoding matmul(const BlockEncoding& a, const BlockEncoding& b);

/// Encodes the Kronecker product: A acts on the high operand qubits and B
/// on the low ones, matching the row-major convention kron(A_mat, B_mat).
BlockEncoding kron(const BlockEncoding& a, const BlockEncoding& b);

inline BlockEncoding operator+(const BlockEncoding& a, const BlockEncoding& b) {
  return add(a, b);
}
inline BlockEncoding operator-(const BlockEncoding& a, const BlockEncoding& b) {
  return sub(a, b);
}
inline BlockEncoding operator-(const BlockEncoding& a) { return neg(a); }
inline BlockEncoding operator*(double c, const BlockEncoding& a) {
  return scale(a, c);
}
inline BlockEncoding operator*(const BlockEncoding& a, double c) {
  return scale(a, c);
}
inline BlockEncoding operator*(const BlockEncoding& a, const BlockEncoding& b) {
  return matmul(a, b);
}

}  // namespace qbec
