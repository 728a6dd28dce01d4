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

#include "qbec/approx.hpp"
#include "qbec/encoding.hpp"

namespace qbec {

/// The qubitization walk operator W = R U, where R reflects about the
/// zero state of the encoding ancillas (R = +(2|0><0| - I), realized as a
/// global pi phase, an X frame, and a multi-controlled Z).
///
/// For a Hermitian encoding, each eigenvalue lambda of A / alpha spans an
/// invariant 2D subspace where W rotates by arccos(lambda), which gives
/// <phi| W^k |phi> = T_k(lambda).
struct WalkOperator {
  BlockEncoding base;

  /// Emits one application of W on the registers of the base encoding.
  void emit_walk(Circuit& circuit, const std::vector<Register>& operands,
                 const std::vector<Register>& ancillas) const;
};

/// Wraps a Hermitian encoding as its walk operator. Throws
/// std::invalid_argument if the encoding is not marked Hermitian.
WalkOperator qubitize(const BlockEncoding& encoding);

/// Encodes the Chebyshev polynomial T_k(A / alpha) as k walk steps:
/// alpha and the ancilla layout stay those of the base encoding.
BlockEncoding chebyshev(const BlockEncoding& encoding, std::uint32_t k);

/// Encodes sum_k c_k T_k(A / alpha) for a real Chebyshev-basis series via
/// a unary-encoded LCU: a staircase of RY rotations prepares the weights
/// on a degree-d unary register whose qubit j triggers the j-th walk
/// application, and coefficient signs live in the left preparation only.
/// The block is the series evaluated at A / alpha_base and the new alpha
/// is the coefficient 1-norm. Degree 0 collapses to a scaled identity.
/// Throws std::invalid_argument for a non-Hermitian base, a monomial
/// basis series, or coefficients with imaginary parts above 1e-12.
BlockEncoding unary_chebyshev_lcu(const BlockEncoding& encoding,
                                  const ChebSeries& series);

}  // namespace qbec
