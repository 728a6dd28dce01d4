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
#include <utility>
#include <vector>

#include "qbec/encoding.hpp"
#include "qbec/pauli.hpp"
#include "qbec/types.hpp"

namespace qbec {

/// Transverse-field Ising chain with open boundaries:
/// H = -J sum_i Z_i Z_{i+1} + B sum_i X_i.
PauliSum ising_chain(std::uint32_t length, double j, double b);

/// Antiferromagnetic Heisenberg model on the length-L cycle:
/// H = (1/4) sum_edges (X X + Y Y + (1/2) Z Z).
PauliSum heisenberg_cycle(std::uint32_t length);

/// A maximal matching of the cycle: pairs (0,1), (2,3), ... for even L.
std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_matching(
    std::uint32_t length);

/// Dense 1D Laplace operator with cyclic boundary: -2 on the diagonal and
/// ones on the two cyclic off-diagonals. dim must be a power of 2.
CMatrix laplace_matrix(std::uint64_t dim);

/// Hand-built LCU encoding of the cyclic Laplace operator from three
/// branches (-2 I, cyclic shift, inverse cyclic shift), alpha = 4. The
/// shifts are modular adders, so the whole SELECT costs O(n^2) gates
/// instead of the 4^n-term Pauli expansion from_array would use.
BlockEncoding laplace_custom_encoding(std::uint32_t n);

}  // namespace qbec
