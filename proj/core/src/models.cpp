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

#include "qbec/models.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbec/arith.hpp"
#include "qbec/circuit.hpp"

namespace qbec {

PauliSum ising_chain(std::uint32_t length, double j, double b) {
  if (length == 0) {
    throw std::invalid_argument("chain needs at least one site");
  }
  PauliSum h;
  for (std::uint32_t i = 0; i + 1 < length; ++i) {
    h += -j * (PauliSum::z(i) * PauliSum::z(i + 1));
  }
  for (std::uint32_t i = 0; i < length; ++i) {
    h += PauliSum::x(i, b);
  }
  return h;
}

PauliSum heisenberg_cycle(std::uint32_t length) {
  if (length < 2) {
    throw std::invalid_argument("cycle needs at least two sites");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i + 1 < length; ++i) {
    edges.emplace_back(i, i + 1);
  }
  if (length > 2) {
    edges.emplace_back(length - 1, 0);
  }
  PauliSum h;
  for (const auto& [a, b] : edges) {
    h += 0.25 * (PauliSum::x(a) * PauliSum::x(b) +
                 PauliSum::y(a) * PauliSum::y(b) +
                 0.5 * (PauliSum::z(a) * PauliSum::z(b)));
  }
  return h;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_matching(
    std::uint32_t length) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i + 1 < length; i += 2) {
    pairs.emplace_back(i, i + 1);
  }
  return pairs;
}

CMatrix laplace_matrix(std::uint64_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension must be a power of 2, at least 2");
  }
  CMatrix a = CMatrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    a(row, row) = -2.0;
    a(row, static_cast<Eigen::Index>((i + 1) % dim)) = 1.0;
    a(row, static_cast<Eigen::Index>((i + dim - 1) % dim)) = 1.0;
  }
  return a;
}

BlockEncoding laplace_custom_encoding(std::uint32_t n) {
  if (n == 0 || n > 62) {
    throw std::invalid_argument("register size must be in [1, 62]");
  }
  Circuit minus_identity;
  minus_identity.add_register("op0", n);
  minus_identity.append(Gate::global_phase(std::numbers::pi));
  Circuit shift_up;
  emit_add_const(shift_up, shift_up.add_register("op0", n), 1);
  Circuit shift_down;
  emit_sub_const(shift_down, shift_down.add_register("op0", n), 1);
  return from_lcu(
      {2.0, 1.0, 1.0},
      {std::move(minus_identity), std::move(shift_up), std::move(shift_down)});
}

}  // namespace qbec
