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

#include <cstdint>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qbec/arith.hpp"
#include "qbec/circuit.hpp"

namespace qbec {
namespace {

// Runs the circuit on basis state `value` and returns the basis index it
// maps to, requiring the output to be a single computational basis state.
std::uint64_t permuted(const Circuit& c, std::uint64_t value) {
  CVector v = CVector::Zero(
      static_cast<Eigen::Index>(std::uint64_t{1} << c.num_qubits()));
  v(static_cast<Eigen::Index>(value)) = 1.0;
  v = oracle::apply_circuit(c, v);
  std::uint64_t found = 0;
  int hits = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      found = static_cast<std::uint64_t>(i);
      ++hits;
      EXPECT_NEAR(std::abs(v(i)), 1.0, 1e-10);
    }
  }
  EXPECT_EQ(hits, 1);
  return found;
}

TEST(AddConst, WrapsModuloRegisterSize) {
  for (std::uint64_t c = 0; c < 8; ++c) {
    Circuit circuit;
    const Register& reg = circuit.add_register("v", 3);
    emit_add_const(circuit, reg, c);
    for (std::uint64_t x = 0; x < 8; ++x) {
      EXPECT_EQ(permuted(circuit, x), (x + c) % 8)
          << "x = " << x << ", c = " << c;
    }
  }
}

TEST(SubConst, InvertsAddConst) {
  Circuit circuit;
  const Register& reg = circuit.add_register("v", 3);
  emit_add_const(circuit, reg, 5);
  emit_sub_const(circuit, reg, 5);
  for (std::uint64_t x = 0; x < 8; ++x) {
    EXPECT_EQ(permuted(circuit, x), x);
  }
}

TEST(SubConst, WrapsBelowZero) {
  Circuit circuit;
  const Register& reg = circuit.add_register("v", 2);
  emit_sub_const(circuit, reg, 1);
  EXPECT_EQ(permuted(circuit, 0), 3u);
  EXPECT_EQ(permuted(circuit, 2), 1u);
}

TEST(FlagLessThan, FiresExactlyBelowThreshold) {
  for (std::uint64_t c : {0ull, 1ull, 3ull, 4ull, 9ull}) {
    Circuit circuit;
    const Register& reg = circuit.add_register("v", 2);
    circuit.add_register("flag", 1);
    emit_flag_less_than(circuit, reg, c, 2);
    for (std::uint64_t x = 0; x < 4; ++x) {
      const std::uint64_t out = permuted(circuit, x);
      const bool flagged = (out >> 2) & 1;
      EXPECT_EQ(flagged, x < c) << "x = " << x << ", c = " << c;
      EXPECT_EQ(out & 3u, x);
    }
  }
}

TEST(FlagAtLeast, ComplementsLessThan) {
  Circuit circuit;
  const Register& reg = circuit.add_register("v", 2);
  circuit.add_register("flag", 1);
  emit_flag_at_least(circuit, reg, 2, 2);
  for (std::uint64_t x = 0; x < 4; ++x) {
    const std::uint64_t out = permuted(circuit, x);
    EXPECT_EQ(((out >> 2) & 1) != 0, x >= 2) << "x = " << x;
  }
}

}  // namespace
}  // namespace qbec
