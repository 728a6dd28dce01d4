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
#include <vector>

#include "qbec/types.hpp"

namespace qbec {

enum class PauliOp : std::uint8_t { x = 1, y = 2, z = 3 };

/// One weighted Pauli string. Qubits absent from `ops` carry identity.
struct PauliTerm {
  double coeff = 0.0;
  std::map<std::uint32_t, PauliOp> ops;
};

/// A real-weighted sum of Pauli strings, kept canonical: terms sorted by
/// their operator maps, equal strings merged, and coefficients below 1e-12
/// (relative to the largest) dropped. Real weights make the sum Hermitian.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::vector<PauliTerm> terms);

  static PauliSum identity(double coeff = 1.0);
  static PauliSum x(std::uint32_t q, double coeff = 1.0);
  static PauliSum y(std::uint32_t q, double coeff = 1.0);
  static PauliSum z(std::uint32_t q, double coeff = 1.0);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Smallest qubit count covering every referenced qubit.
  std::uint32_t min_qubits() const;

  /// Sum of absolute coefficients.
  double one_norm() const;

  /// Dense matrix on n qubits, with qubit 0 the least significant bit.
  /// Throws std::invalid_argument if n < min_qubits().
  CMatrix to_dense(std::uint32_t n) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double factor);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, double f) { return a *= f; }
  friend PauliSum operator*(double f, PauliSum a) { return a *= f; }

  /// Operator product with exact phase tracking. Throws
  /// std::invalid_argument if the result has an imaginary coefficient
  /// (the type only represents Hermitian sums).
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  void canonicalize();

  std::vector<PauliTerm> terms_;
};

/// One complex-weighted Pauli string, as produced by expanding a general
/// (possibly non-Hermitian) matrix.
struct WeightedPauliString {
  Complex coeff;
  std::map<std::uint32_t, PauliOp> ops;
};

/// Full Pauli expansion of a square matrix with power-of-2 dimension:
/// A = sum_P (tr(P A) / N) P, coefficients below 1e-12 dropped, strings
/// ordered by code (I < X < Y < Z per qubit, qubit 0 fastest). Throws
/// std::invalid_argument for other shapes.
std::vector<WeightedPauliString> pauli_decompose_complex(const CMatrix& a);

/// Pauli expansion of a dense operator: A = sum_P tr(P A) / N * P.
/// Requires a square matrix with power-of-2 dimension; throws
/// std::invalid_argument otherwise, or if A is not Hermitian within 1e-9
/// (the expansion would need complex weights).
PauliSum pauli_decompose(const CMatrix& a);

}  // namespace qbec
