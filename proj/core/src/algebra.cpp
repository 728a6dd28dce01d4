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

#include "qbec/algebra.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbec/state_prep.hpp"

namespace qbec {
namespace {

void require_emitter(const BlockEncoding& enc) {
  if (!enc.emit) {
    throw std::invalid_argument("encoding has no unitary emitter");
  }
}

std::vector<Register> slice(const std::vector<Register>& regs,
                            std::size_t begin, std::size_t count) {
  return {regs.begin() + static_cast<std::ptrdiff_t>(begin),
          regs.begin() + static_cast<std::ptrdiff_t>(begin + count)};
}

}  // namespace

BlockEncoding add(const BlockEncoding& a, const BlockEncoding& b) {
  require_emitter(a);
  require_emitter(b);
  if (a.operand_shape != b.operand_shape) {
    throw std::invalid_argument("summand operand shapes differ");
  }
  BlockEncoding enc;
  enc.alpha = a.alpha + b.alpha;
  enc.epsilon = a.epsilon + b.epsilon;
  enc.is_hermitian = a.is_hermitian && b.is_hermitian;
  enc.operand_shape = a.operand_shape;
  enc.ancillas.push_back({"sel", 1});
  enc.ancillas.insert(enc.ancillas.end(), a.ancillas.begin(),
                      a.ancillas.end());
  enc.ancillas.insert(enc.ancillas.end(), b.ancillas.begin(),
                      b.ancillas.end());
  const std::size_t a_count = a.ancillas.size();
  const std::size_t b_count = b.ancillas.size();
  enc.emit = [emit_a = a.emit, emit_b = b.emit, wa = a.alpha, wb = b.alpha,
              a_count, b_count](Circuit& circuit,
                                const std::vector<Register>& ops,
                                const std::vector<Register>& ancillas) {
    const Register& sel = ancillas[0];
    Circuit prep = circuit.empty_like();
    emit_prepare(prep, sel, {std::sqrt(wa), std::sqrt(wb)});
    circuit.extend(prep);
    // Branch unitaries run under opposite selector values; controlling
    // every gate (global phases included) keeps each branch exact.
    Circuit branch = circuit.empty_like();
    emit_a(branch, ops, slice(ancillas, 1, a_count));
    for (const Gate& g : branch.gates()) {
      circuit.append(g.with_controls({sel[0]}, {0}));
    }
    branch = circuit.empty_like();
    emit_b(branch, ops, slice(ancillas, 1 + a_count, b_count));
    for (const Gate& g : branch.gates()) {
      circuit.append(g.with_controls({sel[0]}, {1}));
    }
    circuit.extend(adjoint(prep));
  };
  return enc;
}

BlockEncoding sub(const BlockEncoding& a, const BlockEncoding& b) {
  return add(a, scale(b, -1.0));
}

BlockEncoding scale(const BlockEncoding& a, double c) {
  require_emitter(a);
  if (!std::isfinite(c) || c == 0.0) {
    throw std::invalid_argument("scale factor must be a nonzero real");
  }
  BlockEncoding enc = a;
  enc.alpha = std::abs(c) * a.alpha;
  enc.epsilon = std::abs(c) * a.epsilon;
  if (c < 0.0) {
    enc.emit = [inner = a.emit](Circuit& circuit,
                                const std::vector<Register>& ops,
                                const std::vector<Register>& ancillas) {
      circuit.append(Gate::global_phase(std::numbers::pi));
      inner(circuit, ops, ancillas);
    };
  }
  return enc;
}

BlockEncoding neg(const BlockEncoding& a) { return scale(a, -1.0); }

BlockEncoding matmul(const BlockEncoding& a, const BlockEncoding& b) {
  require_emitter(a);
  require_emitter(b);
  if (a.operand_shape != b.operand_shape) {
    throw std::invalid_argument("factor operand shapes differ");
  }
  BlockEncoding enc;
  enc.alpha = a.alpha * b.alpha;
  enc.epsilon = a.alpha * b.epsilon + b.alpha * a.epsilon;
  // The compiled unitary U_A U_B is not an involution even when a and b
  // coincide (the two factors use disjoint ancillas), so the product is
  // never marked Hermitian.
  enc.is_hermitian = false;
  enc.operand_shape = a.operand_shape;
  enc.ancillas = b.ancillas;
  enc.ancillas.insert(enc.ancillas.end(), a.ancillas.begin(),
                      a.ancillas.end());
  const std::size_t b_count = b.ancillas.size();
  const std::size_t a_count = a.ancillas.size();
  enc.emit = [emit_a = a.emit, emit_b = b.emit, a_count, b_count](
                 Circuit& circuit, const std::vector<Register>& ops,
                 const std::vector<Register>& ancillas) {
    emit_b(circuit, ops, slice(ancillas, 0, b_count));
    emit_a(circuit, ops, slice(ancillas, b_count, a_count));
  };
  return enc;
}

BlockEncoding kron(const BlockEncoding& a, const BlockEncoding& b) {
  require_emitter(a);
  require_emitter(b);
  BlockEncoding enc;
  enc.alpha = a.alpha * b.alpha;
  enc.epsilon =
      a.alpha * b.epsilon + b.alpha * a.epsilon + a.epsilon * b.epsilon;
  enc.is_hermitian = a.is_hermitian && b.is_hermitian;
  // B owns the low operand qubits, so kron(A, B) indexes rows as
  // i_A * dim_B + i_B, matching the dense Kronecker product.
  enc.operand_shape = b.operand_shape;
  enc.operand_shape.insert(enc.operand_shape.end(), a.operand_shape.begin(),
                           a.operand_shape.end());
  enc.ancillas = b.ancillas;
  enc.ancillas.insert(enc.ancillas.end(), a.ancillas.begin(),
                      a.ancillas.end());
  const std::size_t b_ops = b.operand_shape.size();
  const std::size_t a_ops = a.operand_shape.size();
  const std::size_t b_count = b.ancillas.size();
  const std::size_t a_count = a.ancillas.size();
  enc.emit = [emit_a = a.emit, emit_b = b.emit, a_ops, b_ops, a_count,
              b_count](Circuit& circuit, const std::vector<Register>& ops,
                       const std::vector<Register>& ancillas) {
    emit_b(circuit, slice(ops, 0, b_ops), slice(ancillas, 0, b_count));
    emit_a(circuit, slice(ops, b_ops, a_ops),
           slice(ancillas, b_count, a_count));
  };
  return enc;
}

}  // namespace qbec
