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

#include "qbec/qubitization.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qbec {
namespace {

std::vector<std::uint32_t> flatten(const std::vector<Register>& regs) {
  std::vector<std::uint32_t> qubits;
  for (const Register& r : regs) {
    for (std::uint32_t j = 0; j < r.size; ++j) {
      qubits.push_back(r[j]);
    }
  }
  return qubits;
}

// Emits an RY staircase preparing sum_j amps[j] |1^j 0^(d-j)> on the unary
// register: rung j rotates qubit j under control of qubit j-1, splitting
// the surviving amplitude between "stop at j" and "continue". Signs ride in
// the rotation angles except for the last leaf, which gets a Z on the final
// qubit (the only unary state where it is set).
void emit_staircase(Circuit& circuit, const Register& unary,
                    const std::vector<double>& amps) {
  const std::size_t d = amps.size() - 1;
  std::vector<double> suffix(amps.size() + 1, 0.0);
  for (std::size_t j = amps.size(); j-- > 0;) {
    suffix[j] = suffix[j + 1] + amps[j] * amps[j];
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double beta = 2.0 * std::atan2(std::sqrt(suffix[j + 1]), amps[j]);
    if (beta == 0.0) {
      continue;
    }
    Gate rot = Gate::ry(unary[static_cast<std::uint32_t>(j)], beta);
    if (j > 0) {
      rot = rot.with_controls({unary[static_cast<std::uint32_t>(j - 1)]});
    }
    circuit.append(rot);
  }
  if (amps[d] < 0.0) {
    circuit.append(Gate::z(unary[static_cast<std::uint32_t>(d - 1)]));
  }
}

}  // namespace

void WalkOperator::emit_walk(Circuit& circuit,
                             const std::vector<Register>& operands,
                             const std::vector<Register>& ancillas) const {
  base.emit(circuit, operands, ancillas);
  const std::vector<std::uint32_t> anc = flatten(ancillas);
  if (anc.empty()) {
    // The reflection about |0> of zero ancilla qubits is the identity.
    return;
  }
  // R = +(2|0><0| - I) = GlobalPhase(pi) . X^m . MCZ . X^m.
  circuit.append(Gate::global_phase(std::numbers::pi));
  for (std::uint32_t q : anc) {
    circuit.append(Gate::x(q));
  }
  Gate mcz = Gate::z(anc.back());
  if (anc.size() > 1) {
    mcz = mcz.with_controls(
        std::vector<std::uint32_t>(anc.begin(), anc.end() - 1));
  }
  circuit.append(mcz);
  for (std::uint32_t q : anc) {
    circuit.append(Gate::x(q));
  }
}

WalkOperator qubitize(const BlockEncoding& encoding) {
  if (!encoding.emit) {
    throw std::invalid_argument("encoding has no unitary emitter");
  }
  if (!encoding.is_hermitian) {
    throw std::invalid_argument(
        "qubitization requires a Hermitian self-inverse encoding");
  }
  return WalkOperator{encoding};
}

BlockEncoding chebyshev(const BlockEncoding& encoding, std::uint32_t k) {
  WalkOperator walk = qubitize(encoding);
  BlockEncoding enc;
  enc.alpha = encoding.alpha;
  enc.epsilon = static_cast<double>(k) * static_cast<double>(k) *
                encoding.epsilon;
  enc.is_hermitian = (k == 0);
  enc.operand_shape = encoding.operand_shape;
  enc.ancillas = encoding.ancillas;
  enc.emit = [walk = std::move(walk), k](Circuit& circuit,
                                         const std::vector<Register>& ops,
                                         const std::vector<Register>& anc) {
    for (std::uint32_t i = 0; i < k; ++i) {
      walk.emit_walk(circuit, ops, anc);
    }
  };
  return enc;
}

BlockEncoding unary_chebyshev_lcu(const BlockEncoding& encoding,
                                  const ChebSeries& series) {
  WalkOperator walk = qubitize(encoding);
  if (series.basis != ChebSeries::Basis::chebyshev) {
    throw std::invalid_argument(
        "unary LCU needs Chebyshev-basis coefficients; convert first");
  }
  double max_abs = 0.0;
  for (const Complex& c : series.coeffs) {
    if (std::abs(c.imag()) > 1e-12) {
      throw std::invalid_argument("unary LCU needs real coefficients");
    }
    max_abs = std::max(max_abs, std::abs(c.real()));
  }
  if (max_abs == 0.0) {
    throw std::invalid_argument("cannot encode the zero series");
  }
  std::vector<double> coeffs;
  for (const Complex& c : series.coeffs) {
    coeffs.push_back(c.real());
  }
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-15 * max_abs) {
    coeffs.pop_back();
  }
  double alpha = 0.0;
  for (double c : coeffs) {
    alpha += std::abs(c);
  }
  const std::size_t d = coeffs.size() - 1;

  BlockEncoding enc;
  enc.alpha = alpha;
  double eps = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    eps += std::abs(coeffs[k]) * static_cast<double>(k * k) *
           encoding.epsilon / encoding.alpha;
  }
  enc.epsilon = eps;
  enc.operand_shape = encoding.operand_shape;
  if (d == 0) {
    enc.is_hermitian = true;
    const bool negative = coeffs[0] < 0.0;
    enc.emit = [negative](Circuit& circuit, const std::vector<Register>&,
                          const std::vector<Register>&) {
      if (negative) {
        circuit.append(Gate::global_phase(std::numbers::pi));
      }
    };
    return enc;
  }
  enc.is_hermitian = false;
  enc.ancillas = encoding.ancillas;
  enc.ancillas.push_back({"u", static_cast<std::uint32_t>(d)});
  const std::size_t base_count = encoding.ancillas.size();
  std::vector<double> right(coeffs.size());
  std::vector<double> left(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    right[j] = std::sqrt(std::abs(coeffs[j]) / alpha);
    left[j] = coeffs[j] < 0.0 ? -right[j] : right[j];
  }
  enc.emit = [walk = std::move(walk), left = std::move(left),
              right = std::move(right), base_count,
              d](Circuit& circuit, const std::vector<Register>& ops,
                 const std::vector<Register>& ancillas) {
    const std::vector<Register> base(ancillas.begin(),
                                     ancillas.begin() +
                                         static_cast<std::ptrdiff_t>(base_count));
    const Register& unary = ancillas[base_count];
    emit_staircase(circuit, unary, right);
    for (std::size_t j = 0; j < d; ++j) {
      // Unary qubit j adds the j-th walk application, so the state
      // |1^k 0^(d-k)> selects W^k.
      Circuit step = circuit.empty_like();
      walk.emit_walk(step, ops, base);
      for (const Gate& g : step.gates()) {
        circuit.append(
            g.with_controls({unary[static_cast<std::uint32_t>(j)]}));
      }
    }
    Circuit sign_prep = circuit.empty_like();
    emit_staircase(sign_prep, unary, left);
    circuit.extend(adjoint(sign_prep));
  };
  return enc;
}

}  // namespace qbec
