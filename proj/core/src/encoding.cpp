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

#include "qbec/encoding.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbec/arith.hpp"
#include "qbec/simulator.hpp"
#include "qbec/state_prep.hpp"

namespace qbec {
namespace {

void require_measure_free(const Circuit& circuit, const char* what) {
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::measure) {
      throw std::invalid_argument(std::string(what) +
                                  " must not contain measurements");
    }
  }
}

// Maps a gate written against packed-from-zero qubits onto absolute qubit
// indices of the compiled circuit.
Gate relocate(const Gate& gate, const std::vector<std::uint32_t>& map) {
  Gate g = gate;
  for (std::uint32_t& q : g.targets) {
    q = map.at(q);
  }
  for (std::uint32_t& q : g.controls) {
    q = map.at(q);
  }
  return g;
}

// Flat qubit map for a gate list written against registers packed from
// zero in the same order as `regs`.
std::vector<std::uint32_t> packed_to_absolute(
    const std::vector<Register>& regs) {
  std::vector<std::uint32_t> map;
  for (const Register& r : regs) {
    for (std::uint32_t j = 0; j < r.size; ++j) {
      map.push_back(r[j]);
    }
  }
  return map;
}

std::vector<std::uint32_t> register_qubits(const Register& reg) {
  std::vector<std::uint32_t> qubits(reg.size);
  for (std::uint32_t j = 0; j < reg.size; ++j) {
    qubits[j] = reg[j];
  }
  return qubits;
}

std::uint32_t ceil_log2(std::size_t k) {
  std::uint32_t bits = 0;
  while ((std::size_t{1} << bits) < k) {
    ++bits;
  }
  return bits;
}

// Shared PREP-SELECT-PREP^dag assembly. Each branch is a positive weight, a
// folded phase, and a gate list over the operand registers; branch k runs
// under the ancilla pattern |k>.
BlockEncoding make_lcu(std::vector<double> weights,
                       std::vector<double> phases, std::vector<Circuit> bodies,
                       double alpha, bool is_hermitian) {
  const std::size_t k = bodies.size();
  std::vector<std::uint32_t> shape;
  for (const Register& r : bodies.front().registers()) {
    shape.push_back(r.size);
  }
  const std::uint32_t prep_bits = ceil_log2(k);

  BlockEncoding enc;
  enc.alpha = alpha;
  enc.epsilon = 0.0;
  enc.is_hermitian = is_hermitian;
  enc.operand_shape = std::move(shape);
  if (prep_bits > 0) {
    enc.ancillas.push_back({"prep", prep_bits});
  }
  enc.emit = [weights = std::move(weights), phases = std::move(phases),
              bodies = std::move(bodies),
              prep_bits](Circuit& circuit, const std::vector<Register>& ops,
                         const std::vector<Register>& ancillas) {
    const std::vector<std::uint32_t> map = packed_to_absolute(ops);
    if (prep_bits == 0) {
      if (phases[0] != 0.0) {
        circuit.append(Gate::global_phase(phases[0]));
      }
      for (const Gate& g : bodies[0].gates()) {
        circuit.append(relocate(g, map));
      }
      return;
    }
    const std::vector<std::uint32_t> prep_qubits =
        register_qubits(ancillas[0]);
    Circuit prep = circuit.empty_like();
    emit_prep_pair(prep, ancillas[0], weights);
    circuit.extend(prep);
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      std::vector<std::uint8_t> polarity(prep_bits);
      for (std::uint32_t b = 0; b < prep_bits; ++b) {
        polarity[b] = static_cast<std::uint8_t>((i >> b) & 1);
      }
      if (phases[i] != 0.0) {
        circuit.append(Gate::global_phase(phases[i])
                           .with_controls(prep_qubits, polarity));
      }
      for (const Gate& g : bodies[i].gates()) {
        circuit.append(relocate(g, map).with_controls(prep_qubits, polarity));
      }
    }
    circuit.extend(adjoint(prep));
  };
  return enc;
}

Circuit pauli_string_body(const std::map<std::uint32_t, PauliOp>& ops,
                          std::uint32_t n) {
  Circuit body;
  const Register& reg = body.add_register("op", n);
  for (const auto& [q, p] : ops) {
    switch (p) {
      case PauliOp::x:
        body.append(Gate::x(reg[q]));
        break;
      case PauliOp::y:
        body.append(Gate::y(reg[q]));
        break;
      case PauliOp::z:
        body.append(Gate::z(reg[q]));
        break;
    }
  }
  return body;
}

Circuit basis_state_prep(std::uint64_t index, std::uint32_t n) {
  if (n == 0 || (n < 64 && index >= (std::uint64_t{1} << n))) {
    throw std::invalid_argument("basis state index needs more qubits");
  }
  Circuit c;
  const Register& reg = c.add_register("op", n);
  for (std::uint32_t b = 0; b < n; ++b) {
    if ((index >> b) & 1) {
      c.append(Gate::x(reg[b]));
    }
  }
  return c;
}

}  // namespace

std::uint32_t BlockEncoding::operand_qubits() const {
  std::uint32_t total = 0;
  for (std::uint32_t s : operand_shape) {
    total += s;
  }
  return total;
}

std::uint32_t BlockEncoding::ancilla_qubits() const {
  std::uint32_t total = 0;
  for (const AncillaSpec& a : ancillas) {
    total += a.size;
  }
  return total;
}

std::uint32_t BlockEncoding::total_qubits() const {
  return operand_qubits() + ancilla_qubits();
}

AppliedEncoding apply(const BlockEncoding& encoding) {
  if (!encoding.emit) {
    throw std::invalid_argument("encoding has no unitary emitter");
  }
  if (encoding.operand_shape.empty()) {
    throw std::invalid_argument("encoding has an empty operand shape");
  }
  AppliedEncoding out;
  for (std::size_t i = 0; i < encoding.operand_shape.size(); ++i) {
    out.operands.push_back(out.circuit.add_register(
        "op" + std::to_string(i), encoding.operand_shape[i]));
  }
  for (const AncillaSpec& spec : encoding.ancillas) {
    std::string name = spec.name;
    while (out.circuit.has_register(name)) {
      name += "_";
    }
    out.ancilla_registers.push_back(out.circuit.add_register(
        std::move(name), spec.size, RegisterRole::ancilla));
  }
  for (const Register& r : out.ancilla_registers) {
    for (std::uint32_t j = 0; j < r.size; ++j) {
      out.ancilla_qubits.push_back(r[j]);
    }
  }
  encoding.emit(out.circuit, out.operands, out.ancilla_registers);
  return out;
}

AppliedEncoding apply(const BlockEncoding& encoding,
                      const Circuit& operand_prep) {
  if (operand_prep.num_qubits() != encoding.operand_qubits()) {
    throw std::invalid_argument(
        "operand preparation does not match the encoding's operand qubits");
  }
  require_measure_free(operand_prep, "operand preparation");
  AppliedEncoding out;
  for (std::size_t i = 0; i < encoding.operand_shape.size(); ++i) {
    out.operands.push_back(out.circuit.add_register(
        "op" + std::to_string(i), encoding.operand_shape[i]));
  }
  for (const AncillaSpec& spec : encoding.ancillas) {
    std::string name = spec.name;
    while (out.circuit.has_register(name)) {
      name += "_";
    }
    out.ancilla_registers.push_back(out.circuit.add_register(
        std::move(name), spec.size, RegisterRole::ancilla));
  }
  for (const Register& r : out.ancilla_registers) {
    for (std::uint32_t j = 0; j < r.size; ++j) {
      out.ancilla_qubits.push_back(r[j]);
    }
  }
  // Operand registers are packed first, so prep indices carry over as-is.
  for (const Gate& g : operand_prep.gates()) {
    out.circuit.append(g);
  }
  encoding.emit(out.circuit, out.operands, out.ancilla_registers);
  return out;
}

ResourceReport resources(const BlockEncoding& encoding) {
  return resources(apply(encoding).circuit);
}

BlockEncoding from_array(const CMatrix& a) {
  if (a.rows() < 2) {
    throw std::invalid_argument("matrix must be at least 2 x 2");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const bool hermitian =
      (a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
  std::vector<WeightedPauliString> strings = pauli_decompose_complex(a);
  if (strings.empty()) {
    throw std::invalid_argument("cannot block-encode the zero matrix");
  }
  std::uint32_t n = 0;
  while ((Eigen::Index(1) << n) < a.rows()) {
    ++n;
  }
  std::vector<double> weights;
  std::vector<double> phases;
  std::vector<Circuit> bodies;
  double alpha = 0.0;
  for (const WeightedPauliString& s : strings) {
    // A Hermitian matrix has real Pauli coefficients; snapping them keeps
    // the folded phases at exactly 0 or pi so every branch stays an
    // involution.
    const Complex c = hermitian ? Complex(s.coeff.real(), 0.0) : s.coeff;
    weights.push_back(std::abs(c));
    phases.push_back(std::arg(c));
    bodies.push_back(pauli_string_body(s.ops, n));
    alpha += weights.back();
  }
  return make_lcu(std::move(weights), std::move(phases), std::move(bodies),
                  alpha, hermitian);
}

BlockEncoding from_operator(const PauliSum& op, std::uint32_t n) {
  if (op.terms().empty()) {
    throw std::invalid_argument("cannot block-encode an empty operator");
  }
  const std::uint32_t needed = std::max<std::uint32_t>(op.min_qubits(), 1);
  if (n == 0) {
    n = needed;
  } else if (n < needed) {
    throw std::invalid_argument("operator acts above the given qubit count");
  }
  std::vector<double> weights;
  std::vector<double> phases;
  std::vector<Circuit> bodies;
  double alpha = 0.0;
  for (const PauliTerm& t : op.terms()) {
    weights.push_back(std::abs(t.coeff));
    phases.push_back(t.coeff < 0.0 ? std::numbers::pi : 0.0);
    bodies.push_back(pauli_string_body(t.ops, n));
    alpha += weights.back();
  }
  return make_lcu(std::move(weights), std::move(phases), std::move(bodies),
                  alpha, true);
}

BlockEncoding from_lcu(const std::vector<double>& coeffs,
                       const std::vector<Circuit>& unitaries,
                       bool self_inverse) {
  if (coeffs.empty() || coeffs.size() != unitaries.size()) {
    throw std::invalid_argument(
        "need equally many positive coefficients and unitaries");
  }
  double alpha = 0.0;
  for (double c : coeffs) {
    if (!(c > 0.0)) {
      throw std::invalid_argument("LCU coefficients must be positive");
    }
    alpha += c;
  }
  const std::uint32_t n = unitaries.front().num_qubits();
  if (n == 0) {
    throw std::invalid_argument("LCU unitaries must touch at least one qubit");
  }
  for (const Circuit& u : unitaries) {
    if (u.num_qubits() != n) {
      throw std::invalid_argument("LCU unitaries differ in qubit count");
    }
    require_measure_free(u, "LCU unitary");
  }
  return make_lcu(coeffs, std::vector<double>(coeffs.size(), 0.0), unitaries,
                  alpha, self_inverse);
}

BlockEncoding from_eye(std::int64_t k, std::uint32_t n) {
  if (n == 0 || n > 62) {
    throw std::invalid_argument("diagonal encoding needs 1 to 62 qubits");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  if (k <= -dim || k >= dim) {
    throw std::invalid_argument("diagonal index |k| must be below 2^n");
  }
  BlockEncoding enc;
  enc.alpha = 1.0;
  enc.operand_shape = {n};
  if (k == 0) {
    enc.is_hermitian = true;
    enc.emit = [](Circuit&, const std::vector<Register>&,
                  const std::vector<Register>&) {};
    return enc;
  }
  enc.is_hermitian = false;
  enc.ancillas.push_back({"wrap", 1});
  enc.emit = [k, n](Circuit& circuit, const std::vector<Register>& ops,
                    const std::vector<Register>& ancillas) {
    const Register& reg = ops[0];
    const std::uint32_t flag = ancillas[0][0];
    if (k > 0) {
      // Ones on diagonal k above the main: |j> -> |j - k| for j >= k, and
      // the wrapped inputs j < k are flagged out of the block.
      const auto shift = static_cast<std::uint64_t>(k);
      emit_flag_less_than(circuit, reg, shift, flag);
      emit_sub_const(circuit, reg, shift);
    } else {
      const auto shift = static_cast<std::uint64_t>(-k);
      emit_flag_at_least(circuit, reg, (std::uint64_t{1} << n) - shift, flag);
      emit_add_const(circuit, reg, shift);
    }
  };
  return enc;
}

BlockEncoding from_projector(const Circuit& left, const Circuit& right,
                             bool kernel) {
  const std::uint32_t n = left.num_qubits();
  if (n == 0 || right.num_qubits() != n) {
    throw std::invalid_argument(
        "projector preparation circuits must cover the same nonzero qubits");
  }
  require_measure_free(left, "projector preparation");
  require_measure_free(right, "projector preparation");
  BlockEncoding enc;
  enc.alpha = 1.0;
  enc.is_hermitian = left.gates() == right.gates();
  enc.operand_shape = {n};
  enc.ancillas.push_back({"flag", 1});
  enc.emit = [right_adj = adjoint(right), left, kernel, n](
                 Circuit& circuit, const std::vector<Register>& ops,
                 const std::vector<Register>& ancillas) {
    std::vector<std::uint32_t> map(n);
    for (std::uint32_t q = 0; q < n; ++q) {
      map[q] = ops[0][q];
    }
    const std::uint32_t flag = ancillas[0][0];
    for (const Gate& g : right_adj.gates()) {
      circuit.append(relocate(g, map));
    }
    // The flag leaves |0> unless the system sits at |0...0>; with kernel
    // the polarity inverts, keeping exactly the nonzero-system component.
    if (!kernel) {
      circuit.append(Gate::x(flag));
    }
    circuit.append(Gate::mcx(map, flag, std::vector<std::uint8_t>(n, 0)));
    for (const Gate& g : left.gates()) {
      circuit.append(relocate(g, map));
    }
  };
  return enc;
}

BlockEncoding from_projector(std::uint64_t left, std::uint64_t right,
                             std::uint32_t n, bool kernel) {
  return from_projector(basis_state_prep(left, n), basis_state_prep(right, n),
                        kernel);
}

BlockEncoding custom_encoding(double alpha,
                              std::vector<std::uint32_t> operand_shape,
                              std::vector<AncillaSpec> ancillas,
                              UnitaryEmitter emit, bool is_hermitian,
                              double epsilon) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be nonnegative");
  }
  if (operand_shape.empty()) {
    throw std::invalid_argument("operand shape must be nonempty");
  }
  for (std::uint32_t s : operand_shape) {
    if (s == 0) {
      throw std::invalid_argument("operand registers must be nonempty");
    }
  }
  for (const AncillaSpec& a : ancillas) {
    if (a.size == 0 || a.name.empty()) {
      throw std::invalid_argument("ancilla specs need a name and a size");
    }
  }
  if (!emit) {
    throw std::invalid_argument("encoding needs a unitary emitter");
  }
  BlockEncoding enc;
  enc.alpha = alpha;
  enc.epsilon = epsilon;
  enc.is_hermitian = is_hermitian;
  enc.operand_shape = std::move(operand_shape);
  enc.ancillas = std::move(ancillas);
  enc.emit = std::move(emit);
  return enc;
}

double expectation_value(const BlockEncoding& encoding,
                         const Circuit& state_prep, std::uint64_t shots,
                         std::uint64_t seed) {
  const double exact = hadamard_test(encoding, state_prep);
  if (shots == 0) {
    return encoding.alpha * exact;
  }
  // <Z> = 1 - 2 p(1); draw the auxiliary-qubit outcomes directly.
  const double p_one = std::min(1.0, std::max(0.0, 0.5 * (1.0 - exact)));
  std::mt19937_64 rng(seed);
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p_one) {
      ++ones;
    }
  }
  const double estimate =
      1.0 - 2.0 * static_cast<double>(ones) / static_cast<double>(shots);
  return encoding.alpha * estimate;
}

}  // namespace qbec
