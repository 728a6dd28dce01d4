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
#include <string>
#include <vector>

namespace qbec {

/// Marks whether a register carries problem data or scratch space.
enum class RegisterRole { system, ancilla };

/// A named block of consecutive qubits inside a circuit.
///
/// Registers are packed in declaration order starting at qubit 0, so the
/// first declared register occupies the least significant bits of a basis
/// index. Global qubit k always corresponds to bit k (little endian).
struct Register {
  std::string name;
  std::uint32_t size = 0;
  RegisterRole role = RegisterRole::system;
  std::uint32_t offset = 0;

  /// Global index of local qubit i. Throws std::out_of_range if i >= size.
  std::uint32_t operator[](std::uint32_t i) const;
};

enum class GateKind {
  x,
  y,
  z,
  h,
  s,
  sdg,
  t,
  tdg,
  rx,
  ry,
  rz,
  phase,
  global_phase,
  cx,
  mcx,
  measure,
};

/// True for kinds parameterized by a rotation or phase angle.
bool kind_has_angle(GateKind kind);

/// True for kinds that act diagonally in the computational basis.
bool kind_is_diagonal(GateKind kind);

/// Lowercase stable name used in JSON serialization and reports.
const char* kind_name(GateKind kind);

/// A single gate application.
///
/// Any gate may carry extra controls beyond those implied by its kind.
/// Each control has a polarity: 1 activates on |1>, 0 activates on |0>.
struct Gate {
  GateKind kind = GateKind::x;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> controls;
  std::vector<std::uint8_t> polarity;
  double angle = 0.0;

  static Gate x(std::uint32_t q);
  static Gate y(std::uint32_t q);
  static Gate z(std::uint32_t q);
  static Gate h(std::uint32_t q);
  static Gate s(std::uint32_t q);
  static Gate sdg(std::uint32_t q);
  static Gate t(std::uint32_t q);
  static Gate tdg(std::uint32_t q);
  static Gate rx(std::uint32_t q, double angle);
  static Gate ry(std::uint32_t q, double angle);
  static Gate rz(std::uint32_t q, double angle);
  static Gate phase(std::uint32_t q, double angle);
  static Gate global_phase(double angle);
  static Gate cx(std::uint32_t control, std::uint32_t target);
  static Gate mcx(std::vector<std::uint32_t> controls, std::uint32_t target,
                  std::vector<std::uint8_t> polarity = {});
  static Gate measure(std::uint32_t q);

  /// Returns a copy with the given controls appended. X-family kinds are
  /// renamed (x -> cx -> mcx) so the kind still describes the full gate.
  /// An empty polarity vector defaults to all ones.
  Gate with_controls(const std::vector<std::uint32_t>& extra,
                     std::vector<std::uint8_t> extra_polarity = {}) const;

  /// The inverse gate. Throws std::invalid_argument for measure.
  Gate inverse() const;

  /// Structural equality: same kind, operands, controls, polarity, and
  /// (for parameterized kinds) exactly equal angle.
  bool operator==(const Gate& other) const;
};

/// An ordered gate list over named registers.
class Circuit {
 public:
  /// Appends a register after the existing ones and returns a copy of it
  /// (by value, so the result stays valid across later add_register calls).
  Register add_register(std::string name, std::uint32_t size,
                        RegisterRole role = RegisterRole::system);

  /// Appends a gate. Throws std::invalid_argument if any qubit index is out
  /// of range, targets and controls overlap or repeat, the polarity length
  /// does not match the control count, or the kind's arity is violated.
  void append(Gate gate);

  /// Appends every gate of `other`, which must have the same qubit count.
  void extend(const Circuit& other);

  std::uint32_t num_qubits() const { return num_qubits_; }
  const std::vector<Register>& registers() const { return registers_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Register lookup by name. Throws std::out_of_range if absent.
  const Register& reg(const std::string& name) const;

  bool has_register(const std::string& name) const;

  /// A copy with the same registers and no gates.
  Circuit empty_like() const;

 private:
  void validate(const Gate& gate) const;

  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  std::uint32_t num_qubits_ = 0;
};

/// The circuit implementing the inverse unitary: each gate inverted, in
/// reverse order. Throws std::invalid_argument if the circuit measures.
Circuit adjoint(const Circuit& circuit);

/// A copy of `circuit` with `num_controls` fresh control qubits appended as
/// a register named "ctrl"; every gate becomes controlled on all of them.
/// `polarity` defaults to all ones and must match `num_controls` otherwise.
/// GlobalPhase gates become controlled phase shifts rather than being
/// dropped, so the controlled circuit is unitarily exact.
Circuit controlled(const Circuit& circuit, std::uint32_t num_controls,
                   std::vector<std::uint8_t> polarity = {});

}  // namespace qbec
