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

#include "qbec/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace qbec {

std::uint32_t Register::operator[](std::uint32_t i) const {
  if (i >= size) {
    throw std::out_of_range("register '" + name + "' has no local qubit " +
                            std::to_string(i));
  }
  return offset + i;
}

bool kind_has_angle(GateKind kind) {
  switch (kind) {
    case GateKind::rx:
    case GateKind::ry:
    case GateKind::rz:
    case GateKind::phase:
    case GateKind::global_phase:
      return true;
    default:
      return false;
  }
}

bool kind_is_diagonal(GateKind kind) {
  switch (kind) {
    case GateKind::z:
    case GateKind::s:
    case GateKind::sdg:
    case GateKind::t:
    case GateKind::tdg:
    case GateKind::rz:
    case GateKind::phase:
    case GateKind::global_phase:
      return true;
    default:
      return false;
  }
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::x:
      return "x";
    case GateKind::y:
      return "y";
    case GateKind::z:
      return "z";
    case GateKind::h:
      return "h";
    case GateKind::s:
      return "s";
    case GateKind::sdg:
      return "sdg";
    case GateKind::t:
      return "t";
    case GateKind::tdg:
      return "tdg";
    case GateKind::rx:
      return "rx";
    case GateKind::ry:
      return "ry";
    case GateKind::rz:
      return "rz";
    case GateKind::phase:
      return "phase";
    case GateKind::global_phase:
      return "gphase";
    case GateKind::cx:
      return "cx";
    case GateKind::mcx:
      return "mcx";
    case GateKind::measure:
      return "measure";
  }
  return "unknown";
}

namespace {

Gate single(GateKind kind, std::uint32_t q) {
  Gate g;
  g.kind = kind;
  g.targets = {q};
  return g;
}

Gate rotation(GateKind kind, std::uint32_t q, double angle) {
  Gate g = single(kind, q);
  g.angle = angle;
  return g;
}

}  // namespace

Gate Gate::x(std::uint32_t q) { return single(GateKind::x, q); }
Gate Gate::y(std::uint32_t q) { return single(GateKind::y, q); }
Gate Gate::z(std::uint32_t q) { return single(GateKind::z, q); }
Gate Gate::h(std::uint32_t q) { return single(GateKind::h, q); }
Gate Gate::s(std::uint32_t q) { return single(GateKind::s, q); }
Gate Gate::sdg(std::uint32_t q) { return single(GateKind::sdg, q); }
Gate Gate::t(std::uint32_t q) { return single(GateKind::t, q); }
Gate Gate::tdg(std::uint32_t q) { return single(GateKind::tdg, q); }

Gate Gate::rx(std::uint32_t q, double angle) {
  return rotation(GateKind::rx, q, angle);
}
Gate Gate::ry(std::uint32_t q, double angle) {
  return rotation(GateKind::ry, q, angle);
}
Gate Gate::rz(std::uint32_t q, double angle) {
  return rotation(GateKind::rz, q, angle);
}
Gate Gate::phase(std::uint32_t q, double angle) {
  return rotation(GateKind::phase, q, angle);
}

Gate Gate::global_phase(double angle) {
  Gate g;
  g.kind = GateKind::global_phase;
  g.angle = angle;
  return g;
}

Gate Gate::cx(std::uint32_t control, std::uint32_t target) {
  Gate g;
  g.kind = GateKind::cx;
  g.targets = {target};
  g.controls = {control};
  g.polarity = {1};
  return g;
}

Gate Gate::mcx(std::vector<std::uint32_t> controls, std::uint32_t target,
               std::vector<std::uint8_t> polarity) {
  Gate g;
  g.kind = controls.size() == 1 ? GateKind::cx : GateKind::mcx;
  g.targets = {target};
  if (polarity.empty()) {
    polarity.assign(controls.size(), 1);
  }
  g.controls = std::move(controls);
  g.polarity = std::move(polarity);
  return g;
}

Gate Gate::measure(std::uint32_t q) { return single(GateKind::measure, q); }

Gate Gate::with_controls(const std::vector<std::uint32_t>& extra,
                         std::vector<std::uint8_t> extra_polarity) const {
  if (extra_polarity.empty()) {
    extra_polarity.assign(extra.size(), 1);
  }
  if (extra_polarity.size() != extra.size()) {
    throw std::invalid_argument("polarity length must match control count");
  }
  Gate g = *this;
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  g.polarity.insert(g.polarity.end(), extra_polarity.begin(),
                    extra_polarity.end());
  if (g.kind == GateKind::x || g.kind == GateKind::cx ||
      g.kind == GateKind::mcx) {
    g.kind = g.controls.size() == 1 ? GateKind::cx : GateKind::mcx;
  }
  return g;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::measure:
      throw std::invalid_argument("measure has no inverse");
    case GateKind::s:
      g.kind = GateKind::sdg;
      break;
    case GateKind::sdg:
      g.kind = GateKind::s;
      break;
    case GateKind::t:
      g.kind = GateKind::tdg;
      break;
    case GateKind::tdg:
      g.kind = GateKind::t;
      break;
    default:
      if (kind_has_angle(kind)) {
        g.angle = -g.angle;
      }
      // x, y, z, h, cx, mcx are involutions.
      break;
  }
  return g;
}

bool Gate::operator==(const Gate& other) const {
  return kind == other.kind && targets == other.targets &&
         controls == other.controls && polarity == other.polarity &&
         (!kind_has_angle(kind) || angle == other.angle);
}

Register Circuit::add_register(std::string name, std::uint32_t size,
                               RegisterRole role) {
  if (size == 0) {
    throw std::invalid_argument("register '" + name + "' must be non-empty");
  }
  for (const Register& r : registers_) {
    if (r.name == name) {
      throw std::invalid_argument("duplicate register name '" + name + "'");
    }
  }
  Register r;
  r.name = std::move(name);
  r.size = size;
  r.role = role;
  r.offset = num_qubits_;
  registers_.push_back(r);
  num_qubits_ += size;
  return r;
}

void Circuit::validate(const Gate& gate) const {
  const bool has_target = gate.kind != GateKind::global_phase;
  if (has_target && gate.targets.size() != 1) {
    throw std::invalid_argument(std::string(kind_name(gate.kind)) +
                                " expects exactly one target");
  }
  if (!has_target && !gate.targets.empty()) {
    throw std::invalid_argument("gphase takes no target");
  }
  if (gate.kind == GateKind::cx && gate.controls.size() != 1) {
    throw std::invalid_argument("cx expects exactly one control");
  }
  if (gate.kind == GateKind::mcx && gate.controls.size() < 2) {
    throw std::invalid_argument("mcx expects at least two controls");
  }
  if (gate.kind == GateKind::measure && !gate.controls.empty()) {
    throw std::invalid_argument("measure cannot be controlled");
  }
  if (gate.polarity.size() != gate.controls.size()) {
    throw std::invalid_argument("polarity length must match control count");
  }
  if (!kind_has_angle(gate.kind) && gate.angle != 0.0) {
    throw std::invalid_argument(std::string(kind_name(gate.kind)) +
                                " does not take an angle");
  }
  std::set<std::uint32_t> seen;
  for (std::uint32_t q : gate.targets) {
    if (q >= num_qubits_) {
      throw std::invalid_argument("target qubit out of range");
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("repeated qubit in gate");
    }
  }
  for (std::uint32_t q : gate.controls) {
    if (q >= num_qubits_) {
      throw std::invalid_argument("control qubit out of range");
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("repeated qubit in gate");
    }
  }
}

void Circuit::append(Gate gate) {
  validate(gate);
  gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit& other) {
  if (other.num_qubits() != num_qubits_) {
    throw std::invalid_argument("extend requires matching qubit counts");
  }
  for (const Gate& g : other.gates()) {
    append(g);
  }
}

const Register& Circuit::reg(const std::string& name) const {
  for (const Register& r : registers_) {
    if (r.name == name) {
      return r;
    }
  }
  throw std::out_of_range("no register named '" + name + "'");
}

bool Circuit::has_register(const std::string& name) const {
  for (const Register& r : registers_) {
    if (r.name == name) {
      return true;
    }
  }
  return false;
}

Circuit Circuit::empty_like() const {
  Circuit c;
  c.registers_ = registers_;
  c.num_qubits_ = num_qubits_;
  return c;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out = circuit.empty_like();
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.append(it->inverse());
  }
  return out;
}

Circuit controlled(const Circuit& circuit, std::uint32_t num_controls,
                   std::vector<std::uint8_t> polarity) {
  if (num_controls == 0) {
    throw std::invalid_argument("controlled requires at least one control");
  }
  if (polarity.empty()) {
    polarity.assign(num_controls, 1);
  }
  if (polarity.size() != num_controls) {
    throw std::invalid_argument("polarity length must match control count");
  }
  Circuit out = circuit.empty_like();
  const Register& ctrl = out.add_register("ctrl", num_controls,
                                          RegisterRole::system);
  std::vector<std::uint32_t> ctrl_qubits(num_controls);
  for (std::uint32_t i = 0; i < num_controls; ++i) {
    ctrl_qubits[i] = ctrl[i];
  }
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::measure) {
      throw std::invalid_argument("cannot control a measuring circuit");
    }
    if (g.kind == GateKind::global_phase) {
      // exp(i a) on the active branch is a phase shift of the controls:
      // apply Phase(a) to the first new control, conditioned on the gate's
      // own controls plus the remaining new controls.
      Gate p = Gate::phase(ctrl_qubits[0], g.angle)
                   .with_controls(g.controls, g.polarity)
                   .with_controls({ctrl_qubits.begin() + 1, ctrl_qubits.end()},
                                  {polarity.begin() + 1, polarity.end()});
      if (polarity[0] == 0) {
        // Active on |0>: conjugate the phase target by an unconditional X.
        out.append(Gate::x(ctrl_qubits[0]));
        out.append(p);
        out.append(Gate::x(ctrl_qubits[0]));
      } else {
        out.append(p);
      }
      continue;
    }
    out.append(g.with_controls(ctrl_qubits, polarity));
  }
  return out;
}

}  // namespace qbec
