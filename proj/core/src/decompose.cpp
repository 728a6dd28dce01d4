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

#include "qbec/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qbec {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_x_family(GateKind kind) {
  return kind == GateKind::x || kind == GateKind::cx || kind == GateKind::mcx;
}

// Clean ancillas a gate needs during lowering. An x-family gate with k
// controls uses a k-1 deep AND ladder; any other gate with k >= 2 controls
// first reduces its controls to one AND qubit, which itself takes a ladder.
std::uint32_t pool_demand(const Gate& g) {
  const std::uint32_t k = static_cast<std::uint32_t>(g.controls.size());
  if (is_x_family(g.kind)) {
    return k >= 3 ? k - 1 : 0;
  }
  if (g.kind == GateKind::global_phase) {
    // Lowered to a phase gate with k - 1 controls.
    return k >= 3 ? k - 1 : 0;
  }
  if (k >= 2) {
    // One AND result qubit plus the ladder that computes it.
    return 1 + (k >= 3 ? k - 1 : 0);
  }
  return 0;
}

class Lowerer {
 public:
  Lowerer(Circuit& out, std::vector<std::uint32_t> pool)
      : out_(out), pool_(std::move(pool)) {}

  void lower(const Gate& g) {
    const std::size_t k = g.controls.size();
    if (g.kind == GateKind::measure) {
      out_.append(g);
      return;
    }
    if (g.kind == GateKind::global_phase) {
      if (k == 0) {
        out_.append(g);
      } else {
        lower_controlled_gphase(g);
      }
      return;
    }
    if (is_x_family(g.kind)) {
      lower_x(g.controls, g.polarity, g.targets[0]);
      return;
    }
    if (k == 0) {
      out_.append(g);
      return;
    }
    if (k == 1) {
      with_positive_control(g.controls[0], g.polarity[0], [&] {
        lower_c1q(g.kind, g.angle, g.controls[0], g.targets[0]);
      });
      return;
    }
    // Reduce many controls to one AND qubit, apply, uncompute.
    const std::uint32_t a = alloc();
    lower_x(g.controls, g.polarity, a);
    lower_c1q(g.kind, g.angle, a, g.targets[0]);
    lower_x(g.controls, g.polarity, a);
    release();
  }

 private:
  void emit(Gate g) { out_.append(std::move(g)); }

  std::uint32_t alloc() {
    if (next_free_ >= pool_.size()) {
      throw std::logic_error("ancilla pool exhausted during lowering");
    }
    return pool_[next_free_++];
  }
  void release() { --next_free_; }

  // Runs body with the control temporarily made positive.
  template <typename Body>
  void with_positive_control(std::uint32_t c, std::uint8_t pol, Body body) {
    if (pol == 0) {
      emit(Gate::x(c));
    }
    body();
    if (pol == 0) {
      emit(Gate::x(c));
    }
  }

  void lower_controlled_gphase(const Gate& g) {
    // exp(i a) conditioned on controls equals Phase(a) on the first
    // control conditioned on the rest.
    const std::uint32_t c0 = g.controls[0];
    Gate p = Gate::phase(c0, g.angle);
    p.controls.assign(g.controls.begin() + 1, g.controls.end());
    p.polarity.assign(g.polarity.begin() + 1, g.polarity.end());
    with_positive_control(c0, g.polarity[0], [&] { lower(p); });
  }

  // X on target under the given controls (any count, any polarity).
  void lower_x(const std::vector<std::uint32_t>& controls,
               const std::vector<std::uint8_t>& polarity, std::uint32_t t) {
    for (std::size_t i = 0; i < controls.size(); ++i) {
      if (polarity[i] == 0) {
        emit(Gate::x(controls[i]));
      }
    }
    emit_x_ladder(controls, t);
    for (std::size_t i = 0; i < controls.size(); ++i) {
      if (polarity[i] == 0) {
        emit(Gate::x(controls[i]));
      }
    }
  }

  // All controls positive from here on.
  void emit_x_ladder(const std::vector<std::uint32_t>& c, std::uint32_t t) {
    if (c.empty()) {
      emit(Gate::x(t));
      return;
    }
    if (c.size() == 1) {
      emit(Gate::cx(c[0], t));
      return;
    }
    if (c.size() == 2) {
      emit_toffoli(c[0], c[1], t);
      return;
    }
    const std::uint32_t n_and = static_cast<std::uint32_t>(c.size()) - 1;
    std::vector<std::uint32_t> ands(n_and);
    for (std::uint32_t i = 0; i < n_and; ++i) {
      ands[i] = alloc();
    }
    emit_toffoli(c[0], c[1], ands[0]);
    for (std::uint32_t i = 1; i < n_and; ++i) {
      emit_toffoli(c[i + 1], ands[i - 1], ands[i]);
    }
    emit(Gate::cx(ands[n_and - 1], t));
    for (std::uint32_t i = n_and; i-- > 1;) {
      emit_toffoli(c[i + 1], ands[i - 1], ands[i]);
    }
    emit_toffoli(c[0], c[1], ands[0]);
    for (std::uint32_t i = 0; i < n_and; ++i) {
      release();
    }
  }

  // Standard 15-gate two-control X (6 CX + 9 single-qubit gates).
  void emit_toffoli(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
    emit(Gate::h(t));
    emit(Gate::cx(b, t));
    emit(Gate::tdg(t));
    emit(Gate::cx(a, t));
    emit(Gate::t(t));
    emit(Gate::cx(b, t));
    emit(Gate::tdg(t));
    emit(Gate::cx(a, t));
    emit(Gate::t(b));
    emit(Gate::t(t));
    emit(Gate::h(t));
    emit(Gate::cx(a, b));
    emit(Gate::t(a));
    emit(Gate::tdg(b));
    emit(Gate::cx(a, b));
  }

  // Single positively controlled one-qubit gate.
  void lower_c1q(GateKind kind, double angle, std::uint32_t c,
                 std::uint32_t t) {
    switch (kind) {
      case GateKind::x:
        emit(Gate::cx(c, t));
        return;
      case GateKind::z:
        emit_cphase(c, t, kPi);
        return;
      case GateKind::s:
        emit_cphase(c, t, kPi / 2);
        return;
      case GateKind::sdg:
        emit_cphase(c, t, -kPi / 2);
        return;
      case GateKind::t:
        emit_cphase(c, t, kPi / 4);
        return;
      case GateKind::tdg:
        emit_cphase(c, t, -kPi / 4);
        return;
      case GateKind::phase:
        emit_cphase(c, t, angle);
        return;
      case GateKind::rz:
        emit_crz(c, t, angle);
        return;
      case GateKind::ry:
        emit(Gate::ry(t, angle / 2));
        emit(Gate::cx(c, t));
        emit(Gate::ry(t, -angle / 2));
        emit(Gate::cx(c, t));
        return;
      case GateKind::rx:
        emit(Gate::h(t));
        emit_crz(c, t, angle);
        emit(Gate::h(t));
        return;
      case GateKind::y:
        emit(Gate::sdg(t));
        emit(Gate::cx(c, t));
        emit(Gate::s(t));
        return;
      case GateKind::h:
        emit(Gate::ry(t, kPi / 4));
        emit(Gate::cx(c, t));
        emit(Gate::ry(t, -kPi / 4));
        return;
      default:
        throw std::logic_error("unexpected controlled kind in lowering");
    }
  }

  void emit_cphase(std::uint32_t c, std::uint32_t t, double a) {
    emit(Gate::phase(c, a / 2));
    emit(Gate::cx(c, t));
    emit(Gate::phase(t, -a / 2));
    emit(Gate::cx(c, t));
    emit(Gate::phase(t, a / 2));
  }

  void emit_crz(std::uint32_t c, std::uint32_t t, double a) {
    emit(Gate::rz(t, a / 2));
    emit(Gate::cx(c, t));
    emit(Gate::rz(t, -a / 2));
    emit(Gate::cx(c, t));
  }

  Circuit& out_;
  std::vector<std::uint32_t> pool_;
  std::size_t next_free_ = 0;
};

}  // namespace

Circuit decompose(const Circuit& circuit) {
  std::uint32_t pool_size = 0;
  for (const Gate& g : circuit.gates()) {
    pool_size = std::max(pool_size, pool_demand(g));
  }
  Circuit out = circuit.empty_like();
  std::vector<std::uint32_t> pool;
  if (pool_size > 0) {
    const Register& aux =
        out.add_register("aux", pool_size, RegisterRole::ancilla);
    for (std::uint32_t i = 0; i < pool_size; ++i) {
      pool.push_back(aux[i]);
    }
  }
  Lowerer lowerer(out, std::move(pool));
  for (const Gate& g : circuit.gates()) {
    lowerer.lower(g);
  }
  return out;
}

ResourceReport resources(const Circuit& circuit) {
  const Circuit lowered = decompose(circuit);
  ResourceReport report;
  report.qubits = lowered.num_qubits();
  std::vector<std::uint64_t> frontier(lowered.num_qubits(), 0);
  for (const Gate& g : lowered.gates()) {
    ++report.gate_counts[kind_name(g.kind)];
    ++report.total_gates;
    std::uint64_t start = 0;
    for (std::uint32_t q : g.targets) {
      start = std::max(start, frontier[q]);
    }
    for (std::uint32_t q : g.controls) {
      start = std::max(start, frontier[q]);
    }
    if (g.targets.empty() && g.controls.empty()) {
      continue;  // global phase, no timeline
    }
    for (std::uint32_t q : g.targets) {
      frontier[q] = start + 1;
    }
    for (std::uint32_t q : g.controls) {
      frontier[q] = start + 1;
    }
    report.depth = std::max(report.depth, start + 1);
  }
  return report;
}

}  // namespace qbec
