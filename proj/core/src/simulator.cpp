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

#include "qbec/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace qbec {

namespace {

constexpr Complex kI{0.0, 1.0};

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

ControlMask control_mask(const Gate& g) {
  ControlMask cm;
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << g.controls[i];
    cm.mask |= bit;
    if (g.polarity[i]) {
      cm.value |= bit;
    }
  }
  return cm;
}

// Visits every amplitude index consistent with the control pattern, with
// the bits of `free` ranging over all combinations. The classic subset
// walk (x - free) & free steps through them in O(1) each.
template <typename Body>
void for_each_masked(std::uint64_t free, std::uint64_t fixed, Body body) {
  std::uint64_t x = 0;
  do {
    body(x | fixed);
    x = (x - free) & free;
  } while (x != 0);
}

void apply_two_by_two(StateVector& state, const Gate& g, const Complex m00,
                      const Complex m01, const Complex m10, const Complex m11) {
  const ControlMask cm = control_mask(g);
  const std::uint64_t tbit = std::uint64_t{1} << g.targets[0];
  const std::uint64_t all = (std::uint64_t{1} << state.num_qubits) - 1;
  const std::uint64_t free = all & ~cm.mask & ~tbit;
  for_each_masked(free, cm.value, [&](std::uint64_t idx0) {
    const std::uint64_t idx1 = idx0 | tbit;
    const Complex a0 = state.amps[idx0];
    const Complex a1 = state.amps[idx1];
    state.amps[idx0] = m00 * a0 + m01 * a1;
    state.amps[idx1] = m10 * a0 + m11 * a1;
  });
}

void apply_diagonal(StateVector& state, const Gate& g, const Complex d0,
                    const Complex d1) {
  const ControlMask cm = control_mask(g);
  const std::uint64_t tbit = std::uint64_t{1} << g.targets[0];
  const std::uint64_t all = (std::uint64_t{1} << state.num_qubits) - 1;
  const std::uint64_t free = all & ~cm.mask;
  for_each_masked(free, cm.value, [&](std::uint64_t idx) {
    state.amps[idx] *= (idx & tbit) ? d1 : d0;
  });
}

void apply_gate(StateVector& state, const Gate& g) {
  switch (g.kind) {
    case GateKind::measure:
      throw std::invalid_argument(
          "run does not execute measure gates; use postselect_zero on the "
          "final state");
    case GateKind::global_phase: {
      const ControlMask cm = control_mask(g);
      const std::uint64_t all = (std::uint64_t{1} << state.num_qubits) - 1;
      const Complex phase = std::exp(kI * g.angle);
      for_each_masked(all & ~cm.mask, cm.value,
                      [&](std::uint64_t idx) { state.amps[idx] *= phase; });
      return;
    }
    case GateKind::x:
    case GateKind::cx:
    case GateKind::mcx: {
      const ControlMask cm = control_mask(g);
      const std::uint64_t tbit = std::uint64_t{1} << g.targets[0];
      const std::uint64_t all = (std::uint64_t{1} << state.num_qubits) - 1;
      const std::uint64_t free = all & ~cm.mask & ~tbit;
      for_each_masked(free, cm.value, [&](std::uint64_t idx0) {
        std::swap(state.amps[idx0], state.amps[idx0 | tbit]);
      });
      return;
    }
    case GateKind::z:
      apply_diagonal(state, g, 1.0, -1.0);
      return;
    case GateKind::s:
      apply_diagonal(state, g, 1.0, kI);
      return;
    case GateKind::sdg:
      apply_diagonal(state, g, 1.0, -kI);
      return;
    case GateKind::t:
      apply_diagonal(state, g, 1.0, std::exp(kI * (std::numbers::pi / 4)));
      return;
    case GateKind::tdg:
      apply_diagonal(state, g, 1.0, std::exp(-kI * (std::numbers::pi / 4)));
      return;
    case GateKind::rz:
      apply_diagonal(state, g, std::exp(-kI * (g.angle / 2)),
                     std::exp(kI * (g.angle / 2)));
      return;
    case GateKind::phase:
      apply_diagonal(state, g, 1.0, std::exp(kI * g.angle));
      return;
    case GateKind::y:
      apply_two_by_two(state, g, 0.0, -kI, kI, 0.0);
      return;
    case GateKind::h: {
      const double r = 1.0 / std::numbers::sqrt2;
      apply_two_by_two(state, g, r, r, r, -r);
      return;
    }
    case GateKind::rx: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      apply_two_by_two(state, g, c, -kI * s, -kI * s, c);
      return;
    }
    case GateKind::ry: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      apply_two_by_two(state, g, c, -s, s, c);
      return;
    }
  }
}

void check_budget(std::uint32_t num_qubits, const RunOptions& options) {
  if (num_qubits > options.max_qubits) {
    throw std::runtime_error(
        "circuit needs " + std::to_string(num_qubits) +
        " qubits, above the simulator budget of " +
        std::to_string(options.max_qubits) +
        "; raise RunOptions::max_qubits to opt in");
  }
  if (num_qubits > 30) {
    throw std::runtime_error("statevector above 2^30 amplitudes");
  }
}

// Deterministic uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

StateVector StateVector::zero(std::uint32_t num_qubits) {
  StateVector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

StateVector StateVector::basis(std::uint32_t num_qubits, std::uint64_t index) {
  if (index >= (std::uint64_t{1} << num_qubits)) {
    throw std::invalid_argument("basis index out of range");
  }
  StateVector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  s.amps[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const Complex& a : amps) {
    n2 += std::norm(a);
  }
  return std::sqrt(n2);
}

StateVector run(const Circuit& circuit, const RunOptions& options) {
  check_budget(circuit.num_qubits(), options);
  return run(circuit, StateVector::zero(circuit.num_qubits()), options);
}

StateVector run(const Circuit& circuit, StateVector state,
                const RunOptions& options) {
  check_budget(circuit.num_qubits(), options);
  if (state.num_qubits != circuit.num_qubits() ||
      state.amps.size() != (std::size_t{1} << state.num_qubits)) {
    throw std::invalid_argument("initial state does not match the circuit");
  }
  for (const Gate& g : circuit.gates()) {
    apply_gate(state, g);
  }
  return state;
}

PostSelectResult postselect_zero(const StateVector& state,
                                 const std::vector<std::uint32_t>& qubits) {
  std::uint64_t zmask = 0;
  for (std::uint32_t q : qubits) {
    if (q >= state.num_qubits) {
      throw std::invalid_argument("post-selected qubit out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (zmask & bit) {
      throw std::invalid_argument("repeated post-selected qubit");
    }
    zmask |= bit;
  }
  PostSelectResult result;
  double prob = 0.0;
  const std::uint64_t all = (std::uint64_t{1} << state.num_qubits) - 1;
  for_each_masked(all & ~zmask, 0, [&](std::uint64_t idx) {
    prob += std::norm(state.amps[idx]);
  });
  result.success_probability = prob;
  if (prob <= 0.0) {
    return result;
  }
  const std::uint32_t kept = state.num_qubits -
                             static_cast<std::uint32_t>(qubits.size());
  std::vector<std::uint32_t> keep_positions;
  for (std::uint32_t q = 0; q < state.num_qubits; ++q) {
    if (!(zmask & (std::uint64_t{1} << q))) {
      keep_positions.push_back(q);
    }
  }
  StateVector out;
  out.num_qubits = kept;
  out.amps.resize(std::size_t{1} << kept);
  const double rescale = 1.0 / std::sqrt(prob);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << kept); ++k) {
    std::uint64_t idx = 0;
    for (std::uint32_t b = 0; b < kept; ++b) {
      if ((k >> b) & 1) {
        idx |= std::uint64_t{1} << keep_positions[b];
      }
    }
    out.amps[k] = state.amps[idx] * rescale;
  }
  result.state = std::move(out);
  return result;
}

CMatrix extract_block(const BlockEncoding& encoding,
                      const RunOptions& options) {
  const AppliedEncoding applied = apply(encoding);
  check_budget(applied.circuit.num_qubits(), options);
  const std::uint32_t n_op = encoding.operand_qubits();
  const Eigen::Index dim = Eigen::Index(1) << n_op;
  CMatrix block(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector in = StateVector::basis(applied.circuit.num_qubits(),
                                        static_cast<std::uint64_t>(col));
    StateVector out = run(applied.circuit, std::move(in), options);
    for (Eigen::Index row = 0; row < dim; ++row) {
      block(row, col) = out.amps[static_cast<std::size_t>(row)];
    }
  }
  return block;
}

CMatrix circuit_unitary(const Circuit& circuit, const RunOptions& options) {
  check_budget(circuit.num_qubits(), options);
  const Eigen::Index dim = Eigen::Index(1) << circuit.num_qubits();
  CMatrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector in = StateVector::basis(circuit.num_qubits(),
                                        static_cast<std::uint64_t>(col));
    StateVector out = run(circuit, std::move(in), options);
    for (Eigen::Index row = 0; row < dim; ++row) {
      u(row, col) = out.amps[static_cast<std::size_t>(row)];
    }
  }
  return u;
}

double hadamard_test(const BlockEncoding& encoding, const Circuit& state_prep,
                     bool imaginary_part, const RunOptions& options) {
  if (state_prep.num_qubits() != encoding.operand_qubits()) {
    throw std::invalid_argument(
        "state preparation must cover exactly the operand qubits");
  }
  AppliedEncoding scaffold = apply(encoding);
  // Rebuild with an auxiliary qubit and the unitary controlled on it.
  Circuit c = scaffold.circuit.empty_like();
  std::string aux_name = "had";
  while (c.has_register(aux_name)) {
    aux_name += "_";
  }
  const Register& aux = c.add_register(aux_name, 1, RegisterRole::ancilla);
  const std::uint32_t h = aux[0];
  check_budget(c.num_qubits(), options);

  Circuit body = scaffold.circuit.empty_like();
  encoding.emit(body, scaffold.operands, scaffold.ancilla_registers);

  for (const Gate& g : state_prep.gates()) {
    if (g.kind == GateKind::measure) {
      throw std::invalid_argument("state preparation cannot measure");
    }
    c.append(g);
  }
  c.append(Gate::h(h));
  for (const Gate& g : body.gates()) {
    c.append(g.with_controls({h}, {1}));
  }
  if (imaginary_part) {
    c.append(Gate::sdg(h));
  }
  c.append(Gate::h(h));

  const StateVector out = run(c, options);
  const std::uint64_t hbit = std::uint64_t{1} << h;
  double expectation = 0.0;
  for (std::uint64_t idx = 0; idx < out.amps.size(); ++idx) {
    const double p = std::norm(out.amps[idx]);
    expectation += (idx & hbit) ? -p : p;
  }
  return expectation;
}

PostSelectResult apply_rus_emulated(const BlockEncoding& encoding,
                                    const Circuit& state_prep,
                                    const RunOptions& options) {
  const AppliedEncoding applied = apply(encoding, state_prep);
  const StateVector out = run(applied.circuit, options);
  PostSelectResult result = postselect_zero(out, applied.ancilla_qubits);
  if (result.success_probability < 1e-12) {
    throw std::runtime_error(
        "post-selection success probability below 1e-12");
  }
  return result;
}

std::vector<std::uint32_t> sample_rus_attempts(double success_probability,
                                               std::uint32_t trials,
                                               std::uint64_t seed) {
  if (!(success_probability > 0.0) || success_probability > 1.0) {
    throw std::invalid_argument("success probability must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> attempts;
  attempts.reserve(trials);
  const double log_fail = std::log1p(-success_probability);
  for (std::uint32_t t = 0; t < trials; ++t) {
    if (success_probability >= 1.0) {
      attempts.push_back(1);
      continue;
    }
    // Inverse-CDF geometric draw: 1 + floor(ln U / ln(1-p)).
    double u = uniform01(rng);
    if (u <= 0.0) {
      u = 0x1.0p-53;
    }
    const double k = std::floor(std::log(u) / log_fail);
    attempts.push_back(1 + static_cast<std::uint32_t>(std::min(k, 1e9)));
  }
  return attempts;
}

}  // namespace qbec
