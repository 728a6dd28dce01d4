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

#include "qbec/state_prep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qbec {

namespace {

constexpr double kZeroAngle = 1e-15;

bool all_negligible(const std::vector<double>& angles) {
  return std::all_of(angles.begin(), angles.end(),
                     [](double a) { return std::abs(a) < kZeroAngle; });
}

// Multiplexed RY: angles[j] rotates the target when the controls (most
// significant first) spell out j. Lowered recursively with the half-angle
// sum/difference split; all-zero subtrees are exactly identity and are
// pruned.
void mux_ry(Circuit& circuit, std::uint32_t target,
            const std::vector<std::uint32_t>& controls,
            const std::vector<double>& angles) {
  if (all_negligible(angles)) {
    return;
  }
  if (controls.empty()) {
    circuit.append(Gate::ry(target, angles[0]));
    return;
  }
  const std::size_t half = angles.size() / 2;
  std::vector<double> sum(half);
  std::vector<double> diff(half);
  for (std::size_t i = 0; i < half; ++i) {
    sum[i] = (angles[i] + angles[half + i]) / 2;
    diff[i] = (angles[i] - angles[half + i]) / 2;
  }
  const std::vector<std::uint32_t> rest(controls.begin() + 1, controls.end());
  mux_ry(circuit, target, rest, sum);
  circuit.append(Gate::cx(controls[0], target));
  mux_ry(circuit, target, rest, diff);
  circuit.append(Gate::cx(controls[0], target));
}

}  // namespace

void emit_prepare(Circuit& circuit, const Register& reg,
                  const AmplitudeSpec& amplitudes) {
  const std::uint32_t n = reg.size;
  const std::size_t len = amplitudes.size();
  if (len != (std::size_t{1} << n)) {
    throw std::invalid_argument(
        "amplitude list length must be 2^(register size)");
  }
  double norm2 = 0.0;
  for (double a : amplitudes) {
    norm2 += a * a;
  }
  if (norm2 <= 0.0) {
    throw std::invalid_argument("cannot prepare the zero vector");
  }
  std::vector<double> v(amplitudes);
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (double& a : v) {
    a *= inv_norm;
  }
  // Level L rotates qubit n-1-L, multiplexed over the already-decided
  // qubits n-1 .. n-L. Intermediate angles split subtree weights; the
  // leaf level uses signed pairs so amplitude signs need no extra gates.
  for (std::uint32_t level = 0; level < n; ++level) {
    const std::uint32_t target = reg[n - 1 - level];
    std::vector<std::uint32_t> controls(level);
    for (std::uint32_t i = 0; i < level; ++i) {
      controls[i] = reg[n - 1 - i];
    }
    const std::size_t branches = std::size_t{1} << level;
    std::vector<double> angles(branches);
    if (level + 1 == n) {
      for (std::size_t j = 0; j < branches; ++j) {
        angles[j] = 2.0 * std::atan2(v[2 * j + 1], v[2 * j]);
      }
    } else {
      const std::uint32_t seg_bits = n - level;  // bits not yet decided
      for (std::size_t j = 0; j < branches; ++j) {
        double stay = 0.0;
        double move = 0.0;
        const std::size_t base = j << seg_bits;
        const std::size_t half = std::size_t{1} << (seg_bits - 1);
        for (std::size_t i = 0; i < half; ++i) {
          stay += v[base + i] * v[base + i];
          move += v[base + half + i] * v[base + half + i];
        }
        angles[j] = 2.0 * std::atan2(std::sqrt(move), std::sqrt(stay));
      }
    }
    mux_ry(circuit, target, controls, angles);
  }
}

Circuit prepare(const AmplitudeSpec& amplitudes, const std::string& reg_name) {
  std::size_t len = amplitudes.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("amplitude list length must be a power of 2");
  }
  std::uint32_t n = 0;
  while ((std::size_t{1} << n) < len) {
    ++n;
  }
  if (n == 0) {
    throw std::invalid_argument("need at least 2 amplitudes");
  }
  Circuit c;
  const Register& reg = c.add_register(reg_name, n);
  emit_prepare(c, reg, amplitudes);
  return c;
}

void emit_prep_pair(Circuit& circuit, const Register& reg,
                    const std::vector<double>& coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("coefficient list is empty");
  }
  if (coeffs.size() > (std::size_t{1} << reg.size)) {
    throw std::invalid_argument("register too small for coefficient list");
  }
  double alpha = 0.0;
  for (double c : coeffs) {
    if (c <= 0.0) {
      throw std::invalid_argument(
          "prep_pair needs positive coefficients; fold signs into the "
          "selected unitaries");
    }
    alpha += c;
  }
  AmplitudeSpec amps(std::size_t{1} << reg.size, 0.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    amps[k] = std::sqrt(coeffs[k] / alpha);
  }
  emit_prepare(circuit, reg, amps);
}

Circuit prep_pair(const std::vector<double>& coeffs,
                  const std::string& reg_name) {
  if (coeffs.empty()) {
    throw std::invalid_argument("coefficient list is empty");
  }
  std::uint32_t m = 0;
  while ((std::size_t{1} << m) < coeffs.size()) {
    ++m;
  }
  Circuit c;
  if (m == 0) {
    // A single branch needs no selection qubits.
    if (coeffs[0] <= 0.0) {
      throw std::invalid_argument("prep_pair needs positive coefficients");
    }
    return c;
  }
  const Register& reg = c.add_register(reg_name, m);
  emit_prep_pair(c, reg, coeffs);
  return c;
}

Circuit singlet_prep(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& matching,
    std::uint32_t n) {
  std::set<std::uint32_t> used;
  std::uint32_t max_q = 0;
  for (const auto& [a, b] : matching) {
    if (a == b) {
      throw std::invalid_argument("singlet pair must use distinct qubits");
    }
    if (!used.insert(a).second || !used.insert(b).second) {
      throw std::invalid_argument("singlet pairs must be disjoint");
    }
    max_q = std::max({max_q, a, b});
  }
  const std::uint32_t needed = used.empty() ? 1 : max_q + 1;
  if (n == 0) {
    n = needed;
  }
  if (n < needed) {
    throw std::invalid_argument("register too small for the matching");
  }
  Circuit c;
  const Register& reg = c.add_register("psi", n);
  for (const auto& [a, b] : matching) {
    // (|01> - |10>)/sqrt(2) on (a, b): plus amplitude where only b is set.
    c.append(Gate::x(reg[b]));
    c.append(Gate::h(reg[a]));
    c.append(Gate::z(reg[a]));
    c.append(Gate::cx(reg[a], reg[b]));
  }
  return c;
}

}  // namespace qbec
