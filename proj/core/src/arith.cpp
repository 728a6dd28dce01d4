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

#include "qbec/arith.hpp"

#include <stdexcept>
#include <vector>

namespace qbec {

namespace {

// Increment the value held in qubits reg[from..] by one (modulo the
// truncated width): a carry ladder from the widest control set down.
void emit_increment_from(Circuit& circuit, const Register& reg,
                         std::uint32_t from) {
  for (std::uint32_t i = reg.size; i-- > from + 1;) {
    std::vector<std::uint32_t> controls;
    for (std::uint32_t b = from; b < i; ++b) {
      controls.push_back(reg[b]);
    }
    circuit.append(Gate::mcx(controls, reg[i]));
  }
  circuit.append(Gate::x(reg[from]));
}

}  // namespace

void emit_add_const(Circuit& circuit, const Register& reg, std::uint64_t c) {
  const std::uint64_t mask =
      reg.size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << reg.size) - 1;
  c &= mask;
  // Adding 2^b only touches bits b and above, and constant additions
  // commute, so one ladder per set bit suffices.
  for (std::uint32_t b = 0; b < reg.size; ++b) {
    if ((c >> b) & 1) {
      emit_increment_from(circuit, reg, b);
    }
  }
}

void emit_sub_const(Circuit& circuit, const Register& reg, std::uint64_t c) {
  Circuit tmp = circuit.empty_like();
  emit_add_const(tmp, reg, c);
  circuit.extend(adjoint(tmp));
}

void emit_flag_less_than(Circuit& circuit, const Register& reg,
                         std::uint64_t c, std::uint32_t flag) {
  if (reg.size < 64 && c >= (std::uint64_t{1} << reg.size)) {
    circuit.append(Gate::x(flag));
    return;
  }
  // value < c iff at some set bit b of c the value has 0 while all higher
  // bits agree with c. The match patterns are disjoint, so one flip each.
  for (std::uint32_t b = reg.size; b-- > 0;) {
    if (((c >> b) & 1) == 0) {
      continue;
    }
    std::vector<std::uint32_t> controls;
    std::vector<std::uint8_t> polarity;
    for (std::uint32_t i = b + 1; i < reg.size; ++i) {
      controls.push_back(reg[i]);
      polarity.push_back(static_cast<std::uint8_t>((c >> i) & 1));
    }
    controls.push_back(reg[b]);
    polarity.push_back(0);
    circuit.append(Gate::mcx(controls, flag, polarity));
  }
}

void emit_flag_at_least(Circuit& circuit, const Register& reg,
                        std::uint64_t c, std::uint32_t flag) {
  circuit.append(Gate::x(flag));
  emit_flag_less_than(circuit, reg, c, flag);
}

}  // namespace qbec
