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

#include "qbec/circuit.hpp"

namespace qbec {

/// Adds the constant c modulo 2^reg.size to the register value, via a
/// carry ladder of multi-controlled X gates per set bit of c.
void emit_add_const(Circuit& circuit, const Register& reg, std::uint64_t c);

/// Subtracts the constant c modulo 2^reg.size.
void emit_sub_const(Circuit& circuit, const Register& reg, std::uint64_t c);

/// Flips `flag` exactly when the register value is below c (unsigned).
/// c of 0 never fires; c >= 2^reg.size always fires.
void emit_flag_less_than(Circuit& circuit, const Register& reg,
                         std::uint64_t c, std::uint32_t flag);

/// Flips `flag` exactly when the register value is c or above.
void emit_flag_at_least(Circuit& circuit, const Register& reg,
                        std::uint64_t c, std::uint32_t flag);

}  // namespace qbec
