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

// Fixed numerical systems shared across the test suite. The solver and
// composition tests pin their regression targets to these matrices, so the
// entries must not change.

#pragma once

#include <vector>

#include "qbec/types.hpp"

namespace fixtures {

// Well-conditioned symmetric 2x2 pair used by the operator-composition
// regression test.
inline qbec::CMatrix pair_a() {
  qbec::CMatrix m(2, 2);
  m << 0.66, 0.02, 0.02, 0.82;
  return m;
}

inline qbec::CMatrix pair_b() {
  qbec::CMatrix m(2, 2);
  m << 0.78, -0.01, -0.01, 0.57;
  return m;
}

// Symmetric positive-definite 4x4 system driving the polynomial-transform
// and inversion regression targets.
inline qbec::CMatrix spd4() {
  qbec::CMatrix m(4, 4);
  m << 0.73, 0.14, -0.15, -0.04,
       0.14, 0.68, -0.05, -0.01,
      -0.15, -0.05, 0.77, -0.03,
      -0.04, -0.01, -0.03, 0.59;
  return m;
}

// Variant of spd4 with a slightly different top-left 2x2 corner, used by
// the unary-ladder solver regression target.
inline qbec::CMatrix spd4_variant() {
  qbec::CMatrix m(4, 4);
  m << 0.73, 0.15, -0.15, -0.04,
       0.15, 0.69, -0.05, -0.01,
      -0.15, -0.05, 0.77, -0.03,
      -0.04, -0.01, -0.03, 0.59;
  return m;
}

// Right-hand side shared by the 4x4 solver tests.
inline std::vector<double> rhs4() { return {0.0, 1.0, 1.0, 1.0}; }

}  // namespace fixtures
