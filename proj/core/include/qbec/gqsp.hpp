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
#include <vector>

#include "qbec/approx.hpp"
#include "qbec/encoding.hpp"

namespace qbec {

/// Signal-rotation angles implementing a target circle polynomial P(z) of
/// degree d: interleaving R(theta_j, phi_j) with the signal variable z
/// (one controlled walk step) puts P(z) in the top-left entry of the
/// product. lambda enters the first rotation only.
struct GQSPPhases {
  std::vector<double> thetas;  // length d + 1
  std::vector<double> phis;    // length d + 1
  double lambda = 0.0;

  std::uint32_t degree() const {
    return thetas.empty() ? 0 : static_cast<std::uint32_t>(thetas.size() - 1);
  }
};

/// Completes P into (P, Q) with |P(z)|^2 + |Q(z)|^2 = 1 on |z| = 1 and
/// returns Q's coefficients. Roots of the Laurent polynomial
/// 1 - P(z) conj(P)(1/z) are taken from a companion matrix, polished by
/// Newton steps, and paired across the unit circle to select the inside
/// root of each pair. Throws std::invalid_argument if P is not bounded by
/// 1 - margin on a 1024-point circle grid, std::runtime_error on
/// completion failure (the identity cannot be met within 1e-8).
std::vector<Complex> complementary(const std::vector<Complex>& p,
                                   double margin = 1e-3);

/// Computes GQSP phases for a Chebyshev-basis series read as the circle
/// polynomial sum_k c_k z^k, by completing and layer-stripping. Enforces
/// the degree cap of 64 for phase finding and validates the reconstruction
/// on a 1024-point circle grid to 1e-8. Degree 0 reduces to a pure phase.
GQSPPhases find_phases(const ChebSeries& series, double margin = 1e-3);

/// Top-left entry of the phase product at signal value z: the scalar
/// polynomial the phases implement. Used by the reconstruction invariant.
Complex reconstruct(const GQSPPhases& phases, Complex z);

/// Generalized eigenvalue transform: one signal qubit whose rotations
/// interleave with walk steps controlled on the signal being |0>.
/// Projecting signal and walk ancillas on zero leaves p(A / alpha) where
/// p is the phase-encoded polynomial. The result reports alpha = 1 (its
/// block is the target itself); pipeline callers overwrite alpha with
/// their rescale factor. Throws std::invalid_argument for non-Hermitian
/// input.
BlockEncoding gqet(const BlockEncoding& encoding, const GQSPPhases& phases);

/// p(A / alpha) for an arbitrary real or complex coefficient list:
/// to_chebyshev, sup_norm_rescale, find_phases, gqet. The returned alpha
/// is the rescale factor, so alpha_new * block = p(A / alpha_base).
BlockEncoding poly(const BlockEncoding& encoding, const ChebSeries& series,
                   double margin = 1e-3);

/// Approximate inverse: alpha_new * block = (A / alpha_base)^{-1} within
/// eps * kappa-grid tolerance when the spectrum of A / alpha_base lies in
/// D_kappa (caller contract, unchecked).
BlockEncoding inv(const BlockEncoding& encoding, double eps, double kappa);

/// Approximate evolution e^{-i t (A / alpha_base)} by the Jacobi-Anger
/// series at truncation order N; epsilon reports the Bessel tail bound.
/// Physical time t for the unnormalized A means calling with t * alpha.
BlockEncoding sim(const BlockEncoding& encoding, double t, std::uint32_t order);

}  // namespace qbec
