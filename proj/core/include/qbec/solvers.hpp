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

#include <Eigen/Dense>

#include "qbec/circuit.hpp"
#include "qbec/encoding.hpp"
#include "qbec/pauli.hpp"
#include "qbec/simulator.hpp"

namespace qbec {

/// Matrix-inversion encoding via the unary Chebyshev LCU: the
/// inverse_series coefficients drive unary_chebyshev_lcu, and the rescale
/// factor folds into alpha so that alpha_new * block = (A / alpha)^{-1}
/// up to eps on D_kappa. Always compiles; only simulation is bounded by
/// the qubit budget.
BlockEncoding cks(const BlockEncoding& encoding, double eps, double kappa);

/// Exact Chebyshev moments E_m = <psi0| T_m(A / alpha) |psi0> for
/// m = 0 ... m_max via Hadamard tests on chebyshev(encoding, m).
std::vector<double> chebyshev_moments(const BlockEncoding& encoding,
                                      const Circuit& prep,
                                      std::uint32_t m_max,
                                      const RunOptions& options = {});

/// Krylov-subspace diagonalization output.
struct KrylovResult {
  Eigen::MatrixXd overlap;      // S_jk = <psi_j|psi_k>, symmetric
  Eigen::MatrixXd projected;    // H'_jk = <psi_j|H/alpha|psi_k>
  std::vector<double> moments;  // E_0 ... E_{2D-1}
  double energy = 0.0;          // alpha-rescaled minimum eigenvalue
  std::uint32_t retained = 0;   // dimension kept after regularization
};

/// Quantum Lanczos: builds the Krylov basis |psi_k> = T_k(H/alpha)|psi0>
/// implicitly through moments, assembles S and H' by the Chebyshev
/// product rules, regularizes S by discarding eigenvalues below
/// delta * max_eigenvalue, and solves the projected eigenproblem. Energy
/// is rescaled by alpha = |coefficient| 1-norm of H. Throws
/// std::runtime_error if every S eigenvalue falls below the cutoff.
KrylovResult lanczos(const PauliSum& hamiltonian, std::uint32_t dim,
                     const Circuit& prep, double delta = 1e-8,
                     const RunOptions& options = {});

/// Assembly-only variant on caller-provided moments (needs 2 * dim values,
/// throws std::invalid_argument otherwise). alpha rescales the energy.
KrylovResult lanczos_from_moments(const std::vector<double>& moments,
                                  std::uint32_t dim, double alpha,
                                  double delta = 1e-8);

}  // namespace qbec
