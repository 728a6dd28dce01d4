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

#include "qbec/solvers.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qbec/approx.hpp"
#include "qbec/qubitization.hpp"

namespace qbec {

BlockEncoding cks(const BlockEncoding& encoding, double eps, double kappa) {
  const InversePlan plan = inverse_series(eps, kappa);
  BlockEncoding out = unary_chebyshev_lcu(encoding, plan.series);
  out.epsilon = eps + out.epsilon / plan.rescale;
  out.alpha /= plan.rescale;
  return out;
}

std::vector<double> chebyshev_moments(const BlockEncoding& encoding,
                                      const Circuit& prep,
                                      std::uint32_t m_max,
                                      const RunOptions& options) {
  std::vector<double> moments(m_max + 1);
  for (std::uint32_t m = 0; m <= m_max; ++m) {
    moments[m] = hadamard_test(chebyshev(encoding, m), prep, false, options);
  }
  return moments;
}

KrylovResult lanczos(const PauliSum& hamiltonian, std::uint32_t dim,
                     const Circuit& prep, double delta,
                     const RunOptions& options) {
  if (dim == 0) {
    throw std::invalid_argument("Krylov dimension must be positive");
  }
  const BlockEncoding enc = from_operator(hamiltonian);
  const std::vector<double> moments =
      chebyshev_moments(enc, prep, 2 * dim - 1, options);
  return lanczos_from_moments(moments, dim, enc.alpha, delta);
}

KrylovResult lanczos_from_moments(const std::vector<double>& moments,
                                  std::uint32_t dim, double alpha,
                                  double delta) {
  if (dim == 0) {
    throw std::invalid_argument("Krylov dimension must be positive");
  }
  if (moments.size() != static_cast<std::size_t>(2) * dim) {
    throw std::invalid_argument("lanczos needs exactly 2 * dim moments");
  }
  const auto moment = [&moments](std::int64_t i) {
    return moments[static_cast<std::size_t>(std::llabs(i))];
  };
  const auto d = static_cast<Eigen::Index>(dim);
  KrylovResult result;
  result.moments = moments;
  result.overlap.resize(d, d);
  result.projected.resize(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      // Chebyshev product rule: T_j T_k = (T_{j+k} + T_{|j-k|}) / 2, and
      // one extra factor x = (T_{k+1} + T_{|k-1|}) / 2 for the projected
      // Hamiltonian.
      result.overlap(j, k) = 0.5 * (moment(j + k) + moment(std::llabs(j - k)));
      result.projected(j, k) =
          0.25 * (moment(j + k + 1) + moment(std::llabs(j - k - 1)) +
                  moment(j + std::llabs(k - 1)) +
                  moment(std::llabs(j - std::llabs(k - 1))));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> overlap_eigs(result.overlap);
  const Eigen::VectorXd& s = overlap_eigs.eigenvalues();
  const double s_max = s(d - 1);
  if (!(s_max > 0.0)) {
    throw std::runtime_error(
        "overlap matrix has no positive eigenvalue; Krylov basis collapsed");
  }
  const double cutoff = delta * s_max;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (s(i) >= cutoff) {
      kept.push_back(i);
    }
  }
  if (kept.empty()) {
    throw std::runtime_error(
        "every overlap eigenvalue fell below the regularization cutoff");
  }
  Eigen::MatrixXd basis(d, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t t = 0; t < kept.size(); ++t) {
    basis.col(static_cast<Eigen::Index>(t)) =
        overlap_eigs.eigenvectors().col(kept[t]) / std::sqrt(s(kept[t]));
  }
  Eigen::MatrixXd reduced = basis.transpose() * result.projected * basis;
  reduced = 0.5 * (reduced + reduced.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reduced_eigs(reduced);
  result.energy = alpha * reduced_eigs.eigenvalues()(0);
  result.retained = static_cast<std::uint32_t>(kept.size());
  return result;
}

}  // namespace qbec
