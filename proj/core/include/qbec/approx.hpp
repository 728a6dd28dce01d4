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
#include <utility>
#include <vector>

#include "qbec/types.hpp"

namespace qbec {

/// A polynomial as a coefficient list, either in the monomial basis
/// (coeffs[k] x^k) or the Chebyshev basis (coeffs[k] T_k(x)).
struct ChebSeries {
  enum class Basis { monomial, chebyshev };

  Basis basis = Basis::chebyshev;
  std::vector<Complex> coeffs;

  std::uint32_t degree() const {
    return coeffs.empty() ? 0 : static_cast<std::uint32_t>(coeffs.size() - 1);
  }
};

/// Evaluates the series at a real point (Clenshaw for the Chebyshev basis,
/// Horner for the monomial basis).
Complex eval(const ChebSeries& series, double x);

/// Evaluates the associated circle polynomial sum_k c_k z^k. On z = e^{i t}
/// with a Chebyshev-basis series, the real part is p(cos t).
Complex eval_circle(const ChebSeries& series, Complex z);

/// Exact basis conversion to Chebyshev coefficients. Chebyshev input is
/// returned unchanged.
ChebSeries to_chebyshev(const ChebSeries& series);

/// Rescales a Chebyshev-basis series so its circle polynomial has maximum
/// modulus exactly 1 - margin over a 4096-point grid on the unit circle
/// (which dominates the [-1, 1] sup). Returns the rescaled series and the
/// scale factor s such that s * rescaled = input. Monomial input is
/// converted first. Throws std::invalid_argument for the zero polynomial
/// or margin outside (0, 1).
std::pair<ChebSeries, double> sup_norm_rescale(const ChebSeries& series,
                                               double margin = 1e-3);

/// Odd Chebyshev approximation of 1/x on D_kappa = [-1, -1/kappa] union
/// [1/kappa, 1], bounded away from 1 for direct use in phase finding.
struct InversePlan {
  std::uint32_t b = 0;        // smoothing order kappa^2 ln(kappa/eps)
  std::uint32_t j0 = 0;       // pre-trim truncation parameter
  double rescale = 0.0;       // series approximates rescale / x on D_kappa
  double eps = 0.0;
  double kappa = 0.0;
  ChebSeries series;          // odd Chebyshev-basis coefficients

  /// Invariant: max over a 2001-point D_kappa grid of
  /// |series(x) - rescale / x| <= rescale * eps.
};

/// Builds the closed-form binomial-sum Chebyshev series for 1/x, with
/// b = ceil(kappa^2 ln(kappa/eps)), truncation 2 j0 + 1 where
/// j0 = ceil(sqrt(b ln(4 b / eps))), tail sums accumulated in log space,
/// and the degree then trimmed to the smallest odd value still meeting the
/// eps tolerance on the grid. Throws std::invalid_argument for kappa < 1
/// or eps outside (0, 0.5).
InversePlan inverse_series(double eps, double kappa);

/// Complex Chebyshev series for e^{-i t x}: c_0 = J_0(t) and
/// c_k = 2 (-i)^k J_k(t) up to order N.
ChebSeries jacobi_anger(double t, std::uint32_t order);

/// Truncation error bound 2 sum_{k > N} |J_k(t)|, computed from the
/// superexponentially decaying tail.
double jacobi_anger_tail(double t, std::uint32_t order);

/// Bessel functions J_0(t) ... J_kmax(t) of the first kind by Miller's
/// downward recurrence, normalized via J_0 + 2 sum J_{2k} = 1.
std::vector<double> bessel_j(double t, std::uint32_t kmax);

}  // namespace qbec
