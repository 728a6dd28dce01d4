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

#include "qbec/approx.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qbec {
namespace {

constexpr std::uint32_t kCircleGrid = 4096;
constexpr std::uint32_t kDomainGrid = 2001;
constexpr double kRescaleMargin = 1e-3;

double clenshaw_real(const std::vector<double>& c, double x) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c.empty() ? 0.0 : c[0] + x * b1 - b2;
}

}  // namespace

Complex eval(const ChebSeries& series, double x) {
  if (series.coeffs.empty()) {
    return 0.0;
  }
  if (series.basis == ChebSeries::Basis::monomial) {
    Complex acc = 0.0;
    for (std::size_t k = series.coeffs.size(); k-- > 0;) {
      acc = acc * x + series.coeffs[k];
    }
    return acc;
  }
  Complex b1 = 0.0;
  Complex b2 = 0.0;
  for (std::size_t k = series.coeffs.size(); k-- > 1;) {
    const Complex b0 = series.coeffs[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return series.coeffs[0] + x * b1 - b2;
}

Complex eval_circle(const ChebSeries& series, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = series.coeffs.size(); k-- > 0;) {
    acc = acc * z + series.coeffs[k];
  }
  return acc;
}

ChebSeries to_chebyshev(const ChebSeries& series) {
  if (series.basis == ChebSeries::Basis::chebyshev) {
    return series;
  }
  // Horner in coefficient space: multiplying a Chebyshev expansion by x
  // sends a_k to halves at k+1 and |k-1| (x T_0 = T_1 contributes whole).
  std::vector<Complex> acc;
  for (std::size_t k = series.coeffs.size(); k-- > 0;) {
    std::vector<Complex> next(acc.empty() ? 1 : acc.size() + 1, 0.0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (j == 0) {
        next[1] += acc[0];
      } else {
        next[j + 1] += 0.5 * acc[j];
        next[j - 1] += 0.5 * acc[j];
      }
    }
    next[0] += series.coeffs[k];
    acc = std::move(next);
  }
  ChebSeries out;
  out.basis = ChebSeries::Basis::chebyshev;
  out.coeffs = std::move(acc);
  return out;
}

std::pair<ChebSeries, double> sup_norm_rescale(const ChebSeries& series,
                                               double margin) {
  if (!(margin > 0.0) || !(margin < 1.0)) {
    throw std::invalid_argument("rescale margin must lie in (0, 1)");
  }
  ChebSeries cheb = to_chebyshev(series);
  double max_abs = 0.0;
  for (std::uint32_t g = 0; g < kCircleGrid; ++g) {
    const double theta = 2.0 * std::numbers::pi * g / kCircleGrid;
    const Complex z(std::cos(theta), std::sin(theta));
    max_abs = std::max(max_abs, std::abs(eval_circle(cheb, z)));
  }
  if (max_abs == 0.0) {
    throw std::invalid_argument("cannot rescale the zero polynomial");
  }
  const double scale = max_abs / (1.0 - margin);
  for (Complex& c : cheb.coeffs) {
    c /= scale;
  }
  return {std::move(cheb), scale};
}

InversePlan inverse_series(double eps, double kappa) {
  if (!(eps > 0.0) || !(eps < 0.5)) {
    throw std::invalid_argument("inverse eps must lie in (0, 0.5)");
  }
  if (!(kappa >= 1.0)) {
    throw std::invalid_argument("condition bound kappa must be at least 1");
  }
  const auto b = static_cast<std::uint32_t>(
      std::max(1.0, std::ceil(kappa * kappa * std::log(kappa / eps))));
  const auto j0 = static_cast<std::uint32_t>(
      std::ceil(std::sqrt(b * std::log(4.0 * b / eps))));
  // c_{2j+1} = 4 (-1)^j 2^{-2b} sum_{i=j+1}^{b} binom(2b, b+i), accumulated
  // in log space with a max shift so large b stays finite.
  const double lg2b = std::lgamma(2.0 * b + 1.0);
  const double ln2 = std::numbers::ln2;
  std::vector<double> raw(2 * j0 + 2, 0.0);
  for (std::uint32_t j = 0; j <= j0; ++j) {
    if (j + 1 > b) {
      break;  // empty binomial tail; remaining coefficients vanish
    }
    std::vector<double> logs;
    for (std::uint32_t i = j + 1; i <= b; ++i) {
      logs.push_back(lg2b - std::lgamma(static_cast<double>(b) + i + 1.0) -
                     std::lgamma(static_cast<double>(b) - i + 1.0) -
                     2.0 * b * ln2);
    }
    double peak = logs.front();
    for (double l : logs) {
      peak = std::max(peak, l);
    }
    double sum = 0.0;
    for (double l : logs) {
      sum += std::exp(l - peak);
    }
    const double value = 4.0 * std::exp(peak) * sum;
    raw[2 * j + 1] = (j % 2 == 0) ? value : -value;
  }
  // Trim to the smallest odd degree still eps-close to 1/x on the domain
  // grid; the full construction satisfies the bound by design, so the
  // fallback below is the untruncated series.
  std::vector<double> grid(kDomainGrid);
  for (std::uint32_t g = 0; g < kDomainGrid; ++g) {
    grid[g] = 1.0 / kappa +
              (1.0 - 1.0 / kappa) * g / (kDomainGrid - 1);
  }
  std::size_t chosen = raw.size() - 1;
  for (std::size_t d = 1; d < raw.size(); d += 2) {
    const std::vector<double> head(raw.begin(),
                                   raw.begin() + static_cast<std::ptrdiff_t>(d + 1));
    double err = 0.0;
    for (double x : grid) {
      err = std::max(err, std::abs(clenshaw_real(head, x) - 1.0 / x));
    }
    if (err <= eps) {
      chosen = d;
      break;
    }
  }
  ChebSeries series;
  series.basis = ChebSeries::Basis::chebyshev;
  for (std::size_t k = 0; k <= chosen; ++k) {
    series.coeffs.emplace_back(raw[k], 0.0);
  }
  while (series.coeffs.size() > 1 &&
         std::abs(series.coeffs.back()) < 1e-15) {
    series.coeffs.pop_back();
  }
  InversePlan plan;
  plan.b = b;
  plan.j0 = j0;
  plan.eps = eps;
  plan.kappa = kappa;
  auto [bounded, scale] = sup_norm_rescale(series, kRescaleMargin);
  plan.series = std::move(bounded);
  plan.rescale = 1.0 / scale;
  return plan;
}

ChebSeries jacobi_anger(double t, std::uint32_t order) {
  const std::vector<double> j = bessel_j(t, order);
  ChebSeries series;
  series.basis = ChebSeries::Basis::chebyshev;
  series.coeffs.resize(order + 1);
  // (-i)^k cycles through {1, -i, -1, i}.
  static const Complex minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  series.coeffs[0] = j[0];
  for (std::uint32_t k = 1; k <= order; ++k) {
    series.coeffs[k] = 2.0 * minus_i_pow[k % 4] * j[k];
  }
  while (series.coeffs.size() > 1 &&
         std::abs(series.coeffs.back()) < 1e-15) {
    series.coeffs.pop_back();
  }
  return series;
}

double jacobi_anger_tail(double t, std::uint32_t order) {
  const std::uint32_t high =
      order + 64 + static_cast<std::uint32_t>(2.0 * std::abs(t));
  const std::vector<double> j = bessel_j(t, high);
  double tail = 0.0;
  for (std::uint32_t k = high; k > order; --k) {
    tail += std::abs(j[k]);
  }
  return 2.0 * tail;
}

std::vector<double> bessel_j(double t, std::uint32_t kmax) {
  const double at = std::abs(t);
  std::vector<double> j(kmax + 1, 0.0);
  if (at == 0.0) {
    j[0] = 1.0;
    return j;
  }
  // Miller's algorithm: run the recurrence downward from well above both
  // kmax and |t|, then normalize with J_0 + 2 sum J_{2k} = 1. Values are
  // rescaled whenever they grow large, since the unnormalized solution
  // explodes like (2k / t)^k.
  const std::uint32_t start =
      kmax + 16 + static_cast<std::uint32_t>(1.5 * at);
  std::vector<double> f(start + 2, 0.0);
  f[start + 1] = 0.0;
  f[start] = 1e-30;
  for (std::uint32_t k = start; k > 0; --k) {
    f[k - 1] = (2.0 * k / at) * f[k] - f[k + 1];
    if (std::abs(f[k - 1]) > 1e250) {
      for (std::uint32_t i = k - 1; i <= start + 1; ++i) {
        f[i] *= 1e-250;
      }
    }
  }
  double norm = f[0];
  for (std::uint32_t k = 2; k <= start; k += 2) {
    norm += 2.0 * f[k];
  }
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    j[k] = f[k] / norm;
    if (t < 0.0 && k % 2 == 1) {
      j[k] = -j[k];
    }
  }
  return j;
}

}  // namespace qbec
