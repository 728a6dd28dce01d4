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

#include "qbec/gqsp.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbec/qubitization.hpp"

namespace qbec {
namespace {

constexpr std::uint32_t kGrid = 1024;
constexpr std::uint32_t kDegreeCap = 64;
constexpr double kIdentityTol = 1e-8;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * z + c[k];
  }
  return acc;
}

std::vector<Complex> circle_grid() {
  std::vector<Complex> z(kGrid);
  for (std::uint32_t g = 0; g < kGrid; ++g) {
    const double theta = 2.0 * std::numbers::pi * g / kGrid;
    z[g] = Complex(std::cos(theta), std::sin(theta));
  }
  return z;
}

// 2x2 signal rotation R(theta, phi, lambda); row/column 0 is signal |0>.
std::array<Complex, 4> rotation(double theta, double phi, double lambda) {
  const Complex eip = std::polar(1.0, phi);
  const Complex eil = std::polar(1.0, lambda);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {eil * eip * c, eip * s, eil * s, Complex(-c, 0.0)};
}

std::array<Complex, 4> mul2(const std::array<Complex, 4>& a,
                            const std::array<Complex, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Appends the gates realizing R(theta, phi, lambda) on one qubit, as
// diag(e^{i phi}, 1) . (RY(2 theta) Z) . diag(e^{i lambda}, 1). The
// diag(e^{ia}, 1) factors need an explicit global phase so the encoded
// block keeps its exact complex value.
void emit_rotation(Circuit& circuit, std::uint32_t q, double theta,
                   double phi, double lambda) {
  if (lambda != 0.0) {
    circuit.append(Gate::global_phase(lambda));
    circuit.append(Gate::phase(q, -lambda));
  }
  circuit.append(Gate::z(q));
  circuit.append(Gate::ry(q, 2.0 * theta));
  if (phi != 0.0) {
    circuit.append(Gate::global_phase(phi));
    circuit.append(Gate::phase(q, -phi));
  }
}

}  // namespace

std::vector<Complex> complementary(const std::vector<Complex>& p,
                                   double margin) {
  if (p.empty()) {
    return {Complex(1.0, 0.0)};
  }
  const std::vector<Complex> grid = circle_grid();
  double sup = 0.0;
  for (const Complex& z : grid) {
    sup = std::max(sup, std::abs(horner(p, z)));
  }
  if (sup > 1.0 - margin + 1e-12) {
    throw std::invalid_argument(
        "polynomial is not bounded by 1 - margin on the unit circle");
  }
  const std::size_t d = p.size() - 1;
  // Laurent coefficients of 1 - P(z) conj(P)(1/z), shifted by z^d into an
  // ordinary degree-2d polynomial.
  std::vector<Complex> g(2 * d + 1, 0.0);
  for (std::size_t m = 0; m <= 2 * d; ++m) {
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(m) -
                                 static_cast<std::ptrdiff_t>(d);
    Complex s = 0.0;
    for (std::size_t k = 0; k <= d; ++k) {
      const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(k) + shift;
      if (idx >= 0 && idx <= static_cast<std::ptrdiff_t>(d)) {
        s += p[static_cast<std::size_t>(idx)] * std::conj(p[k]);
      }
    }
    g[m] = (shift == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)) - s;
  }
  double gmax = 0.0;
  for (const Complex& c : g) {
    gmax = std::max(gmax, std::abs(c));
  }
  // Trailing zeros are roots at the origin (kept); leading zeros are their
  // partners at infinity (dropped).
  std::size_t lo = 0;
  while (lo < g.size() && std::abs(g[lo]) < 1e-14 * gmax) {
    ++lo;
  }
  std::size_t hi = g.size() - 1;
  while (hi > lo && std::abs(g[hi]) < 1e-14 * gmax) {
    --hi;
  }
  const std::vector<Complex> core(g.begin() + static_cast<std::ptrdiff_t>(lo),
                                  g.begin() + static_cast<std::ptrdiff_t>(hi) +
                                      1);
  const std::size_t zero_roots = lo;
  const std::size_t n = core.size() - 1;
  std::vector<Complex> roots;
  if (n > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(
        static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      companion(static_cast<Eigen::Index>(i + 1),
                static_cast<Eigen::Index>(i)) = 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      companion(static_cast<Eigen::Index>(i),
                static_cast<Eigen::Index>(n - 1)) = -core[i] / core[n];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("completion failure: root finding failed");
    }
    roots.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    std::vector<Complex> dcore(n);
    for (std::size_t i = 1; i <= n; ++i) {
      dcore[i - 1] = static_cast<double>(i) * core[i];
    }
    for (int iter = 0; iter < 8; ++iter) {
      for (Complex& r : roots) {
        const Complex dv = horner(dcore, r);
        if (std::abs(dv) > 1e-30) {
          r -= horner(core, r) / dv;
        }
      }
    }
  }
  // Roots of the Laurent identity come in pairs (r, 1/conj(r)); keep the
  // inside member of each pair.
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(roots[a]) < std::abs(roots[b]);
  });
  std::vector<bool> used(roots.size(), false);
  std::vector<Complex> chosen(zero_roots, Complex(0.0, 0.0));
  for (std::size_t i : order) {
    if (used[i]) {
      continue;
    }
    const Complex partner = 1.0 / std::conj(roots[i]);
    std::size_t best = roots.size();
    double best_dist = 0.0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j] || j == i) {
        continue;
      }
      const double dist = std::abs(roots[j] - partner);
      if (best == roots.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == roots.size()) {
      throw std::runtime_error("completion failure: unpaired root");
    }
    used[i] = used[best] = true;
    chosen.push_back(std::abs(roots[i]) <= std::abs(roots[best])
                         ? roots[i]
                         : roots[best]);
  }
  if (chosen.size() != d) {
    throw std::runtime_error("completion failure: wrong inside-root count");
  }
  std::vector<Complex> q{Complex(1.0, 0.0)};
  for (const Complex& r : chosen) {
    std::vector<Complex> next(q.size() + 1, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j] += -r * q[j];
      next[j + 1] += q[j];
    }
    q = std::move(next);
  }
  // One real scale factor matches |Q|^2 to 1 - |P|^2; the geometric mean
  // over the grid averages out root-polishing noise.
  double log_sum = 0.0;
  for (const Complex& z : grid) {
    const double f = 1.0 - std::norm(horner(p, z));
    const double qv = std::norm(horner(q, z));
    log_sum += std::log(f / qv);
  }
  const double gamma = std::exp(0.5 * log_sum / grid.size());
  for (Complex& c : q) {
    c *= gamma;
  }
  double err = 0.0;
  for (const Complex& z : grid) {
    err = std::max(err, std::abs(std::norm(horner(p, z)) +
                                 std::norm(horner(q, z)) - 1.0));
  }
  if (err > kIdentityTol) {
    throw std::runtime_error(
        "completion failure: |P|^2 + |Q|^2 = 1 violated beyond 1e-8");
  }
  return q;
}

GQSPPhases find_phases(const ChebSeries& series, double margin) {
  const ChebSeries cheb = to_chebyshev(series);
  if (cheb.coeffs.empty()) {
    throw std::invalid_argument("cannot find phases for an empty series");
  }
  if (cheb.degree() > kDegreeCap) {
    throw std::invalid_argument(
        "phase finding is capped at polynomial degree 64");
  }
  std::vector<Complex> p = cheb.coeffs;
  std::vector<Complex> q = complementary(p, margin);
  const std::size_t d = p.size() - 1;
  GQSPPhases phases;
  phases.thetas.assign(d + 1, 0.0);
  phases.phis.assign(d + 1, 0.0);
  for (std::size_t k = d; k > 0; --k) {
    const Complex a = p[k];
    const Complex b = q[k];
    const double theta = std::atan2(std::abs(b), std::abs(a));
    const double phi =
        std::abs(b) > 1e-300 ? std::arg(a) - std::arg(b) : 0.0;
    phases.thetas[k] = theta;
    phases.phis[k] = phi;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e = std::polar(1.0, -phi);
    std::vector<Complex> np(k, 0.0);
    std::vector<Complex> nq(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      np[j] = e * c * p[j + 1] + s * q[j + 1];
      nq[j] = e * s * p[j] - c * q[j];
    }
    p = std::move(np);
    q = std::move(nq);
  }
  const Complex a = p[0];
  const Complex b = q[0];
  phases.thetas[0] = std::atan2(std::abs(b), std::abs(a));
  phases.lambda = std::abs(b) > 1e-300 ? std::arg(b) : 0.0;
  phases.phis[0] = std::arg(a) - phases.lambda;
  double err = 0.0;
  for (const Complex& z : circle_grid()) {
    err = std::max(err,
                   std::abs(reconstruct(phases, z) - eval_circle(cheb, z)));
  }
  if (err > kIdentityTol) {
    throw std::runtime_error(
        "completion failure: phase reconstruction beyond 1e-8");
  }
  return phases;
}

Complex reconstruct(const GQSPPhases& phases, Complex z) {
  if (phases.thetas.empty() ||
      phases.thetas.size() != phases.phis.size()) {
    throw std::invalid_argument("phase lists are empty or mismatched");
  }
  std::array<Complex, 4> m =
      rotation(phases.thetas[0], phases.phis[0], phases.lambda);
  for (std::size_t k = 1; k < phases.thetas.size(); ++k) {
    m = {z * m[0], z * m[1], m[2], m[3]};
    m = mul2(rotation(phases.thetas[k], phases.phis[k], 0.0), m);
  }
  return m[0];
}

BlockEncoding gqet(const BlockEncoding& encoding, const GQSPPhases& phases) {
  WalkOperator walk = qubitize(encoding);
  if (phases.thetas.empty() ||
      phases.thetas.size() != phases.phis.size()) {
    throw std::invalid_argument("phase lists are empty or mismatched");
  }
  const std::size_t d = phases.thetas.size() - 1;
  BlockEncoding enc;
  enc.alpha = 1.0;
  enc.epsilon = static_cast<double>(d) * static_cast<double>(d) *
                encoding.epsilon / encoding.alpha;
  enc.is_hermitian = false;
  enc.operand_shape = encoding.operand_shape;
  enc.ancillas = encoding.ancillas;
  enc.ancillas.push_back({"sig", 1});
  const std::size_t base_count = encoding.ancillas.size();
  enc.emit = [walk = std::move(walk), phases, base_count, d](
                 Circuit& circuit, const std::vector<Register>& ops,
                 const std::vector<Register>& ancillas) {
    const std::vector<Register> base(
        ancillas.begin(),
        ancillas.begin() + static_cast<std::ptrdiff_t>(base_count));
    const std::uint32_t sig = ancillas[base_count][0];
    emit_rotation(circuit, sig, phases.thetas[0], phases.phis[0],
                  phases.lambda);
    for (std::size_t k = 1; k <= d; ++k) {
      // The polynomial variable acts as the walk operator on the
      // signal-|0> branch: controlled-W with polarity 0.
      Circuit step = circuit.empty_like();
      walk.emit_walk(step, ops, base);
      for (const Gate& g : step.gates()) {
        circuit.append(g.with_controls({sig}, {0}));
      }
      emit_rotation(circuit, sig, phases.thetas[k], phases.phis[k], 0.0);
    }
  };
  return enc;
}

BlockEncoding poly(const BlockEncoding& encoding, const ChebSeries& series,
                   double margin) {
  auto [scaled, scale] = sup_norm_rescale(series, margin);
  const GQSPPhases phases = find_phases(scaled, margin);
  BlockEncoding out = gqet(encoding, phases);
  out.alpha = scale;
  out.epsilon *= scale;
  return out;
}

BlockEncoding inv(const BlockEncoding& encoding, double eps, double kappa) {
  const InversePlan plan = inverse_series(eps, kappa);
  const GQSPPhases phases = find_phases(plan.series);
  BlockEncoding out = gqet(encoding, phases);
  out.epsilon = eps + out.epsilon / plan.rescale;
  out.alpha = 1.0 / plan.rescale;
  return out;
}

BlockEncoding sim(const BlockEncoding& encoding, double t,
                  std::uint32_t order) {
  const ChebSeries series = jacobi_anger(t, order);
  const double tail = jacobi_anger_tail(t, order);
  BlockEncoding out = poly(encoding, series);
  out.epsilon += tail;
  return out;
}

}  // namespace qbec
