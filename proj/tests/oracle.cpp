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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oracle {

using qbec::CMatrix;
using qbec::Complex;
using qbec::CVector;

namespace {

constexpr Complex kI{0.0, 1.0};

bool controls_active(const qbec::Gate& g, std::uint64_t index) {
  for (std::size_t c = 0; c < g.controls.size(); ++c) {
    const int bit = static_cast<int>((index >> g.controls[c]) & 1u);
    const int want = c < g.polarity.size() ? g.polarity[c] : 1;
    if (bit != want) {
      return false;
    }
  }
  return true;
}

// Writes the image of basis state `j` under the gate into `out` given the
// input amplitude `amp`. This is a direct transcription of each gate's
// textbook matrix, written without reference to the library's simulator.
void scatter(const qbec::Gate& g, std::uint64_t j, Complex amp, CVector& out) {
  using qbec::GateKind;
  if (!controls_active(g, j)) {
    out(static_cast<Eigen::Index>(j)) += amp;
    return;
  }
  if (g.kind == GateKind::global_phase) {
    out(static_cast<Eigen::Index>(j)) += std::exp(kI * g.angle) * amp;
    return;
  }
  if (g.kind == GateKind::measure) {
    throw std::invalid_argument("oracle cannot apply measure gates");
  }
  const std::uint64_t mask = std::uint64_t{1} << g.targets.at(0);
  const bool bit = (j & mask) != 0;
  const std::uint64_t flipped = j ^ mask;
  const auto self = static_cast<Eigen::Index>(j);
  const auto other = static_cast<Eigen::Index>(flipped);
  switch (g.kind) {
    case GateKind::x:
    case GateKind::cx:
    case GateKind::mcx:
      out(other) += amp;
      break;
    case GateKind::y:
      out(other) += (bit ? -kI : kI) * amp;
      break;
    case GateKind::z:
      out(self) += (bit ? -1.0 : 1.0) * amp;
      break;
    case GateKind::h:
      out(static_cast<Eigen::Index>(j & ~mask)) += amp / std::numbers::sqrt2;
      out(static_cast<Eigen::Index>(j | mask)) +=
          (bit ? -1.0 : 1.0) * amp / std::numbers::sqrt2;
      break;
    case GateKind::s:
      out(self) += (bit ? kI : Complex{1.0, 0.0}) * amp;
      break;
    case GateKind::sdg:
      out(self) += (bit ? -kI : Complex{1.0, 0.0}) * amp;
      break;
    case GateKind::t:
      out(self) += (bit ? std::exp(kI * (std::numbers::pi / 4)) : 1.0) * amp;
      break;
    case GateKind::tdg:
      out(self) += (bit ? std::exp(-kI * (std::numbers::pi / 4)) : 1.0) * amp;
      break;
    case GateKind::rx:
      out(self) += std::cos(g.angle / 2) * amp;
      out(other) += -kI * std::sin(g.angle / 2) * amp;
      break;
    case GateKind::ry:
      out(self) += std::cos(g.angle / 2) * amp;
      out(other) += (bit ? -1.0 : 1.0) * std::sin(g.angle / 2) * amp;
      break;
    case GateKind::rz:
      out(self) += std::exp((bit ? kI : -kI) * (g.angle / 2)) * amp;
      break;
    case GateKind::phase:
      out(self) += (bit ? std::exp(kI * g.angle) : 1.0) * amp;
      break;
    default:
      throw std::invalid_argument("oracle: unhandled gate kind");
  }
}

CVector apply_gate(const qbec::Gate& g, const CVector& v) {
  CVector out = CVector::Zero(v.size());
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(v.size()); ++j) {
    const Complex amp = v(static_cast<Eigen::Index>(j));
    if (amp != 0.0) {
      scatter(g, j, amp, out);
    }
  }
  return out;
}

CMatrix pauli_op_matrix(qbec::PauliOp op) {
  CMatrix m(2, 2);
  switch (op) {
    case qbec::PauliOp::x:
      m << 0, 1, 1, 0;
      break;
    case qbec::PauliOp::y:
      m << 0, -kI, kI, 0;
      break;
    case qbec::PauliOp::z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

CMatrix gate_matrix(const qbec::Gate& gate, std::uint32_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
  CMatrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    CVector col = CVector::Zero(dim);
    col(j) = 1.0;
    u.col(j) = apply_gate(gate, col);
  }
  return u;
}

CVector apply_circuit(const qbec::Circuit& circuit, CVector state) {
  const auto dim =
      static_cast<Eigen::Index>(std::uint64_t{1} << circuit.num_qubits());
  if (state.size() != dim) {
    throw std::invalid_argument("oracle: state dimension mismatch");
  }
  for (const qbec::Gate& g : circuit.gates()) {
    state = apply_gate(g, state);
  }
  return state;
}

CMatrix circuit_matrix(const qbec::Circuit& circuit) {
  const auto dim =
      static_cast<Eigen::Index>(std::uint64_t{1} << circuit.num_qubits());
  CMatrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    CVector col = CVector::Zero(dim);
    col(j) = 1.0;
    u.col(j) = apply_circuit(circuit, col);
  }
  return u;
}

CMatrix block_of(const qbec::BlockEncoding& encoding) {
  const qbec::AppliedEncoding applied = qbec::apply(encoding);
  const auto dim = static_cast<Eigen::Index>(
      std::uint64_t{1} << applied.circuit.num_qubits());
  const auto block_dim =
      static_cast<Eigen::Index>(std::uint64_t{1} << encoding.operand_qubits());
  CMatrix block(block_dim, block_dim);
  for (Eigen::Index j = 0; j < block_dim; ++j) {
    CVector col = CVector::Zero(dim);
    col(j) = 1.0;
    col = apply_circuit(applied.circuit, col);
    block.col(j) = col.head(block_dim);
  }
  return block;
}

CMatrix pauli_matrix(const qbec::PauliSum& sum, std::uint32_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
  CMatrix total = CMatrix::Zero(dim, dim);
  for (const qbec::PauliTerm& term : sum.terms()) {
    CMatrix factor = CMatrix::Identity(1, 1);
    for (std::uint32_t q = 0; q < num_qubits; ++q) {
      const auto it = term.ops.find(q);
      const CMatrix single = it == term.ops.end()
                                 ? CMatrix::Identity(2, 2).eval()
                                 : pauli_op_matrix(it->second);
      // Qubit q occupies bit q, so later qubits enter as the left factor.
      CMatrix grown(factor.rows() * 2, factor.cols() * 2);
      grown.topLeftCorner(factor.rows(), factor.cols()) =
          single(0, 0) * factor;
      grown.topRightCorner(factor.rows(), factor.cols()) =
          single(0, 1) * factor;
      grown.bottomLeftCorner(factor.rows(), factor.cols()) =
          single(1, 0) * factor;
      grown.bottomRightCorner(factor.rows(), factor.cols()) =
          single(1, 1) * factor;
      factor = std::move(grown);
    }
    total += term.coeff * factor;
  }
  return total;
}

CMatrix cheb_matrix(const CMatrix& x, std::uint32_t k) {
  const CMatrix eye = CMatrix::Identity(x.rows(), x.cols());
  if (k == 0) {
    return eye;
  }
  CMatrix prev = eye;
  CMatrix cur = x;
  for (std::uint32_t i = 1; i < k; ++i) {
    CMatrix next = 2.0 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CMatrix series_matrix(const qbec::ChebSeries& series, const CMatrix& x) {
  CMatrix total = CMatrix::Zero(x.rows(), x.cols());
  CMatrix power = CMatrix::Identity(x.rows(), x.cols());
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    if (series.basis == qbec::ChebSeries::Basis::chebyshev) {
      total += series.coeffs[k] * cheb_matrix(x, static_cast<std::uint32_t>(k));
    } else {
      total += series.coeffs[k] * power;
      power = (power * x).eval();
    }
  }
  return total;
}

Complex series_value(const qbec::ChebSeries& series, double x) {
  Complex total = 0.0;
  double power = 1.0;
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    if (series.basis == qbec::ChebSeries::Basis::chebyshev) {
      const double clamped = std::clamp(x, -1.0, 1.0);
      total += series.coeffs[k] *
               std::cos(static_cast<double>(k) * std::acos(clamped));
    } else {
      total += series.coeffs[k] * power;
      power *= x;
    }
  }
  return total;
}

CMatrix expm_i(const CMatrix& h, double t) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(-kI * t * es.eigenvalues()(i));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

double bessel_series(double t, std::uint32_t k) {
  const long double half = static_cast<long double>(t) / 2.0L;
  long double term = 1.0L;
  for (std::uint32_t i = 1; i <= k; ++i) {
    term *= half / static_cast<long double>(i);
  }
  long double sum = 0.0L;
  for (std::uint32_t m = 0; m < 200; ++m) {
    sum += term;
    term *= -half * half /
            (static_cast<long double>(m + 1) *
             static_cast<long double>(m + 1 + k));
    if (std::abs(term) < 1e-25L && m > 4) {
      break;
    }
  }
  return static_cast<double>(sum);
}

CMatrix random_hermitian(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m(r, c) = Complex{dist(rng), dist(rng)};
    }
  }
  return 0.5 * (m + m.adjoint().eval());
}

CMatrix random_matrix(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m(r, c) = Complex{dist(rng), dist(rng)};
    }
  }
  return m;
}

CVector random_state(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  CVector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex{dist(rng), dist(rng)};
  }
  return v / v.norm();
}

std::vector<double> random_reals(std::uint64_t seed, std::size_t count,
                                 double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (double& x : out) {
    x = dist(rng);
  }
  return out;
}

qbec::ChebSeries random_bounded_series(std::uint64_t seed,
                                       std::uint32_t degree, double bound) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  qbec::ChebSeries s;
  s.basis = qbec::ChebSeries::Basis::chebyshev;
  s.coeffs.resize(degree + 1);
  for (Complex& c : s.coeffs) {
    c = Complex{dist(rng), dist(rng)};
  }
  // Leading coefficient kept solidly nonzero so the stated degree is real.
  if (std::abs(s.coeffs.back()) < 0.3) {
    s.coeffs.back() += Complex{0.5, 0.5};
  }
  double sup = 0.0;
  for (int g = 0; g < 1024; ++g) {
    const double theta = 2.0 * std::numbers::pi * g / 1024.0;
    const Complex z = std::exp(kI * theta);
    Complex val = 0.0;
    Complex zk = 1.0;
    for (const Complex& c : s.coeffs) {
      val += c * zk;
      zk *= z;
    }
    sup = std::max(sup, std::abs(val));
  }
  for (Complex& c : s.coeffs) {
    c *= bound / sup;
  }
  return s;
}

qbec::Circuit random_circuit(std::uint64_t seed, std::uint32_t num_qubits,
                             std::uint32_t num_gates) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_qubit(0, num_qubits - 1);
  std::uniform_int_distribution<int> pick_kind(0, 12);
  std::uniform_real_distribution<double> pick_angle(-3.0, 3.0);
  qbec::Circuit c;
  c.add_register("q", num_qubits);
  for (std::uint32_t i = 0; i < num_gates; ++i) {
    const std::uint32_t q = pick_qubit(rng);
    qbec::Gate g = qbec::Gate::x(q);
    switch (pick_kind(rng)) {
      case 0:
        g = qbec::Gate::x(q);
        break;
      case 1:
        g = qbec::Gate::y(q);
        break;
      case 2:
        g = qbec::Gate::z(q);
        break;
      case 3:
        g = qbec::Gate::h(q);
        break;
      case 4:
        g = qbec::Gate::s(q);
        break;
      case 5:
        g = qbec::Gate::t(q);
        break;
      case 6:
        g = qbec::Gate::rx(q, pick_angle(rng));
        break;
      case 7:
        g = qbec::Gate::ry(q, pick_angle(rng));
        break;
      case 8:
        g = qbec::Gate::rz(q, pick_angle(rng));
        break;
      case 9:
        g = qbec::Gate::phase(q, pick_angle(rng));
        break;
      case 10:
        g = qbec::Gate::global_phase(pick_angle(rng));
        break;
      default: {
        if (num_qubits < 2) {
          g = qbec::Gate::h(q);
          break;
        }
        std::uint32_t other = pick_qubit(rng);
        while (other == q) {
          other = pick_qubit(rng);
        }
        if (pick_kind(rng) < 7 || num_qubits < 3) {
          g = qbec::Gate::cx(other, q);
        } else {
          std::uint32_t third = pick_qubit(rng);
          while (third == q || third == other) {
            third = pick_qubit(rng);
          }
          g = qbec::Gate::mcx({other, third}, q,
                              {static_cast<std::uint8_t>(rng() & 1),
                               static_cast<std::uint8_t>(rng() & 1)});
        }
        break;
      }
    }
    c.append(std::move(g));
  }
  return c;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double phase_distance(const CVector& u, const CVector& v) {
  const Complex inner = v.dot(u);
  const Complex phase =
      std::abs(inner) > 1e-15 ? inner / std::abs(inner) : Complex{1.0, 0.0};
  return (u - phase * v).norm();
}

}  // namespace oracle
