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

#include "qbec/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qbec {

namespace {

constexpr double kDropTolerance = 1e-12;

// Single-qubit product a * b = phase * result, phase in {1, i, -1, -i}
// tracked as an exponent of i.
struct PauliProduct {
  int i_power;       // phase = i^i_power
  int result;        // 0 = identity, else PauliOp value
};

PauliProduct multiply_ops(PauliOp a, PauliOp b) {
  if (a == b) {
    return {0, 0};
  }
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // x*y = i z, y*z = i x, z*x = i y; swapping the factors negates.
  const int result = 6 - ia - ib;  // the third operator
  const bool forward = (ia == 1 && ib == 2) || (ia == 2 && ib == 3) ||
                       (ia == 3 && ib == 1);
  return {forward ? 1 : 3, result};
}

}  // namespace

PauliSum::PauliSum(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
  canonicalize();
}

PauliSum PauliSum::identity(double coeff) {
  PauliTerm t;
  t.coeff = coeff;
  return PauliSum({t});
}

PauliSum PauliSum::x(std::uint32_t q, double coeff) {
  PauliTerm t;
  t.coeff = coeff;
  t.ops[q] = PauliOp::x;
  return PauliSum({t});
}

PauliSum PauliSum::y(std::uint32_t q, double coeff) {
  PauliTerm t;
  t.coeff = coeff;
  t.ops[q] = PauliOp::y;
  return PauliSum({t});
}

PauliSum PauliSum::z(std::uint32_t q, double coeff) {
  PauliTerm t;
  t.coeff = coeff;
  t.ops[q] = PauliOp::z;
  return PauliSum({t});
}

std::uint32_t PauliSum::min_qubits() const {
  std::uint32_t n = 0;
  for (const PauliTerm& t : terms_) {
    if (!t.ops.empty()) {
      n = std::max(n, t.ops.rbegin()->first + 1);
    }
  }
  return n;
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const PauliTerm& t : terms_) {
    s += std::abs(t.coeff);
  }
  return s;
}

CMatrix PauliSum::to_dense(std::uint32_t n) const {
  if (n < min_qubits()) {
    throw std::invalid_argument("qubit count too small for Pauli sum");
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const PauliTerm& t : terms_) {
    std::uint64_t flip = 0;
    std::uint64_t ymask = 0;
    std::uint64_t zmask = 0;
    for (const auto& [q, op] : t.ops) {
      if (op == PauliOp::x || op == PauliOp::y) {
        flip |= std::uint64_t{1} << q;
      }
      if (op == PauliOp::y) {
        ymask |= std::uint64_t{1} << q;
      }
      if (op == PauliOp::z) {
        zmask |= std::uint64_t{1} << q;
      }
    }
    const int ny = std::popcount(ymask);
    static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) {
      // String |k> -> phase |k ^ flip>: Y gives i on |0>, -i on |1>,
      // Z gives (-1)^bit.
      const int sign =
          std::popcount(k & (ymask | zmask)) % 2 == 0 ? 1 : -1;
      const Complex phase = i_pow[ny % 4] * static_cast<double>(sign);
      m(static_cast<Eigen::Index>(k ^ flip), static_cast<Eigen::Index>(k)) +=
          t.coeff * phase;
    }
  }
  return m;
}

void PauliSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              return a.ops < b.ops;
            });
  std::vector<PauliTerm> merged;
  for (PauliTerm& t : terms_) {
    if (!merged.empty() && merged.back().ops == t.ops) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  double max_abs = 0.0;
  for (const PauliTerm& t : merged) {
    max_abs = std::max(max_abs, std::abs(t.coeff));
  }
  terms_.clear();
  for (PauliTerm& t : merged) {
    if (std::abs(t.coeff) > kDropTolerance * std::max(1.0, max_abs)) {
      terms_.push_back(std::move(t));
    }
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  for (PauliTerm t : other.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator*=(double factor) {
  for (PauliTerm& t : terms_) {
    t.coeff *= factor;
  }
  canonicalize();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  std::map<std::map<std::uint32_t, PauliOp>, Complex> acc;
  for (const PauliTerm& ta : a.terms_) {
    for (const PauliTerm& tb : b.terms_) {
      int i_power = 0;
      std::map<std::uint32_t, PauliOp> ops = ta.ops;
      for (const auto& [q, op_b] : tb.ops) {
        auto it = ops.find(q);
        if (it == ops.end()) {
          ops[q] = op_b;
          continue;
        }
        PauliProduct p = multiply_ops(it->second, op_b);
        i_power = (i_power + p.i_power) % 4;
        if (p.result == 0) {
          ops.erase(it);
        } else {
          it->second = static_cast<PauliOp>(p.result);
        }
      }
      static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      acc[ops] += ta.coeff * tb.coeff * i_pow[i_power];
    }
  }
  double max_abs = 0.0;
  for (const auto& [ops, c] : acc) {
    max_abs = std::max(max_abs, std::abs(c));
  }
  std::vector<PauliTerm> terms;
  for (const auto& [ops, c] : acc) {
    if (std::abs(c.imag()) > 1e-12 * std::max(1.0, max_abs)) {
      throw std::invalid_argument(
          "product has imaginary weights and is not Hermitian");
    }
    PauliTerm t;
    t.coeff = c.real();
    t.ops = ops;
    terms.push_back(std::move(t));
  }
  return PauliSum(std::move(terms));
}

std::vector<WeightedPauliString> pauli_decompose_complex(const CMatrix& a) {
  const Eigen::Index dim = a.rows();
  if (dim != a.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument(
        "Pauli expansion needs a square matrix with power-of-2 dimension");
  }
  std::uint32_t n = 0;
  while ((Eigen::Index(1) << n) < dim) {
    ++n;
  }
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<WeightedPauliString> strings;
  const std::uint64_t num_strings = std::uint64_t{1} << (2 * n);
  for (std::uint64_t p = 0; p < num_strings; ++p) {
    std::uint64_t flip = 0;
    std::uint64_t ymask = 0;
    std::uint64_t zmask = 0;
    int ny = 0;
    for (std::uint32_t q = 0; q < n; ++q) {
      const int code = static_cast<int>((p >> (2 * q)) & 3);
      if (code == 1 || code == 2) {
        flip |= std::uint64_t{1} << q;
      }
      if (code == 2) {
        ymask |= std::uint64_t{1} << q;
        ++ny;
      }
      if (code == 3) {
        zmask |= std::uint64_t{1} << q;
      }
    }
    // With P|k> = phase_k |k ^ flip>, tr(P A) = sum_k phase_k A(k, k ^ flip).
    Complex tr = 0.0;
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) {
      const int sign =
          std::popcount(k & (ymask | zmask)) % 2 == 0 ? 1 : -1;
      const Complex phase = i_pow[ny % 4] * static_cast<double>(sign);
      tr += phase * a(static_cast<Eigen::Index>(k),
                      static_cast<Eigen::Index>(k ^ flip));
    }
    const Complex c = tr / static_cast<double>(dim);
    if (std::abs(c) <= kDropTolerance) {
      continue;
    }
    WeightedPauliString s;
    s.coeff = c;
    for (std::uint32_t q = 0; q < n; ++q) {
      const int code = static_cast<int>((p >> (2 * q)) & 3);
      if (code != 0) {
        s.ops[q] = static_cast<PauliOp>(code);
      }
    }
    strings.push_back(std::move(s));
  }
  return strings;
}

PauliSum pauli_decompose(const CMatrix& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (a.rows() != a.cols() ||
      (a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("matrix is not Hermitian within 1e-9");
  }
  std::vector<PauliTerm> terms;
  for (WeightedPauliString& s : pauli_decompose_complex(a)) {
    PauliTerm t;
    t.coeff = s.coeff.real();
    t.ops = std::move(s.ops);
    terms.push_back(std::move(t));
  }
  return PauliSum(std::move(terms));
}

}  // namespace qbec
