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

// Microbenchmarks for the compilation and simulation hot paths: Pauli
// decomposition, block extraction, statevector gate application, phase
// finding, and inversion-series construction.

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qbec/approx.hpp"
#include "qbec/circuit.hpp"
#include "qbec/encoding.hpp"
#include "qbec/gqsp.hpp"
#include "qbec/pauli.hpp"
#include "qbec/simulator.hpp"
#include "qbec/types.hpp"

namespace {

qbec::CMatrix random_hermitian(std::uint64_t seed, Eigen::Index dim) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  qbec::CMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = qbec::Complex(dist(rng), dist(rng));
    }
  }
  return 0.5 * (m + m.adjoint()).eval();
}

qbec::ChebSeries bounded_series(std::uint64_t seed, std::uint32_t degree) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  qbec::ChebSeries series;
  for (std::uint32_t k = 0; k <= degree; ++k) {
    series.coeffs.emplace_back(dist(rng), dist(rng));
  }
  // Coefficient 1-norm bounds the circle polynomial, so this keeps the
  // series inside the phase-finding margin.
  double norm1 = 0.0;
  for (const qbec::Complex& c : series.coeffs) {
    norm1 += std::abs(c);
  }
  for (qbec::Complex& c : series.coeffs) {
    c *= 0.9 / norm1;
  }
  return series;
}

qbec::Circuit layered_circuit(std::uint32_t num_qubits,
                              std::uint32_t num_layers) {
  qbec::Circuit circuit;
  const qbec::Register& q = circuit.add_register("q", num_qubits);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (std::uint32_t layer = 0; layer < num_layers; ++layer) {
    for (std::uint32_t i = 0; i < num_qubits; ++i) {
      circuit.append(qbec::Gate::ry(q[i], angle(rng)));
    }
    for (std::uint32_t i = 0; i + 1 < num_qubits; ++i) {
      circuit.append(qbec::Gate::cx(q[i], q[i + 1]));
    }
  }
  return circuit;
}

void BM_PauliDecompose(benchmark::State& state) {
  const qbec::CMatrix a =
      random_hermitian(11, static_cast<Eigen::Index>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbec::pauli_decompose(a));
  }
}
BENCHMARK(BM_PauliDecompose)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ExtractBlock(benchmark::State& state) {
  const qbec::BlockEncoding enc = qbec::from_array(
      random_hermitian(12, static_cast<Eigen::Index>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbec::extract_block(enc));
  }
}
BENCHMARK(BM_ExtractBlock)->Arg(2)->Arg(4)->Arg(8);

void BM_SimulatorRun(benchmark::State& state) {
  const auto num_qubits = static_cast<std::uint32_t>(state.range(0));
  const qbec::Circuit circuit = layered_circuit(num_qubits, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbec::run(circuit));
  }
}
BENCHMARK(BM_SimulatorRun)->Arg(8)->Arg(12)->Arg(16);

void BM_FindPhases(benchmark::State& state) {
  const qbec::ChebSeries series =
      bounded_series(13, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbec::find_phases(series));
  }
}
BENCHMARK(BM_FindPhases)->Arg(4)->Arg(12)->Arg(24);

void BM_InverseSeries(benchmark::State& state) {
  const double kappa = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbec::inverse_series(0.01, kappa));
  }
}
BENCHMARK(BM_InverseSeries)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
