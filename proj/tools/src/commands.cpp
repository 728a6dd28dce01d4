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

#include "qbec_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qbec/approx.hpp"
#include "qbec/decompose.hpp"
#include "qbec/encoding.hpp"
#include "qbec/gqsp.hpp"
#include "qbec/io.hpp"
#include "qbec/models.hpp"
#include "qbec/simulator.hpp"
#include "qbec/solvers.hpp"
#include "qbec/state_prep.hpp"

namespace qbec::cli {
namespace {

using nlohmann::json;

// Ceiling on simulated qubits: 2^26 amplitudes = 1 GiB of state. Compiling
// is unbounded; only simulation-backed commands enforce this.
constexpr std::uint32_t kMaxCliQubits = 26;

RunOptions options_for(std::uint32_t total_qubits) {
  if (total_qubits > kMaxCliQubits) {
    throw std::invalid_argument(
        "simulation needs " + std::to_string(total_qubits) +
        " qubits, above the CLI cap of " + std::to_string(kMaxCliQubits));
  }
  RunOptions options;
  options.max_qubits = std::max(options.max_qubits, total_qubits);
  return options;
}

json resources_to_json(const ResourceReport& report) {
  json counts = json::object();
  for (const auto& [kind, count] : report.gate_counts) {
    counts[kind] = count;
  }
  return json{{"gate_counts", std::move(counts)},
              {"total_gates", report.total_gates},
              {"depth", report.depth},
              {"qubits", report.qubits}};
}

json amplitude_pairs(const StateVector& state) {
  json out = json::array();
  for (const Complex& a : state.amps) {
    out.push_back(json::array({a.real(), a.imag()}));
  }
  return out;
}

// Estimates amplitude magnitudes from `shots` seeded computational-basis
// samples, mirroring how the reference workflow reads amplitudes off
// sampled outcome frequencies.
json sampled_amplitudes(const StateVector& state, std::uint64_t shots,
                        std::uint64_t seed) {
  std::vector<double> cumulative(state.amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    acc += std::norm(state.amps[i]);
    cumulative[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(state.amps.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * cumulative.back();
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()),
        counts.size() - 1);
    ++counts[idx];
  }
  json out = json::array();
  for (const std::uint64_t c : counts) {
    const double mag =
        std::sqrt(static_cast<double>(c) / static_cast<double>(shots));
    out.push_back(json::array({mag, 0.0}));
  }
  return out;
}

json amplitudes_json(const StateVector& state, std::uint64_t shots,
                     std::uint64_t seed) {
  return shots == 0 ? amplitude_pairs(state)
                    : sampled_amplitudes(state, shots, seed);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Real amplitude list from a complex vector; throws if any imaginary part
// survives (state preparation is real-only by design).
AmplitudeSpec real_amplitudes(const CVector& v, const char* what) {
  AmplitudeSpec amps(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i).imag()) > 1e-12) {
      throw std::invalid_argument(std::string(what) +
                                  " must be real (imaginary entries found)");
    }
    amps[static_cast<std::size_t>(i)] = v(i).real();
  }
  return amps;
}

Circuit identity_prep(std::uint32_t n) {
  Circuit prep;
  prep.add_register("psi", n);
  return prep;
}

}  // namespace

json cmd_verify(const VerifyArgs& args) {
  BlockEncoding enc;
  CMatrix target;
  if (args.diag_k.has_value()) {
    if (args.n == 0) {
      throw std::invalid_argument("--diag-k needs --n (qubit count)");
    }
    enc = from_eye(*args.diag_k, args.n);
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << args.n);
    target = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Eigen::Index col = i + static_cast<Eigen::Index>(*args.diag_k);
      if (col >= 0 && col < dim) {
        target(i, col) = 1.0;
      }
    }
  } else if (!args.matrix.empty()) {
    const json doc = read_json_file(args.matrix);
    if (doc.is_object() && doc.contains("terms")) {
      const PauliSum p = pauli_from_json(doc);
      enc = from_operator(p);
      target = p.to_dense(enc.operand_qubits());
    } else {
      std::uint32_t n = 0;
      target = load_operator_file(args.matrix, n);
      enc = from_array(target);
    }
  } else {
    throw std::invalid_argument("verify needs --matrix or --diag-k");
  }
  const RunOptions options = options_for(enc.total_qubits());
  const CMatrix block = extract_block(enc, options);
  return json{{"schema", 1},
              {"alpha", enc.alpha},
              {"epsilon", enc.epsilon},
              {"ancilla_qubits", enc.ancilla_qubits()},
              {"max_block_error", max_abs_diff(target, enc.alpha * block)}};
}

json cmd_solve(const SolveArgs& args) {
  if (args.method != "qet" && args.method != "cks") {
    throw std::invalid_argument("--method must be qet or cks");
  }
  std::uint32_t n = 0;
  const CMatrix a = load_operator_file(args.matrix, n);
  const CVector b = load_vector_file(args.rhs);
  if (b.size() != a.rows()) {
    throw std::invalid_argument(
        "right-hand side length does not match the matrix dimension");
  }
  double kappa = 0.0;
  if (args.kappa.has_value()) {
    kappa = *args.kappa;
  } else {
    const Eigen::JacobiSVD<CMatrix> svd(a);
    const double smin = svd.singularValues().minCoeff();
    if (smin <= 0.0) {
      throw std::invalid_argument(
          "matrix is singular; pass --kappa explicitly to override");
    }
    kappa = svd.singularValues().maxCoeff() / smin;
  }
  const BlockEncoding enc = from_array(a);
  const InversePlan plan = inverse_series(args.eps, kappa);
  const BlockEncoding solved = args.method == "cks"
                                   ? cks(enc, args.eps, kappa)
                                   : inv(enc, args.eps, kappa);
  Circuit prep = identity_prep(n);
  emit_prepare(prep, prep.reg("psi"), real_amplitudes(b, "right-hand side"));
  const RunOptions options = options_for(solved.total_qubits());
  const PostSelectResult result = apply_rus_emulated(solved, prep, options);
  return json{{"schema", 1},
              {"amplitudes", amplitudes_json(*result.state, args.shots,
                                             args.seed)},
              {"success_probability", result.success_probability},
              {"degree", plan.series.degree()},
              {"resources", resources_to_json(resources(solved))}};
}

json cmd_simulate(const SimulateArgs& args) {
  const PauliSum h = load_pauli_file(args.matrix);
  if (h.empty()) {
    throw std::invalid_argument("Hamiltonian has no terms");
  }
  const BlockEncoding enc = from_operator(h);
  // sim() evolves the normalized block A / alpha, so physical time t maps
  // to the argument t * alpha.
  const double t = args.time * enc.alpha;
  const BlockEncoding evolved = sim(enc, t, args.order);
  const RunOptions options = options_for(evolved.total_qubits());
  const PostSelectResult result =
      apply_rus_emulated(evolved, identity_prep(enc.operand_qubits()),
                         options);
  return json{{"schema", 1},
              {"amplitudes", amplitudes_json(*result.state, args.shots,
                                             args.seed)},
              {"tail_bound", jacobi_anger_tail(t, args.order)},
              {"success_probability", result.success_probability},
              {"resources", resources_to_json(resources(evolved))}};
}

json cmd_resources(const ResourcesArgs& args) {
  if (args.example != "laplace" && args.example != "generic") {
    throw std::invalid_argument("--example must be laplace or generic");
  }
  if (args.n == 0 || args.n > 16) {
    throw std::invalid_argument("--n must be in [1, 16]");
  }
  const CMatrix a = laplace_matrix(std::uint64_t{1} << args.n);
  const ResourceReport generic = resources(from_array(a));
  json out{{"schema", 1}, {"generic", resources_to_json(generic)}};
  if (args.example == "laplace") {
    const ResourceReport custom = resources(laplace_custom_encoding(args.n));
    out["custom"] = resources_to_json(custom);
    out["ratios"] = json{
        {"depth", static_cast<double>(generic.depth) /
                      static_cast<double>(custom.depth)},
        {"cx", static_cast<double>(generic.count("cx")) /
                   static_cast<double>(std::max<std::uint64_t>(
                       1, custom.count("cx")))}};
  }
  return out;
}

json cmd_lanczos(const LanczosArgs& args) {
  if (args.length < 2 || args.length > 12) {
    throw std::invalid_argument("--L must be in [2, 12]");
  }
  if (args.dim == 0 || args.dim > 32) {
    throw std::invalid_argument("--D must be in [1, 32]");
  }
  const PauliSum h = heisenberg_cycle(args.length);
  const Circuit prep = singlet_prep(cycle_matching(args.length), args.length);
  const BlockEncoding enc = from_operator(h);
  const RunOptions options = options_for(enc.total_qubits() + 1);
  const KrylovResult result = lanczos(h, args.dim, prep, 1e-8, options);
  Eigen::SelfAdjointEigenSolver<CMatrix> exact(h.to_dense(args.length));
  return json{{"schema", 1},
              {"energy", result.energy},
              {"exact_energy", exact.eigenvalues().minCoeff()},
              {"retained", result.retained},
              {"S", matrix_to_json(result.overlap.cast<Complex>())},
              {"H_prime", matrix_to_json(result.projected.cast<Complex>())}};
}

}  // namespace qbec::cli
