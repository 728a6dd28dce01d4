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
#include <optional>
#include <string>

#include "json.hpp"

namespace qbec::cli {

// Each command returns the stdout report (always carrying "schema": 1) and
// throws std::invalid_argument or std::runtime_error with a human-readable
// message on failure. The binary turns exceptions into one JSON error
// object on stderr and a nonzero exit code.

struct VerifyArgs {
  std::string matrix;             // matrix or Pauli-sum JSON file
  std::optional<std::int64_t> diag_k;  // from_eye constructor instead
  std::uint32_t n = 0;            // qubit count for --diag-k
};

struct SolveArgs {
  std::string matrix;
  std::string rhs;
  double eps = 0.01;
  std::optional<double> kappa;  // default: exact condition number
  std::string method = "qet";   // "qet" or "cks"
  std::uint64_t shots = 0;      // 0 = exact amplitudes
  std::uint64_t seed = 0;
};

struct SimulateArgs {
  std::string matrix;  // Hamiltonian file (Pauli sum or dense Hermitian)
  double time = 0.0;   // physical evolution time
  std::uint32_t order = 8;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct ResourcesArgs {
  std::string example = "laplace";  // "laplace" (side by side) or "generic"
  std::uint32_t n = 8;
};

struct LanczosArgs {
  std::uint32_t length = 6;
  std::uint32_t dim = 6;
  std::uint64_t seed = 0;  // reserved for sampled-moment modes
};

nlohmann::json cmd_verify(const VerifyArgs& args);
nlohmann::json cmd_solve(const SolveArgs& args);
nlohmann::json cmd_simulate(const SimulateArgs& args);
nlohmann::json cmd_resources(const ResourcesArgs& args);
nlohmann::json cmd_lanczos(const LanczosArgs& args);

}  // namespace qbec::cli
