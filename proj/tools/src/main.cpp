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

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qbec_cli/commands.hpp"

namespace {

using nlohmann::json;

void print_report(const json& report, bool pretty) {
  if (pretty) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << report.dump() << "\n";
  }
}

int fail(const std::string& message) {
  std::cerr << json{{"schema", 1}, {"error", message}}.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbec: block-encoding compiler and solver"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");

  qbec::cli::VerifyArgs verify_args;
  std::int64_t diag_k = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a constructed encoding against its target matrix");
  verify->add_option("--matrix", verify_args.matrix,
                     "Matrix or Pauli-sum JSON file");
  CLI::Option* diag_opt = verify->add_option(
      "--diag-k", diag_k, "Verify the shifted-diagonal constructor instead");
  verify->add_option("--n", verify_args.n, "Qubit count for --diag-k");

  qbec::cli::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Apply an approximate inverse encoding to a right-hand side");
  solve->add_option("--matrix", solve_args.matrix, "System matrix JSON file")
      ->required();
  solve->add_option("--rhs", solve_args.rhs, "Right-hand-side JSON file")
      ->required();
  solve->add_option("--eps", solve_args.eps, "Target accuracy (default 0.01)");
  double kappa = 0.0;
  CLI::Option* kappa_opt = solve->add_option(
      "--kappa", kappa, "Condition bound (default: exact condition number)");
  solve->add_option("--method", solve_args.method, "qet or cks (default qet)");
  solve->add_option("--shots", solve_args.shots,
                    "Sample amplitudes from this many shots (0 = exact)");
  solve->add_option("--seed", solve_args.seed, "Sampling seed");

  qbec::cli::SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Hamiltonian evolution via the Jacobi-Anger expansion");
  simulate
      ->add_option("--matrix", simulate_args.matrix,
                   "Hamiltonian JSON file (Pauli sum or dense Hermitian)")
      ->required();
  simulate->add_option("--time", simulate_args.time, "Physical evolution time")
      ->required();
  simulate->add_option("--order", simulate_args.order,
                       "Truncation order (default 8)");
  simulate->add_option("--shots", simulate_args.shots,
                       "Sample amplitudes from this many shots (0 = exact)");
  simulate->add_option("--seed", simulate_args.seed, "Sampling seed");

  qbec::cli::ResourcesArgs resources_args;
  CLI::App* resources = app.add_subcommand(
      "resources", "Gate counts for the cyclic Laplace encodings");
  resources->add_option(
      "--example", resources_args.example,
      "laplace (generic vs custom side by side) or generic (default laplace)");
  resources->add_option("--n", resources_args.n,
                        "Operand qubits (default 8, dimension 2^n)");

  qbec::cli::LanczosArgs lanczos_args;
  CLI::App* lanczos = app.add_subcommand(
      "lanczos", "Krylov ground-state energy of the Heisenberg cycle");
  lanczos->add_option("--L", lanczos_args.length,
                      "Cycle length (default 6)");
  lanczos->add_option("--D", lanczos_args.dim,
                      "Krylov dimension (default 6)");
  lanczos->add_option("--seed", lanczos_args.seed,
                      "Reserved for sampled-moment modes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  try {
    json report;
    if (verify->parsed()) {
      if (diag_opt->count() > 0) {
        verify_args.diag_k = diag_k;
      }
      report = qbec::cli::cmd_verify(verify_args);
    } else if (solve->parsed()) {
      if (kappa_opt->count() > 0) {
        solve_args.kappa = kappa;
      }
      report = qbec::cli::cmd_solve(solve_args);
    } else if (simulate->parsed()) {
      report = qbec::cli::cmd_simulate(simulate_args);
    } else if (resources->parsed()) {
      report = qbec::cli::cmd_resources(resources_args);
    } else {
      report = qbec::cli::cmd_lanczos(lanczos_args);
    }
    print_report(report, pretty);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return 0;
}
