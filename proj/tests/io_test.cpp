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

#include <cstdint>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qbec/io.hpp"
#include "qbec/models.hpp"

namespace qbec {
namespace {

using nlohmann::json;

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "qbec_io_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

void expect_message_prefix(const std::function<void()>& fn,
                           const std::string& prefix) {
  try {
    fn();
    FAIL() << "expected std::invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind(prefix, 0), 0u)
        << "message: " << e.what();
  }
}

TEST(MatrixJson, RoundTripPreservesEntries) {
  const CMatrix m = oracle::random_matrix(500, 4);
  const json j = matrix_to_json(m);
  EXPECT_EQ(j.at("dim").get<int>(), 4);
  EXPECT_EQ(j.at("data").size(), 16u);
  const CMatrix back = matrix_from_json(j);
  EXPECT_LT(oracle::max_abs_diff(back, m), 1e-15);
}

TEST(MatrixJson, RejectsMalformedObjects) {
  EXPECT_THROW(matrix_from_json(json{{"data", json::array()}}),
               std::invalid_argument);
  EXPECT_THROW(matrix_from_json(json{{"dim", 2}, {"data", json::array()}}),
               std::invalid_argument);
  json bad{{"dim", 1}, {"data", json::array({json::array({1.0})})}};
  EXPECT_THROW(matrix_from_json(bad), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(json{{"dim", 0}, {"data", json::array()}}),
               std::invalid_argument);
}

TEST(VectorJson, RoundTripPreservesEntries) {
  const CVector v = oracle::random_state(501, 8);
  const json j = vector_to_json(v);
  EXPECT_EQ(j.at("dim").get<int>(), 8);
  const CVector back = vector_from_json(j);
  EXPECT_LT((back - v).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(VectorJson, RejectsLengthMismatch) {
  json j{{"dim", 3},
         {"data", json::array({json::array({1.0, 0.0}),
                               json::array({0.0, 0.0})})}};
  EXPECT_THROW(vector_from_json(j), std::invalid_argument);
}

TEST(StatevectorJson, UsesVectorLayout) {
  StateVector s;
  s.num_qubits = 1;
  s.amps = {Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const json j = statevector_to_json(s);
  EXPECT_EQ(j.at("dim").get<int>(), 2);
  EXPECT_DOUBLE_EQ(j.at("data")[1][1].get<double>(), 0.8);
}

TEST(PauliJson, RoundTripPreservesOperator) {
  const PauliSum h = ising_chain(3, 0.7, 0.3);
  const json j = pauli_to_json(h);
  ASSERT_TRUE(j.contains("terms"));
  const PauliSum back = pauli_from_json(j);
  EXPECT_LT(oracle::max_abs_diff(back.to_dense(3), h.to_dense(3)), 1e-12);
  EXPECT_EQ(back.terms().size(), h.terms().size());
}

TEST(PauliJson, EncodesQubitKeysAsStrings) {
  const json j = pauli_to_json(PauliSum::z(2, -0.5));
  EXPECT_DOUBLE_EQ(j.at("terms")[0].at("coeff").get<double>(), -0.5);
  EXPECT_EQ(j.at("terms")[0].at("paulis").at("2").get<std::string>(), "Z");
}

TEST(PauliJson, RejectsMalformedTerms) {
  EXPECT_THROW(pauli_from_json(json{{"coeff", 1.0}}), std::invalid_argument);
  json bad_letter{
      {"terms",
       json::array({json{{"coeff", 1.0}, {"paulis", json{{"0", "Q"}}}}})}};
  EXPECT_THROW(pauli_from_json(bad_letter), std::invalid_argument);
  json bad_key{
      {"terms",
       json::array({json{{"coeff", 1.0}, {"paulis", json{{"q0", "X"}}}}})}};
  EXPECT_THROW(pauli_from_json(bad_key), std::invalid_argument);
  json bad_coeff{
      {"terms",
       json::array({json{{"coeff", "one"}, {"paulis", json::object()}}})}};
  EXPECT_THROW(pauli_from_json(bad_coeff), std::invalid_argument);
}

TEST(SeriesJson, RoundTripKeepsBasisAndComplexCoefficients) {
  ChebSeries s;
  s.basis = ChebSeries::Basis::monomial;
  s.coeffs = {Complex(0.5, -0.25), Complex(0.0, 1.0)};
  const ChebSeries back = series_from_json(series_to_json(s));
  EXPECT_EQ(back.basis, ChebSeries::Basis::monomial);
  ASSERT_EQ(back.coeffs.size(), 2u);
  EXPECT_EQ(back.coeffs[0], s.coeffs[0]);
  EXPECT_EQ(back.coeffs[1], s.coeffs[1]);
  EXPECT_EQ(series_to_json(s).at("basis").get<std::string>(), "monomial");
}

TEST(SeriesJson, RejectsUnknownBasis) {
  json j{{"basis", "legendre"}, {"coeffs", json::array()}};
  EXPECT_THROW(series_from_json(j), std::invalid_argument);
  EXPECT_THROW(series_from_json(json{{"coeffs", json::array()}}),
               std::invalid_argument);
}

TEST(PhasesJson, RoundTripAndValidation) {
  GQSPPhases p;
  p.thetas = {0.1, 0.2, 0.3};
  p.phis = {-0.4, 0.5, 0.0};
  p.lambda = 1.25;
  const GQSPPhases back = phases_from_json(phases_to_json(p));
  EXPECT_EQ(back.thetas, p.thetas);
  EXPECT_EQ(back.phis, p.phis);
  EXPECT_DOUBLE_EQ(back.lambda, p.lambda);
  json mismatch{{"thetas", json::array({0.1})},
                {"phis", json::array({0.1, 0.2})},
                {"lambda", 0.0}};
  EXPECT_THROW(phases_from_json(mismatch), std::invalid_argument);
  json empty{{"thetas", json::array()},
             {"phis", json::array()},
             {"lambda", 0.0}};
  EXPECT_THROW(phases_from_json(empty), std::invalid_argument);
}

TEST(CircuitJson, RoundTripPreservesRegistersAndGates) {
  Circuit c;
  c.add_register("sys", 2);
  c.add_register("anc", 1, RegisterRole::ancilla);
  c.append(Gate::h(0));
  c.append(Gate::rx(1, 0.3));
  c.append(Gate::x(2).with_controls({0, 1}, {1, 0}));
  c.append(Gate::global_phase(1.1));
  const json j = circuit_to_json(c);
  EXPECT_EQ(j.at("registers")[1].at("role").get<std::string>(), "ancilla");
  EXPECT_EQ(j.at("registers")[0].at("role").get<std::string>(), "system");
  const Circuit back = circuit_from_json(j);
  ASSERT_EQ(back.num_qubits(), c.num_qubits());
  ASSERT_EQ(back.gates().size(), c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    EXPECT_TRUE(back.gates()[i] == c.gates()[i]) << "gate " << i;
  }
  EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(back),
                                 oracle::circuit_matrix(c)),
            1e-15);
}

TEST(CircuitJson, WrapsGateValidationErrors) {
  json j{{"registers",
          json::array({json{{"name", "q"}, {"size", 1}, {"role", "system"}}})},
         {"gates",
          json::array({json{{"kind", "x"},
                            {"targets", json::array({5})},
                            {"controls", json::array()},
                            {"polarity", json::array()}}})}};
  expect_message_prefix([&] { circuit_from_json(j); }, "invalid gate: ");
}

TEST(CircuitJson, RejectsBadRolesKindsAndPolarity) {
  json bad_role{{"registers",
                 json::array({json{{"name", "q"},
                                   {"size", 1},
                                   {"role", "scratch"}}})},
                {"gates", json::array()}};
  EXPECT_THROW(circuit_from_json(bad_role), std::invalid_argument);
  json bad_kind{{"registers",
                 json::array({json{{"name", "q"},
                                   {"size", 1},
                                   {"role", "system"}}})},
                {"gates", json::array({json{{"kind", "swap"},
                                            {"targets", json::array({0})},
                                            {"controls", json::array()},
                                            {"polarity", json::array()}}})}};
  EXPECT_THROW(circuit_from_json(bad_kind), std::invalid_argument);
  json bad_polarity{
      {"registers",
       json::array(
           {json{{"name", "q"}, {"size", 2}, {"role", "system"}}})},
      {"gates", json::array({json{{"kind", "cx"},
                                  {"targets", json::array({0})},
                                  {"controls", json::array({1})},
                                  {"polarity", json::array({2})}}})}};
  EXPECT_THROW(circuit_from_json(bad_polarity), std::invalid_argument);
}

TEST(LoadOperatorFile, ParsesDenseMatrixFiles) {
  const json j = matrix_to_json(oracle::random_hermitian(502, 4));
  const std::string path = write_temp("matrix.json", j.dump());
  std::uint32_t n = 0;
  const CMatrix m = load_operator_file(path, n);
  EXPECT_EQ(n, 2u);
  EXPECT_LT(oracle::max_abs_diff(m, matrix_from_json(j)), 1e-15);
}

TEST(LoadOperatorFile, ParsesPauliFilesToDense) {
  const PauliSum h = ising_chain(2, 0.4, 0.2);
  const std::string path =
      write_temp("pauli.json", pauli_to_json(h).dump());
  std::uint32_t n = 0;
  const CMatrix m = load_operator_file(path, n);
  EXPECT_EQ(n, 2u);
  EXPECT_LT(oracle::max_abs_diff(m, h.to_dense(2)), 1e-12);
}

TEST(LoadOperatorFile, RejectsBadDimensionsAndEmptySums) {
  json three{{"dim", 3}, {"data", json::array()}};
  for (int i = 0; i < 9; ++i) {
    three["data"].push_back(json::array({1.0, 0.0}));
  }
  const std::string path3 = write_temp("three.json", three.dump());
  std::uint32_t n = 0;
  EXPECT_THROW(load_operator_file(path3, n), std::invalid_argument);
  const std::string empty_terms =
      write_temp("empty_terms.json", R"({"terms": []})");
  EXPECT_THROW(load_operator_file(empty_terms, n), std::invalid_argument);
}

TEST(LoadPauliFile, DecomposesDenseHermitianInput) {
  const PauliSum h = ising_chain(2, 0.4, 0.2);
  const std::string dense_path =
      write_temp("dense_pauli.json", matrix_to_json(h.to_dense(2)).dump());
  const PauliSum back = load_pauli_file(dense_path);
  EXPECT_LT(oracle::max_abs_diff(back.to_dense(2), h.to_dense(2)), 1e-12);
  const std::string term_path =
      write_temp("term_pauli.json", pauli_to_json(h).dump());
  EXPECT_LT(oracle::max_abs_diff(load_pauli_file(term_path).to_dense(2),
                                 h.to_dense(2)),
            1e-12);
}

TEST(LoadVectorFile, ParsesVectorObjects) {
  const CVector v = oracle::random_state(503, 4);
  const std::string path =
      write_temp("vector.json", vector_to_json(v).dump());
  EXPECT_LT((load_vector_file(path) - v).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ReadJsonFile, ReportsMissingAndMalformedFiles) {
  expect_message_prefix(
      [] { read_json_file("/nonexistent/qbec_missing.json"); },
      "cannot open file: ");
  const std::string path = write_temp("broken.json", "{not json");
  expect_message_prefix([&] { read_json_file(path); }, "invalid JSON in ");
}

}  // namespace
}  // namespace qbec
