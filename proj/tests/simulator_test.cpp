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

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "qbec/encoding.hpp"
#include "qbec/simulator.hpp"
#include "qbec/state_prep.hpp"

namespace qbec {
namespace {

CVector to_eigen(const StateVector& s) {
  CVector v(static_cast<Eigen::Index>(s.amps.size()));
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = s.amps[i];
  }
  return v;
}

TEST(Run, HadamardOnZero) {
  Circuit c;
  c.add_register("q", 1);
  c.append(Gate::h(0));
  const StateVector out = run(c);
  EXPECT_NEAR(out.amps[0].real(), 1.0 / std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(out.amps[1].real(), 1.0 / std::numbers::sqrt2, 1e-12);
}

TEST(Run, CxFlipsTargetWhenControlSet) {
  Circuit c;
  c.add_register("q", 2);
  c.append(Gate::cx(0, 1));
  const StateVector out = run(c, StateVector::basis(2, 0b01));
  EXPECT_NEAR(std::abs(out.amps[0b11]), 1.0, 1e-12);
}

TEST(Run, MatchesDenseOracleOnRandomCircuits) {
  for (std::uint64_t seed = 100; seed < 103; ++seed) {
    const Circuit c = oracle::random_circuit(seed, 5, 60);
    const CVector init = oracle::random_state(seed + 7, 32);
    StateVector s;
    s.num_qubits = 5;
    s.amps.assign(init.data(), init.data() + init.size());
    const StateVector out = run(c, s);
    const CVector expected = oracle::apply_circuit(c, init);
    EXPECT_LT((to_eigen(out) - expected).norm(), 1e-10) << "seed " << seed;
    EXPECT_NEAR(out.norm(), 1.0, 1e-12);
  }
}

TEST(Run, RejectsMeasureMismatchAndBudget) {
  Circuit m;
  m.add_register("q", 1);
  m.append(Gate::measure(0));
  EXPECT_THROW(run(m), std::invalid_argument);

  Circuit c;
  c.add_register("q", 2);
  EXPECT_THROW(run(c, StateVector::zero(3)), std::invalid_argument);

  Circuit wide;
  wide.add_register("q", 23);
  EXPECT_THROW(run(wide), std::runtime_error);
  RunOptions opts;
  opts.max_qubits = 23;
  EXPECT_NO_THROW(run(wide, opts));
}

TEST(PostselectZero, PauliZOnPlusKeepsEverything) {
  const BlockEncoding enc = from_array([] {
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }());
  Circuit prep = prepare({1.0, 1.0});
  const AppliedEncoding applied = apply(enc, prep);
  const StateVector out = run(applied.circuit);
  const PostSelectResult r = postselect_zero(out, applied.ancilla_qubits);
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  ASSERT_TRUE(r.state.has_value());
  EXPECT_NEAR(r.state->amps[0].real(), 1.0 / std::numbers::sqrt2, 1e-10);
  EXPECT_NEAR(r.state->amps[1].real(), -1.0 / std::numbers::sqrt2, 1e-10);
}

TEST(PostselectZero, AnnihilatedStateReportsZeroProbability) {
  const BlockEncoding proj = from_projector(0, 0, 1);
  Circuit prep;
  prep.add_register("psi", 1);
  prep.append(Gate::x(0));
  const AppliedEncoding applied = apply(proj, prep);
  const StateVector out = run(applied.circuit);
  const PostSelectResult r = postselect_zero(out, applied.ancilla_qubits);
  EXPECT_NEAR(r.success_probability, 0.0, 1e-12);
  EXPECT_FALSE(r.state.has_value());
}

TEST(PostselectZero, DropsProjectedQubits) {
  Circuit c;
  c.add_register("q", 3);
  c.append(Gate::h(0));
  c.append(Gate::h(2));
  const StateVector out = run(c);
  const PostSelectResult r = postselect_zero(out, {2});
  EXPECT_NEAR(r.success_probability, 0.5, 1e-12);
  ASSERT_TRUE(r.state.has_value());
  EXPECT_EQ(r.state->num_qubits, 2u);
  EXPECT_NEAR(r.state->norm(), 1.0, 1e-12);
}

TEST(ExtractBlock, PauliZIsExact) {
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const BlockEncoding enc = from_array(z);
  EXPECT_LT(oracle::max_abs_diff(extract_block(enc), z), 1e-12);
}

TEST(ExtractBlock, TwoTermSumHalves) {
  CMatrix a(2, 2);
  a << 1, 1, 1, -1;  // Z + X
  const BlockEncoding enc = from_array(a);
  EXPECT_DOUBLE_EQ(enc.alpha, 2.0);
  EXPECT_LT(oracle::max_abs_diff(enc.alpha * extract_block(enc), a), 1e-12);
}

TEST(ExtractBlock, Spd4RoundTrip) {
  const CMatrix a = fixtures::spd4();
  const BlockEncoding enc = from_array(a);
  EXPECT_LT(oracle::max_abs_diff(enc.alpha * extract_block(enc), a), 1e-9);
}

TEST(ApplyRus, IdentityEncodingSucceedsAlways) {
  const BlockEncoding eye = from_eye(0, 2);
  Circuit prep = prepare({0.5, 0.5, 0.5, 0.5});
  const PostSelectResult r = apply_rus_emulated(eye, prep);
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  ASSERT_TRUE(r.state.has_value());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(r.state->amps[i].real(), 0.5, 1e-10);
  }
}

TEST(ApplyRus, ThrowsOnVanishingSuccess) {
  const BlockEncoding proj = from_projector(0, 0, 1);
  Circuit prep;
  prep.add_register("psi", 1);
  prep.append(Gate::x(0));
  EXPECT_THROW(apply_rus_emulated(proj, prep), std::runtime_error);
}

TEST(ApplyRus, SuccessProbabilityMatchesBlockNorm) {
  const CMatrix a = oracle::random_hermitian(404, 4);
  const BlockEncoding enc = from_array(a);
  const CVector psi = []() -> CVector {
    CVector v(4);
    v << 0.1, 0.5, -0.3, 0.8;
    return v / v.norm();
  }();
  Circuit prep = prepare({0.1, 0.5, -0.3, 0.8});
  const PostSelectResult r = apply_rus_emulated(enc, prep);
  const double expected = (a * psi).squaredNorm() / (enc.alpha * enc.alpha);
  EXPECT_NEAR(r.success_probability, expected, 1e-10);
}

TEST(SampleRus, GeometricMeanWithinTenPercent) {
  const double p = 0.37;
  const std::vector<std::uint32_t> attempts = sample_rus_attempts(p, 10000, 5);
  const double mean =
      std::accumulate(attempts.begin(), attempts.end(), 0.0) /
      static_cast<double>(attempts.size());
  EXPECT_NEAR(mean, 1.0 / p, 0.1 / p);
  // Deterministic under the same seed.
  EXPECT_EQ(sample_rus_attempts(p, 10000, 5), attempts);
}

TEST(HadamardTest, PauliZExpectations) {
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const BlockEncoding enc = from_array(z);
  EXPECT_NEAR(expectation_value(enc, prepare({1.0, 1.0})), 0.0, 1e-12);
  EXPECT_NEAR(expectation_value(enc, prepare({1.0, 0.0})), 1.0, 1e-12);
}

TEST(HadamardTest, QuadraticFormOnSpd4) {
  const CMatrix a = fixtures::spd4();
  const BlockEncoding enc = from_array(a);
  const Circuit prep = prepare(fixtures::rhs4());
  CVector psi(4);
  psi << 0, 1, 1, 1;
  psi /= psi.norm();
  const double expected = (psi.adjoint() * a * psi)(0).real();
  EXPECT_NEAR(expectation_value(enc, prep), expected, 1e-9);
}

TEST(HadamardTest, RealPlusImagRecoverComplexExpectation) {
  for (std::uint64_t seed = 21; seed < 24; ++seed) {
    const CMatrix a = oracle::random_hermitian(seed, 8);
    const BlockEncoding enc = from_array(a);
    const auto amps = oracle::random_reals(seed + 100, 8, -1.0, 1.0);
    const Circuit prep = prepare(amps);
    CVector psi(8);
    for (int i = 0; i < 8; ++i) {
      psi(i) = amps[static_cast<std::size_t>(i)];
    }
    psi /= psi.norm();
    const Complex expected = (psi.adjoint() * a * psi)(0);
    const double re = enc.alpha * hadamard_test(enc, prep, false);
    const double im = enc.alpha * hadamard_test(enc, prep, true);
    EXPECT_NEAR(re, expected.real(), 1e-9) << "seed " << seed;
    EXPECT_NEAR(im, expected.imag(), 1e-9) << "seed " << seed;
  }
}

TEST(HadamardTest, ShotSampledModeIsSeededAndConsistent) {
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const BlockEncoding enc = from_array(z);
  const Circuit prep = prepare({3.0, 1.0});
  const double exact = expectation_value(enc, prep);
  const double sampled = expectation_value(enc, prep, 200000, 9);
  EXPECT_NEAR(sampled, exact, 0.02);
  EXPECT_DOUBLE_EQ(expectation_value(enc, prep, 200000, 9), sampled);
}

}  // namespace
}  // namespace qbec
