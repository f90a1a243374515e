#include "qcoh/state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/errors.hpp"

using namespace qcoh;

namespace {

void expect_amplitudes(const StateVector& s, const std::vector<amplitude>& ref, double tol = 1e-12) {
  ASSERT_EQ(s.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i;
    EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i;
  }
}

}  // namespace

TEST(StateVector, UniformAmplitudes) {
  const StateVector one = StateVector::uniform(1);
  expect_amplitudes(one, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  expect_amplitudes(StateVector::uniform(2), {0.5, 0.5, 0.5, 0.5});
  // Exact, not approximate, for even n.
  const StateVector four = StateVector::uniform(4);
  for (const auto& a : four.amplitudes()) EXPECT_EQ(a, amplitude(0.25));
}

TEST(StateVector, UniformTenQubitsIsMaximallyCoherent) {
  const CoherencePair c = coherence_of_pure(StateVector::uniform(10));
  EXPECT_NEAR(c.c_r, 10.0, 1e-12);
  EXPECT_NEAR(c.c_l1, 1023.0, 1e-9);
}

TEST(StateVector, CapacityGuard) {
  EXPECT_THROW(StateVector::uniform(0), CapacityError);
  EXPECT_THROW(StateVector::uniform(27), CapacityError);
  EXPECT_THROW(StateVector::uniform(30), CapacityError);
}

TEST(StateVector, LayoutMustCoverQubits) {
  StateVector s = StateVector::uniform(4);
  EXPECT_THROW(s.set_layout(RegisterLayout{3, 2}), LayoutError);
  s.set_layout(RegisterLayout{3, 1});
  EXPECT_EQ(s.layout(), (RegisterLayout{3, 1}));
}

TEST(StateVector, FromAmplitudesValidates) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ValidationError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), ValidationError);
  EXPECT_NO_THROW(StateVector::from_amplitudes({0.6, amplitude(0.0, 0.8)}));
}

TEST(PhaseOracle, FlipsMarkedIndex) {
  StateVector s = StateVector::uniform(2);
  apply_phase_oracle(s, PhaseOracle::from_solutions(2, {3}));
  expect_amplitudes(s, {0.5, 0.5, 0.5, -0.5});
}

TEST(PhaseOracle, EmptySolutionSetIsIdentity) {
  std::mt19937_64 rng(3);
  const auto v = oracle::random_state(8, rng);
  StateVector s = StateVector::from_amplitudes(v);
  apply_phase_oracle(s, PhaseOracle::from_solutions(3, {}));
  expect_amplitudes(s, v, 0.0);
}

TEST(PhaseOracle, KeepsCoherenceOfUniformState) {
  StateVector s = StateVector::uniform(10);
  apply_phase_oracle(s, PhaseOracle::from_solutions(10, {517}));
  const CoherencePair c = coherence_of_pure(s);
  EXPECT_NEAR(c.c_r, 10.0, 1e-12);
  EXPECT_NEAR(c.c_l1, 1023.0, 1e-9);
}

TEST(PhaseOracle, PredicateCountsSolutions) {
  const PhaseOracle o = PhaseOracle::from_predicate(4, [](std::uint64_t x) { return x % 3 == 0; });
  EXPECT_EQ(o.solution_count(), 6u);  // 0,3,6,9,12,15
  EXPECT_TRUE(o.marks(9));
  EXPECT_FALSE(o.marks(10));
}

TEST(PhaseOracle, RejectsBadSolutionSets) {
  EXPECT_THROW(PhaseOracle::from_solutions(2, {4}), ValidationError);
  EXPECT_THROW(PhaseOracle::from_solutions(2, {1, 1}), ValidationError);
}

TEST(Diffusion, UniformIsFixedPoint) {
  StateVector s = StateVector::uniform(5);
  apply_diffusion(s);
  for (const auto& a : s.amplitudes()) EXPECT_NEAR(std::abs(a - amplitude(1.0 / std::sqrt(32.0))), 0.0, 1e-12);
}

TEST(Diffusion, SingleQubitBasisFlip) {
  StateVector s = StateVector::basis(1, 0);
  apply_diffusion(s);
  expect_amplitudes(s, {0.0, 1.0});
}

TEST(Diffusion, OneIterationFindsSolutionForFourItems) {
  StateVector s = StateVector::uniform(2);
  apply_phase_oracle(s, PhaseOracle::from_solutions(2, {3}));
  apply_diffusion(s);
  expect_amplitudes(s, {0.0, 0.0, 0.0, 1.0});
}

TEST(Diffusion, MatchesDenseMatrix) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const auto v = oracle::random_state(std::size_t{1} << n, rng);
    StateVector s = StateVector::from_amplitudes(v);
    apply_diffusion(s);
    expect_amplitudes(s, oracle::matvec(oracle::diffusion_matrix(v.size()), v));
  }
}

TEST(Hadamard, ZeroToUniformAndBack) {
  StateVector s = StateVector::basis(6, 0);
  hadamard_all(s);
  for (const auto& a : s.amplitudes()) EXPECT_NEAR(a.real(), 0.125, 1e-15);
  hadamard_all(s);
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-12);
}

TEST(Hadamard, MatchesDenseTransform) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 7; ++n) {
    const auto v = oracle::random_state(std::size_t{1} << n, rng);
    StateVector s = StateVector::from_amplitudes(v);
    hadamard_all(s);
    expect_amplitudes(s, oracle::hadamard_dense(v));
  }
}

TEST(Hadamard, SignedPatternInvolution) {
  const double r = 1.0 / std::sqrt(8.0);
  const std::vector<amplitude> v = {r, -r, -r, r, r, -r, r, -r};
  StateVector s = StateVector::from_amplitudes(v);
  hadamard_all(s);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  hadamard_all(s);
  expect_amplitudes(s, v);
}

TEST(Hadamard, FirstRegisterOnly) {
  StateVector s = StateVector::registers({2, 2}, 0, 3);
  hadamard_all(s, Register::first);
  // |j>|3> for j = 0..3, index j*4 + 3.
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i]), (i % 4 == 3) ? 0.5 : 0.0, 1e-15) << i;
  }
}

TEST(Hadamard, FirstRegisterNeedsLayout) {
  StateVector s = StateVector::uniform(3);
  EXPECT_THROW(hadamard_all(s, Register::first), LayoutError);
}

TEST(ModExp, MapsSecondRegister) {
  const RegisterLayout layout{3, 4};
  StateVector s = StateVector::registers(layout, 0, 1);
  hadamard_all(s, Register::first);
  apply_modexp(s, 7, 15);
  const double a = 1.0 / std::sqrt(8.0);
  for (std::uint64_t j = 0; j < 8; ++j) {
    const std::uint64_t k = oracle::pow_mod_naive(7, j, 15);
    EXPECT_NEAR(std::abs(s[j * 16 + k]), a, 1e-15) << "j=" << j;
  }
  // j = 2 lands on |4>, j = 0 stays on |1>.
  EXPECT_NEAR(std::abs(s[2 * 16 + 4]), a, 1e-15);
  EXPECT_NEAR(std::abs(s[0 * 16 + 1]), a, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(ModExp, KeepsCoherence) {
  StateVector s = StateVector::registers({8, 4}, 0, 1);
  hadamard_all(s, Register::first);
  const CoherencePair before = coherence_of_pure(s);
  apply_modexp(s, 7, 15);
  const CoherencePair after = coherence_of_pure(s);
  EXPECT_NEAR(before.c_r, 8.0, 1e-12);
  EXPECT_NEAR(after.c_r, before.c_r, 1e-12);
  EXPECT_NEAR(after.c_l1, before.c_l1, 1e-12 * 256);
}

TEST(ModExp, Errors) {
  StateVector no_layout = StateVector::uniform(4);
  EXPECT_THROW(apply_modexp(no_layout, 7, 15), LayoutError);

  StateVector s = StateVector::registers({3, 4}, 0, 1);
  try {
    apply_modexp(s, 6, 15);
    FAIL() << "expected InvalidBaseError";
  } catch (const InvalidBaseError& e) {
    EXPECT_EQ(e.common_factor(), 3u);
  }

  StateVector wrong_second = StateVector::registers({3, 4}, 0, 2);
  EXPECT_THROW(apply_modexp(wrong_second, 7, 15), ValidationError);

  StateVector small = StateVector::registers({3, 3}, 0, 1);
  EXPECT_THROW(apply_modexp(small, 7, 15), LayoutError);
}

TEST(InverseQft, SingleQubitIsHadamard) {
  StateVector s = StateVector::registers({1, 1}, 0, 1);
  inverse_qft(s);
  EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[3].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(InverseQft, UniformCollapsesToZero) {
  StateVector s = StateVector::registers({5, 2}, 0, 2);
  hadamard_all(s, Register::first);
  inverse_qft(s);
  EXPECT_NEAR(std::abs(s[0 * 4 + 2]), 1.0, 1e-12);
}

TEST(InverseQft, PureFourierModeGoesToItsFrequency) {
  std::vector<amplitude> v(8);
  for (int j = 0; j < 8; ++j) v[j] = std::polar(1.0 / std::sqrt(8.0), 2.0 * std::numbers::pi * j * 5 / 8.0);
  StateVector s = StateVector::from_amplitudes(v, RegisterLayout{3, 0});
  inverse_qft(s);
  for (int m = 0; m < 8; ++m) EXPECT_NEAR(std::abs(s[m]), m == 5 ? 1.0 : 0.0, 1e-12) << m;
}

TEST(InverseQft, MatchesNaiveDftPerSector) {
  std::mt19937_64 rng(17);
  const RegisterLayout layout{5, 2};
  const auto v = oracle::random_state(std::size_t{1} << 7, rng);
  StateVector s = StateVector::from_amplitudes(v, layout);
  inverse_qft(s);
  for (std::size_t k = 0; k < 4; ++k) {
    oracle::cvec sector(32);
    for (std::size_t j = 0; j < 32; ++j) sector[j] = v[j * 4 + k];
    const auto ref = oracle::dft(sector, -1.0);
    for (std::size_t j = 0; j < 32; ++j) EXPECT_NEAR(std::abs(s[j * 4 + k] - ref[j]), 0.0, 1e-12);
  }
}

TEST(InverseQft, NeedsLayout) {
  StateVector s = StateVector::uniform(3);
  EXPECT_THROW(inverse_qft(s), LayoutError);
  EXPECT_THROW(qft(s), LayoutError);
}

TEST(Probabilities, BasicDistributions) {
  const auto u = probabilities(StateVector::uniform(2));
  for (double p : u) EXPECT_DOUBLE_EQ(p, 0.25);
  const auto b = probabilities(StateVector::basis(2, 3));
  EXPECT_EQ(b, (std::vector<double>{0, 0, 0, 1}));
}

TEST(Probabilities, FirstRegisterMarginal) {
  StateVector s = StateVector::registers({2, 3}, 0, 1);
  hadamard_all(s, Register::first);
  const auto p = first_register_probabilities(s);
  ASSERT_EQ(p.size(), 4u);
  for (double v : p) EXPECT_NEAR(v, 0.25, 1e-15);
}
