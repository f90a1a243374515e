#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "qcoh/coherence.hpp"

namespace qcoh::qof {

inline constexpr double default_epsilon = 0.25;

// Order-finding instance. first_qubits defaults to
// 2L + 1 + ceil(log2(2 + 1/(2 eps))) with L = ceil(log2 N).
struct QofConfig {
  std::uint64_t base = 0;
  std::uint64_t modulus = 0;
  double epsilon = default_epsilon;
  int first_qubits = 0;
  int second_qubits = 0;

  static QofConfig with_epsilon(std::uint64_t base, std::uint64_t modulus,
                                double epsilon = default_epsilon);
  static QofConfig with_first_qubits(std::uint64_t base, std::uint64_t modulus, int t);
};

int default_first_qubits(std::uint64_t modulus, double epsilon);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct ContinuedFractionResult {
  std::uint64_t measured_j = 0;
  int t = 0;
  std::vector<std::uint64_t> partial_quotients;
  // Lowest terms, strictly increasing denominators.
  std::vector<Fraction> convergents;
  std::optional<std::uint64_t> candidate_r;
};

struct QofRun {
  // Joint-state coherence after the Hadamard layer, after modular
  // exponentiation, after the inverse QFT.
  std::array<CoherencePair, 3> trace{};
  // Marginal distribution of the first register after the inverse QFT.
  std::vector<double> outcome_distribution;
  StateVector final_state = StateVector::uniform(1);
};

struct OrderRecovery {
  std::optional<std::uint64_t> order;
  int attempts = 0;
  std::vector<ContinuedFractionResult> transcripts;
};

enum class FactorMethod { even, prime_power, gcd, order_finding, failure };

std::string_view to_string(FactorMethod method);

struct FactorAttempt {
  std::uint64_t base = 0;
  std::optional<std::uint64_t> order;
  // Outcome of this base: "gcd", "odd-order", "trivial-root", "no-order",
  // "factor".
  std::string_view outcome;
};

struct FactorResult {
  FactorMethod method = FactorMethod::failure;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  std::vector<FactorAttempt> attempts;
};

// Least r > 0 with x^r = 1 mod N, by repeated multiplication.
std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus);

QofRun run_qof(const QofConfig& config);

ContinuedFractionResult continued_fractions(std::uint64_t j, int t, std::uint64_t modulus);

// Draws from an outcome distribution with a deterministic inverse-CDF walk.
std::uint64_t sample_outcome(const std::vector<double>& distribution, std::mt19937_64& rng);

// Runs the QOF circuit once, then samples up to `samples` outcomes, folding
// candidate denominators with lcm until x^r = 1 mod N. The verified exponent
// is reduced to the true order.
OrderRecovery recover_order(const QofConfig& config, int samples, std::uint64_t seed);
OrderRecovery recover_order(const QofConfig& config, const std::vector<double>& distribution,
                            int samples, std::mt19937_64& rng);

// Classical reduction of factoring to order finding. Throws ValidationError
// for N < 4 or prime N.
FactorResult shor_factor(std::uint64_t modulus, std::uint64_t seed, int attempt_budget,
                         int samples_per_attempt = 10, double epsilon = default_epsilon);

}  // namespace qcoh::qof
