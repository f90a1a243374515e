#include "qcoh/order_finding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/number_theory.hpp"

namespace qcoh::qof {

namespace {

void check_base(std::uint64_t base, std::uint64_t modulus) {
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  if (const std::uint64_t g = gcd(base, modulus); g != 1) {
    throw InvalidBaseError("gcd(" + std::to_string(base) + ", " + std::to_string(modulus) +
                               ") = " + std::to_string(g) + "; " + std::to_string(g) +
                               " is a factor of " + std::to_string(modulus),
                           g);
  }
}

QofConfig make_config(std::uint64_t base, std::uint64_t modulus, double epsilon, int t) {
  if (modulus < 3) throw ValidationError("modulus must be at least 3");
  if (base <= 1 || base >= modulus) {
    throw ValidationError("base must satisfy 1 < x < N");
  }
  check_base(base, modulus);
  if (t < 1) throw ValidationError("first register needs at least one qubit");
  QofConfig c;
  c.base = base;
  c.modulus = modulus;
  c.epsilon = epsilon;
  c.first_qubits = t;
  c.second_qubits = ceil_log2(modulus);
  return c;
}

// Smallest divisor of `exponent` that still sends base to 1.
std::uint64_t reduce_to_order(std::uint64_t exponent, std::uint64_t base, std::uint64_t modulus) {
  std::uint64_t rest = exponent;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (exponent % p == 0 && pow_mod(base, exponent / p, modulus) == 1) exponent /= p;
  }
  return exponent;
}

std::pair<std::uint64_t, std::uint64_t> ordered(std::uint64_t factor, std::uint64_t n) {
  const std::uint64_t other = n / factor;
  return {std::min(factor, other), std::max(factor, other)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(FactorMethod method) {
  switch (method) {
    case FactorMethod::even: return "even";
    case FactorMethod::prime_power: return "prime_power";
    case FactorMethod::gcd: return "gcd";
    case FactorMethod::order_finding: return "order_finding";
    case FactorMethod::failure: return "failure";
  }
  return "unknown";
}

int default_first_qubits(std::uint64_t modulus, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("epsilon must lie in (0, 1)");
  }
  const int l = ceil_log2(modulus);
  const double extra = std::ceil(std::log2(2.0 + 1.0 / (2.0 * epsilon)));
  return 2 * l + 1 + static_cast<int>(extra);
}

QofConfig QofConfig::with_epsilon(std::uint64_t base, std::uint64_t modulus, double epsilon) {
  const int t = default_first_qubits(modulus, epsilon);
  return make_config(base, modulus, epsilon, t);
}

QofConfig QofConfig::with_first_qubits(std::uint64_t base, std::uint64_t modulus, int t) {
  return make_config(base, modulus, default_epsilon, t);
}

std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus) {
  check_base(base, modulus);
  const std::uint64_t x = base % modulus;
  std::uint64_t value = x;
  std::uint64_t r = 1;
  while (value != 1 % modulus) {
    value = mul_mod(value, x, modulus);
    ++r;
  }
  return r;
}

QofRun run_qof(const QofConfig& config) {
  const RegisterLayout layout{config.first_qubits, config.second_qubits};
  if (layout.first + layout.second > max_qubits) {
    throw CapacityError("order finding needs " + std::to_string(layout.first + layout.second) +
                        " qubits; limit is " + std::to_string(max_qubits));
  }
  check_base(config.base, config.modulus);

  QofRun run;
  StateVector state = StateVector::registers(layout, 0, 1);
  hadamard_all(state, Register::first);
  run.trace[0] = coherence_of_pure(state);
  apply_modexp(state, config.base, config.modulus);
  run.trace[1] = coherence_of_pure(state);
  inverse_qft(state);
  run.trace[2] = coherence_of_pure(state);
  run.outcome_distribution = first_register_probabilities(state);
  run.final_state = std::move(state);
  return run;
}

ContinuedFractionResult continued_fractions(std::uint64_t j, int t, std::uint64_t modulus) {
  if (t < 1 || t > 62) throw ValidationError("register width out of range");
  const std::uint64_t q = std::uint64_t{1} << t;
  if (j >= q) throw ValidationError("measured value exceeds register range");

  ContinuedFractionResult out;
  out.measured_j = j;
  out.t = t;

  std::uint64_t num = j;
  std::uint64_t den = q;
  // h/k recurrences seeded with h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
  std::uint64_t h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  while (den != 0) {
    const std::uint64_t a = num / den;
    out.partial_quotients.push_back(a);
    const std::uint64_t h = a * h1 + h2;
    const std::uint64_t k = a * k1 + k2;
    const Fraction next{h, k};
    // [0; 1, ...] yields 0/1 then 1/1; keep only the later, closer one.
    if (!out.convergents.empty() && out.convergents.back().den == k) {
      out.convergents.back() = next;
    } else {
      out.convergents.push_back(next);
    }
    h2 = h1; h1 = h;
    k2 = k1; k1 = k;
    const std::uint64_t r = num % den;
    num = den;
    den = r;
  }

  if (j == 0) return out;
  for (const Fraction& c : out.convergents) {
    if (c.den > modulus) break;
    // |j/q - s/d| <= 1/(2q)  <=>  |2 j d - 2 s q| <= d
    const auto lhs = static_cast<__int128>(2) * j * c.den;
    const auto rhs = static_cast<__int128>(2) * c.num * q;
    const __int128 diff = lhs > rhs ? lhs - rhs : rhs - lhs;
    if (diff <= static_cast<__int128>(c.den)) {
      out.candidate_r = c.den;
      break;
    }
  }
  return out;
}

std::uint64_t sample_outcome(const std::vector<double>& distribution, std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  std::uint64_t last_positive = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i] <= 0.0) continue;
    acc += distribution[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

OrderRecovery recover_order(const QofConfig& config, const std::vector<double>& distribution,
                            int samples, std::mt19937_64& rng) {
  if (samples < 1) throw ValidationError("sample budget must be at least 1");
  OrderRecovery out;
  std::uint64_t folded = 1;
  for (int s = 1; s <= samples; ++s) {
    out.attempts = s;
    const std::uint64_t j = sample_outcome(distribution, rng);
    out.transcripts.push_back(continued_fractions(j, config.first_qubits, config.modulus));
    const auto& candidate = out.transcripts.back().candidate_r;
    if (!candidate) continue;
    std::uint64_t next = lcm(folded, *candidate);
    // The order is below N; an oversized lcm means an earlier candidate was
    // spurious.
    if (next >= config.modulus) next = *candidate;
    folded = next;
    if (pow_mod(config.base, folded, config.modulus) == 1) {
      out.order = reduce_to_order(folded, config.base, config.modulus);
      return out;
    }
  }
  return out;
}

OrderRecovery recover_order(const QofConfig& config, int samples, std::uint64_t seed) {
  const QofRun run = run_qof(config);
  std::mt19937_64 rng(seed);
  return recover_order(config, run.outcome_distribution, samples, rng);
}

FactorResult shor_factor(std::uint64_t modulus, std::uint64_t seed, int attempt_budget,
                         int samples_per_attempt, double epsilon) {
  if (modulus < 4) throw ValidationError("N must be a composite number >= 4");
  if (is_prime(modulus)) {
    throw ValidationError(std::to_string(modulus) + " is prime; nothing to factor");
  }
  FactorResult result;
  if (modulus % 2 == 0) {
    result.method = FactorMethod::even;
    result.factors = ordered(2, modulus);
    return result;
  }
  if (const auto p = prime_power_base(modulus)) {
    result.method = FactorMethod::prime_power;
    result.factors = ordered(*p, modulus);
    return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(2, modulus - 1);
  for (int attempt = 0; attempt < attempt_budget; ++attempt) {
    const std::uint64_t x = pick(rng);
    FactorAttempt record{x, std::nullopt, "no-order"};
    if (const std::uint64_t g = gcd(x, modulus); g != 1) {
      record.outcome = "gcd";
      result.attempts.push_back(record);
      result.method = FactorMethod::gcd;
      result.factors = ordered(g, modulus);
      return result;
    }
    const QofConfig config = QofConfig::with_epsilon(x, modulus, epsilon);
    const OrderRecovery rec =
        recover_order(config, samples_per_attempt, splitmix64(seed ^ static_cast<std::uint64_t>(attempt)));
    record.order = rec.order;
    if (!rec.order) {
      result.attempts.push_back(record);
      continue;
    }
    const std::uint64_t r = *rec.order;
    if (r % 2 != 0) {
      record.outcome = "odd-order";
      result.attempts.push_back(record);
      continue;
    }
    const std::uint64_t half = pow_mod(x, r / 2, modulus);
    if (half == modulus - 1) {
      record.outcome = "trivial-root";
      result.attempts.push_back(record);
      continue;
    }
    for (std::uint64_t candidate : {gcd(half - 1, modulus), gcd(half + 1, modulus)}) {
      if (candidate != 1 && candidate != modulus) {
        record.outcome = "factor";
        result.attempts.push_back(record);
        result.method = FactorMethod::order_finding;
        result.factors = ordered(candidate, modulus);
        return result;
      }
    }
    record.outcome = "trivial-root";
    result.attempts.push_back(record);
  }
  result.method = FactorMethod::failure;
  return result;
}

}  // namespace qcoh::qof
