#pragma once

#include <cstdint>
#include <optional>

namespace qcoh {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// (a * b) mod m without overflow for any 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exponent mod modulus by left-to-right square-and-multiply.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

// Smallest L with 2^L >= value (value >= 1).
int ceil_log2(std::uint64_t value);

bool is_prime(std::uint64_t value);

// If value == p^k for some prime p and k >= 2, returns p.
std::optional<std::uint64_t> prime_power_base(std::uint64_t value);

}  // namespace qcoh
