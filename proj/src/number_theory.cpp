#include "qcoh/number_theory.hpp"

#include <bit>
#include <cmath>

namespace qcoh {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  if (modulus == 1) return 0;
  base %= modulus;
  std::uint64_t result = 1;
  for (int bit = std::bit_width(exponent) - 1; bit >= 0; --bit) {
    result = mul_mod(result, result, modulus);
    if ((exponent >> bit) & 1U) result = mul_mod(result, base, modulus);
  }
  return result;
}

int ceil_log2(std::uint64_t value) {
  if (value <= 1) return 0;
  return std::bit_width(value - 1);
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0 || value % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= value / d; d += 6) {
    if (value % d == 0 || value % (d + 2) == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t value) {
  if (value < 4) return std::nullopt;
  for (int k = std::bit_width(value) - 1; k >= 2; --k) {
    // Floating estimate of the k-th root, then corrected with exact powers.
    auto root = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(value), 1.0 / k)));
    for (std::uint64_t c = root > 1 ? root - 1 : 1; c <= root + 1; ++c) {
      if (c < 2) continue;
      unsigned __int128 p = 1;
      for (int i = 0; i < k && p <= value; ++i) p *= c;
      if (p == value && is_prime(c)) return c;
    }
  }
  return std::nullopt;
}

}  // namespace qcoh
