#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcoh/coherence.hpp"

namespace qcoh::dj {

enum class FunctionKind { constant, balanced, other };
enum class Verdict { constant, balanced };

std::string_view to_string(FunctionKind kind);
std::string_view to_string(Verdict verdict);

// Truth table of f over 2^n inputs; kind is derived from the table.
class DjFunction {
 public:
  DjFunction(int n, std::vector<std::uint8_t> table);

  static DjFunction constant(int n, bool value);
  // Bit-string literal, index 0 leftmost; length fixes n.
  static DjFunction parse(std::string_view bits);

  int n() const noexcept { return n_; }
  FunctionKind kind() const noexcept { return kind_; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }
  std::string to_bits() const;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
  FunctionKind kind_;
};

struct DjResult {
  Verdict verdict = Verdict::constant;
  // Coherence of the uniform state, after the oracle, after the final
  // Hadamard layer.
  std::array<CoherencePair, 3> trace{};
  double p_zero = 0.0;
  StateVector final_state = StateVector::uniform(1);
};

DjResult run_dj(const DjFunction& f);

inline constexpr int max_enumeration_qubits = 4;

struct BalancedExtremes {
  int n = 0;
  std::size_t tables = 0;
  double max_c_r = 0.0;
  double max_c_l1 = 0.0;
  std::vector<std::string> max_c_r_tables;
  std::vector<std::string> max_c_l1_tables;
  // Largest p_zero seen; zero up to rounding for every balanced f.
  double max_p_zero = 0.0;

  // Candidate ranges [0, n-1] and [0, 2^{n-1}-1]. The l1 range is exceeded
  // from n = 4 on (max 8 > 7), so these are reported, not enforced.
  double range_c_r() const { return n - 1.0; }
  double range_c_l1() const { return static_cast<double>((std::uint64_t{1} << (n - 1)) - 1); }
  bool c_r_within_range(double tol = 1e-9) const { return max_c_r <= range_c_r() + tol; }
  bool c_l1_within_range(double tol = 1e-9) const { return max_c_l1 <= range_c_l1() + tol; }
};

// Runs every balanced table (n <= 4) and keeps the extremes of the final
// coherence.
BalancedExtremes balanced_coherence_extremes(int n);

// All C(2^n, 2^{n-1}) balanced tables in lexicographic bit-string order.
std::vector<DjFunction> all_balanced(int n);

}  // namespace qcoh::dj
