#include "qcoh/deutsch_jozsa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qcoh/errors.hpp"

namespace qcoh::dj {

namespace {

constexpr double tie_tol = 1e-12;

FunctionKind classify(const std::vector<std::uint8_t>& table) {
  const auto ones = static_cast<std::size_t>(std::count(table.begin(), table.end(), 1));
  if (ones == 0 || ones == table.size()) return FunctionKind::constant;
  if (2 * ones == table.size()) return FunctionKind::balanced;
  return FunctionKind::other;
}

}  // namespace

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::constant: return "constant";
    case FunctionKind::balanced: return "balanced";
    case FunctionKind::other: return "other";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::constant ? "constant" : "balanced";
}

DjFunction::DjFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  if (n < 1 || n > max_qubits) {
    throw CapacityError("qubit count " + std::to_string(n) + " outside supported range");
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw ValidationError("function table length must be 2^n = " +
                          std::to_string(std::size_t{1} << n));
  }
  if (std::any_of(table_.begin(), table_.end(), [](std::uint8_t v) { return v > 1; })) {
    throw ValidationError("function table entries must be 0 or 1");
  }
  kind_ = classify(table_);
}

DjFunction DjFunction::constant(int n, bool value) {
  if (n < 1 || n > max_qubits) {
    throw CapacityError("qubit count " + std::to_string(n) + " outside supported range");
  }
  return DjFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

DjFunction DjFunction::parse(std::string_view bits) {
  const std::size_t len = bits.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw ValidationError("bit-string length must be a power of two >= 2, got " +
                          std::to_string(len));
  }
  std::vector<std::uint8_t> table(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw ValidationError("bit-string may only contain '0' and '1'");
    }
    table[i] = bits[i] == '1';
  }
  return DjFunction(std::countr_zero(len), std::move(table));
}

std::string DjFunction::to_bits() const {
  std::string s(table_.size(), '0');
  for (std::size_t i = 0; i < table_.size(); ++i) s[i] = table_[i] ? '1' : '0';
  return s;
}

DjResult run_dj(const DjFunction& f) {
  if (f.kind() == FunctionKind::other) {
    throw InvalidFunctionError("function " + (f.n() <= 6 ? f.to_bits() : std::string("table")) +
                               " is neither constant nor balanced");
  }
  const PhaseOracle oracle = PhaseOracle::from_predicate(
      f.n(), [&](std::uint64_t x) { return f.table()[x] != 0; });

  DjResult result;
  StateVector state = StateVector::uniform(f.n());
  result.trace[0] = coherence_of_pure(state);
  apply_phase_oracle(state, oracle);
  result.trace[1] = coherence_of_pure(state);
  hadamard_all(state);
  result.trace[2] = coherence_of_pure(state);
  result.p_zero = std::norm(state[0]);
  result.verdict = result.p_zero >= 0.5 ? Verdict::constant : Verdict::balanced;
  result.final_state = std::move(state);
  return result;
}

std::vector<DjFunction> all_balanced(int n) {
  if (n < 1 || n > max_enumeration_qubits) {
    throw CapacityError("balanced-function enumeration supports n <= " +
                        std::to_string(max_enumeration_qubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint8_t> table(dim, 0);
  std::fill(table.begin() + static_cast<std::ptrdiff_t>(dim / 2), table.end(), 1);
  std::vector<DjFunction> out;
  do {
    out.emplace_back(n, table);
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

BalancedExtremes balanced_coherence_extremes(int n) {
  BalancedExtremes ex;
  ex.n = n;
  for (const DjFunction& f : all_balanced(n)) {
    const DjResult r = run_dj(f);
    ++ex.tables;
    ex.max_p_zero = std::max(ex.max_p_zero, r.p_zero);
    const CoherencePair c = r.trace[2];
    auto track = [&](double value, double& best, std::vector<std::string>& who) {
      if (value > best + tie_tol) {
        best = value;
        who.assign(1, f.to_bits());
      } else if (std::abs(value - best) <= tie_tol) {
        who.push_back(f.to_bits());
      }
    };
    track(c.c_r, ex.max_c_r, ex.max_c_r_tables);
    track(c.c_l1, ex.max_c_l1, ex.max_c_l1_tables);
  }
  return ex;
}

}  // namespace qcoh::dj
