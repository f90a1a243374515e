#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcoh {

using amplitude = std::complex<double>;

// Largest total qubit count a StateVector may hold (2^26 amplitudes, 1 GiB).
inline constexpr int max_qubits = 26;

// Split of the qubits into a first register (high-order bits) and a second
// register (low-order bits). Basis index of |j>|k> is j * 2^second + k.
struct RegisterLayout {
  int first = 0;
  int second = 0;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

enum class Register { all, first };

// Dense amplitude array over n qubits. Index bit 0 is the least significant
// qubit.
class StateVector {
 public:
  static StateVector uniform(int num_qubits);
  static StateVector basis(int num_qubits, std::uint64_t index);
  // Two-register state |0...0>|k> with the given layout.
  static StateVector registers(RegisterLayout layout, std::uint64_t first_value,
                               std::uint64_t second_value);
  // Takes ownership of amplitudes; size must be a power of two and the
  // vector normalized within 1e-9.
  static StateVector from_amplitudes(std::vector<amplitude> amplitudes,
                                     std::optional<RegisterLayout> layout = {});

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<const amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<amplitude> amplitudes() noexcept { return amplitudes_; }

  const amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
  amplitude& operator[](std::size_t i) { return amplitudes_[i]; }

  const std::optional<RegisterLayout>& layout() const noexcept { return layout_; }
  void set_layout(std::optional<RegisterLayout> layout);

  double norm_squared() const;

 private:
  StateVector(int num_qubits, std::vector<amplitude> amplitudes,
              std::optional<RegisterLayout> layout);

  int num_qubits_;
  std::vector<amplitude> amplitudes_;
  std::optional<RegisterLayout> layout_;
};

// Black-box phase oracle |x> -> (-1)^f(x) |x>, stored as the sorted set of
// marked indices.
class PhaseOracle {
 public:
  static PhaseOracle from_solutions(int num_qubits,
                                    std::vector<std::uint64_t> solutions);

  template <typename Predicate>
  static PhaseOracle from_predicate(int num_qubits, Predicate&& predicate) {
    std::vector<std::uint64_t> marked;
    const std::uint64_t dim = checked_dimension(num_qubits);
    for (std::uint64_t x = 0; x < dim; ++x) {
      if (predicate(x)) marked.push_back(x);
    }
    return PhaseOracle(num_qubits, std::move(marked));
  }

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t solution_count() const noexcept { return solutions_.size(); }
  std::span<const std::uint64_t> solutions() const noexcept { return solutions_; }
  bool marks(std::uint64_t index) const;

 private:
  PhaseOracle(int num_qubits, std::vector<std::uint64_t> sorted_solutions)
      : num_qubits_(num_qubits), solutions_(std::move(sorted_solutions)) {}
  static std::uint64_t checked_dimension(int num_qubits);

  int num_qubits_;
  std::vector<std::uint64_t> solutions_;
};

void apply_phase_oracle(StateVector& state, const PhaseOracle& oracle);

// Inversion about the mean: a_i -> 2 * mean(a) - a_i.
void apply_diffusion(StateVector& state);

// Normalized Walsh-Hadamard transform over all qubits or over the first
// register only.
void hadamard_all(StateVector& state, Register reg = Register::all);

// |j>|1> -> |j>|x^j mod N>. Requires a layout, gcd(x, N) = 1, N <= 2^second
// and every nonzero amplitude to have second register equal to 1.
void apply_modexp(StateVector& state, std::uint64_t base, std::uint64_t modulus);

// QFT on the first register: |j> -> 2^{-t/2} sum_m exp(+2 pi i j m / 2^t)|m>.
void qft(StateVector& state);
// Inverse of qft (negative exponent).
void inverse_qft(StateVector& state);

std::vector<double> probabilities(const StateVector& state);

// Marginal distribution of the first register.
std::vector<double> first_register_probabilities(const StateVector& state);

}  // namespace qcoh
