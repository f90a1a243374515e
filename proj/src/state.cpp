#include "qcoh/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/number_theory.hpp"

namespace qcoh {

namespace {

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > max_qubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                        " outside supported range [1, " +
                        std::to_string(max_qubits) + "]");
  }
}

const RegisterLayout& require_layout(const StateVector& state, const char* op) {
  if (!state.layout()) {
    throw LayoutError(std::string(op) + " requires a two-register layout");
  }
  return *state.layout();
}

// Butterfly pass over the qubits [lo, hi) of the index.
void walsh_hadamard(std::span<amplitude> a, int lo, int hi) {
  const std::size_t dim = a.size();
  for (int q = lo; q < hi; ++q) {
    const std::size_t h = std::size_t{1} << q;
    for (std::size_t block = 0; block < dim; block += 2 * h) {
      for (std::size_t i = block; i < block + h; ++i) {
        const amplitude x = a[i];
        const amplitude y = a[i + h];
        a[i] = x + y;
        a[i + h] = x - y;
      }
    }
  }
  const double scale = std::pow(2.0, -0.5 * (hi - lo));
  for (auto& v : a) v *= scale;
}

// In-place radix-2 DFT of buf with exponent sign `sign`, scaled by 1/sqrt(n).
void fourier(std::vector<amplitude>& buf, std::span<const amplitude> twiddles,
             int bits) {
  const std::size_t n = buf.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    const std::size_t half = len / 2;
    for (std::size_t block = 0; block < n; block += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const amplitude u = buf[block + k];
        const amplitude v = buf[block + k + half] * twiddles[k * step];
        buf[block + k] = u + v;
        buf[block + k + half] = u - v;
      }
    }
  }
  const double scale = std::pow(2.0, -0.5 * bits);
  for (auto& v : buf) v *= scale;
}

void first_register_fourier(StateVector& state, double sign, const char* op) {
  const RegisterLayout layout = require_layout(state, op);
  const std::size_t first_dim = std::size_t{1} << layout.first;
  const std::size_t second_dim = std::size_t{1} << layout.second;

  std::vector<amplitude> twiddles(first_dim / 2 + 1);
  for (std::size_t k = 0; k < twiddles.size(); ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(first_dim);
    twiddles[k] = std::polar(1.0, angle);
  }

  auto amps = state.amplitudes();
  std::vector<amplitude> buf(first_dim);
  for (std::size_t k = 0; k < second_dim; ++k) {
    bool any = false;
    for (std::size_t j = 0; j < first_dim; ++j) {
      buf[j] = amps[j * second_dim + k];
      any = any || buf[j] != amplitude{};
    }
    if (!any) continue;
    fourier(buf, twiddles, layout.first);
    for (std::size_t j = 0; j < first_dim; ++j) amps[j * second_dim + k] = buf[j];
  }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<amplitude> amplitudes,
                         std::optional<RegisterLayout> layout)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  set_layout(layout);
}

StateVector StateVector::uniform(int num_qubits) {
  check_qubits(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double value = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(num_qubits, std::vector<amplitude>(dim, value), std::nullopt);
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_qubits(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw ValidationError("basis index out of range");
  std::vector<amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps), std::nullopt);
}

StateVector StateVector::registers(RegisterLayout layout, std::uint64_t first_value,
                                   std::uint64_t second_value) {
  if (layout.first < 1 || layout.second < 0) {
    throw LayoutError("register sizes must satisfy first >= 1, second >= 0");
  }
  check_qubits(layout.first + layout.second);
  if (first_value >> layout.first || second_value >> layout.second) {
    throw ValidationError("register value does not fit its register");
  }
  StateVector s = basis(layout.first + layout.second,
                        (first_value << layout.second) | second_value);
  s.set_layout(layout);
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<amplitude> amplitudes,
                                         std::optional<RegisterLayout> layout) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("amplitude count must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  check_qubits(n);
  StateVector s(n, std::move(amplitudes), std::nullopt);
  if (std::abs(s.norm_squared() - 1.0) > 1e-9) {
    throw ValidationError("amplitudes are not normalized");
  }
  s.set_layout(layout);
  return s;
}

void StateVector::set_layout(std::optional<RegisterLayout> layout) {
  if (layout && (layout->first < 0 || layout->second < 0 ||
                 layout->first + layout->second != num_qubits_)) {
    throw LayoutError("register layout does not cover the state's qubits");
  }
  layout_ = layout;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

std::uint64_t PhaseOracle::checked_dimension(int num_qubits) {
  check_qubits(num_qubits);
  return std::uint64_t{1} << num_qubits;
}

PhaseOracle PhaseOracle::from_solutions(int num_qubits,
                                        std::vector<std::uint64_t> solutions) {
  const std::uint64_t dim = checked_dimension(num_qubits);
  std::sort(solutions.begin(), solutions.end());
  if (std::adjacent_find(solutions.begin(), solutions.end()) != solutions.end()) {
    throw ValidationError("solution set contains duplicates");
  }
  if (!solutions.empty() && solutions.back() >= dim) {
    throw ValidationError("solution index out of range");
  }
  return PhaseOracle(num_qubits, std::move(solutions));
}

bool PhaseOracle::marks(std::uint64_t index) const {
  return std::binary_search(solutions_.begin(), solutions_.end(), index);
}

void apply_phase_oracle(StateVector& state, const PhaseOracle& oracle) {
  if (oracle.num_qubits() != state.num_qubits()) {
    throw ValidationError("oracle and state qubit counts differ");
  }
  for (std::uint64_t x : oracle.solutions()) state[x] = -state[x];
}

void apply_diffusion(StateVector& state) {
  amplitude sum{};
  for (const auto& a : state.amplitudes()) sum += a;
  const amplitude twice_mean = 2.0 * sum / static_cast<double>(state.size());
  for (auto& a : state.amplitudes()) a = twice_mean - a;
}

void hadamard_all(StateVector& state, Register reg) {
  int lo = 0;
  if (reg == Register::first) {
    lo = require_layout(state, "hadamard on first register").second;
  }
  walsh_hadamard(state.amplitudes(), lo, state.num_qubits());
}

void apply_modexp(StateVector& state, std::uint64_t base, std::uint64_t modulus) {
  const RegisterLayout layout = require_layout(state, "modular exponentiation");
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  if (const std::uint64_t g = gcd(base, modulus); g != 1) {
    throw InvalidBaseError("gcd(" + std::to_string(base) + ", " +
                               std::to_string(modulus) + ") = " + std::to_string(g),
                           g);
  }
  if (layout.second >= 64 || modulus > (std::uint64_t{1} << layout.second)) {
    throw LayoutError("second register too small for the modulus");
  }

  const std::size_t first_dim = std::size_t{1} << layout.first;
  const std::size_t second_dim = std::size_t{1} << layout.second;
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i % second_dim) != 1 && amps[i] != amplitude{}) {
      throw ValidationError("second register must be |1> before modular exponentiation");
    }
  }

  std::vector<amplitude> out(amps.size());
  for (std::size_t j = 0; j < first_dim; ++j) {
    out[j * second_dim + pow_mod(base, j, modulus)] = amps[j * second_dim + 1];
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

void qft(StateVector& state) { first_register_fourier(state, +1.0, "qft"); }

void inverse_qft(StateVector& state) {
  first_register_fourier(state, -1.0, "inverse qft");
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.size());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), p.begin(),
                 [](const amplitude& a) { return std::norm(a); });
  return p;
}

std::vector<double> first_register_probabilities(const StateVector& state) {
  const RegisterLayout layout = require_layout(state, "first register marginal");
  const std::size_t second_dim = std::size_t{1} << layout.second;
  std::vector<double> p(std::size_t{1} << layout.first, 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) p[i / second_dim] += std::norm(amps[i]);
  return p;
}

}  // namespace qcoh
