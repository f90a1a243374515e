#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "qcoh/state.hpp"

namespace qcoh {

// Relative entropy of coherence (bits) and l1-norm of coherence of one state.
struct CoherencePair {
  double c_r = 0.0;
  double c_l1 = 0.0;
};

// Dimension guard for the mixed-state path and the eigensolver.
inline constexpr std::size_t max_density_dim = 64;

// Row-major Hermitian d x d matrix with unit trace.
class DensityMatrix {
 public:
  // Validates hermiticity (1e-12) and trace (1e-10). Positivity is checked
  // where the spectrum is computed.
  DensityMatrix(std::size_t dim, std::vector<amplitude> entries);

  static DensityMatrix pure(std::span<const amplitude> psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const amplitude& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  std::span<const amplitude> entries() const noexcept { return entries_; }

 private:
  std::size_t dim_;
  std::vector<amplitude> entries_;
};

// Shannon entropy in bits with 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);

// Pure-state coherence from amplitudes: C_r = H(|a|^2), C_l1 = (sum|a|)^2 - sum|a|^2.
CoherencePair coherence_of_pure(std::span<const amplitude> amplitudes);
CoherencePair coherence_of_pure(const StateVector& state);

// C_r = H(diag) - S(rho), C_l1 = sum_{i != j} |rho_ij|.
CoherencePair coherence_of_mixed(const DensityMatrix& rho);

// Eigenvalues of a Hermitian matrix (d <= 64), ascending. Cyclic Jacobi on
// the real symmetric embedding [[Re, -Im], [Im, Re]].
std::vector<double> hermitian_eigenvalues(std::size_t dim,
                                          std::span<const amplitude> entries);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

enum class Majorization { p_majorizes_q, q_majorizes_p, equal, incomparable };

std::string_view to_string(Majorization m);

// Majorization order on probability vectors via sorted prefix sums, with
// 1e-10 slack per prefix. The shorter vector is zero-padded.
Majorization majorization_compare(std::span<const double> p,
                                  std::span<const double> q);

}  // namespace qcoh
