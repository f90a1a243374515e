#include "qcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

constexpr double hermitian_tol = 1e-12;
constexpr double trace_tol = 1e-10;
constexpr double psd_tol = 1e-10;
constexpr double pure_norm_tol = 1e-9;
constexpr double prefix_tol = 1e-10;

void check_dim(std::size_t dim) {
  if (dim == 0) throw ValidationError("matrix dimension must be positive");
  if (dim > max_density_dim) {
    throw CapacityError("matrix dimension " + std::to_string(dim) +
                        " exceeds eigensolver guard " +
                        std::to_string(max_density_dim));
  }
}

void check_hermitian(std::size_t dim, std::span<const amplitude> m) {
  if (m.size() != dim * dim) throw ValidationError("matrix entry count mismatch");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (std::abs(m[i * dim + j] - std::conj(m[j * dim + i])) > hermitian_tol) {
        throw ValidationError("matrix is not Hermitian");
      }
    }
  }
}

// Cyclic Jacobi on a dense real symmetric matrix; returns the diagonal once
// the off-diagonal Frobenius norm falls below 1e-12 (relative to the scale).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double scale = 0.0;
  for (double v : a) scale += v * v;
  scale = std::max(std::sqrt(scale), 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) < 1e-12 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return diag;
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
  check_dim(dim_);
  check_hermitian(dim_, entries_);
  double trace = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) trace += entries_[i * dim_ + i].real();
  if (std::abs(trace - 1.0) > trace_tol) {
    throw ValidationError("density matrix trace is not 1");
  }
}

DensityMatrix DensityMatrix::pure(std::span<const amplitude> psi) {
  const std::size_t d = psi.size();
  check_dim(d);
  std::vector<amplitude> m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = psi[i] * std::conj(psi[j]);
  // Exact hermiticity regardless of rounding in the products above.
  for (std::size_t i = 0; i < d; ++i) {
    m[i * d + i] = m[i * d + i].real();
    for (std::size_t j = i + 1; j < d; ++j) m[j * d + i] = std::conj(m[i * d + j]);
  }
  return DensityMatrix(d, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  check_dim(dim);
  std::vector<amplitude> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0 / static_cast<double>(dim);
  return DensityMatrix(dim, std::move(m));
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

CoherencePair coherence_of_pure(std::span<const amplitude> amplitudes) {
  double norm2 = 0.0;
  double l1 = 0.0;
  double entropy = 0.0;
  for (const auto& a : amplitudes) {
    const double p = std::norm(a);
    norm2 += p;
    l1 += std::abs(a);
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  if (std::abs(norm2 - 1.0) > pure_norm_tol) {
    throw ValidationError("state is not normalized");
  }
  return {std::max(entropy, 0.0), std::max(l1 * l1 - norm2, 0.0)};
}

CoherencePair coherence_of_pure(const StateVector& state) {
  return coherence_of_pure(state.amplitudes());
}

CoherencePair coherence_of_mixed(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const std::vector<double> spectrum = hermitian_eigenvalues(rho);
  if (spectrum.front() < -psd_tol) {
    throw ValidationError("density matrix is not positive semidefinite");
  }
  std::vector<double> diag(d);
  double off = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    diag[i] = rho(i, i).real();
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) off += std::abs(rho(i, j));
  }
  const double c_r = shannon_entropy(diag) - shannon_entropy(spectrum);
  return {std::max(c_r, 0.0), off};
}

std::vector<double> hermitian_eigenvalues(std::size_t dim,
                                          std::span<const amplitude> entries) {
  check_dim(dim);
  check_hermitian(dim, entries);
  const std::size_t n = 2 * dim;
  std::vector<double> real(n * n);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const amplitude h = entries[i * dim + j];
      real[i * n + j] = h.real();
      real[(i + dim) * n + (j + dim)] = h.real();
      real[i * n + (j + dim)] = -h.imag();
      real[(i + dim) * n + j] = h.imag();
    }
  }
  std::vector<double> doubled = jacobi_eigenvalues(std::move(real), n);
  std::sort(doubled.begin(), doubled.end());
  // Every eigenvalue of the Hermitian matrix appears twice in the embedding.
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.dim(), rho.entries());
}

std::string_view to_string(Majorization m) {
  switch (m) {
    case Majorization::p_majorizes_q: return "p_majorizes_q";
    case Majorization::q_majorizes_p: return "q_majorizes_p";
    case Majorization::equal: return "equal";
    case Majorization::incomparable: return "incomparable";
  }
  return "unknown";
}

Majorization majorization_compare(std::span<const double> p,
                                  std::span<const double> q) {
  auto sorted = [](std::span<const double> v, std::size_t len) {
    double sum = 0.0;
    for (double x : v) {
      if (!(x >= 0.0)) throw ValidationError("probability vector has a negative entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
      throw ValidationError("probability vector does not sum to 1");
    }
    std::vector<double> out(v.begin(), v.end());
    out.resize(len, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  };
  const std::size_t len = std::max(p.size(), q.size());
  const std::vector<double> ps = sorted(p, len);
  const std::vector<double> qs = sorted(q, len);

  bool p_dominates = true;
  bool q_dominates = true;
  double sum_p = 0.0;
  double sum_q = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    sum_p += ps[k];
    sum_q += qs[k];
    if (sum_p < sum_q - prefix_tol) p_dominates = false;
    if (sum_q < sum_p - prefix_tol) q_dominates = false;
  }
  if (p_dominates && q_dominates) return Majorization::equal;
  if (p_dominates) return Majorization::p_majorizes_q;
  if (q_dominates) return Majorization::q_majorizes_p;
  return Majorization::incomparable;
}

}  // namespace qcoh
