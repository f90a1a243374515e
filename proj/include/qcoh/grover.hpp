#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcoh/coherence.hpp"

namespace qcoh::grover {

// Search instance over N = 2^n items with an explicit marked set.
struct GroverConfig {
  int n = 0;
  std::vector<std::uint64_t> solutions;
  // Last iteration recorded; defaults to 2 k* + 5.
  std::optional<int> k_max;

  std::uint64_t solution_count() const noexcept { return solutions.size(); }

  // Marked set {0, ..., M-1}.
  static GroverConfig first_indices(int n, std::uint64_t m);
  // M distinct marked indices drawn uniformly with a seeded generator.
  static GroverConfig random_indices(int n, std::uint64_t m, std::uint64_t seed);
};

struct GroverTraceRow {
  int k = 0;
  double c_r_closed = 0.0;
  double c_l1_closed = 0.0;
  double c_r_sim = 0.0;
  double c_l1_sim = 0.0;
  double p_success = 0.0;
};

// Coefficients of G^k|psi0> = cos(w)|alpha> + sin(w)|beta>, w = (2k+1) theta / 2.
struct RotationState {
  double omega = 0.0;
  double cos_omega = 0.0;
  double sin_omega = 0.0;
};

// d/dk of both coherence measures. NaN marks the points where the analytic
// expression is undefined (cos w = 0 or sin w = 0 for C_r). C_l1 has a kink
// wherever sin 2w = 0; its slope there is the one-sided value picked by the
// sign of the rounded sin 2w.
struct CoherenceSlope {
  double d_c_r = 0.0;
  double d_c_l1 = 0.0;
};

enum class CriticalKind { solution_min, psi0_peak, oracle_psi0_peak, inter_peak_valley, degenerate };

std::string_view to_string(CriticalKind kind);

struct CriticalPoint {
  double k_real = 0.0;
  CriticalKind kind = CriticalKind::degenerate;
  // False for the valley between the twin peaks, which integer iteration
  // counts can never land on.
  bool physical = true;
};

struct MinCoherence {
  std::uint64_t m = 0;
  double min_c_r = 0.0;
  double min_c_l1 = 0.0;
};

// Rotation angle: theta = 2 acos(sqrt((N - M) / N)).
double theta(int n, std::uint64_t m);

// Nearest integer to (pi/4) sqrt(N/M), halves rounded away from zero.
int optimal_iterations(int n, std::uint64_t m);

RotationState closed_form_state(int n, std::uint64_t m, double k);

// Coherence of G^k|psi0> from the two-amplitude decomposition. C_r uses
// sqrt(N-M) and sqrt(M) as the per-item amplitude denominators.
CoherencePair closed_form_coherence(int n, std::uint64_t m, double k);

// The same C_r expression with N-M and M (no square roots) in the
// denominators. Kept only to measure how far it is from the simulated value.
double printed_closed_form_c_r(int n, std::uint64_t m, double k);

CoherenceSlope coherence_derivatives(int n, std::uint64_t m, double k);

std::vector<CriticalPoint> classify_critical_points(int n, std::uint64_t m,
                                                    double k_max);

int default_k_max(int n, std::uint64_t m);

std::vector<GroverTraceRow> run_trace(const GroverConfig& config);

// First local minimum of c_r_sim along a trace (rows ordered by k).
int first_minimum_k(const std::vector<GroverTraceRow>& rows);

// For each M: minima of the simulated coherence over k in [0, 2 k*].
std::vector<MinCoherence> min_coherence_vs_m(int n, const std::vector<std::uint64_t>& ms,
                                             bool parallel = false);

}  // namespace qcoh::grover
