#include "qcoh/grover.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>

#include "qcoh/errors.hpp"

namespace qcoh::grover {

namespace {

constexpr double pi = std::numbers::pi;

std::uint64_t item_count(int n) {
  if (n < 1 || n > 62) throw CapacityError("qubit count out of range: " + std::to_string(n));
  return std::uint64_t{1} << n;
}

void require_solutions(int n, std::uint64_t m) {
  const std::uint64_t big_n = item_count(n);
  if (m == 0) throw NoSolutionError("Grover quantity undefined for M = 0");
  if (m > big_n) throw ValidationError("solution count exceeds 2^n");
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// -x^2 log2(x^2 / d) with the 0 log 0 = 0 convention.
double entropy_term(double amplitude_sum, double count) {
  if (amplitude_sum == 0.0 || count == 0.0) return 0.0;
  const double sq = amplitude_sum * amplitude_sum;
  return -sq * std::log2(sq / count);
}

}  // namespace

std::string_view to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::solution_min: return "solution_min";
    case CriticalKind::psi0_peak: return "psi0_peak";
    case CriticalKind::oracle_psi0_peak: return "O_psi0_peak";
    case CriticalKind::inter_peak_valley: return "inter_peak_valley";
    case CriticalKind::degenerate: return "degenerate";
  }
  return "unknown";
}

GroverConfig GroverConfig::first_indices(int n, std::uint64_t m) {
  const std::uint64_t big_n = item_count(n);
  if (m > big_n) throw ValidationError("solution count exceeds 2^n");
  GroverConfig c;
  c.n = n;
  c.solutions.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) c.solutions[i] = i;
  return c;
}

GroverConfig GroverConfig::random_indices(int n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t big_n = item_count(n);
  if (m > big_n) throw ValidationError("solution count exceeds 2^n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, big_n - 1);
  std::unordered_set<std::uint64_t> chosen;
  GroverConfig c;
  c.n = n;
  // Floyd's sampling: M distinct indices in M draws.
  for (std::uint64_t j = big_n - m; j < big_n; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    const std::uint64_t v = chosen.contains(t) ? j : t;
    chosen.insert(v);
    c.solutions.push_back(v);
  }
  std::sort(c.solutions.begin(), c.solutions.end());
  return c;
}

double theta(int n, std::uint64_t m) {
  const std::uint64_t big_n = item_count(n);
  if (m > big_n) throw ValidationError("solution count exceeds 2^n");
  if (m == big_n) return pi;
  return 2.0 * std::acos(std::sqrt(static_cast<double>(big_n - m) / static_cast<double>(big_n)));
}

int optimal_iterations(int n, std::uint64_t m) {
  require_solutions(n, m);
  const double ratio = static_cast<double>(item_count(n)) / static_cast<double>(m);
  return static_cast<int>(std::round(pi / 4.0 * std::sqrt(ratio)));
}

RotationState closed_form_state(int n, std::uint64_t m, double k) {
  require_solutions(n, m);
  const double omega = (2.0 * k + 1.0) * theta(n, m) / 2.0;
  return {omega, std::cos(omega), std::sin(omega)};
}

CoherencePair closed_form_coherence(int n, std::uint64_t m, double k) {
  const RotationState s = closed_form_state(n, m, k);
  const double rest = static_cast<double>(item_count(n) - m);
  const double marked = static_cast<double>(m);
  const double c = std::abs(s.cos_omega);
  const double sn = std::abs(s.sin_omega);
  // With no unmarked items |alpha> does not exist and its term vanishes.
  const double alpha_weight = rest > 0.0 ? std::sqrt(rest) * c : 0.0;
  const double c_r = entropy_term(rest > 0.0 ? c : 0.0, rest) + entropy_term(sn, marked);
  const double l1 = alpha_weight + std::sqrt(marked) * sn;
  return {std::max(c_r, 0.0), std::max(l1 * l1 - 1.0, 0.0)};
}

double printed_closed_form_c_r(int n, std::uint64_t m, double k) {
  const RotationState s = closed_form_state(n, m, k);
  const double rest = static_cast<double>(item_count(n) - m);
  const double marked = static_cast<double>(m);
  const double c = std::abs(s.cos_omega);
  const double sn = std::abs(s.sin_omega);
  double sum = 0.0;
  if (c > 0.0 && rest > 0.0) sum += c * c * std::log2(c / rest);
  if (sn > 0.0) sum += sn * sn * std::log2(sn / marked);
  return -2.0 * sum;
}

CoherenceSlope coherence_derivatives(int n, std::uint64_t m, double k) {
  require_solutions(n, m);
  const double th = theta(n, m);
  const double big_n = static_cast<double>(item_count(n));
  const double marked = static_cast<double>(m);
  const double rest = big_n - marked;
  const double omega = (2.0 * k + 1.0) * th / 2.0;
  const double sin2 = std::sin(2.0 * omega);
  const double cos2 = std::cos(2.0 * omega);
  const double c = std::cos(omega);
  const double s = std::sin(omega);

  CoherenceSlope out;
  if (c == 0.0 || s == 0.0 || rest == 0.0) {
    out.d_c_r = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double cot2 = (c * c) / (s * s);
    out.d_c_r = th * sin2 * std::log2(marked / rest * cot2);
  }
  out.d_c_l1 = th * ((2.0 * marked - big_n) * sin2 +
                     2.0 * std::sqrt(rest * marked) * sgn(sin2) * cos2);
  return out;
}

std::vector<CriticalPoint> classify_critical_points(int n, std::uint64_t m,
                                                    double k_max) {
  const std::uint64_t big_n = item_count(n);
  if (m == 0) return {{0.0, CriticalKind::degenerate, false}};
  if (m > big_n) throw ValidationError("solution count exceeds 2^n");

  const double th = theta(n, m);
  // k such that (2k + 1) theta / 2 == omega.
  auto k_of = [th](double omega) { return omega / th - 0.5; };
  std::vector<CriticalPoint> points;
  auto add = [&](double k, CriticalKind kind, bool physical) {
    if (k >= -1e-12 && k <= k_max + 1e-12) points.push_back({std::max(k, 0.0), kind, physical});
  };
  const auto last = static_cast<int>(std::ceil((k_max + 1.0) * th / pi)) + 1;
  for (int j = 0; j <= last; ++j) {
    const double base = j * pi;
    add(k_of(base + pi / 2.0), CriticalKind::solution_min, true);
    add(k_of(base + th / 2.0), CriticalKind::psi0_peak, true);
    if (j > 0) {
      add(k_of(base - th / 2.0), CriticalKind::oracle_psi0_peak, true);
      add(k_of(base), CriticalKind::inter_peak_valley, false);
    }
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const CriticalPoint& a, const CriticalPoint& b) { return a.k_real < b.k_real; });
  return points;
}

int default_k_max(int n, std::uint64_t m) { return 2 * optimal_iterations(n, m) + 5; }

std::vector<GroverTraceRow> run_trace(const GroverConfig& config) {
  const std::uint64_t m = config.solution_count();
  require_solutions(config.n, m);
  const int k_max = config.k_max.value_or(default_k_max(config.n, m));
  if (k_max < 0) throw ValidationError("k_max must be non-negative");

  const PhaseOracle oracle = PhaseOracle::from_solutions(config.n, config.solutions);
  StateVector state = StateVector::uniform(config.n);
  std::vector<GroverTraceRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      apply_phase_oracle(state, oracle);
      apply_diffusion(state);
    }
    const CoherencePair closed = closed_form_coherence(config.n, m, k);
    const CoherencePair sim = coherence_of_pure(state);
    double p = 0.0;
    for (std::uint64_t x : oracle.solutions()) p += std::norm(state[x]);
    rows.push_back({k, closed.c_r, closed.c_l1, sim.c_r, sim.c_l1, p});
  }
  return rows;
}

int first_minimum_k(const std::vector<GroverTraceRow>& rows) {
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (rows[i].c_r_sim <= rows[i - 1].c_r_sim && rows[i].c_r_sim < rows[i + 1].c_r_sim) {
      return rows[i].k;
    }
  }
  return -1;
}

std::vector<MinCoherence> min_coherence_vs_m(int n, const std::vector<std::uint64_t>& ms,
                                             bool parallel) {
  auto one = [n](std::uint64_t m) {
    GroverConfig config = GroverConfig::first_indices(n, m);
    config.k_max = 2 * optimal_iterations(n, m);
    const auto rows = run_trace(config);
    MinCoherence out{m, rows.front().c_r_sim, rows.front().c_l1_sim};
    for (const auto& row : rows) {
      out.min_c_r = std::min(out.min_c_r, row.c_r_sim);
      out.min_c_l1 = std::min(out.min_c_l1, row.c_l1_sim);
    }
    return out;
  };
  for (std::uint64_t m : ms) require_solutions(n, m);

  std::vector<MinCoherence> result;
  if (parallel) {
    std::vector<std::future<MinCoherence>> jobs;
    for (std::uint64_t m : ms) jobs.push_back(std::async(std::launch::async, one, m));
    for (auto& j : jobs) result.push_back(j.get());
  } else {
    for (std::uint64_t m : ms) result.push_back(one(m));
  }
  return result;
}

}  // namespace qcoh::grover
