#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omn {

namespace tolerance {
inline constexpr double projection_residual = 1e-9;
inline constexpr double grid_stability = 1e-9;
inline constexpr double window_coverage = 0.95;
inline constexpr double entropy_slope = 0.05;
}  // namespace tolerance

struct ReproduceOptions {
  std::uint64_t seed = 20240601;
  /// Random instances for the algebra-invariant sweep.
  std::size_t invariant_instances = 10000;
  /// Random monomials per (m, n) in the fixed-point round trip.
  std::size_t fixed_point_samples = 1000;
  /// Tuples in the rho_r shape sweep.
  std::size_t shape_tuples = 200;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int criterion_count = 9;

/// Runs one acceptance criterion (1..9).
CriterionResult run_criterion(int id, const ReproduceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const ReproduceOptions& options = {});

/// "[PASS] 1 K-groups ... (0.12 s)".
std::string format_result(const CriterionResult& r);

}  // namespace omn
