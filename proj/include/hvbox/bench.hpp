/**
 * @file bench.hpp
 * @brief Diagnostics sweep over random fronts: box count against 2/alpha,
 *        iteration count, split depth and wall time.
 */

#ifndef HVBOX_BENCH_HPP
#define HVBOX_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hvbox/oracle.hpp"

namespace hvbox {

struct BenchSpec {
  std::vector<std::size_t> n_points{50};
  std::vector<std::size_t> dims{4};
  std::vector<double> alphas{1e-3};
  std::vector<FrontShape> shapes{FrontShape::sphere_like};
  std::size_t seeds = 1;
  std::uint64_t seed_base = 0;
  /// Also run the exact decomposition and check it against the brute-force oracle.
  bool verify = false;
};

struct BenchRow {
  std::size_t n_points = 0;
  std::size_t dim = 0;
  FrontShape shape = FrontShape::sphere_like;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t accepted = 0;
  std::optional<std::uint64_t> k_bound;  ///< absent for alpha == 0
  std::uint64_t iterations = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t depth_bound = 0;
  double nondominated_volume = 0.0;
  double h_all = 0.0;
  double wall_ms = 0.0;
  // Filled when verifying.
  std::optional<double> exact_volume;
  std::optional<double> oracle_volume;  ///< h_all - brute-force dominated HV
  std::optional<double> missed_volume;  ///< exact_volume - nondominated_volume
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// One message per broken invariant; non-empty means the sweep failed.
  std::vector<std::string> violations;
};

/// Validates the spec; throws std::invalid_argument (e.g. oracle limit under verify).
void validate(const BenchSpec& spec);

/// Rows ordered by (N, M, shape, alpha as given, seed).
[[nodiscard]] BenchResult run_bench(const BenchSpec& spec);

/// Tab-separated table with a header row.
[[nodiscard]] std::string format_bench_table(const BenchResult& result, bool verify);

}  // namespace hvbox

#endif  // HVBOX_BENCH_HPP
