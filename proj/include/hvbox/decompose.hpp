/**
 * @file decompose.hpp
 * @brief Approximate box decomposition of the non-dominated space.
 *
 * The bounding box [f^(0), f^(N+1)] spanned by the sorted coordinate grids is
 * bisected on grid indices with an explicit LIFO stack. A window is accepted
 * as a box once no front point lies strictly below its upper corner, and is
 * discarded when a front point weakly dominates its lower corner, when it is a
 * single grid cell, or when its volume is at most alpha * H_all. With
 * alpha = 0 the accepted boxes partition the non-dominated part of the
 * bounding box exactly.
 */

#ifndef HVBOX_DECOMPOSE_HPP
#define HVBOX_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hvbox/front.hpp"
#include "hvbox/geometry.hpp"

namespace hvbox {

enum class UpperBoundMode {
  paper_sentinel,     ///< f^(N+1) = f^(N) + 1
  reference_clipped,  ///< f^(N+1) = r
};

[[nodiscard]] std::string_view to_string(UpperBoundMode mode) noexcept;

struct DecomposeConfig {
  /// Relative volume tolerance in [0, 1); zero is exact.
  double alpha = 1e-3;
  /// When set, replaces the upper sentinels (reference-clipped mode).
  std::optional<Point> reference;
  /// When set, replaces the lower sentinels.
  std::optional<Point> ideal;

  [[nodiscard]] UpperBoundMode mode() const noexcept {
    return reference ? UpperBoundMode::reference_clipped : UpperBoundMode::paper_sentinel;
  }
  [[nodiscard]] bool exact() const noexcept { return alpha == 0.0; }

  /// Throws std::invalid_argument if the config is inconsistent with @p front.
  void validate(const ParetoFront& front) const;

  friend bool operator==(const DecomposeConfig&, const DecomposeConfig&) = default;
};

/// Half-open grid index window (lo[m], hi[m]) per objective, 0 <= lo < hi <= N+1.
struct IndexWindow {
  std::vector<std::size_t> lo;
  std::vector<std::size_t> hi;
  std::size_t depth = 0;
};

struct Diagnostics {
  std::uint64_t iterations = 0;  ///< stack pops
  std::uint64_t accepted = 0;
  std::uint64_t pruned_dominated = 0;
  std::uint64_t pruned_resolution = 0;
  std::uint64_t pruned_volume = 0;
  std::uint64_t splits = 0;
  std::uint64_t max_depth = 0;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Accepted boxes plus the bounding volumes and run counters. Immutable.
class Decomposition {
 public:
  Decomposition(ParetoFront front, DecomposeConfig config, HyperRectangle bounds,
                std::vector<HyperRectangle> boxes, double h_all, double h_tol,
                Diagnostics diagnostics);

  [[nodiscard]] const std::vector<HyperRectangle>& boxes() const noexcept { return boxes_; }
  [[nodiscard]] const ParetoFront& front() const noexcept { return front_; }
  [[nodiscard]] const DecomposeConfig& config() const noexcept { return config_; }
  /// [f^(0), f^(N+1)] with the ideal/reference overrides applied.
  [[nodiscard]] const HyperRectangle& bounds() const noexcept { return bounds_; }
  [[nodiscard]] double h_all() const noexcept { return h_all_; }
  [[nodiscard]] double h_tol() const noexcept { return h_tol_; }
  [[nodiscard]] const Diagnostics& diagnostics() const noexcept { return diagnostics_; }
  [[nodiscard]] std::size_t dim() const noexcept { return front_.dim(); }

 private:
  ParetoFront front_;
  DecomposeConfig config_;
  HyperRectangle bounds_;
  std::vector<HyperRectangle> boxes_;
  double h_all_;
  double h_tol_;
  Diagnostics diagnostics_;
};

/// Grids with the config's sentinel overrides applied.
[[nodiscard]] Grids effective_grids(const ParetoFront& front, const DecomposeConfig& config);

/**
 * @brief Runs the stack-driven bisection.
 *
 * The split objective is the widest index window (lowest index on ties); the
 * low child is pushed before the high child. Output order is deterministic.
 *
 * @throws std::invalid_argument on an invalid config, before any work.
 */
[[nodiscard]] Decomposition decompose(const ParetoFront& front, const DecomposeConfig& config);

/// ceil(2 / alpha), the upper bound on the number of accepted boxes.
/// @throws std::domain_error for alpha == 0.
[[nodiscard]] std::uint64_t count_bound(double alpha);

/// M * (ceil(log2(N + 1)) + 1), the bound checked against Diagnostics::max_depth.
[[nodiscard]] std::uint64_t depth_bound(std::size_t n_points, std::size_t dim);

}  // namespace hvbox

#endif  // HVBOX_DECOMPOSE_HPP
