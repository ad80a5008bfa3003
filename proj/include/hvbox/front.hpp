/**
 * @file front.hpp
 * @brief Validated Pareto front and its per-objective sorted coordinate grids.
 */

#ifndef HVBOX_FRONT_HPP
#define HVBOX_FRONT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hvbox/geometry.hpp"

namespace hvbox {

/// Per-objective grids; grid[m] has N+2 entries [f^(0), f^(1), ..., f^(N), f^(N+1)].
using Grids = std::vector<std::vector<double>>;

/**
 * @brief An anti-chain of N >= 1 points sharing dimension M.
 *
 * Immutable after construction. No point strictly dominates another and no
 * point appears twice.
 */
class ParetoFront {
 public:
  /// Validates that @p points already form an anti-chain; use pareto_filter otherwise.
  explicit ParetoFront(std::vector<Point> points);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t dim() const noexcept { return points_.front().dim(); }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] const Point& operator[](std::size_t n) const { return points_[n]; }

  /// Unit-sentinel grids (f^(0) = f^(1) - 1, f^(N+1) = f^(N) + 1).
  [[nodiscard]] const Grids& grids() const noexcept { return grids_; }

  /// True iff some front point p satisfies p < y in every coordinate.
  [[nodiscard]] bool any_strictly_below(const Point& y) const;
  /// True iff some front point p satisfies p <= y componentwise.
  [[nodiscard]] bool any_weakly_dominates(const Point& y) const;

 private:
  std::vector<Point> points_;
  Grids grids_;
};

/**
 * Keeps the non-dominated points of @p points in input order, collapsing exact
 * duplicates to their first occurrence.
 */
[[nodiscard]] ParetoFront pareto_filter(std::span<const Point> points);

/// Sorted coordinate grids with unit sentinels. Deterministic for a given multiset.
[[nodiscard]] Grids build_grids(std::span<const Point> points);

}  // namespace hvbox

#endif  // HVBOX_FRONT_HPP
