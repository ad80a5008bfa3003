#include "hvbox/front.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hvbox {

namespace {

void require_uniform_dim(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("empty front");
  }
  const std::size_t dim = points.front().dim();
  for (std::size_t n = 1; n < points.size(); ++n) {
    if (points[n].dim() != dim) {
      throw std::invalid_argument("dimension mismatch: point " + std::to_string(n) + " has " +
                                  std::to_string(points[n].dim()) + " coordinates, expected " +
                                  std::to_string(dim));
    }
  }
}

}  // namespace

ParetoFront::ParetoFront(std::vector<Point> points) : points_(std::move(points)) {
  require_uniform_dim(points_);
  for (std::size_t a = 0; a < points_.size(); ++a) {
    for (std::size_t b = a + 1; b < points_.size(); ++b) {
      if (points_[a] == points_[b]) {
        throw std::invalid_argument("duplicate point " + points_[a].to_string() + " in front");
      }
      if (strictly_dominates(points_[a], points_[b]) ||
          strictly_dominates(points_[b], points_[a])) {
        throw std::invalid_argument("points " + points_[a].to_string() + " and " +
                                    points_[b].to_string() + " are not mutually non-dominated");
      }
    }
  }
  grids_ = build_grids(points_);
}

bool ParetoFront::any_strictly_below(const Point& y) const {
  return std::any_of(points_.begin(), points_.end(),
                     [&](const Point& p) { return strictly_below(p, y); });
}

bool ParetoFront::any_weakly_dominates(const Point& y) const {
  return std::any_of(points_.begin(), points_.end(),
                     [&](const Point& p) { return weakly_dominates(p, y); });
}

ParetoFront pareto_filter(std::span<const Point> points) {
  require_uniform_dim(points);
  std::vector<Point> kept;
  for (std::size_t n = 0; n < points.size(); ++n) {
    const Point& candidate = points[n];
    bool drop = false;
    for (std::size_t other = 0; other < points.size() && !drop; ++other) {
      if (other == n) continue;
      // Later duplicates defer to the first occurrence.
      drop = strictly_dominates(points[other], candidate) ||
             (other < n && points[other] == candidate);
    }
    if (!drop) kept.push_back(candidate);
  }
  return ParetoFront(std::move(kept));
}

Grids build_grids(std::span<const Point> points) {
  require_uniform_dim(points);
  const std::size_t n_points = points.size();
  const std::size_t dim = points.front().dim();
  Grids grids(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    std::vector<double> column;
    column.reserve(n_points);
    for (const Point& p : points) column.push_back(p[m]);
    std::stable_sort(column.begin(), column.end());

    auto& grid = grids[m];
    grid.reserve(n_points + 2);
    grid.push_back(column.front() - 1.0);
    grid.insert(grid.end(), column.begin(), column.end());
    grid.push_back(column.back() + 1.0);
    // Unit padding is absorbed by rounding once |x| >= 2^53.
    if (!(grid.front() < column.front()) || !(column.back() < grid.back())) {
      throw std::invalid_argument("objective " + std::to_string(m) +
                                  ": coordinate magnitude too large for unit sentinels");
    }
  }
  return grids;
}

}  // namespace hvbox
