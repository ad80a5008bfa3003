/**
 * @file geometry.hpp
 * @brief Points, axis-aligned boxes and the dominance predicates (minimization).
 */

#ifndef HVBOX_GEOMETRY_HPP
#define HVBOX_GEOMETRY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hvbox {

/**
 * @brief An M-dimensional objective vector. All coordinates are finite.
 *
 * Used for Pareto points, candidates, reference and ideal points alike.
 */
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t m) const { return coords_[m]; }
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
  [[nodiscard]] const std::vector<double>& vec() const noexcept { return coords_; }

  [[nodiscard]] auto begin() const noexcept { return coords_.begin(); }
  [[nodiscard]] auto end() const noexcept { return coords_.end(); }

  friend bool operator==(const Point&, const Point&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<double> coords_;
};

/// Axis-aligned box [lower, upper]; lower <= upper in every coordinate.
class HyperRectangle {
 public:
  HyperRectangle(Point lower, Point upper);

  [[nodiscard]] const Point& lower() const noexcept { return lower_; }
  [[nodiscard]] const Point& upper() const noexcept { return upper_; }
  [[nodiscard]] std::size_t dim() const noexcept { return lower_.dim(); }

  friend bool operator==(const HyperRectangle&, const HyperRectangle&) = default;

 private:
  Point lower_;
  Point upper_;
};

/// a ≺ b: a <= b componentwise and a != b.
[[nodiscard]] bool strictly_dominates(const Point& a, const Point& b);

/// a ⪯ b: a <= b componentwise.
[[nodiscard]] bool weakly_dominates(const Point& a, const Point& b);

/// a < b in every coordinate.
[[nodiscard]] bool strictly_below(const Point& a, const Point& b);

/**
 * @brief Product of side lengths, zero for a degenerate box.
 *
 * The product is accumulated in extended precision from the first to the last
 * dimension and rounded once.
 */
[[nodiscard]] double box_volume(const HyperRectangle& box);

/// Extended-precision product of (upper[m] - lower[m]) over m, rounded once.
[[nodiscard]] double side_product(std::span<const double> lower, std::span<const double> upper);

/// Volume of the intersection of two boxes (zero when they only touch).
[[nodiscard]] double intersection_volume(const HyperRectangle& a, const HyperRectangle& b);

/// Throws std::invalid_argument when the dimensions differ.
void require_same_dim(const Point& a, const Point& b);

}  // namespace hvbox

#endif  // HVBOX_GEOMETRY_HPP
