#include "hvbox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvbox {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("point must have at least one coordinate");
  }
  for (std::size_t m = 0; m < coords_.size(); ++m) {
    if (!std::isfinite(coords_[m])) {
      throw std::invalid_argument("point coordinate " + std::to_string(m) + " is not finite");
    }
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t m = 0; m < coords_.size(); ++m) {
    if (m != 0) os << ", ";
    os << coords_[m];
  }
  os << ']';
  return os.str();
}

HyperRectangle::HyperRectangle(Point lower, Point upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_dim(lower_, upper_);
  if (!weakly_dominates(lower_, upper_)) {
    throw std::invalid_argument("box lower corner " + lower_.to_string() +
                                " exceeds upper corner " + upper_.to_string());
  }
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

bool weakly_dominates(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (a[m] > b[m]) return false;
  }
  return true;
}

bool strictly_dominates(const Point& a, const Point& b) {
  require_same_dim(a, b);
  bool strict = false;
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (a[m] > b[m]) return false;
    if (a[m] < b[m]) strict = true;
  }
  return strict;
}

bool strictly_below(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (!(a[m] < b[m])) return false;
  }
  return true;
}

double side_product(std::span<const double> lower, std::span<const double> upper) {
  long double volume = 1.0L;
  for (std::size_t m = 0; m < lower.size(); ++m) {
    volume *= static_cast<long double>(upper[m]) - static_cast<long double>(lower[m]);
  }
  return static_cast<double>(volume);
}

double box_volume(const HyperRectangle& box) {
  return side_product(box.lower().coords(), box.upper().coords());
}

double intersection_volume(const HyperRectangle& a, const HyperRectangle& b) {
  require_same_dim(a.lower(), b.lower());
  long double volume = 1.0L;
  for (std::size_t m = 0; m < a.dim(); ++m) {
    const long double lo = std::max(a.lower()[m], b.lower()[m]);
    const long double hi = std::min(a.upper()[m], b.upper()[m]);
    if (hi <= lo) return 0.0;
    volume *= hi - lo;
  }
  return static_cast<double>(volume);
}

}  // namespace hvbox
