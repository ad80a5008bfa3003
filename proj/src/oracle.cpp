#include "hvbox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvbox {

namespace {

// Depth-first enumeration of subsets; `corner` is the componentwise max of the
// subset so far. Supersets of a subset whose corner reaches r contribute zero.
void accumulate_subsets(std::span<const Point> points, const Point& r, std::size_t next,
                        std::vector<long double>& corner, int sign, long double& total) {
  for (std::size_t n = next; n < points.size(); ++n) {
    std::vector<long double> widened = corner;
    long double product = 1.0L;
    for (std::size_t m = 0; m < r.dim(); ++m) {
      widened[m] = std::max<long double>(widened[m], points[n][m]);
      product *= std::max<long double>(0.0L, static_cast<long double>(r[m]) - widened[m]);
    }
    if (product == 0.0L) continue;
    total += sign * product;
    accumulate_subsets(points, r, n + 1, widened, -sign, total);
  }
}

long double hv_extended(std::span<const Point> points, const Point& reference) {
  if (points.size() > kOracleLimit) {
    throw std::invalid_argument("oracle limit: " + std::to_string(points.size()) +
                                " points exceed " + std::to_string(kOracleLimit));
  }
  for (const Point& p : points) {
    if (!weakly_dominates(p, reference)) {
      throw std::invalid_argument("point " + p.to_string() +
                                  " does not weakly dominate the reference " +
                                  reference.to_string());
    }
  }
  std::vector<long double> corner(reference.dim(), -INFINITY);
  long double total = 0.0L;
  accumulate_subsets(points, reference, 0, corner, +1, total);
  return total;
}

}  // namespace

double hv_inclusion_exclusion(std::span<const Point> points, const Point& reference) {
  return static_cast<double>(hv_extended(points, reference));
}

double hvi_oracle(std::span<const Point> front, const Point& y_new, const Point& reference) {
  std::vector<Point> extended(front.begin(), front.end());
  extended.push_back(y_new);
  // Subtract before rounding to keep small improvements accurate.
  const long double with = hv_extended(extended, reference);
  // A weakly dominated candidate adds nothing; skip the noisy cancellation.
  for (const Point& p : front) {
    if (weakly_dominates(p, y_new)) return 0.0;
  }
  const long double without = hv_extended(front, reference);
  return static_cast<double>(std::max(0.0L, with - without));
}

std::string_view to_string(FrontShape shape) noexcept {
  switch (shape) {
    case FrontShape::sphere_like:
      return "sphere_like";
    case FrontShape::linear:
      return "linear";
    case FrontShape::random_antichain:
      return "random_antichain";
  }
  return "unknown";
}

FrontShape parse_front_shape(std::string_view name) {
  for (FrontShape shape :
       {FrontShape::sphere_like, FrontShape::linear, FrontShape::random_antichain}) {
    if (name == to_string(shape)) return shape;
  }
  throw std::invalid_argument("unknown front shape '" + std::string(name) + "'");
}

ParetoFront generate_front(const RandomFrontSpec& spec) {
  if (spec.n_points == 0 || spec.dim == 0) {
    throw std::invalid_argument("random front needs N >= 1 and M >= 1");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::exponential_distribution<double> exponential(1.0);
  // Integer points with a fixed coordinate sum are pairwise non-dominated.
  const auto lattice_sum = static_cast<int>(3 * spec.n_points + 3);
  std::uniform_int_distribution<int> cut(0, lattice_sum);

  auto draw = [&]() {
    std::vector<double> coords(spec.dim);
    switch (spec.shape) {
      case FrontShape::sphere_like: {
        double norm = 0.0;
        do {
          for (double& c : coords) c = std::abs(normal(rng));
          norm = 0.0;
          for (double c : coords) norm += c * c;
        } while (norm == 0.0);
        norm = std::sqrt(norm);
        for (double& c : coords) c /= norm;
        break;
      }
      case FrontShape::linear: {
        double sum = 0.0;
        for (double& c : coords) sum += (c = exponential(rng));
        for (double& c : coords) c /= sum;
        break;
      }
      case FrontShape::random_antichain: {
        std::vector<int> cuts(spec.dim + 1, 0);
        cuts.back() = lattice_sum;
        for (std::size_t m = 1; m < spec.dim; ++m) cuts[m] = cut(rng);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t m = 0; m < spec.dim; ++m) coords[m] = cuts[m + 1] - cuts[m];
        break;
      }
    }
    return Point(std::move(coords));
  };

  std::vector<Point> points;
  const std::size_t budget = 1000 * spec.n_points + 1000;
  for (std::size_t attempt = 0; attempt < budget && points.size() < spec.n_points; ++attempt) {
    Point candidate = draw();
    const bool clashes = std::any_of(points.begin(), points.end(), [&](const Point& p) {
      return weakly_dominates(p, candidate) || weakly_dominates(candidate, p);
    });
    if (!clashes) points.push_back(std::move(candidate));
  }
  if (points.size() < spec.n_points) {
    throw std::runtime_error("could not sample " + std::to_string(spec.n_points) +
                             " mutually non-dominated points in " + std::to_string(spec.dim) +
                             " objectives");
  }
  return ParetoFront(std::move(points));
}

}  // namespace hvbox
