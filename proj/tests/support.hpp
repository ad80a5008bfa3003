// Shared fixtures and test-only oracles.

#ifndef HVBOX_TESTS_SUPPORT_HPP
#define HVBOX_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "hvbox/hvbox.hpp"

namespace hvbox::testing {

// P = {[2,8],[6,4],[8,2]}.
inline ParetoFront three_point_front() { return ParetoFront({Point{2, 8}, Point{6, 4}, Point{8, 2}}); }

inline DecomposeConfig config_of(double alpha, std::optional<Point> reference = std::nullopt,
                                 std::optional<Point> ideal = std::nullopt) {
  DecomposeConfig c;
  c.alpha = alpha;
  c.reference = std::move(reference);
  c.ideal = std::move(ideal);
  return c;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool contains_box(const Decomposition& d, const HyperRectangle& box) {
  return std::find(d.boxes().begin(), d.boxes().end(), box) != d.boxes().end();
}

/// Reference point one unit past the worst front coordinate in every objective.
inline Point padded_reference(const ParetoFront& front, double pad = 1.0) {
  std::vector<double> r(front.dim());
  for (std::size_t m = 0; m < front.dim(); ++m) r[m] = front.grids()[m][front.size()] + pad;
  return Point(std::move(r));
}

/// Uniform point in [lower, upper].
inline Point sample_in(std::mt19937_64& rng, const Point& lower, const Point& upper) {
  std::vector<double> z(lower.dim());
  for (std::size_t m = 0; m < z.size(); ++m) {
    std::uniform_real_distribution<double> u(lower[m], upper[m]);
    z[m] = u(rng);
  }
  return Point(std::move(z));
}

/// Monte Carlo estimate of the volume dominated by `points` inside [lower, r],
/// with its standard error.
struct McEstimate {
  double value;
  double std_error;
};

inline McEstimate monte_carlo_hv(const std::vector<Point>& points, const Point& lower,
                                 const Point& r, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double box = 1.0;
  for (std::size_t m = 0; m < r.dim(); ++m) box *= r[m] - lower[m];
  std::size_t hits = 0;
  std::vector<double> z(r.dim());
  std::vector<std::uniform_real_distribution<double>> axes;
  for (std::size_t m = 0; m < r.dim(); ++m) axes.emplace_back(lower[m], r[m]);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t m = 0; m < z.size(); ++m) z[m] = axes[m](rng);
    const bool dominated = std::any_of(points.begin(), points.end(), [&](const Point& p) {
      for (std::size_t m = 0; m < z.size(); ++m) {
        if (p[m] > z[m]) return false;
      }
      return true;
    });
    hits += dominated ? 1 : 0;
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

/// Brute-force non-dominated volume inside [lower, upper]: enumerate every
/// cell of the full coordinate grid and keep those whose centre is not
/// weakly dominated by any front point.
inline double grid_cell_nondominated_volume(const std::vector<Point>& points, const Point& lower,
                                            const Point& upper) {
  const std::size_t dim = lower.dim();
  std::vector<std::vector<double>> axes(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    axes[m].push_back(lower[m]);
    for (const Point& p : points) axes[m].push_back(p[m]);
    axes[m].push_back(upper[m]);
    std::sort(axes[m].begin(), axes[m].end());
    axes[m].erase(std::unique(axes[m].begin(), axes[m].end()), axes[m].end());
  }
  std::vector<std::size_t> idx(dim, 0);
  long double total = 0.0L;
  while (true) {
    long double vol = 1.0L;
    std::vector<double> centre(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      vol *= static_cast<long double>(axes[m][idx[m] + 1]) - axes[m][idx[m]];
      centre[m] = 0.5 * (axes[m][idx[m]] + axes[m][idx[m] + 1]);
    }
    const bool dominated = std::any_of(points.begin(), points.end(), [&](const Point& p) {
      for (std::size_t m = 0; m < dim; ++m) {
        if (p[m] > centre[m]) return false;
      }
      return true;
    });
    if (!dominated) total += vol;
    std::size_t m = 0;
    while (m < dim && ++idx[m] + 1 >= axes[m].size()) idx[m++] = 0;
    if (m == dim) break;
  }
  return static_cast<double>(total);
}

}  // namespace hvbox::testing

#endif  // HVBOX_TESTS_SUPPORT_HPP
