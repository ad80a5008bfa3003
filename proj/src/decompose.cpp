#include "hvbox/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hvbox {

namespace {

// Raw-coordinate dominance loops; the front is already validated, so these
// skip the per-call dimension checks of the Point predicates.
bool any_strictly_below(const ParetoFront& front, const std::vector<double>& u) {
  for (const Point& p : front.points()) {
    bool below = true;
    for (std::size_t m = 0; m < u.size() && below; ++m) below = p[m] < u[m];
    if (below) return true;
  }
  return false;
}

bool any_weakly_dominates(const ParetoFront& front, const std::vector<double>& l) {
  for (const Point& p : front.points()) {
    bool dominates = true;
    for (std::size_t m = 0; m < l.size() && dominates; ++m) dominates = p[m] <= l[m];
    if (dominates) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(UpperBoundMode mode) noexcept {
  switch (mode) {
    case UpperBoundMode::paper_sentinel:
      return "paper_sentinel";
    case UpperBoundMode::reference_clipped:
      return "reference_clipped";
  }
  return "unknown";
}

void DecomposeConfig::validate(const ParetoFront& front) const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in [0,1)");
  }
  const Grids& grids = front.grids();
  const std::size_t n = front.size();
  if (reference) {
    if (reference->dim() != front.dim()) {
      throw std::invalid_argument("reference point has " + std::to_string(reference->dim()) +
                                  " coordinates, front has " + std::to_string(front.dim()));
    }
    for (std::size_t m = 0; m < front.dim(); ++m) {
      if ((*reference)[m] < grids[m][n]) {
        throw std::invalid_argument("reference point must be weakly dominated by every front point "
                                    "(objective " + std::to_string(m) + ")");
      }
    }
  }
  if (ideal) {
    if (ideal->dim() != front.dim()) {
      throw std::invalid_argument("ideal point has " + std::to_string(ideal->dim()) +
                                  " coordinates, front has " + std::to_string(front.dim()));
    }
    for (std::size_t m = 0; m < front.dim(); ++m) {
      if ((*ideal)[m] > grids[m][1]) {
        throw std::invalid_argument("ideal point must weakly dominate every front point "
                                    "(objective " + std::to_string(m) + ")");
      }
    }
  }
}

Decomposition::Decomposition(ParetoFront front, DecomposeConfig config, HyperRectangle bounds,
                             std::vector<HyperRectangle> boxes, double h_all, double h_tol,
                             Diagnostics diagnostics)
    : front_(std::move(front)),
      config_(std::move(config)),
      bounds_(std::move(bounds)),
      boxes_(std::move(boxes)),
      h_all_(h_all),
      h_tol_(h_tol),
      diagnostics_(diagnostics) {
  if (bounds_.dim() != front_.dim()) {
    throw std::invalid_argument("bounds dimension does not match the front");
  }
  for (const HyperRectangle& box : boxes_) {
    if (box.dim() != front_.dim()) {
      throw std::invalid_argument("box dimension does not match the front");
    }
  }
}

Grids effective_grids(const ParetoFront& front, const DecomposeConfig& config) {
  Grids grids = front.grids();
  const std::size_t last = front.size() + 1;
  for (std::size_t m = 0; m < front.dim(); ++m) {
    if (config.ideal) grids[m][0] = (*config.ideal)[m];
    if (config.reference) grids[m][last] = (*config.reference)[m];
  }
  return grids;
}

Decomposition decompose(const ParetoFront& front, const DecomposeConfig& config) {
  config.validate(front);

  const std::size_t dim = front.dim();
  const std::size_t last = front.size() + 1;
  const Grids grids = effective_grids(front, config);

  std::vector<double> lower(dim);
  std::vector<double> upper(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    lower[m] = grids[m][0];
    upper[m] = grids[m][last];
  }
  HyperRectangle bounds{Point(lower), Point(upper)};
  const double h_all = box_volume(bounds);
  const double h_tol = config.alpha * h_all;

  Diagnostics diag;
  std::vector<HyperRectangle> boxes;
  std::vector<IndexWindow> stack;
  stack.push_back(IndexWindow{std::vector<std::size_t>(dim, 0), std::vector<std::size_t>(dim, last), 0});

  while (!stack.empty()) {
    IndexWindow window = std::move(stack.back());
    stack.pop_back();
    ++diag.iterations;
    diag.max_depth = std::max<std::uint64_t>(diag.max_depth, window.depth);

    for (std::size_t m = 0; m < dim; ++m) {
      lower[m] = grids[m][window.lo[m]];
      upper[m] = grids[m][window.hi[m]];
    }

    if (!any_strictly_below(front, upper)) {
      boxes.emplace_back(Point(lower), Point(upper));
      ++diag.accepted;
      continue;
    }

    std::size_t split = 0;
    for (std::size_t m = 1; m < dim; ++m) {
      if (window.hi[m] - window.lo[m] > window.hi[split] - window.lo[split]) split = m;
    }

    if (any_weakly_dominates(front, lower)) {
      ++diag.pruned_dominated;
      continue;
    }
    if (window.hi[split] - window.lo[split] <= 1) {
      ++diag.pruned_resolution;
      continue;
    }
    if (side_product(lower, upper) <= h_tol) {
      ++diag.pruned_volume;
      continue;
    }

    const std::size_t mid = (window.lo[split] + window.hi[split]) / 2;
    IndexWindow low = window;
    IndexWindow high = std::move(window);
    low.hi[split] = mid;
    high.lo[split] = mid;
    ++low.depth;
    ++high.depth;
    stack.push_back(std::move(low));
    stack.push_back(std::move(high));
    ++diag.splits;
  }

  return Decomposition(front, config, std::move(bounds), std::move(boxes), h_all, h_tol, diag);
}

std::uint64_t count_bound(double alpha) {
  if (alpha == 0.0) {
    throw std::domain_error("unbounded (exact mode)");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in [0,1)");
  }
  return static_cast<std::uint64_t>(std::ceil(2.0 / alpha));
}

std::uint64_t depth_bound(std::size_t n_points, std::size_t dim) {
  // ceil(log2(N + 1)) == bit width of N for N >= 1.
  const auto log_term = static_cast<std::uint64_t>(std::bit_width(n_points));
  return static_cast<std::uint64_t>(dim) * (log_term + 1);
}

}  // namespace hvbox
