#include "hvbox/hvimprove.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hvbox {

namespace {

void require_candidate_dim(const Decomposition& decomp, const Point& y, std::string_view what) {
  if (y.dim() != decomp.dim()) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(y.dim()) +
                                " coordinates, decomposition has " +
                                std::to_string(decomp.dim()));
  }
}

double hvi_unchecked(const Decomposition& decomp, const Point& y) {
  long double total = 0.0L;
  for (const HyperRectangle& box : decomp.boxes()) {
    long double product = 1.0L;
    for (std::size_t m = 0; m < y.dim(); ++m) {
      const long double side = static_cast<long double>(box.upper()[m]) -
                               static_cast<long double>(std::max(box.lower()[m], y[m]));
      if (side <= 0.0L) {
        product = 0.0L;
        break;
      }
      product *= side;
    }
    total += product;
  }
  return static_cast<double>(total);
}

}  // namespace

double hvi(const Decomposition& decomp, const Point& y_new) {
  require_candidate_dim(decomp, y_new, "candidate");
  return hvi_unchecked(decomp, y_new);
}

bool below_lower_bound(const Decomposition& decomp, const Point& y_new) {
  require_candidate_dim(decomp, y_new, "candidate");
  const Point& lower = decomp.bounds().lower();
  for (std::size_t m = 0; m < y_new.dim(); ++m) {
    if (y_new[m] < lower[m]) return true;
  }
  return false;
}

std::vector<double> hvi_batch(const Decomposition& decomp, std::span<const Point> candidates) {
  std::vector<double> values;
  values.reserve(candidates.size());
  for (std::size_t q = 0; q < candidates.size(); ++q) {
    require_candidate_dim(decomp, candidates[q], "candidate " + std::to_string(q));
    values.push_back(hvi_unchecked(decomp, candidates[q]));
  }
  return values;
}

std::vector<HviValue> hvi_batch_flagged(const Decomposition& decomp,
                                        std::span<const Point> candidates) {
  std::vector<HviValue> values;
  values.reserve(candidates.size());
  for (std::size_t q = 0; q < candidates.size(); ++q) {
    require_candidate_dim(decomp, candidates[q], "candidate " + std::to_string(q));
    values.push_back({hvi_unchecked(decomp, candidates[q]), below_lower_bound(decomp, candidates[q])});
  }
  return values;
}

double nondominated_volume(const Decomposition& decomp) {
  // Every box lies above the lower bound corner, so the clip is inactive.
  return hvi_unchecked(decomp, decomp.bounds().lower());
}

double dominated_hv(const Decomposition& decomp) {
  if (!decomp.config().exact()) {
    throw std::logic_error(
        "approximate decomposition underestimates the non-dominated volume; dominated HV "
        "unavailable");
  }
  return decomp.h_all() - nondominated_volume(decomp);
}

}  // namespace hvbox
