/**
 * @file hvimprove.hpp
 * @brief Hypervolume-improvement and volume queries over a Decomposition.
 */

#ifndef HVBOX_HVIMPROVE_HPP
#define HVBOX_HVIMPROVE_HPP

#include <span>
#include <vector>

#include "hvbox/decompose.hpp"
#include "hvbox/geometry.hpp"

namespace hvbox {

/**
 * @brief Sum over boxes of prod_m [u_m - max(l_m, y_m)]_+.
 *
 * A candidate below the decomposition's lower bound in some objective is
 * evaluated as-is, which undercounts the true improvement; see
 * below_lower_bound.
 */
[[nodiscard]] double hvi(const Decomposition& decomp, const Point& y_new);

/// True iff y_new lies below the lower bound corner in some objective.
[[nodiscard]] bool below_lower_bound(const Decomposition& decomp, const Point& y_new);

struct HviValue {
  double value = 0.0;
  bool below_bound = false;
};

/// Elementwise hvi in input order. Dimension errors name the offending index.
[[nodiscard]] std::vector<double> hvi_batch(const Decomposition& decomp,
                                            std::span<const Point> candidates);

/// hvi_batch with the below-bound flag attached to every value.
[[nodiscard]] std::vector<HviValue> hvi_batch_flagged(const Decomposition& decomp,
                                                      std::span<const Point> candidates);

/// Sum of box volumes in box order.
[[nodiscard]] double nondominated_volume(const Decomposition& decomp);

/**
 * @brief h_all - nondominated_volume, the hypervolume dominated by the front
 *        inside the bounding box.
 * @throws std::logic_error for an approximate (alpha > 0) decomposition.
 */
[[nodiscard]] double dominated_hv(const Decomposition& decomp);

}  // namespace hvbox

#endif  // HVBOX_HVIMPROVE_HPP
