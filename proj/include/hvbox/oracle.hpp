/**
 * @file oracle.hpp
 * @brief Brute-force hypervolume ground truth and seeded random fronts.
 *
 * Nothing here shares a code path with the decomposition; tests compare the
 * two.
 */

#ifndef HVBOX_ORACLE_HPP
#define HVBOX_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "hvbox/front.hpp"
#include "hvbox/geometry.hpp"

namespace hvbox {

/// Maximum point count accepted by hv_inclusion_exclusion (cost is 2^N).
inline constexpr std::size_t kOracleLimit = 20;

/**
 * Dominated hypervolume w.r.t. @p reference by inclusion-exclusion over all
 * non-empty subsets S: sum (-1)^(|S|+1) prod_m (r_m - max_{p in S} p_m)_+.
 * Every point must weakly dominate the reference.
 */
[[nodiscard]] double hv_inclusion_exclusion(std::span<const Point> points, const Point& reference);

/// H(front + {y_new}, r) - H(front, r), clamped at zero.
[[nodiscard]] double hvi_oracle(std::span<const Point> front, const Point& y_new,
                                const Point& reference);

enum class FrontShape {
  sphere_like,      ///< points on the positive unit sphere
  linear,           ///< points on the unit simplex
  random_antichain, ///< integer points with a fixed coordinate sum; produces coordinate ties
};

[[nodiscard]] std::string_view to_string(FrontShape shape) noexcept;
[[nodiscard]] FrontShape parse_front_shape(std::string_view name);

struct RandomFrontSpec {
  std::size_t n_points = 1;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  FrontShape shape = FrontShape::sphere_like;
};

/**
 * Deterministic anti-chain of exactly spec.n_points points.
 * @throws std::runtime_error when the resample budget runs out (e.g. N > 1 with M = 1).
 */
[[nodiscard]] ParetoFront generate_front(const RandomFrontSpec& spec);

}  // namespace hvbox

#endif  // HVBOX_ORACLE_HPP
