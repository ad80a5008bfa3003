#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hvbox/decompose.hpp"
#include "hvbox/hvimprove.hpp"
#include "hvbox/oracle.hpp"
#include "support.hpp"

using hvbox::DecomposeConfig;
using hvbox::Decomposition;
using hvbox::FrontShape;
using hvbox::HyperRectangle;
using hvbox::ParetoFront;
using hvbox::Point;
using hvbox::testing::config_of;
using hvbox::testing::three_point_front;

namespace {

const FrontShape kShapes[] = {FrontShape::sphere_like, FrontShape::linear,
                              FrontShape::random_antichain};

}  // namespace

TEST_CASE("two-objective fixture, alpha = 0.1: frozen hand trace") {
  const Decomposition d = hvbox::decompose(three_point_front(), config_of(0.1));
  CHECK(d.h_all() == 64.0);
  CHECK(d.h_tol() == 6.4);

  // Stack order: high child first, so the right half of the grid is visited
  // before the left half.
  const std::vector<HyperRectangle> expected{
      HyperRectangle(Point{6, 1}, Point{8, 4}),
      HyperRectangle(Point{2, 4}, Point{6, 8}),
      HyperRectangle(Point{1, 4}, Point{2, 9}),
      HyperRectangle(Point{1, 1}, Point{6, 4}),
  };
  CHECK(d.boxes() == expected);

  const auto& diag = d.diagnostics();
  CHECK(diag.iterations == 13);
  CHECK(diag.accepted == 4);
  CHECK(diag.pruned_dominated == 2);
  CHECK(diag.pruned_resolution == 0);
  CHECK(diag.pruned_volume == 1);  // [8,1]x[9,4], H = 3 <= 6.4
  CHECK(diag.splits == 6);
  CHECK(diag.max_depth == 4);
  CHECK(hvbox::nondominated_volume(d) == 42.0);
}

TEST_CASE("two-objective fixture, exact") {
  const Decomposition sentinel = hvbox::decompose(three_point_front(), config_of(0.0));
  CHECK(hvbox::nondominated_volume(sentinel) == 43.0);
  CHECK(hvbox::testing::contains_box(sentinel, HyperRectangle(Point{2, 4}, Point{6, 8})));

  const Decomposition clipped = hvbox::decompose(three_point_front(), config_of(0.0, Point{10, 10}));
  CHECK(clipped.h_all() == 81.0);
  CHECK(hvbox::nondominated_volume(clipped) == 45.0);
}

TEST_CASE("single one-dimensional point") {
  const Decomposition d = hvbox::decompose(ParetoFront({Point{5}}), config_of(0.0));
  REQUIRE(d.boxes().size() == 1);
  CHECK(d.boxes()[0] == HyperRectangle(Point{4}, Point{5}));
}

TEST_CASE("config validation happens before any work") {
  const ParetoFront front = three_point_front();
  CHECK_THROWS_WITH_AS((void)hvbox::decompose(front, config_of(1.5)), "alpha must be in [0,1)",
                       std::invalid_argument);
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(1.0)), std::invalid_argument);
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(-0.1)), std::invalid_argument);
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(std::nan(""))), std::invalid_argument);
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(0.1, Point{10, 10, 10})),
                  std::invalid_argument);
  // Reference must be weakly dominated by every point: r_1 = 7 < 8.
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(0.1, Point{7, 10})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)hvbox::decompose(front, config_of(0.1, std::nullopt, Point{3, 0})),
                  std::invalid_argument);
  CHECK_NOTHROW((void)hvbox::decompose(front, config_of(0.1, Point{8, 8}, Point{2, 2})));
}

TEST_CASE("count_bound") {
  CHECK(hvbox::count_bound(0.1) == 20);
  CHECK(hvbox::count_bound(0.5) == 4);
  CHECK(hvbox::count_bound(1e-3) == 2000);
  CHECK_THROWS_WITH_AS((void)hvbox::count_bound(0.0), "unbounded (exact mode)", std::domain_error);
}

TEST_CASE("depth_bound") {
  CHECK(hvbox::depth_bound(1, 1) == 2);
  CHECK(hvbox::depth_bound(3, 2) == 6);
  CHECK(hvbox::depth_bound(4, 2) == 8);
  CHECK(hvbox::depth_bound(200, 8) == 72);
}

TEST_CASE("overrides replace the sentinels") {
  const ParetoFront front = three_point_front();
  const auto grids = hvbox::effective_grids(front, config_of(0.0, Point{12, 11}, Point{0, -1}));
  CHECK(grids[0] == std::vector<double>{0, 2, 6, 8, 12});
  CHECK(grids[1] == std::vector<double>{-1, 2, 4, 8, 11});

  // Zero-margin bounds: the ideal and reference touch the front.
  const Decomposition tight = hvbox::decompose(front, config_of(0.0, Point{8, 8}, Point{2, 2}));
  CHECK(tight.h_all() == 36.0);
  const double dominated = hvbox::hv_inclusion_exclusion(front.points(), Point{8, 8});
  CHECK(hvbox::nondominated_volume(tight) == doctest::Approx(36.0 - dominated));
}

TEST_CASE("duplicate coordinates give zero-width windows and stay exact") {
  // Ties in objective 0 and objective 2.
  const ParetoFront front({Point{1, 4, 2}, Point{1, 2, 4}, Point{3, 1, 2}, Point{2, 3, 1}});
  const Decomposition d = hvbox::decompose(front, config_of(0.0));
  const double oracle = d.h_all() - hvbox::hv_inclusion_exclusion(front.points(), d.bounds().upper());
  CHECK(hvbox::nondominated_volume(d) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("exact mode matches the inclusion-exclusion oracle (N <= 12, M <= 5)") {
  int checked = 0;
  for (std::size_t n = 1; n <= 12; n += 1) {
    for (std::size_t m = 2; m <= 5; ++m) {
      for (FrontShape shape : kShapes) {
        const ParetoFront front = hvbox::generate_front({n, m, 100 + n * 7 + m, shape});
        const Decomposition d = hvbox::decompose(front, config_of(0.0));
        const double oracle =
            d.h_all() - hvbox::hv_inclusion_exclusion(front.points(), d.bounds().upper());
        INFO("N=" << n << " M=" << m << " shape=" << hvbox::to_string(shape));
        CHECK(hvbox::testing::close_rel(hvbox::nondominated_volume(d), oracle, 1e-9));
        ++checked;
      }
    }
  }
  CHECK(checked == 12 * 4 * 3);
}

TEST_CASE("exact mode matches brute-force grid-cell enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const std::size_t m = 1 + seed % 4;
    const FrontShape shape = m == 1 ? FrontShape::sphere_like : kShapes[seed % 3];
    const ParetoFront front = hvbox::generate_front({m == 1 ? 1 : n, m, seed, shape});
    const Point ref = hvbox::testing::padded_reference(front, 0.5);
    const Decomposition d = hvbox::decompose(front, config_of(0.0, ref));
    const double brute = hvbox::testing::grid_cell_nondominated_volume(
        front.points(), d.bounds().lower(), d.bounds().upper());
    CHECK(hvbox::testing::close_rel(hvbox::nondominated_volume(d), brute, 1e-9));
  }
}

TEST_CASE("K <= 2/alpha on random fronts") {
  for (double alpha : {0.5, 0.1, 0.01}) {
    for (std::size_t n : {1, 7, 40, 200}) {
      for (std::size_t m : {2, 3, 5, 8}) {
        for (FrontShape shape : kShapes) {
          const ParetoFront front = hvbox::generate_front({n, m, n * 31 + m, shape});
          const Decomposition d = hvbox::decompose(front, config_of(alpha));
          INFO("alpha=" << alpha << " N=" << n << " M=" << m);
          CHECK(static_cast<double>(d.diagnostics().accepted) <= 2.0 / alpha);
        }
      }
    }
  }
}

TEST_CASE("accepted boxes are pairwise disjoint and their interiors non-dominated") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const std::size_t m = 2 + seed % 3;
    const ParetoFront front = hvbox::generate_front({n, m, seed, kShapes[seed % 3]});
    const double alpha = seed % 2 == 0 ? 0.0 : 0.05;
    const Decomposition d = hvbox::decompose(front, config_of(alpha));
    const auto& boxes = d.boxes();
    for (std::size_t a = 0; a < boxes.size(); ++a) {
      for (std::size_t b = a + 1; b < boxes.size(); ++b) {
        CHECK(hvbox::intersection_volume(boxes[a], boxes[b]) == 0.0);
      }
    }
    for (const HyperRectangle& box : boxes) {
      if (hvbox::box_volume(box) == 0.0) continue;  // no interior to sample
      for (int s = 0; s < 1000; ++s) {
        const Point z = hvbox::testing::sample_in(rng, box.lower(), box.upper());
        for (const Point& p : front.points()) {
          REQUIRE_FALSE(hvbox::strictly_dominates(p, z));
        }
      }
    }
  }
}

TEST_CASE("boxes lie inside the bounding box") {
  const ParetoFront front = hvbox::generate_front({15, 3, 5, FrontShape::linear});
  for (const auto& cfg : {config_of(0.0), config_of(0.01, Point{2, 2, 2}, Point{-1, -1, -1})}) {
    const Decomposition d = hvbox::decompose(front, cfg);
    for (const HyperRectangle& box : d.boxes()) {
      CHECK(hvbox::weakly_dominates(d.bounds().lower(), box.lower()));
      CHECK(hvbox::weakly_dominates(box.upper(), d.bounds().upper()));
    }
  }
}

TEST_CASE("volume is non-decreasing as alpha shrinks") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ParetoFront front =
        hvbox::generate_front({4 + seed % 12, 2 + seed % 4, seed, kShapes[seed % 3]});
    double previous = -1.0;
    for (double alpha : {0.5, 0.1, 0.01, 0.001, 0.0}) {
      const double volume = hvbox::nondominated_volume(hvbox::decompose(front, config_of(alpha)));
      CHECK(volume >= previous);
      previous = volume;
    }
  }
}

TEST_CASE("identical inputs give identical outputs") {
  const ParetoFront front = hvbox::generate_front({60, 4, 17, FrontShape::sphere_like});
  const Decomposition a = hvbox::decompose(front, config_of(0.001));
  const Decomposition b = hvbox::decompose(front, config_of(0.001));
  CHECK(a.boxes() == b.boxes());
  CHECK(a.diagnostics() == b.diagnostics());
}

TEST_CASE("diagnostics counters are consistent and depth is bounded") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + (seed * 13) % 120;
    const std::size_t m = 1 + seed % 6;
    const ParetoFront front = hvbox::generate_front({m == 1 ? 1 : n, m, seed, kShapes[seed % 3]});
    for (double alpha : {0.1, 0.001, 0.0}) {
      if (alpha == 0.0 && front.size() > 30) continue;
      const auto& diag = hvbox::decompose(front, config_of(alpha)).diagnostics();
      CHECK(diag.accepted + diag.pruned_dominated + diag.pruned_resolution + diag.pruned_volume +
                diag.splits ==
            diag.iterations);
      CHECK(diag.iterations >= diag.accepted);
      CHECK(diag.max_depth <= hvbox::depth_bound(front.size(), front.dim()));
    }
  }
}
