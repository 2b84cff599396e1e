#include <doctest.h>

#include <cmath>
#include <random>

#include "alterknot/surfaces.hpp"
#include "diagram_gen.hpp"

using namespace alterknot;

TEST_CASE("checkerboard pair of the figure-eight") {
    knot_diagram f8 = rational_diagram({2, 2});
    auto [red, blue] = checkerboards(f8);
    CHECK(red.euler + blue.euler == 2 - f8.n);
    CHECK(std::labs(red.boundary_slope - blue.boundary_slope) == 2 * f8.n);
    CHECK_FALSE(red.twisted);
}

TEST_CASE("pleated area of the union is 2 pi (cr - 2)") {
    knot_diagram tre = rational_diagram({3});
    auto [red, blue] = checkerboards(tre);
    CHECK(red.pleated_area + blue.pleated_area == doctest::Approx(2.0 * M_PI));
    knot_diagram k = rational_diagram({3, 2, 2});
    auto [r2, b2] = checkerboards(k);
    CHECK(r2.pleated_area + b2.pleated_area == doctest::Approx(2.0 * M_PI * (k.n - 2)));
}

TEST_CASE("checkerboard identities on random diagrams") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        int n = 3 + static_cast<int>(rng() % 12);
        knot_diagram d = testgen::random_alternating_diagram(n, rng, false).diagram;
        auto [red, blue] = checkerboards(d);
        CHECK(red.euler + blue.euler == 2 - d.n);
        CHECK(std::labs(red.boundary_slope - blue.boundary_slope) == 2 * d.n);
    }
}

TEST_CASE("cusp area floors") {
    CHECK(union_cusp_area_lower(0, 8, true) == doctest::Approx(8.0));
    CHECK(union_cusp_area_lower(0, 8, false) == doctest::Approx(9.51365692).epsilon(1e-8));
    CHECK(union_cusp_area_lower(5, 5, false) == 0.0);

    CHECK(checkerboard_cusp_lower(4, true) == doctest::Approx(8.0));
    CHECK(checkerboard_cusp_lower(4, false) == doctest::Approx(std::pow(2.0, 1.25) * 4));
    CHECK_THROWS_AS(checkerboard_cusp_lower(0, false), domain_error);
    CHECK_THROWS_AS(checkerboard_cusp_lower(2, true), domain_error);

    CHECK(twisted_cusp_lower(2, true) == doctest::Approx(4.0));
    CHECK(twisted_cusp_lower(10, false) == doctest::Approx(23.7841423).epsilon(1e-8));
    CHECK_THROWS_AS(twisted_cusp_lower(1, false), domain_error);
}

TEST_CASE("exceptional knot detection") {
    CHECK(is_exceptional_knot(parse_dt("4 6 8 2")));
    CHECK(is_exceptional_knot(parse_dt("4 8 10 2 6")));
    CHECK(is_exceptional_knot(rational_diagram({2, 2})));
    CHECK(is_exceptional_knot(rational_diagram({3, 2})));
    CHECK_FALSE(is_exceptional_knot(rational_diagram({3})));
    CHECK_FALSE(is_exceptional_knot(rational_diagram({2, 2, 3})));
    CHECK_FALSE(is_exceptional_knot(rational_diagram({4, 2})));
}

TEST_CASE("augmentation bookkeeping fixtures") {
    augmented_family a1 = augment(chain_composite(121, 3), 121);
    REQUIRE(a1.circles.size() == 1);
    CHECK(a1.circles[0].c == 121);
    CHECK(a1.circles[0].r == 1);
    CHECK(a1.circles[0].n == 60);
    CHECK(a1.k2.n == 4);
    CHECK(a1.tw_n_count == 1);
    CHECK(a1.twisted_euler_abs == 4);

    augmented_family a2 = augment(rational_diagram({122, 3}), 121);
    REQUIRE(a2.circles.size() == 1);
    CHECK(a2.circles[0].c == 122);
    CHECK(a2.circles[0].r == 2);
    CHECK(a2.circles[0].n == 60);
    CHECK(a2.k2.n == 5);
    CHECK(a2.twisted_euler_abs == 5);

    augmented_family a3 = augment(rational_diagram({2, 2}), 121);
    CHECK(a3.circles.empty());
    CHECK(a3.k2.n == 4);
    CHECK(a3.twisted_euler_abs == 2);  // plain checkerboard count cr - 2
    CHECK(isomorphic(a3.k2, a3.base));
}

TEST_CASE("augmentation at small thresholds exercises twist removal") {
    std::mt19937 rng(41);
    std::vector<knot_diagram> samples{rational_diagram({5, 4, 2}), rational_diagram({4, 2}),
                                      rational_diagram({3, 2, 2})};
    for (int i = 0; i < 8; ++i)
        samples.push_back(testgen::random_alternating_diagram(5 + i % 5, rng).diagram);
    for (const auto& d : samples) {
        auto regs = detect_twist_regions(d);
        if (!detail::diagram_twist_reduced(d, regs)) continue;
        for (long N : {2L, 3L}) {
            augmented_family a = augment(d, N);
            long removed = 0;
            for (const auto& c : a.circles) {
                CHECK((c.r == 1 || c.r == 2));
                CHECK(c.r % 2 == c.c % 2);
                CHECK(c.c == c.r + 2 * c.n);
                removed += 2 * c.n;
            }
            CHECK(a.k2.n == d.n - removed);
            CHECK(a.twisted_euler_abs == a.k2.n + 2 * a.tw_n_count - 2);
            CHECK(detail::walk_alternates(a.k2));
            // large threshold degenerates to the plain checkerboard count
            augmented_family none = augment(d, d.n + 1);
            CHECK(none.circles.empty());
            CHECK(none.twisted_euler_abs == d.n - 2);
        }
    }
}

TEST_CASE("augment rejects bad inputs") {
    CHECK_THROWS_AS(augment(rational_diagram({2, 2}), 0), domain_error);
    CHECK_THROWS_AS(augment(pretzel_diagram({1, 2, 1, 3}), 121), not_twist_reduced);
}
