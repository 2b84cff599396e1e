#include <doctest.h>

#include <map>
#include <random>

#include "alterknot/build.hpp"
#include "alterknot/twist.hpp"
#include "diagram_gen.hpp"

using namespace alterknot;

static std::vector<int> region_lengths(const knot_diagram& d) {
    std::vector<int> out;
    for (const auto& r : detect_twist_regions(d)) out.push_back(r.length());
    std::sort(out.begin(), out.end());
    return out;
}

TEST_CASE("twist region detection on known diagrams") {
    CHECK(region_lengths(rational_diagram({3})) == std::vector<int>{3});
    CHECK(region_lengths(rational_diagram({2, 2})) == std::vector<int>{2, 2});
    CHECK(region_lengths(rational_diagram({2, 2, 3})) == std::vector<int>{2, 2, 3});
    CHECK(region_lengths(pretzel_diagram({1, 2, 1, 3})) == std::vector<int>{1, 1, 2, 3});
    CHECK_THROWS_AS(detect_twist_regions(parse_dt("2")), not_reduced);

    // region lengths partition the crossings
    knot_diagram d = rational_diagram({4, 3, 3});
    auto regs = detect_twist_regions(d);
    int total = 0;
    for (const auto& r : regs) total += r.length();
    CHECK(total == d.n);
    // handedness is uniform inside each region
    std::vector<int> sign = crossing_signs(d);
    for (const auto& r : regs)
        for (int c : r.crossing_ids) CHECK(sign[c] == r.handedness);
}

TEST_CASE("twist equivalence") {
    knot_diagram f8 = rational_diagram({2, 2});
    auto regs = detect_twist_regions(f8);
    REQUIRE(regs.size() == 2);
    CHECK(twist_equivalent(f8, regs[0].crossing_ids[0], regs[0].crossing_ids[1]));
    CHECK_FALSE(twist_equivalent(f8, regs[0].crossing_ids[0], regs[1].crossing_ids[0]));
    CHECK_THROWS_AS(twist_equivalent(f8, 1, 1), domain_error);

    knot_diagram p = pretzel_diagram({1, 2, 1, 3});
    std::vector<int> singles;
    for (const auto& r : detect_twist_regions(p))
        if (r.length() == 1) singles.push_back(r.crossing_ids[0]);
    REQUIRE(singles.size() == 2);
    CHECK(twist_equivalent(p, singles[0], singles[1]));
}

// Independent oracle: multi-edges of the Tait graphs, built from raw corner
// incidences rather than the opposite-pair comparison in the library.
static bool tait_multi_edge_oracle(const knot_diagram& d, int c1, int c2) {
    face_data fd = trace_faces(d);
    for (int color = 0; color < 2; ++color) {
        auto edge_of = [&](int c) -> std::pair<int, int> {
            int f0 = fd.corner_face(c, 0), f2 = fd.corner_face(c, 2);
            if (fd.color[f0] != color) {
                f0 = fd.corner_face(c, 1);
                f2 = fd.corner_face(c, 3);
            }
            return {std::min(f0, f2), std::max(f0, f2)};
        };
        auto e1 = edge_of(c1), e2 = edge_of(c2);
        if (e1 == e2 && e1.first != e1.second) return true;
    }
    return false;
}

TEST_CASE("twist equivalence agrees with the Tait multi-edge oracle") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        int n = 4 + static_cast<int>(rng() % 5);
        knot_diagram d = testgen::random_alternating_diagram(n, rng).diagram;
        for (int a = 0; a < d.n; ++a)
            for (int b = a + 1; b < d.n; ++b)
                CHECK(twist_equivalent(d, a, b) == tait_multi_edge_oracle(d, a, b));
    }
}

TEST_CASE("twist reduction merges the pretzel fixture") {
    knot_diagram p = pretzel_diagram({1, 2, 1, 3});
    long long det_before = knot_determinant(p);
    twist_reduction red = twist_reduce(p);
    CHECK(red.moves.size() >= 1);
    CHECK(region_lengths(red.diagram) == std::vector<int>{2, 2, 3});
    CHECK(red.diagram.n == p.n);
    CHECK(knot_determinant(red.diagram) == det_before);
    CHECK(validate(red.diagram).alternating);
    CHECK(validate(red.diagram).prime);
    // output is twist reduced: every equivalent pair shares a region
    auto regs = detect_twist_regions(red.diagram);
    std::vector<int> reg(red.diagram.n);
    for (size_t i = 0; i < regs.size(); ++i)
        for (int c : regs[i].crossing_ids) reg[c] = static_cast<int>(i);
    for (int a = 0; a < red.diagram.n; ++a)
        for (int b = a + 1; b < red.diagram.n; ++b)
            if (twist_equivalent(red.diagram, a, b)) CHECK(reg[a] == reg[b]);
}

TEST_CASE("twist reduction fixed points") {
    for (auto cf : {std::vector<int>{2, 2}, {2, 3}, {2, 2, 3}}) {
        knot_diagram d = rational_diagram(cf);
        twist_reduction red = twist_reduce(d);
        CHECK(red.moves.empty());
        CHECK(isomorphic(red.diagram, d));
    }
    CHECK_THROWS_AS(twist_reduce(chain_composite(5, 3)), not_prime);
    CHECK_THROWS_AS(twist_reduce(parse_dt("2")), not_reduced);
}

TEST_CASE("twist numbers of named knots") {
    CHECK(twist_number(rational_diagram({3})) == 1);       // (2,3) torus
    CHECK(twist_number(rational_diagram({2, 2})) == 2);    // figure-eight
    CHECK(twist_number(rational_diagram({2, 3})) == 2);    // 5-crossing twist knot
    CHECK(twist_number(parse_dt("4 6 8 2")) == 2);
    CHECK(twist_number(parse_dt("4 8 10 2 6")) == 2);
    CHECK(twist_number(rational_diagram({2, 2, 3})) == 3);
    CHECK(twist_number(pretzel_diagram({1, 2, 1, 3})) == 3);
    CHECK(twist_number(pretzel_diagram({3, 3, 2})) == 3);
}

TEST_CASE("region count cases for tw_N") {
    knot_diagram f8 = rational_diagram({2, 2});
    CHECK(tw_n(f8, 2) == 2);
    CHECK(tw_n(f8, 3) == 0);
    CHECK(tw_n(f8, 121) == 0);
    CHECK_THROWS_AS(tw_n(f8, 0), domain_error);

    knot_diagram fx = chain_composite(121, 3);
    CHECK(tw_n(fx, 121) == 1);
    CHECK(tw_n(fx, 3) == 2);
    knot_diagram fx2 = rational_diagram({122, 3});
    CHECK(tw_n(fx2, 121) == 1);
}

TEST_CASE("flypes preserve the diagram invariants") {
    std::mt19937 rng(23);
    std::vector<knot_diagram> samples{rational_diagram({2, 2}), rational_diagram({2, 2, 3}),
                                      pretzel_diagram({1, 2, 1, 3})};
    for (int i = 0; i < 6; ++i)
        samples.push_back(testgen::random_alternating_diagram(5 + i, rng).diagram);
    for (const auto& d : samples) {
        long long det = knot_determinant(d);
        int tw = twist_number(d);
        auto spots = enumerate_flype_spots(d);
        for (const auto& s : spots) {
            knot_diagram r = apply_flype(d, s);
            CHECK(r.n == d.n);
            CHECK(validate(r).alternating);
            CHECK(knot_determinant(r) == det);
            CHECK(twist_number(r) == tw);
        }
    }
}

TEST_CASE("flyping the trefoil gives back the trefoil") {
    knot_diagram tre = rational_diagram({3});
    auto spots = enumerate_flype_spots(tre);
    CHECK(!spots.empty());
    for (const auto& s : spots) CHECK(isomorphic_up_to_mirror(apply_flype(tre, s), tre));
}

TEST_CASE("twist number range and the no-bigon case") {
    std::mt19937 rng(59);
    for (int i = 0; i < 15; ++i) {
        int n = 4 + static_cast<int>(rng() % 7);
        knot_diagram d = testgen::random_alternating_diagram(n, rng).diagram;
        int tw = twist_number(d);
        CHECK(tw >= 1);
        CHECK(tw <= d.n);
        bool has_bigon = false;
        for (const auto& f : trace_faces(d).faces) has_bigon = has_bigon || f.size() == 2;
        if (tw == d.n) CHECK_FALSE(has_bigon);
        if (!has_bigon) CHECK(tw == d.n);
    }
}

TEST_CASE("regions are listed canonically and results relabel-invariantly") {
    // the same knot entered through different codes gives the same invariants
    knot_diagram a = parse_dt("4 8 10 2 6");
    knot_diagram b = rational_diagram({3, 2});
    CHECK(twist_number(a) == twist_number(b));
    CHECK(region_lengths(a) == region_lengths(b));
    auto regs = detect_twist_regions(a);
    for (size_t i = 1; i < regs.size(); ++i) {
        int prev = *std::min_element(regs[i - 1].crossing_ids.begin(),
                                     regs[i - 1].crossing_ids.end());
        int cur = *std::min_element(regs[i].crossing_ids.begin(), regs[i].crossing_ids.end());
        CHECK(prev < cur);
    }
}

TEST_CASE("equivalent crossings share a region once twist reduced") {
    std::mt19937 rng(61);
    for (int i = 0; i < 10; ++i) {
        knot_diagram d = testgen::random_alternating_diagram(6 + i % 4, rng).diagram;
        knot_diagram red = twist_reduce(d).diagram;
        auto regs = detect_twist_regions(red);
        std::vector<int> reg(red.n);
        for (size_t r = 0; r < regs.size(); ++r)
            for (int c : regs[r].crossing_ids) reg[c] = static_cast<int>(r);
        face_data fd = trace_faces(red);
        for (int a = 0; a < red.n; ++a)
            for (int b = a + 1; b < red.n; ++b)
                if (twist_equivalent(red, fd, a, b)) CHECK(reg[a] == reg[b]);
    }
}
