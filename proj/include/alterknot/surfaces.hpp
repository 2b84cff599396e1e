#ifndef ALTERKNOT_SURFACES_HPP
#define ALTERKNOT_SURFACES_HPP

// Checkerboard surfaces and the twisted-surface bookkeeping.
//
// The two checkerboard surfaces of an alternating diagram are built from the
// two face-color classes joined by a twisted band at every crossing, so
// chi(color) = (#faces of that color) - cr and the pair sums to 2 - cr.
// Boundary slopes are tracked through a fixed convention (each crossing
// contributes -2 to the surface whose color owns the corners swept when the
// overstrand rotates counterclockwise onto the understrand); only the
// difference of the two slopes is contractual, and it equals 2 cr.
//
// The augmentation drops each long twist region to 1 or 2 crossings (parity
// preserved), records the crossing-circle bookkeeping, and reports the
// twisted pair's Euler count |chi| = cr(K2) + 2 tw_N - 2.

#include <cmath>
#include <string>
#include <vector>

#include "alterknot/bounds.hpp"
#include "alterknot/build.hpp"
#include "alterknot/twist.hpp"

namespace alterknot {

struct surface_summary {
    int color = 0;              // 0 = red, 1 = blue (red owns the face at dart 0)
    int euler = 0;              // chi of this checkerboard surface
    double pleated_area = 0;    // 2 pi |chi|
    long boundary_slope = 0;    // artifact normalization, see header comment
    bool twisted = false;
};

inline bool is_exceptional_knot(const knot_diagram& d) {
    static const std::vector<long> fig8{4, 6, 8, 2};
    static const std::vector<long> tw52{4, 8, 10, 2, 6};
    std::vector<long> dt = canonical_dt(d);
    return dt == fig8 || dt == tw52;
}

inline std::pair<surface_summary, surface_summary> checkerboards(const knot_diagram& d) {
    if (!detail::walk_alternates(d))
        throw not_alternating("checkerboards need an alternating diagram");
    colored_faces cf = faces(d);
    surface_summary red, blue;
    red.color = 0;
    blue.color = 1;
    red.euler = cf.count0 - d.n;
    blue.euler = cf.count1 - d.n;
    red.pleated_area = 2.0 * M_PI * std::abs(red.euler);
    blue.pleated_area = 2.0 * M_PI * std::abs(blue.euler);
    for (int c = 0; c < d.n; ++c) {
        int swept = cf.fd.corner_face(c, 1);  // corners 1 and 3 are swept
        if (cf.fd.color[swept] != cf.fd.color[cf.fd.corner_face(c, 3)])
            throw internal_error("opposite corners disagree in color");
        (cf.fd.color[swept] == 0 ? red : blue).boundary_slope -= 2;
    }
    return {red, blue};
}

// Cusp-area floor for the disjoint union of two essential spanning surfaces
// with integral boundary slopes s1, s2: |s1 - s2| meridians of length at
// least 1, improved to 2^{1/4} each outside the two exceptional knots.
inline double union_cusp_area_lower(long s1, long s2, bool exceptional) {
    double base = static_cast<double>(std::labs(s1 - s2));
    return exceptional ? base : std::pow(2.0, 0.25) * base;
}

// Specialization to the checkerboard pair, whose slopes differ by 2 cr.
inline double checkerboard_cusp_lower(long cr, bool exceptional) {
    if (cr < 3) throw domain_error("checkerboard_cusp_lower requires cr >= 3");
    return exceptional ? 2.0 * static_cast<double>(cr)
                       : std::pow(2.0, 1.25) * static_cast<double>(cr);
}

// Same floor for the twisted pair, in terms of the twist number.
inline double twisted_cusp_lower(long tw, bool exceptional) {
    if (tw < 2) throw domain_error("twisted_cusp_lower requires tw >= 2");
    return exceptional ? 2.0 * static_cast<double>(tw)
                       : std::pow(2.0, 1.25) * static_cast<double>(tw);
}

// ---------------------------------------------------------------------------
// Augmentation
// ---------------------------------------------------------------------------

struct crossing_circle {
    int region_id = 0;  // index into the regions of the base diagram
    long c = 0;         // crossings in the encircled region
    int r = 0;          // crossings remaining in K2 (1 or 2, parity of c)
    long n = 0;         // half the number removed: c = r + 2n
};

struct augmented_family {
    knot_diagram base;
    long threshold_n = 0;
    std::vector<twist_region> regions;  // of the base, with encircled flags
    std::vector<crossing_circle> circles;
    knot_diagram k2;
    long tw_n_count = 0;        // regions with >= threshold crossings
    long twisted_euler_abs = 0; // cr(K2) + 2 tw_N - 2
};

namespace detail {

// Remove two adjacent crossings of a bigon chain (one full twist). Strand
// ends are re-joined by walking each strand through the removed pair, and
// the surviving crossings are renumbered densely; `remap` reports old -> new.
inline knot_diagram remove_full_twist(const knot_diagram& d, int x, int y,
                                      std::vector<int>& remap) {
    std::vector<int> ext;
    for (int c : {x, y})
        for (int s = 0; s < 4; ++s) {
            int a = knot_diagram::dart(c, s);
            int m = knot_diagram::crossing_of(d.theta[a]);
            if (m != x && m != y) ext.push_back(d.theta[a]);
        }
    if (ext.size() != 4)
        throw internal_error("full-twist removal expects 4 external strand ends");

    std::vector<std::pair<int, int>> joins;
    std::vector<char> done(4, 0);
    for (int i = 0; i < 4; ++i) {
        if (done[i]) continue;
        int cur = d.theta[ext[i]];
        while (true) {
            int out = knot_diagram::through(cur);
            int mate = d.theta[out];
            int mc = knot_diagram::crossing_of(mate);
            if (mc == x || mc == y) {
                cur = mate;
                continue;
            }
            joins.emplace_back(ext[i], mate);
            for (int j = 0; j < 4; ++j)
                if (ext[j] == mate) done[j] = 1;
            break;
        }
        done[i] = 1;
    }

    remap.assign(d.n, -1);
    int m = 0;
    for (int c = 0; c < d.n; ++c)
        if (c != x && c != y) remap[c] = m++;
    knot_diagram out;
    out.n = m;
    out.theta.assign(4 * m, -1);
    out.over_axis.assign(m, 1);
    auto md = [&](int dart) {
        int c = remap[knot_diagram::crossing_of(dart)];
        return knot_diagram::dart(c, knot_diagram::slot_of(dart));
    };
    for (int a = 0; a < d.darts(); ++a) {
        int ca = knot_diagram::crossing_of(a);
        int cb = knot_diagram::crossing_of(d.theta[a]);
        if (remap[ca] < 0 || remap[cb] < 0) continue;
        out.theta[md(a)] = md(d.theta[a]);
    }
    for (auto [u, v] : joins) {
        out.theta[md(u)] = md(v);
        out.theta[md(v)] = md(u);
    }
    for (int c = 0; c < d.n; ++c)
        if (remap[c] >= 0) out.over_axis[remap[c]] = d.over_axis[c];
    check_involution(out);
    return out;
}

inline bool diagram_twist_reduced(const knot_diagram& d,
                                  const std::vector<twist_region>& regs) {
    face_data fd = trace_faces(d);
    std::vector<int> reg = region_of_crossing(regs, d.n);
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            if (reg[i] != reg[j] && twist_equivalent(d, fd, i, j)) return false;
    return true;
}

} // namespace detail

// Add a crossing circle around every twist region with at least N crossings
// and reduce those regions to r in {1,2} crossings (removing n full twists
// each). The geometric I-bundle attachment has no Euler-characteristic
// effect, so only the count cr(K2) + 2 tw_N - 2 is tracked.
inline augmented_family augment(const knot_diagram& d, long N) {
    if (N < 1) throw domain_error("augment requires N >= 1");
    if (!detail::walk_alternates(d))
        throw not_alternating("augment needs an alternating diagram");
    augmented_family out;
    out.base = d;
    out.threshold_n = N;
    out.regions = detect_twist_regions(d);
    if (!detail::diagram_twist_reduced(d, out.regions))
        throw not_twist_reduced("augment needs a twist reduced diagram");

    knot_diagram cur = d;
    // Track one surviving crossing id per region through the removals.
    std::vector<std::vector<int>> chains;
    for (size_t i = 0; i < out.regions.size(); ++i) {
        auto& r = out.regions[i];
        if (r.length() >= N) {
            r.encircled = true;
            crossing_circle cc;
            cc.region_id = static_cast<int>(i);
            cc.c = r.length();
            cc.r = (r.length() % 2 == 1) ? 1 : 2;
            cc.n = (cc.c - cc.r) / 2;
            out.circles.push_back(cc);
            chains.push_back(r.crossing_ids);
        } else {
            chains.emplace_back();
        }
    }
    out.tw_n_count = static_cast<long>(out.circles.size());

    for (auto& chain : chains) {
        // remove leading pairs until 1 or 2 crossings remain (parity of c)
        while (static_cast<int>(chain.size()) > 2) {
            std::vector<int> remap;
            cur = detail::remove_full_twist(cur, chain[0], chain[1], remap);
            for (auto& other : chains)
                for (auto& id : other) id = (id >= 0 && remap[id] >= 0) ? remap[id] : -1;
            chain.erase(chain.begin(), chain.begin() + 2);
        }
    }
    out.k2 = normalize(cur);

    long expected_removed = 0;
    for (const auto& cc : out.circles) expected_removed += 2 * cc.n;
    if (out.k2.n != d.n - expected_removed)
        throw internal_error("augmentation crossing bookkeeping failed");
    if (!detail::walk_alternates(out.k2))
        throw internal_error("augmented diagram lost alternation");
    faces(out.k2);  // sphere-embedding check

    out.twisted_euler_abs = out.k2.n + 2 * out.tw_n_count - 2;
    return out;
}

} // namespace alterknot

#endif
