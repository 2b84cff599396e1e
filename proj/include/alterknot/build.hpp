#ifndef ALTERKNOT_BUILD_HPP
#define ALTERKNOT_BUILD_HPP

// Programmatic diagram constructions. All builders construct the shadow
// (planar map) first and then apply the alternating over/under assignment,
// so every diagram produced here is alternating by construction.

#include <numeric>
#include <vector>

#include "alterknot/diagram.hpp"

namespace alterknot {

namespace detail {

// Open-ended diagram under construction. Slots per crossing, ccw:
//   0 = NE, 1 = NW, 2 = SW, 3 = SE.
struct shadow_builder {
    std::vector<int> theta;
    int n = 0;

    int add_crossing() {
        theta.resize(theta.size() + 4, -1);
        return n++;
    }
    void join(int a, int b) {
        if (theta[a] != -1 || theta[b] != -1) throw internal_error("builder end reused");
        theta[a] = b;
        theta[b] = a;
    }
    knot_diagram finish() const {
        knot_diagram d;
        d.n = n;
        d.theta = theta;
        d.over_axis.assign(n, 1);
        check_involution(d);
        return assign_alternating(d);
    }
};

} // namespace detail

// Continuant K(a1, ..., ak); the 4-plat built from the same vector closes to
// a knot exactly when this is odd.
inline long continuant(const std::vector<int>& a) {
    long p = 1, q = 0;  // K(), K(empty prefix)
    for (int ai : a) {
        long r = ai * p + q;
        q = p;
        p = r;
    }
    return p;
}

// Standard 4-plat diagram of the rational tangle with continued fraction
// [a1, ..., ak] (entries >= 1), numerator closure. Entry a1 twists
// horizontally at the east side, a2 vertically at the south side, and so on
// alternating. With all entries >= 2 the twist regions of the result are
// exactly the entries. Throws when the closure is a 2-component link.
inline knot_diagram rational_diagram(const std::vector<int>& cf) {
    if (cf.empty()) throw domain_error("rational_diagram needs at least one entry");
    for (int a : cf)
        if (a < 1) throw domain_error("rational_diagram entries must be >= 1");
    if (continuant(cf) % 2 == 0)
        throw domain_error("this continued fraction closes to a 2-component link");

    detail::shadow_builder b;
    int c0 = b.add_crossing();
    // current open ends
    int nw = knot_diagram::dart(c0, 1), ne = knot_diagram::dart(c0, 0);
    int sw = knot_diagram::dart(c0, 2), se = knot_diagram::dart(c0, 3);
    bool horizontal = true;
    for (size_t i = 0; i < cf.size(); ++i) {
        int count = cf[i] - (i == 0 ? 1 : 0);  // first crossing already placed
        for (int t = 0; t < count; ++t) {
            int c = b.add_crossing();
            if (horizontal) {
                b.join(knot_diagram::dart(c, 1), ne);
                b.join(knot_diagram::dart(c, 2), se);
                ne = knot_diagram::dart(c, 0);
                se = knot_diagram::dart(c, 3);
            } else {
                b.join(knot_diagram::dart(c, 1), sw);
                b.join(knot_diagram::dart(c, 0), se);
                sw = knot_diagram::dart(c, 2);
                se = knot_diagram::dart(c, 3);
            }
        }
        horizontal = !horizontal;
    }
    // Close to the knot: plat closure arcs run along the side of the last
    // twist block (east for a horizontal block, south for a vertical one).
    if (!horizontal) {  // flipped after the loop: last block was horizontal
        b.join(nw, ne);
        b.join(sw, se);
    } else {
        b.join(nw, sw);
        b.join(ne, se);
    }
    return b.finish();
}

// Pretzel diagram P(p1, ..., pk): vertical twist columns joined left to
// right and closed around the outside.
inline knot_diagram pretzel_diagram(const std::vector<int>& p) {
    if (p.size() < 2) throw domain_error("pretzel_diagram needs at least two columns");
    for (int v : p)
        if (v < 1) throw domain_error("pretzel_diagram entries must be >= 1");
    detail::shadow_builder b;
    std::vector<int> top_nw, top_ne, bot_sw, bot_se;
    for (int col = 0; col < static_cast<int>(p.size()); ++col) {
        int prev = -1;
        int first = -1;
        for (int t = 0; t < p[col]; ++t) {
            int c = b.add_crossing();
            if (prev >= 0) {
                b.join(knot_diagram::dart(prev, 2), knot_diagram::dart(c, 1));
                b.join(knot_diagram::dart(prev, 3), knot_diagram::dart(c, 0));
            } else {
                first = c;
            }
            prev = c;
        }
        top_nw.push_back(knot_diagram::dart(first, 1));
        top_ne.push_back(knot_diagram::dart(first, 0));
        bot_sw.push_back(knot_diagram::dart(prev, 2));
        bot_se.push_back(knot_diagram::dart(prev, 3));
    }
    int k = static_cast<int>(p.size());
    for (int col = 0; col + 1 < k; ++col) {
        b.join(top_ne[col], top_nw[col + 1]);
        b.join(bot_se[col], bot_sw[col + 1]);
    }
    b.join(top_ne[k - 1], top_nw[0]);
    b.join(bot_se[k - 1], bot_sw[0]);
    return b.finish();
}

// A closed (2,a) twist chain with a capped (2,b) chain spliced into one of
// its edges: a one-component diagram with exactly two twist regions of sizes
// a and b (a must be odd for the chain to close to a knot). This is the
// connected-sum shape; it is reduced and alternating but not prime.
inline knot_diagram chain_composite(int a, int b) {
    if (a < 3 || b < 2) throw domain_error("chain_composite needs a >= 3, b >= 2");
    if (a % 2 == 0) throw domain_error("chain_composite needs odd a");
    detail::shadow_builder sb;
    std::vector<int> ring(a);
    for (int i = 0; i < a; ++i) ring[i] = sb.add_crossing();
    // close the (2,a) ring except the top edge between ring[0] and ring[1]
    for (int i = 0; i < a; ++i) {
        int j = (i + 1) % a;
        if (i != 0) sb.join(knot_diagram::dart(ring[i], 0), knot_diagram::dart(ring[j], 1));
        sb.join(knot_diagram::dart(ring[i], 3), knot_diagram::dart(ring[j], 2));
    }
    // capped (2,b) chain: an open knotted lump with two free ends
    std::vector<int> lump(b);
    for (int i = 0; i < b; ++i) lump[i] = sb.add_crossing();
    for (int i = 0; i + 1 < b; ++i) {
        sb.join(knot_diagram::dart(lump[i], 0), knot_diagram::dart(lump[i + 1], 1));
        sb.join(knot_diagram::dart(lump[i], 3), knot_diagram::dart(lump[i + 1], 2));
    }
    sb.join(knot_diagram::dart(lump[b - 1], 0), knot_diagram::dart(lump[0], 1));
    // splice the lump into the open ring edge
    sb.join(knot_diagram::dart(ring[0], 0), knot_diagram::dart(lump[0], 2));
    sb.join(knot_diagram::dart(lump[b - 1], 3), knot_diagram::dart(ring[1], 1));
    return sb.finish();
}

} // namespace alterknot

#endif
