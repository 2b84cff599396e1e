#ifndef ALTERKNOT_TWIST_HPP
#define ALTERKNOT_TWIST_HPP

// Twist regions, twist equivalence, flypes, and flype-based twist reduction.
//
// A twist region is a maximal chain of crossings consecutively joined by
// bigon faces (an isolated crossing counts as a chain of length one). Two
// crossings are twist equivalent when a simple closed curve meets the
// diagram exactly at those two crossings, running between opposite regions
// at each; combinatorially that says the two crossings have the same
// unordered pair of opposite corner faces, i.e. they are parallel edges of a
// Tait graph.
//
// A flype is encoded by its curve: a pivot crossing, the pair of opposite
// corners the curve passes through, and the two edges it cuts. Applying it
// reflects the planar map inside the bounded side, flips over/under there,
// and re-plugs the pivot on the far side. The over/under of the pivot is
// re-derived from the alternating condition, which pins it uniquely.

#include <algorithm>
#include <optional>
#include <vector>

#include "alterknot/diagram.hpp"

namespace alterknot {

struct twist_region {
    std::vector<int> crossing_ids;  // ordered along the chain
    int handedness = 0;             // +1 / -1, sign of the region's crossings
    bool encircled = false;         // set by the augmentation stage
    int length() const { return static_cast<int>(crossing_ids.size()); }
};

// Crossing sign under the stored orientation: +1 when the overstrand enters
// at slot 1, -1 when it enters at slot 3 (normal form). A fixed convention;
// only uniformity within a region and the red/blue slope difference use it.
inline std::vector<int> crossing_signs(const knot_diagram& d) {
    std::vector<int> sign(d.n, 0);
    for (int h : knot_walk(d, 0)) {
        if (!d.over_at(h)) continue;
        sign[knot_diagram::crossing_of(h)] = knot_diagram::slot_of(h) == 1 ? +1 : -1;
    }
    return sign;
}

inline std::vector<twist_region> detect_twist_regions(const knot_diagram& d) {
    face_data fd = trace_faces(d);
    for (const auto& f : fd.faces)
        if (f.size() == 1) throw not_reduced("monogon face present");

    // bigon adjacency between crossings
    std::vector<std::vector<int>> adj(d.n);
    for (const auto& f : fd.faces) {
        if (f.size() != 2) continue;
        int c1 = knot_diagram::crossing_of(f[0]);
        int c2 = knot_diagram::crossing_of(f[1]);
        if (c1 == c2) throw not_reduced("degenerate bigon at one crossing");
        adj[c1].push_back(c2);
        adj[c2].push_back(c1);
    }
    for (int c = 0; c < d.n; ++c) {
        std::sort(adj[c].begin(), adj[c].end());
        adj[c].erase(std::unique(adj[c].begin(), adj[c].end()), adj[c].end());
        if (static_cast<int>(adj[c].size()) > 2)
            throw internal_error("bigon chains branch at crossing " + std::to_string(c));
    }

    std::vector<int> sign = crossing_signs(d);
    std::vector<char> used(d.n, 0);
    std::vector<twist_region> out;
    auto emit = [&](std::vector<int> ids) {
        twist_region r;
        r.handedness = sign[ids.front()];
        r.crossing_ids = std::move(ids);
        out.push_back(std::move(r));
    };
    // chains: start from endpoints (degree <= 1)
    for (int c = 0; c < d.n; ++c) {
        if (used[c] || adj[c].size() == 2) continue;
        std::vector<int> chain{c};
        used[c] = 1;
        int prev = -1, cur = c;
        while (true) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev && !used[w]) nxt = w;
            if (nxt < 0) break;
            used[nxt] = 1;
            chain.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        emit(std::move(chain));
    }
    // leftover cycle: the whole diagram is one closed bigon chain
    for (int c = 0; c < d.n; ++c) {
        if (used[c]) continue;
        std::vector<int> cyc{c};
        used[c] = 1;
        int prev = -1, cur = c;
        while (true) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev && !used[w]) nxt = w;
            if (nxt < 0) break;
            used[nxt] = 1;
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        emit(std::move(cyc));
    }
    std::sort(out.begin(), out.end(), [](const twist_region& a, const twist_region& b) {
        return *std::min_element(a.crossing_ids.begin(), a.crossing_ids.end()) <
               *std::min_element(b.crossing_ids.begin(), b.crossing_ids.end());
    });
    return out;
}

namespace detail {

// The two opposite corner-face pairs of a crossing, as sorted pairs.
inline std::array<std::pair<int, int>, 2> opposite_pairs(const face_data& fd, int c) {
    auto mk = [&](int s) {
        int f1 = fd.corner_face(c, s), f2 = fd.corner_face(c, s + 2);
        return std::pair<int, int>(std::min(f1, f2), std::max(f1, f2));
    };
    return {mk(0), mk(1)};
}

} // namespace detail

inline bool twist_equivalent(const knot_diagram& d, const face_data& fd, int c1, int c2) {
    if (c1 == c2) throw domain_error("twist_equivalent needs two distinct crossings");
    if (c1 < 0 || c1 >= d.n || c2 < 0 || c2 >= d.n)
        throw domain_error("crossing id out of range");
    auto p1 = detail::opposite_pairs(fd, c1);
    auto p2 = detail::opposite_pairs(fd, c2);
    for (const auto& a : p1)
        for (const auto& b : p2)
            if (a == b && a.first != a.second) return true;
    return false;
}

inline bool twist_equivalent(const knot_diagram& d, int c1, int c2) {
    return twist_equivalent(d, trace_faces(d), c1, c2);
}

// ---------------------------------------------------------------------------
// Flypes
// ---------------------------------------------------------------------------

struct flype_spot {
    int pivot = -1;
    int corner = 0;     // curve passes corners (corner, corner+2) of the pivot
    int cut1 = -1;      // cut edges, named by their smaller dart
    int cut2 = -1;      // cut1 lies on the leg leaving corner `corner`
    int side = 0;       // 0: tangle holds pivot darts {corner+3, corner};
                        // 1: tangle holds {corner+1, corner+2}
    std::vector<int> tangle;  // crossings strictly inside
};

namespace detail {

inline int edge_id(const knot_diagram& d, int dart) { return std::min(dart, d.theta[dart]); }

// Crossing components after deleting the pivot and the two cut edges.
// Returns component index per crossing, -1 for the pivot; count via out.
inline std::vector<int> cut_components(const knot_diagram& d, int pivot, int e1, int e2,
                                       int* count) {
    std::vector<int> comp(d.n, -1);
    int ncomp = 0;
    for (int s = 0; s < d.n; ++s) {
        if (comp[s] != -1 || s == pivot) continue;
        comp[s] = ncomp;
        std::vector<int> stk{s};
        while (!stk.empty()) {
            int v = stk.back();
            stk.pop_back();
            for (int k = 0; k < 4; ++k) {
                int a = knot_diagram::dart(v, k);
                if (edge_id(d, a) == e1 || edge_id(d, a) == e2) continue;
                int w = knot_diagram::crossing_of(d.theta[a]);
                if (w == pivot || comp[w] != -1) continue;
                comp[w] = ncomp;
                stk.push_back(w);
            }
        }
        ++ncomp;
    }
    *count = ncomp;
    return comp;
}

inline std::optional<flype_spot> make_spot(const knot_diagram& d, int pivot, int corner,
                                           int cut1_dart, int cut2_dart) {
    int e1 = edge_id(d, cut1_dart), e2 = edge_id(d, cut2_dart);
    if (e1 == e2) return std::nullopt;
    // cut edges incident to the pivot make the re-plumbing self-referential
    if (knot_diagram::crossing_of(e1) == pivot ||
        knot_diagram::crossing_of(d.theta[e1]) == pivot ||
        knot_diagram::crossing_of(e2) == pivot ||
        knot_diagram::crossing_of(d.theta[e2]) == pivot)
        return std::nullopt;
    int ncomp = 0;
    std::vector<int> comp = cut_components(d, pivot, e1, e2, &ncomp);
    if (ncomp != 2) return std::nullopt;

    flype_spot s;
    s.pivot = pivot;
    s.corner = corner & 3;
    s.cut1 = e1;
    s.cut2 = e2;
    // The tangle is the side whose pivot darts lead into the same component
    // as the far ends of the cut edges.
    int tcomp = comp[knot_diagram::crossing_of(e1)];
    // both ends of each cut edge must straddle the two components
    auto straddles = [&](int e) {
        int ca = comp[knot_diagram::crossing_of(e)];
        int cb = comp[knot_diagram::crossing_of(d.theta[e])];
        return ca != cb;
    };
    // a cut edge may also have both ends in the tangle (the curve cuts it
    // twice is impossible; but an edge inside one side is an invalid spot)
    if (!straddles(e1) || !straddles(e2)) return std::nullopt;
    if (comp[knot_diagram::crossing_of(e2)] != tcomp &&
        comp[knot_diagram::crossing_of(d.theta[e2])] != tcomp)
        return std::nullopt;

    int side0_dart = knot_diagram::dart(pivot, s.corner);      // P2 of side 0
    int side1_dart = knot_diagram::dart(pivot, s.corner + 1);  // P2 of side 1
    int c0 = comp[knot_diagram::crossing_of(d.theta[side0_dart])];
    int c1 = comp[knot_diagram::crossing_of(d.theta[side1_dart])];
    if (c0 == c1) return std::nullopt;
    s.side = (c0 == tcomp) ? 0 : 1;
    // other pivot dart of the tangle side must agree
    int p1_dart = s.side == 0 ? knot_diagram::dart(pivot, s.corner + 3)
                              : knot_diagram::dart(pivot, s.corner + 2);
    if (comp[knot_diagram::crossing_of(d.theta[p1_dart])] != tcomp) return std::nullopt;
    for (int c = 0; c < d.n; ++c)
        if (comp[c] == tcomp) s.tangle.push_back(c);
    if (s.tangle.empty() || static_cast<int>(s.tangle.size()) == d.n - 1)
        return std::nullopt;  // nothing to flip, or nothing outside
    return s;
}

} // namespace detail

// All flype curves through each crossing: the curve leaves one corner,
// crosses an edge of that corner's face into a middle face, crosses a second
// edge into the opposite corner's face, and closes up.
inline std::vector<flype_spot> enumerate_flype_spots(const knot_diagram& d) {
    face_data fd = trace_faces(d);
    std::vector<flype_spot> spots;
    for (int c = 0; c < d.n; ++c) {
        for (int corner = 0; corner < 2; ++corner) {
            int F = fd.corner_face(c, corner);
            int Fp = fd.corner_face(c, corner + 2);
            if (F == Fp) continue;
            for (int da : fd.faces[F]) {
                int X = fd.face_of_dart[d.theta[da]];
                if (X == F || X == Fp) continue;
                for (int db : fd.faces[X]) {
                    if (fd.face_of_dart[d.theta[db]] != Fp) continue;
                    auto s = detail::make_spot(d, c, corner, da, db);
                    if (s) spots.push_back(std::move(*s));
                }
            }
        }
    }
    return spots;
}

// Apply a flype. The tangle side of the spot is reflected (rotation reversed
// and over/under flipped), the pivot is re-plugged at the cut edges, and the
// pivot's over/under is restored from the alternating condition.
inline knot_diagram apply_flype(const knot_diagram& d, const flype_spot& s) {
    std::vector<char> in_tangle(d.n, 0);
    for (int c : s.tangle) in_tangle[c] = 1;
    if (in_tangle[s.pivot]) throw domain_error("flype tangle contains the pivot");

    int a = s.corner;
    int P2, P1, OA, OB;
    if (s.side == 0) {
        P2 = knot_diagram::dart(s.pivot, a);
        P1 = knot_diagram::dart(s.pivot, a + 3);
        OA = knot_diagram::dart(s.pivot, a + 1);
        OB = knot_diagram::dart(s.pivot, a + 2);
    } else {
        P2 = knot_diagram::dart(s.pivot, a + 1);
        P1 = knot_diagram::dart(s.pivot, a + 2);
        OA = knot_diagram::dart(s.pivot, a);
        OB = knot_diagram::dart(s.pivot, a + 3);
    }
    int alpha = d.theta[P2], beta = d.theta[P1];
    int O1 = d.theta[OA], O2 = d.theta[OB];

    auto tangle_end = [&](int e) {
        int x = e, y = d.theta[e];
        bool xin = in_tangle[knot_diagram::crossing_of(x)];
        bool yin = in_tangle[knot_diagram::crossing_of(y)];
        if (xin == yin) throw internal_error("cut edge does not straddle the tangle");
        return xin ? std::pair<int, int>(x, y) : std::pair<int, int>(y, x);
    };
    auto [a1, b1] = tangle_end(s.cut1);
    auto [a2, b2] = tangle_end(s.cut2);

    // Reflect the tangle: reverse each rotation (slot s -> (4 - s) mod 4) and
    // flip over/under there.
    auto refl = [&](int dart) {
        int c = knot_diagram::crossing_of(dart);
        if (!in_tangle[c]) return dart;
        return knot_diagram::dart(c, (4 - knot_diagram::slot_of(dart)) & 3);
    };
    knot_diagram out;
    out.n = d.n;
    out.theta.assign(d.darts(), -1);
    out.over_axis = d.over_axis;
    for (int c : s.tangle) out.over_axis[c] = static_cast<uint8_t>(1 - out.over_axis[c]);
    for (int x = 0; x < d.darts(); ++x) {
        int y = d.theta[x];
        out.theta[refl(x)] = refl(y);
        out.theta[refl(y)] = refl(x);
    }
    auto join = [&](int x, int y) {
        out.theta[x] = y;
        out.theta[y] = x;
    };
    int piv = s.pivot;
    if (s.side == 0) {
        join(O1, refl(beta));
        join(O2, refl(alpha));
        join(knot_diagram::dart(piv, 0), b1);
        join(knot_diagram::dart(piv, 1), refl(a2));
        join(knot_diagram::dart(piv, 2), refl(a1));
        join(knot_diagram::dart(piv, 3), b2);
    } else {
        join(O1, refl(beta));
        join(O2, refl(alpha));
        join(knot_diagram::dart(piv, 0), refl(a2));
        join(knot_diagram::dart(piv, 1), b1);
        join(knot_diagram::dart(piv, 2), b2);
        join(knot_diagram::dart(piv, 3), refl(a1));
    }
    check_involution(out);
    if (static_cast<int>(trace_faces(out).faces.size()) != out.n + 2)
        throw internal_error("flype broke the sphere embedding");

    // Alternation pins the pivot's over/under.
    bool ok = false;
    for (int bit = 0; bit < 2 && !ok; ++bit) {
        out.over_axis[piv] = static_cast<uint8_t>(bit);
        if (detail::walk_alternates(out)) ok = true;
    }
    if (!ok) throw internal_error("flype result is not alternating either way");
    return normalize(out);
}

// ---------------------------------------------------------------------------
// Twist reduction
// ---------------------------------------------------------------------------

struct flype_move {
    int pivot, target, corner, side;
};

struct twist_reduction {
    knot_diagram diagram;
    std::vector<flype_move> moves;
};

namespace detail {

inline std::vector<int> region_of_crossing(const std::vector<twist_region>& regs, int n) {
    std::vector<int> reg(n, -1);
    for (size_t i = 0; i < regs.size(); ++i)
        for (int c : regs[i].crossing_ids) reg[c] = static_cast<int>(i);
    return reg;
}

// Merge candidate: flype with the given pivot whose curve follows the
// twist-equivalence witness of (pivot, target) and slides past the target,
// cutting the two edges on one side of it. Success lands the pivot in a
// bigon with the target.
inline std::optional<flype_spot> merge_spot(const knot_diagram& d, const face_data& fd,
                                            int pivot, int target, int witness_corner_pivot,
                                            int target_cut_side) {
    int a = witness_corner_pivot & 1;  // canonical corner index at the pivot
    int F = fd.corner_face(pivot, a);
    int Fp = fd.corner_face(pivot, a + 2);
    // locate the matching corner pair at the target
    int at = -1;
    for (int k = 0; k < 2; ++k) {
        int G = fd.corner_face(target, k), Gp = fd.corner_face(target, k + 2);
        if ((G == F && Gp == Fp) || (G == Fp && Gp == F)) at = k;
    }
    if (at < 0) return std::nullopt;
    // cut darts on one side of the target: {at+1, at+2} or {at+3, at}
    int s1 = target_cut_side == 0 ? at + 1 : at + 3;
    int s2 = target_cut_side == 0 ? at + 2 : at + 4;
    int cut_a = knot_diagram::dart(target, s1);
    int cut_b = knot_diagram::dart(target, s2);
    // cut1 must lie on the leg from the pivot corner `a`, i.e. border F.
    auto borders = [&](int dart, int face) {
        return fd.face_of_dart[dart] == face || fd.face_of_dart[d.theta[dart]] == face;
    };
    if (!borders(cut_a, F)) std::swap(cut_a, cut_b);
    if (!borders(cut_a, F) || !borders(cut_b, Fp)) return std::nullopt;
    return make_spot(d, pivot, a, cut_a, cut_b);
}

inline long same_region_equivalent_pairs(const knot_diagram& d,
                                         const std::vector<twist_region>& regs) {
    face_data fd = trace_faces(d);
    std::vector<int> reg = region_of_crossing(regs, d.n);
    long count = 0;
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            if (reg[i] == reg[j] && twist_equivalent(d, fd, i, j)) ++count;
    return count;
}

} // namespace detail

// Consolidate twist equivalent crossings into common twist regions by a
// recorded sequence of flypes. Requires a prime, reduced, alternating
// diagram; output has the same crossing number and is twist reduced.
inline twist_reduction twist_reduce(const knot_diagram& d0) {
    diagram_report rep = validate(d0);
    if (!rep.alternating) throw not_alternating("twist_reduce needs an alternating diagram");
    if (!rep.reduced) throw not_reduced("twist_reduce needs a reduced diagram");
    if (!rep.prime) throw not_prime("twist_reduce needs a prime diagram");

    twist_reduction out;
    out.diagram = d0;
    for (int guard = 0; guard <= 2 * d0.n + 4; ++guard) {
        const knot_diagram& d = out.diagram;
        std::vector<twist_region> regs = detect_twist_regions(d);
        std::vector<int> reg = detail::region_of_crossing(regs, d.n);
        face_data fd = trace_faces(d);

        // cross-region twist-equivalent pairs, pivot from the smaller region
        struct cand {
            int pivot, target;
            long pivot_sz, target_sz;
        };
        std::vector<cand> cands;
        for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j) {
                if (i == j || reg[i] == reg[j]) continue;
                long si = regs[reg[i]].length(), sj = regs[reg[j]].length();
                if (si > sj) continue;  // pivot the smaller region's crossing
                if (!twist_equivalent(d, fd, i, j)) continue;
                cands.push_back({i, j, si, sj});
            }
        if (cands.empty()) break;
        std::sort(cands.begin(), cands.end(), [](const cand& a, const cand& b) {
            if (a.pivot_sz != b.pivot_sz) return a.pivot_sz < b.pivot_sz;
            if (a.pivot != b.pivot) return a.pivot < b.pivot;
            return a.target < b.target;
        });

        long metric = detail::same_region_equivalent_pairs(d, regs);
        long long det = knot_determinant(d);
        bool advanced = false;
        for (const auto& c : cands) {
            for (int corner = 0; corner < 2 && !advanced; ++corner)
                for (int side = 0; side < 2 && !advanced; ++side) {
                    auto spot = detail::merge_spot(d, fd, c.pivot, c.target, corner, side);
                    if (!spot) continue;
                    knot_diagram next;
                    try {
                        next = apply_flype(d, *spot);
                    } catch (const error&) {
                        continue;
                    }
                    std::vector<twist_region> nregs;
                    try {
                        nregs = detect_twist_regions(next);
                    } catch (const error&) {
                        continue;
                    }
                    if (knot_determinant(next) != det) continue;
                    if (detail::same_region_equivalent_pairs(next, nregs) <= metric) continue;
                    out.moves.push_back({c.pivot, c.target, spot->corner, spot->side});
                    out.diagram = std::move(next);
                    advanced = true;
                }
            if (advanced) break;
        }
        if (!advanced)
            throw internal_error("twist_reduce: no merging flype applies");
    }
    return out;
}

inline int twist_number(const knot_diagram& d) {
    return static_cast<int>(detect_twist_regions(twist_reduce(d).diagram).size());
}

// Number of twist regions with at least N crossings (on a diagram taken to
// be twist reduced already).
inline int tw_n(const knot_diagram& d, long N) {
    if (N < 1) throw domain_error("tw_n requires N >= 1");
    int count = 0;
    for (const auto& r : detect_twist_regions(d))
        if (r.length() >= N) ++count;
    return count;
}

} // namespace alterknot

#endif
