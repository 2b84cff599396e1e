#ifndef ALTERKNOT_ARC_CENSUS_HPP
#define ALTERKNOT_ARC_CENSUS_HPP

// Empirical verification of the arc-counting bound on an explicit cusped
// hyperbolic surface: the thrice-punctured sphere H^2 / Gamma(2).
//
// Its horoball structure is exactly arithmetic: the maximal cusp
// neighborhoods lift to the Ford circles (Euclidean diameter 1/q^2 at p/q,
// height 1 at infinity), pairwise tangent at Farey neighbors. Shrinking all
// three cusps by a factor t in (0,1] gives cusp-area fraction k = 3t/pi of
// the total area 2 pi. A cusp-to-cusp geodesic between p/q and r/s then has
// truncated length exactly 2 ln|ps - qr| - 2 ln t, which removes all
// numerical geodesic-shooting from the verification path.
//
// Arcs on the surface are Gamma(2)-orbits of unordered ideal point pairs.
// Deduplication uses an exact canonical form; disjointness and embeddedness
// are decided exactly by enumerating the finitely many group elements whose
// translates can reach the compact core of the other arc (every crossing
// point lies on the core of at least one of the two arcs, because two arc
// tails inside one cusp neighborhood lift to disjoint vertical lines).

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "alterknot/bounds.hpp"
#include "alterknot/errors.hpp"

namespace alterknot {

// p/q with gcd(p,q) = 1 and q >= 0; (1,0) is infinity.
struct rational_point {
    long p = 0, q = 1;
    static rational_point make(long p, long q) {
        if (p == 0 && q == 0) throw domain_error("0/0 is not a point");
        long g = std::gcd(std::labs(p), std::labs(q));
        p /= g;
        q /= g;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
        return rational_point{p, q};
    }
    bool infinite() const { return q == 0; }
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    // cusp class on H^2/Gamma(2): 0 <-> infinity (1,0), 1 <-> 0 (0,1), 2 <-> 1 (1,1)
    int cusp_class() const {
        int pp = ((p % 2) + 2) % 2, qq = ((q % 2) + 2) % 2;
        if (pp == 1 && qq == 0) return 0;
        if (pp == 0 && qq == 1) return 1;
        return 2;
    }
    friend bool operator==(const rational_point& a, const rational_point& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const rational_point& a, const rational_point& b) {
        return std::pair(a.p, a.q) < std::pair(b.p, b.q);
    }
};

inline long pair_det_abs(const rational_point& a, const rational_point& b) {
    return std::labs(a.p * b.q - a.q * b.p);
}

// Truncated length of the geodesic between two Ford horoballs scaled by t.
inline double truncated_arc_length(long det_abs, double t) {
    if (det_abs < 1) throw domain_error("coincident endpoints");
    if (!(t > 0.0 && t <= 1.0)) throw domain_error("horoball scale t must be in (0,1]");
    return 2.0 * std::log(static_cast<double>(det_abs)) - 2.0 * std::log(t);
}

// ---------------------------------------------------------------------------
// Gamma(2) canonical key for unordered endpoint pairs
// ---------------------------------------------------------------------------

namespace g2 {

struct mat {
    long a = 1, b = 0, c = 0, d = 1;
    friend mat operator*(const mat& x, const mat& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    long det() const { return a * d - b * c; }
    rational_point apply(const rational_point& x) const {
        return rational_point::make(a * x.p + b * x.q, c * x.p + d * x.q);
    }
    bool in_gamma2() const {
        auto odd = [](long v) { return ((v % 2) + 2) % 2 == 1; };
        return det() == 1 && odd(a) && odd(d) && !odd(b) && !odd(c);
    }
};

// Canonical key of the Gamma(2)-orbit of the unordered pair {x, y}: minimum
// over column swaps/negations and the two Hermite lifts of
// (d', b, g^{-1} mod 2) with gM = [[1, b],[0, d']], b in [0, 2|d'|).
inline std::array<long, 7> pair_key(const rational_point& x, const rational_point& y) {
    std::array<long, 7> best{};
    bool have = false;
    long cols[2][2] = {{x.p, x.q}, {y.p, y.q}};
    for (int swap = 0; swap < 2; ++swap)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int n2 = 0; n2 < 2; ++n2) {
                long p = cols[swap][0] * (n1 ? -1 : 1), q = cols[swap][1] * (n1 ? -1 : 1);
                long r = cols[1 - swap][0] * (n2 ? -1 : 1), s = cols[1 - swap][1] * (n2 ? -1 : 1);
                // g with g (p,q)^T = (1,0)^T
                long g0, g1;  // g = [[g0, g1], [-q, p]]
                {
                    long old_r = p, old_s = q, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
                    while (old_s != 0) {
                        long quo = old_r / old_s;
                        long tmp = old_r - quo * old_s;
                        old_r = old_s;
                        old_s = tmp;
                        long t0 = x0 - quo * y0;
                        x0 = y0;
                        y0 = t0;
                        long t1 = x1 - quo * y1;
                        x1 = y1;
                        y1 = t1;
                    }
                    if (old_r == 1) {
                        g0 = x0;
                        g1 = x1;
                    } else {  // gcd = -1
                        g0 = -x0;
                        g1 = -x1;
                    }
                }
                mat g{g0, g1, -q, p};
                long b = g0 * r + g1 * s;
                long dp = -q * r + p * s;  // determinant of the pair matrix
                long ad = std::labs(dp);
                // two Hermite lifts: b* = b mod |d'| and that + |d'|
                long bm = ((b % ad) + ad) % ad;
                for (int lift = 0; lift < 2; ++lift) {
                    long bstar = bm + lift * ad;
                    long k = (bstar - b) / dp;  // exact by construction
                    // u^k g with u = [[1,1],[0,1]]; tag is (u^k g)^{-1} mod 2
                    mat ukg{g.a + k * g.c, g.b + k * g.d, g.c, g.d};
                    mat inv{ukg.d, -ukg.b, -ukg.c, ukg.a};
                    auto m2 = [](long v) { return ((v % 2) + 2) % 2; };
                    std::array<long, 7> cand{ad,        dp > 0 ? 1 : 0, bstar,    m2(inv.a),
                                             m2(inv.b), m2(inv.c),      m2(inv.d)};
                    if (!have || cand < best) {
                        best = cand;
                        have = true;
                    }
                }
            }
    return best;
}

inline bool equivalent_pairs(const rational_point& x1, const rational_point& y1,
                             const rational_point& x2, const rational_point& y2) {
    return pair_key(x1, y1) == pair_key(x2, y2);
}

} // namespace g2

// ---------------------------------------------------------------------------
// Arc records and enumeration
// ---------------------------------------------------------------------------

struct arc_record {
    rational_point a, b;       // representative lift endpoints
    long det_abs = 1;          // |ps - qr|, the scale-free length datum
    double t = 1.0;            // horoball scale the length refers to
    double truncated_length = 0.0;
    int class_a = 0, class_b = 0;
    bool embedded = true;
    std::array<long, 7> key{};
};

// Descriptive constants of the verification surface.
struct cusped_surface_model {
    double t = 1.0;                    // uniform cusp shrink factor
    static constexpr int cusps = 3;    // classes of p/q mod 2
    double area() const { return 2.0 * M_PI; }  // |chi| = 1
    double k() const { return 3.0 * t / M_PI; } // cusp-area fraction
};

namespace detail_arcs {

// Exact circular-order linking of ideal point pairs: {a,b} separates {c,d}.
// Orientation of a triple via sign(det(a,b) det(b,c) det(c,a)), which is
// representative-independent. Shared endpoints never link.
inline int triple_orientation(const rational_point& a, const rational_point& b,
                              const rational_point& c) {
    auto det2 = [](const rational_point& u, const rational_point& v) {
        return u.p * v.q - u.q * v.p;
    };
    long d1 = det2(a, b), d2 = det2(b, c), d3 = det2(c, a);
    long s = (d1 > 0 ? 1 : d1 < 0 ? -1 : 0) * (d2 > 0 ? 1 : d2 < 0 ? -1 : 0) *
             (d3 > 0 ? 1 : d3 < 0 ? -1 : 0);
    return static_cast<int>(s);
}

inline bool pairs_link(const rational_point& a, const rational_point& b,
                       const rational_point& c, const rational_point& d) {
    if (a == c || a == d || b == c || b == d) return false;
    int s1 = triple_orientation(a, c, b);
    int s2 = triple_orientation(a, d, b);
    if (s1 == 0 || s2 == 0) return false;
    return s1 != s2;
}

// Height at which the geodesic (u, v) leaves the scale-1 Ford ball at u
// (numeric; used only to size the exact search, with a safety margin).
inline double exit_height(const rational_point& u, const rational_point& v) {
    if (u.infinite()) return 1.0;  // leaves {y >= 1} at height 1
    double diam = 1.0 / (static_cast<double>(u.q) * static_cast<double>(u.q));
    if (v.infinite()) return diam;  // vertical line exits at the ball top
    double uu = u.value(), vv = v.value();
    double m = 0.5 * (uu + vv), R = 0.5 * std::fabs(uu - vv);
    // bisection on the angle from the u-side end; g < 0 inside the ball
    auto g = [&](double th) {
        double xx = m + (uu < vv ? -1 : 1) * R * std::cos(th);
        double yy = R * std::sin(th);
        double dx = xx - uu, dy = yy - 0.5 * diam;
        return dx * dx + dy * dy - 0.25 * diam * diam;
    };
    double lo = 0.0, hi = M_PI / 2;
    if (g(hi) < 0) return R;  // ball swallows the top; exit at the apex scale
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return R * std::sin(hi);
}

// Minimum height of the compact core of the geodesic (u, v) w.r.t. the
// scale-1 horoballs (attained at the two truncation points).
inline double core_floor(const rational_point& u, const rational_point& v) {
    return std::min(exit_height(u, v), exit_height(v, u));
}

// Does some Gamma(2)-translate of the geodesic (u1,v1) cross the fixed
// geodesic (u2,v2) at a point of the latter's compact core? Exact: the
// translate must attain height >= the core floor over the core's x-span, so
// with A = c p1 + d q1, B = c r1 + d s1 the product |A B| is bounded by
// det1 / (2 * floor); all such (c,d) rows are enumerated, each extended to
// the finitely many Gamma(2) lifts whose images meet the span.
inline bool translate_hits_core(const rational_point& u1, const rational_point& v1,
                                const rational_point& u2, const rational_point& v2,
                                bool exclude_identity) {
    double floor2 = 0.9 * core_floor(u2, v2);  // outward safety margin
    long det1 = pair_det_abs(u1, v1);
    long smax = static_cast<long>(std::ceil(static_cast<double>(det1) / (2.0 * floor2))) + 1;

    // x-window of the target core (for the translation range)
    double wlo, whi;
    if (u2.infinite() || v2.infinite()) {
        double x = u2.infinite() ? v2.value() : u2.value();
        wlo = x;
        whi = x;
    } else {
        wlo = std::min(u2.value(), v2.value());
        whi = std::max(u2.value(), v2.value());
    }

    auto try_gamma = [&](long c, long d) -> bool {
        if (std::gcd(std::labs(c), std::labs(d)) != 1) return false;
        if (((c % 2) + 2) % 2 != 0 || ((d % 2) + 2) % 2 != 1) return false;
        // base (a,b): a d - b c = 1, a odd (automatic), b even
        long x0, y0;
        {
            long r0 = d, r1 = -c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                long quo = r0 / r1;
                long tmp = r0 - quo * r1;
                r0 = r1;
                r1 = tmp;
                long ts = s0 - quo * s1;
                s0 = s1;
                s1 = ts;
                long tt = t0 - quo * t1;
                t0 = t1;
                t1 = tt;
            }
            if (r0 == 1) {
                x0 = s0;
                y0 = t0;
            } else {
                x0 = -s0;
                y0 = -t0;
            }
        }
        long a = x0, b = y0;  // a d + b (-c) = 1
        if (((b % 2) + 2) % 2 != 0) {
            a += c;
            b += d;
        }
        if (((b % 2) + 2) % 2 != 0) return false;

        // image endpoint vectors under [[a,b],[c,d]], then shift by T^m
        long P1 = a * u1.p + b * u1.q, Q1 = c * u1.p + d * u1.q;
        long P2 = a * v1.p + b * v1.q, Q2 = c * v1.p + d * v1.q;
        // m-window from the x-span overlap (slack 2 on both sides)
        double xs[2];
        int nf = 0;
        if (Q1 != 0) xs[nf++] = static_cast<double>(P1) / Q1;
        if (Q2 != 0) xs[nf++] = static_cast<double>(P2) / Q2;
        long mlo, mhi;
        if (nf == 0) return false;  // both infinite: impossible (det != 0)
        double lo = xs[0], hi = xs[0];
        for (int i = 1; i < nf; ++i) {
            lo = std::min(lo, xs[i]);
            hi = std::max(hi, xs[i]);
        }
        if (nf == 2) {
            mlo = static_cast<long>(std::floor((wlo - hi) / 2.0)) - 1;
            mhi = static_cast<long>(std::ceil((whi - lo) / 2.0)) + 1;
        } else {
            // one image at infinity: the finite one must cross the window
            mlo = static_cast<long>(std::floor((wlo - xs[0]) / 2.0)) - 1;
            mhi = static_cast<long>(std::ceil((whi - xs[0]) / 2.0)) + 1;
        }
        for (long m = mlo; m <= mhi; ++m) {
            rational_point iu = rational_point::make(P1 + 2 * m * Q1, Q1);
            rational_point iv = rational_point::make(P2 + 2 * m * Q2, Q2);
            if (exclude_identity && iu == u1 && iv == v1) continue;
            if (exclude_identity && iu == v1 && iv == u1) continue;
            if (pairs_link(iu, iv, u2, v2)) return true;
        }
        return false;
    };

    // Enumerate rows (c,d) through A = c*u1 vec, B = c*v1 vec with |AB| <= smax.
    // (c,d) is recovered from (A,B) by inverting the endpoint matrix.
    long e1 = u1.p, f1 = u1.q, e2 = v1.p, f2 = v1.q;
    long det_m = e1 * f2 - f1 * e2;  // +- det1, nonzero
    for (long A = -smax; A <= smax; ++A) {
        long bcap = (A == 0) ? smax : smax / std::labs(A);
        for (long B = -bcap; B <= bcap; ++B) {
            if (A == 0 && B == 0) continue;
            // c = (A f2 - B f1)/det_m, d = (B e1 - A e2)/det_m
            long cn = A * f2 - B * f1, dn = B * e1 - A * e2;
            if (cn % det_m != 0 || dn % det_m != 0) continue;
            long c = cn / det_m, d = dn / det_m;
            if (try_gamma(c, d)) return true;
        }
    }
    return false;
}

} // namespace detail_arcs

// Are the chosen geodesic representatives of two distinct arcs disjoint on
// the surface? Decided exactly; see translate_hits_core.
inline bool arcs_disjoint(const arc_record& a1, const arc_record& a2) {
    if (a1.key == a2.key) return false;  // an arc is not disjoint from itself
    if (detail_arcs::translate_hits_core(a1.a, a1.b, a2.a, a2.b, false)) return false;
    if (detail_arcs::translate_hits_core(a2.a, a2.b, a1.a, a1.b, false)) return false;
    return true;
}

inline bool arc_embedded(const rational_point& u, const rational_point& v) {
    return !detail_arcs::translate_hits_core(u, v, u, v, true);
}

// All cusp-to-cusp geodesic arcs with truncated length <= length_cap at
// horoball scale t, between Ford balls of denominator <= qmax, one record
// per Gamma(2)-class. Complete for the cap provided qmax >= 2 t e^(cap/2)
// (windows around the three anchor cusps have denominators up to twice the
// arc's determinant).
inline std::vector<arc_record> enumerate_arcs(long qmax, double t, double length_cap) {
    if (qmax < 1) throw domain_error("enumerate_arcs requires qmax >= 1");
    if (!(t > 0.0 && t <= 1.0)) throw domain_error("enumerate_arcs requires t in (0,1]");
    if (length_cap < 0.0) throw domain_error("enumerate_arcs requires length_cap >= 0");

    // anchors: psi maps the anchor cusp to infinity; we enumerate pairs
    // (infinity, m/n) and pull back by psi^{-1}
    struct anchor {
        g2::mat inv;  // psi^{-1}
    };
    const std::array<anchor, 3> anchors{{
        {{1, 0, 0, 1}},    // infinity itself
        {{0, 1, -1, 0}},   // psi = [[0,-1],[1,0]] sends 0 to infinity
        {{-1, 1, -1, 0}},  // psi = [[0,-1],[1,-1]] sends 1 to infinity
    }};

    std::map<std::array<long, 7>, arc_record> found;
    for (const auto& an : anchors) {
        rational_point base = an.inv.apply(rational_point{1, 0});
        for (long n = 1; n <= qmax; ++n) {
            double len = truncated_arc_length(n, t);
            if (len > length_cap + 1e-12) continue;
            for (long m = 0; m < 2 * n; ++m) {
                if (std::gcd(m, n) != 1) continue;
                rational_point y = an.inv.apply(rational_point::make(m, n));
                arc_record rec;
                rec.a = base;
                rec.b = y;
                rec.det_abs = pair_det_abs(base, y);
                if (rec.det_abs != n) throw internal_error("anchor pullback broke the length");
                rec.t = t;
                rec.truncated_length = len;
                rec.class_a = base.cusp_class();
                rec.class_b = y.cusp_class();
                rec.key = g2::pair_key(base, y);
                auto it = found.find(rec.key);
                if (it == found.end()) found.emplace(rec.key, std::move(rec));
            }
        }
    }
    std::vector<arc_record> out;
    out.reserve(found.size());
    for (auto& [k, rec] : found) {
        rec.embedded = arc_embedded(rec.a, rec.b);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const arc_record& x, const arc_record& y) {
        if (x.truncated_length != y.truncated_length)
            return x.truncated_length < y.truncated_length;
        return x.key < y.key;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------------

struct arc_theorem_row {
    double t = 0, d = 0, k = 0, formula = 0;
    int required = 0;  // ceil(formula) when positive
    int achieved = 0;  // largest pairwise-disjoint embedded collection found
    bool pass = true;
};

struct arc_theorem_report {
    std::vector<arc_theorem_row> rows;
    long qmax = 0;
    bool all_pass = true;
};

inline long arc_enumeration_qmax(double d_max) {
    return static_cast<long>(std::ceil(2.0 * std::exp(d_max))) + 1;
}

inline arc_theorem_report verify_arc_theorem(const std::vector<double>& t_grid,
                                             const std::vector<double>& d_grid, long qmax) {
    if (t_grid.empty() || d_grid.empty()) throw domain_error("empty verification grid");
    double dmax = *std::max_element(d_grid.begin(), d_grid.end());
    long needed = arc_enumeration_qmax(dmax);
    if (qmax < needed)
        throw incomplete_enumeration("qmax " + std::to_string(qmax) + " < required " +
                                     std::to_string(needed) + " for d_max");
    arc_theorem_report rep;
    rep.qmax = qmax;
    for (double t : t_grid) {
        std::vector<arc_record> arcs = enumerate_arcs(qmax, t, 2.0 * dmax);
        std::vector<const arc_record*> emb;
        for (const auto& a : arcs)
            if (a.embedded) emb.push_back(&a);
        size_t n = emb.size();
        std::vector<std::vector<char>> dis(n, std::vector<char>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                dis[i][j] = dis[j][i] = arcs_disjoint(*emb[i], *emb[j]) ? 1 : 0;

        cusped_surface_model model{t};
        for (double d : d_grid) {
            arc_theorem_row row;
            row.t = t;
            row.d = d;
            row.k = model.k();
            row.formula = arc_count_lower(row.k, d, 1.0);
            row.required = row.formula > 0 ? static_cast<int>(std::ceil(row.formula - 1e-12)) : 0;
            // eligible arcs for this d
            std::vector<size_t> el;
            for (size_t i = 0; i < n; ++i)
                if (emb[i]->truncated_length <= 2.0 * d + 1e-12) el.push_back(i);
            // the maximal disjoint collection has at most 3|chi| = 3 arcs
            int best = el.empty() ? 0 : 1;
            for (size_t i = 0; i < el.size() && best < 3; ++i)
                for (size_t j = i + 1; j < el.size() && best < 3; ++j) {
                    if (!dis[el[i]][el[j]]) continue;
                    best = std::max(best, 2);
                    for (size_t l = j + 1; l < el.size(); ++l)
                        if (dis[el[i]][el[l]] && dis[el[j]][el[l]]) {
                            best = 3;
                            break;
                        }
                }
            row.achieved = best;
            row.pass = row.required <= row.achieved;
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

} // namespace alterknot

#endif
