#ifndef ALTERKNOT_CONSTANTS_HPP
#define ALTERKNOT_CONSTANTS_HPP

#include <string>

#include "alterknot/interval.hpp"

namespace alterknot {

// Geometric constants used across the bounds chain. The volume literals are
// stored as decimal strings so they can be re-read at any working precision;
// each carries an explicit absolute error bound which the interval layer
// applies outward. Both are correct to the printed length.
//
//   v3: volume of the regular ideal hyperbolic tetrahedron
//   v8: volume of the regular ideal hyperbolic octahedron
struct geometric_constants {
    std::string v3_literal = "1.014941606409653625";
    std::string v3_abs_err = "5e-18";
    std::string v8_literal = "3.663862376708876060";
    std::string v8_abs_err = "5e-18";

    interval v3() const { return interval::from_decimal(v3_literal).widened(v3_abs_err); }
    interval v8() const { return interval::from_decimal(v8_literal).widened(v8_abs_err); }
    double v3_d() const { return v3().mid_double(); }
    double v8_d() const { return v8().mid_double(); }

    // Horoball/horocycle packing density bounds: 3/pi in dimension 2,
    // sqrt(3)/(2 v3) in dimension 3.
    interval boroczky_2d() const { return interval::from_long(3) / interval::pi(); }
    interval boroczky_3d() const {
        return interval::from_long(3).sqrt() / (interval::from_long(2) * v3());
    }

    // Meridian length bounds on the maximal cusp of an alternating knot:
    // at most 3 in general, at least 2^(1/4) outside the two exceptional
    // knots (figure-eight and the 7-determinant twist knot).
    long meridian_upper = 3;
    interval meridian_lower_general() const {
        return interval::from_long(2).sqrt().sqrt();
    }

    // Sanity relation kept under test: v8 < 4 v3 (about 3.664 < 4.060).
    bool sane() const { return certainly_lt(v8(), interval::from_long(4) * v3()); }
};

// N-thresholds for the twisted-surface pipeline. The smaller one is where
// the twisted surfaces are known to be essential, the larger one is required
// by the homotopic-arc count; every default in this library uses the larger.
inline constexpr long twisted_essential_min_n = 91;
inline constexpr long twisted_homotopy_min_n = 121;

// Twist-number threshold above which every nontrivial surgery is hyperbolic,
// and the Gromov-norm threshold for the surgery finiteness statement.
inline const std::string surgery_tw_threshold_literal = "1.361e20";
inline const std::string finiteness_norm_literal = "8.561e20";

} // namespace alterknot

#endif
