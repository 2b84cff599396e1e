#ifndef ALTERKNOT_INTERVAL_HPP
#define ALTERKNOT_INTERVAL_HPP

// Outward-rounded interval arithmetic on top of MPFR.
//
// Every operation rounds the lower endpoint toward -inf and the upper
// endpoint toward +inf, so a value computed through any chain of these
// operations is certified to lie inside the resulting interval. Inequality
// checks against decimal thresholds are then sign-correct by construction:
// `certainly_ge(x, y)` holds only if every point of x is >= every point of y.
//
// Working precision is set in decimal digits (ALTERKNOT_PRECISION at the
// CLI, default 50) and converted to bits with a small guard margin.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "alterknot/errors.hpp"

namespace alterknot {

inline long& interval_decimal_digits() {
    static long digits = 50;
    return digits;
}

inline void set_interval_precision(long decimal_digits) {
    if (decimal_digits < 10 || decimal_digits > 10000)
        throw domain_error("interval precision must be between 10 and 10000 decimal digits");
    interval_decimal_digits() = decimal_digits;
}

inline mpfr_prec_t interval_prec_bits() {
    return static_cast<mpfr_prec_t>(interval_decimal_digits() * 3.3219280948873623) + 16;
}

class interval {
public:
    interval() {
        mpfr_init2(lo_, interval_prec_bits());
        mpfr_init2(hi_, interval_prec_bits());
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    interval(const interval& o) : interval() {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    interval(interval&& o) noexcept : interval() { swap(o); }
    interval& operator=(interval o) noexcept {
        swap(o);
        return *this;
    }
    ~interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    void swap(interval& o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    static interval from_long(long v) {
        interval r;
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    // Exact double (the bits of v, no decimal reinterpretation).
    static interval from_double(double v) {
        interval r;
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        return r;
    }

    // Decimal literal, outward rounded; this is how thresholds like
    // "2.278e-19" enter certified comparisons.
    static interval from_decimal(const std::string& s) {
        interval r;
        if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
            mpfr_nan_p(r.lo_))
            throw domain_error("bad decimal literal: " + s);
        mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
        return r;
    }

    static interval pi() {
        interval r;
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    friend interval operator+(const interval& a, const interval& b) {
        interval r;
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend interval operator-(const interval& a, const interval& b) {
        interval r;
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend interval operator-(const interval& a) {
        interval r;
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }
    friend interval operator*(const interval& a, const interval& b) {
        interval r;
        mpfr_t t;
        mpfr_init2(t, interval_prec_bits());
        const mpfr_srcptr as[2] = {a.lo_, a.hi_};
        const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
        bool first = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }
    friend interval operator/(const interval& a, const interval& b) {
        if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
            throw domain_error("interval division by an interval containing zero");
        interval r;
        mpfr_t t;
        mpfr_init2(t, interval_prec_bits());
        const mpfr_srcptr as[2] = {a.lo_, a.hi_};
        const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
        bool first = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                mpfr_div(t, as[i], bs[j], MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_div(t, as[i], bs[j], MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    interval exp() const {
        interval r;
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    interval log() const {
        if (mpfr_sgn(lo_) <= 0) throw domain_error("interval log of nonpositive value");
        interval r;
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    interval sinh() const {
        interval r;
        mpfr_sinh(r.lo_, lo_, MPFR_RNDD);
        mpfr_sinh(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    interval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw domain_error("interval sqrt of negative value");
        interval r;
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    interval pow_int(unsigned e) const {
        interval r = from_long(1);
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }
    // Inflate both endpoints outward by a decimal absolute error bound.
    interval widened(const std::string& abs_err) const {
        interval e = from_decimal(abs_err);
        interval r;
        mpfr_sub(r.lo_, lo_, e.hi_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, e.hi_, MPFR_RNDU);
        return r;
    }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const {
        return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }

    // Every point of *this >= every point of y (and strict variant).
    friend bool certainly_ge(const interval& x, const interval& y) {
        return mpfr_cmp(x.lo_, y.hi_) >= 0;
    }
    friend bool certainly_gt(const interval& x, const interval& y) {
        return mpfr_cmp(x.lo_, y.hi_) > 0;
    }
    friend bool certainly_le(const interval& x, const interval& y) {
        return mpfr_cmp(x.hi_, y.lo_) <= 0;
    }
    friend bool certainly_lt(const interval& x, const interval& y) {
        return mpfr_cmp(x.hi_, y.lo_) < 0;
    }
    // The two intervals overlap (cannot be certified apart).
    friend bool overlaps(const interval& x, const interval& y) {
        return mpfr_cmp(x.lo_, y.hi_) <= 0 && mpfr_cmp(y.lo_, x.hi_) <= 0;
    }

    std::string str(int digits = 20) const {
        return "[" + endpoint_str(lo_, digits, MPFR_RNDD) + ", " +
               endpoint_str(hi_, digits, MPFR_RNDU) + "]";
    }
    std::string lo_str(int digits = 20) const { return endpoint_str(lo_, digits, MPFR_RNDD); }
    std::string hi_str(int digits = 20) const { return endpoint_str(hi_, digits, MPFR_RNDU); }

private:
    static std::string endpoint_str(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%dR*g", digits);
        char buf[256];
        mpfr_snprintf(buf, sizeof buf, fmt, rnd, v);
        return buf;
    }

    mpfr_t lo_, hi_;
};

inline interval operator*(long a, const interval& b) { return interval::from_long(a) * b; }
inline interval operator/(long a, const interval& b) { return interval::from_long(a) / b; }

} // namespace alterknot

#endif
