// Outward-rounded interval arithmetic over arbitrary-precision endpoints.
//
// The fundamental contract: for any operation f and intervals A, B, the
// returned interval contains {f(a,b) : a in A, b in B}. Endpoints are
// computed with MPFR directed rounding (lower endpoint toward -inf, upper
// toward +inf), so containment survives every finite-precision step.
// Underflow rounds outward (possibly to 0 on the lower endpoint) and is
// never an error; +/-inf endpoints can only appear as explicit overflow
// signals, and NaN endpoints are rejected outright.

#ifndef BRUN_INTERVAL_HPP
#define BRUN_INTERVAL_HPP

#include <cstdint>
#include <string>
#include <utility>

#include <gmp.h>
#include <mpfr.h>

#include "brun/errors.hpp"
#include "brun/real.hpp"

namespace brun {

class Interval {
public:
    // Default: the degenerate interval [0, 0].
    Interval() : lo_(), hi_() {}

    Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) { check(); }

    static Interval point(const Real& v) { return Interval(v, v); }
    static Interval of_ui(unsigned long u) {
        Real v = Real::of_ui(u);
        return Interval(v, v);
    }
    static Interval of_si(long s) {
        Real v = Real::of_si(s);
        return Interval(v, v);
    }

    // Enclose a decimal literal: endpoints are the literal rounded down/up,
    // so non-representable constants like "3.038" widen outward.
    static Interval of_decimal(const std::string& s) {
        return Interval(Real::parse(s, MPFR_RNDD), Real::parse(s, MPFR_RNDU));
    }

    // Parse from two exact hex-float endpoint strings (table/results files).
    static Interval of_hex_pair(const std::string& lo, const std::string& hi) {
        return Interval(Real::parse(lo, MPFR_RNDD), Real::parse(hi, MPFR_RNDU));
    }

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }

    bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }
    bool is_positive() const { return lo_.sign() > 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    bool contains(const Real& v) const {
        return mpfr_cmp(lo_.get(), v.get()) <= 0 && mpfr_cmp(v.get(), hi_.get()) <= 0;
    }
    bool contains(const Interval& o) const {
        return mpfr_cmp(lo_.get(), o.lo_.get()) <= 0 && mpfr_cmp(o.hi_.get(), hi_.get()) <= 0;
    }
    bool contains_q(mpq_srcptr q) const {
        return mpfr_cmp_q(lo_.get(), q) <= 0 && mpfr_cmp_q(hi_.get(), q) >= 0;
    }
    bool contains_ui(unsigned long u) const {
        return lo_.cmp_ui(u) <= 0 && hi_.cmp_ui(u) >= 0;
    }

    Real mid() const {
        Real m;
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m;
    }
    Real width() const {
        Real w;
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }

    std::string hex_lo() const { return lo_.hex(); }
    std::string hex_hi() const { return hi_.hex(); }

    // "[lo, hi]" with `digits` significant decimal digits, for diagnostics.
    std::string str(int digits = 10) const {
        return "[" + lo_.decimal(digits) + ", " + hi_.decimal(digits) + "]";
    }

private:
    void check() const {
        if (lo_.is_nan() || hi_.is_nan())
            throw DomainError("interval endpoint is NaN");
        if (mpfr_cmp(lo_.get(), hi_.get()) > 0)
            throw DomainError("interval endpoints out of order: " + str());
    }

    Real lo_, hi_;
};

namespace detail {

inline Real dir2(int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
                 const Real& a, const Real& b, mpfr_rnd_t rnd) {
    Real r;
    op(r.get(), a.get(), b.get(), rnd);
    return r;
}

inline void min_into(Real& acc, const Real& v) {
    if (mpfr_cmp(v.get(), acc.get()) < 0) acc = v;
}
inline void max_into(Real& acc, const Real& v) {
    if (mpfr_cmp(v.get(), acc.get()) > 0) acc = v;
}

} // namespace detail

inline Interval add(const Interval& a, const Interval& b) {
    return Interval(detail::dir2(mpfr_add, a.lo(), b.lo(), MPFR_RNDD),
                    detail::dir2(mpfr_add, a.hi(), b.hi(), MPFR_RNDU));
}

inline Interval sub(const Interval& a, const Interval& b) {
    return Interval(detail::dir2(mpfr_sub, a.lo(), b.hi(), MPFR_RNDD),
                    detail::dir2(mpfr_sub, a.hi(), b.lo(), MPFR_RNDU));
}

inline Interval mul(const Interval& a, const Interval& b) {
    // Straight endpoint-case enumeration: min/max over the four products,
    // each evaluated once per rounding direction.
    Real lo = detail::dir2(mpfr_mul, a.lo(), b.lo(), MPFR_RNDD);
    detail::min_into(lo, detail::dir2(mpfr_mul, a.lo(), b.hi(), MPFR_RNDD));
    detail::min_into(lo, detail::dir2(mpfr_mul, a.hi(), b.lo(), MPFR_RNDD));
    detail::min_into(lo, detail::dir2(mpfr_mul, a.hi(), b.hi(), MPFR_RNDD));
    Real hi = detail::dir2(mpfr_mul, a.lo(), b.lo(), MPFR_RNDU);
    detail::max_into(hi, detail::dir2(mpfr_mul, a.lo(), b.hi(), MPFR_RNDU));
    detail::max_into(hi, detail::dir2(mpfr_mul, a.hi(), b.lo(), MPFR_RNDU));
    detail::max_into(hi, detail::dir2(mpfr_mul, a.hi(), b.hi(), MPFR_RNDU));
    return Interval(std::move(lo), std::move(hi));
}

inline Interval div(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw DomainError("division by interval containing zero: " + b.str());
    Real lo = detail::dir2(mpfr_div, a.lo(), b.lo(), MPFR_RNDD);
    detail::min_into(lo, detail::dir2(mpfr_div, a.lo(), b.hi(), MPFR_RNDD));
    detail::min_into(lo, detail::dir2(mpfr_div, a.hi(), b.lo(), MPFR_RNDD));
    detail::min_into(lo, detail::dir2(mpfr_div, a.hi(), b.hi(), MPFR_RNDD));
    Real hi = detail::dir2(mpfr_div, a.lo(), b.lo(), MPFR_RNDU);
    detail::max_into(hi, detail::dir2(mpfr_div, a.lo(), b.hi(), MPFR_RNDU));
    detail::max_into(hi, detail::dir2(mpfr_div, a.hi(), b.lo(), MPFR_RNDU));
    detail::max_into(hi, detail::dir2(mpfr_div, a.hi(), b.hi(), MPFR_RNDU));
    return Interval(std::move(lo), std::move(hi));
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }

inline Interval neg(const Interval& a) {
    Real lo, hi;
    mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
    mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}
inline Interval operator-(const Interval& a) { return neg(a); }

// --- monotone elementary functions -----------------------------------------

inline Interval log(const Interval& a) {
    if (a.lo().sign() <= 0)
        throw DomainError("log of nonpositive interval: " + a.str());
    Real lo, hi;
    mpfr_log(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_log(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval sqrt(const Interval& a) {
    if (a.lo().sign() < 0)
        throw DomainError("sqrt of negative interval: " + a.str());
    Real lo, hi;
    mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval root4(const Interval& a) {
    if (a.lo().sign() < 0)
        throw DomainError("root4 of negative interval: " + a.str());
    Real lo, hi;
    mpfr_rootn_ui(lo.get(), a.lo().get(), 4, MPFR_RNDD);
    mpfr_rootn_ui(hi.get(), a.hi().get(), 4, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval exp(const Interval& a) {
    Real lo, hi;
    mpfr_exp(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// 10^e; the widened exponent range keeps 10^2000 (and far beyond) finite.
inline Interval pow10(const Interval& e) {
    Real lo, hi;
    mpfr_exp10(lo.get(), e.lo().get(), MPFR_RNDD);
    mpfr_exp10(hi.get(), e.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval log10(const Interval& a) {
    if (a.lo().sign() <= 0)
        throw DomainError("log10 of nonpositive interval: " + a.str());
    Real lo, hi;
    mpfr_log10(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_log10(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// x^2 without the dependency blowup of mul(x, x) for sign-crossing inputs.
inline Interval sqr(const Interval& a) {
    Real alo_abs, ahi_abs;
    mpfr_abs(alo_abs.get(), a.lo().get(), MPFR_RNDU);
    mpfr_abs(ahi_abs.get(), a.hi().get(), MPFR_RNDU);
    Real lo, hi;
    if (a.contains_zero()) {
        mpfr_set_zero(lo.get(), 1);
        const Real& m = (mpfr_cmp(alo_abs.get(), ahi_abs.get()) >= 0) ? alo_abs : ahi_abs;
        mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
    } else {
        const Real& lo_abs = (a.lo().sign() > 0) ? a.lo() : a.hi();
        const Real& hi_abs = (a.lo().sign() > 0) ? a.hi() : a.lo();
        mpfr_sqr(lo.get(), lo_abs.get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), hi_abs.get(), MPFR_RNDU);
    }
    return Interval(std::move(lo), std::move(hi));
}

// --- validated constants ----------------------------------------------------

inline Interval const_pi() {
    Real lo, hi;
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// li(2) = integral of 1/log t over (0, 2), principal value.
// Hardcoded validated enclosure; tests/support reverifies it against an
// independent Euler-series oracle for Ei(log 2).
inline Interval const_li2() {
    return Interval(Real::parse("1.04516378011749", MPFR_RNDD),
                    Real::parse("1.04516378011750", MPFR_RNDU));
}

// Twin prime constant: product over odd primes of p(p-2)/(p-1)^2.
// Hardcoded validated enclosure; tests reverify against a truncated prime
// product with a rigorous tail bound.
inline Interval const_twin_prime() {
    return Interval(Real::parse("0.66016181584686", MPFR_RNDD),
                    Real::parse("0.66016181584687", MPFR_RNDU));
}

} // namespace brun

#endif
