// Real: RAII wrapper around an MPFR floating-point number.
//
// Every rigorous quantity in the project is built from these. The wrapper
// keeps the exponent range widened to the library maximum on every thread
// that touches a Real, so magnitudes like 10^2000 (grid points) and
// 10^-1000 (their reciprocals) stay representable; overflow to +inf can
// then only mean a genuine range violation, never a formula evaluation
// that should have been finite.

#ifndef BRUN_REAL_HPP
#define BRUN_REAL_HPP

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>

#include <mpfr.h>

#include "brun/errors.hpp"

namespace brun {

// Working mantissa width for newly created values.
struct Precision {
    long bits = 128;
};

namespace detail {

inline std::atomic<long>& default_bits_storage() {
    static std::atomic<long> bits{128};
    return bits;
}

// MPFR's exponent range is per-thread state; widen it once per thread.
inline void ensure_thread_ready() {
    thread_local const bool done = [] {
        mpfr_set_emin(mpfr_get_emin_min());
        mpfr_set_emax(mpfr_get_emax_max());
        return true;
    }();
    (void)done;
}

} // namespace detail

inline long default_precision() { return detail::default_bits_storage().load(); }

inline void set_default_precision(Precision p) {
    if (p.bits < 53)
        throw DomainError("mantissa_bits must be >= 53, got " + std::to_string(p.bits));
    detail::default_bits_storage().store(p.bits);
}

class Real {
public:
    Real() {
        detail::ensure_thread_ready();
        mpfr_init2(v_, default_precision());
        mpfr_set_zero(v_, 1);
    }
    explicit Real(long prec_bits) {
        detail::ensure_thread_ready();
        mpfr_init2(v_, prec_bits);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        detail::ensure_thread_ready();
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        detail::ensure_thread_ready();
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    long precision() const { return mpfr_get_prec(v_); }

    static Real of_ui(unsigned long u) {
        Real r;
        mpfr_set_ui(r.v_, u, MPFR_RNDN); // exact when u fits the mantissa
        return r;
    }
    static Real of_si(long s) {
        Real r;
        mpfr_set_si(r.v_, s, MPFR_RNDN);
        return r;
    }
    static Real of_double(double d) {
        Real r;
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }

    // Parse a decimal or (with 0x prefix) hexadecimal float literal.
    static Real parse(const std::string& s, mpfr_rnd_t rnd) {
        Real r;
        char* end = nullptr;
        mpfr_strtofr(r.v_, s.c_str(), &end, 0, rnd);
        if (end == s.c_str() || *end != '\0')
            throw DomainError("unparseable numeric literal: '" + s + "'");
        return r;
    }

    // Exact hexadecimal representation; round-trips bit-for-bit through parse().
    std::string hex() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%Ra", v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    // Decimal rendering for humans; `digits` significant digits, round to nearest.
    std::string decimal(int digits = 17) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_ui(unsigned long u) const { return mpfr_cmp_ui(v_, u); }

    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }
    bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Floor to an unsigned integer; caller guarantees the value fits.
    std::uint64_t floor_u64() const {
        if (!is_finite() || sign() < 0 || mpfr_cmp_ui(v_, ~0UL) > 0)
            throw DomainError("value does not floor into uint64: " + decimal(8));
        return static_cast<std::uint64_t>(mpfr_get_ui(v_, MPFR_RNDD));
    }

private:
    mpfr_t v_;
};

} // namespace brun

#endif
