// Test-only independent oracles. Nothing here shares evaluation paths with
// the library code it checks: the logarithmic integral comes from the Euler
// series for Ei, the twin prime constant from a truncated prime product with
// a hand-derived tail bracket, and definite integrals from adaptive Simpson
// quadrature in plain long double.

#ifndef BRUN_TESTS_ORACLES_HPP
#define BRUN_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>

#include <mpfr.h>

#include "brun/primes.hpp"
#include "brun/real.hpp"

namespace brun::testing {

// li(x) for x > 1 via Ei(log x) = gamma + log(log x) + sum_k (log x)^k / (k k!).
// Evaluated round-to-nearest at `prec` bits; series truncated when terms fall
// below 2^-(prec+16), so the result is accurate to ~1 ulp at prec bits.
inline Real li_series(const Real& x, long prec = 256) {
    Real L(prec), term(prec), sum(prec), tmp(prec);
    mpfr_log(L.get(), x.get(), MPFR_RNDN);
    mpfr_const_euler(sum.get(), MPFR_RNDN);
    mpfr_log(tmp.get(), L.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    for (unsigned long k = 1; k < 10000; ++k) {
        mpfr_mul(term.get(), term.get(), L.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), term.get(), k, MPFR_RNDN);
        mpfr_div_ui(tmp.get(), term.get(), k, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
        if (!mpfr_zero_p(tmp.get()) &&
            mpfr_get_exp(tmp.get()) < mpfr_get_exp(sum.get()) - prec - 16)
            break;
    }
    return sum;
}

inline Real li2_oracle(long prec = 256) { return li_series(Real::of_ui(2), prec); }

// Bracket for the twin prime constant from the product over odd primes p <= P:
// the truncated product overestimates (every omitted factor is < 1), and the
// omitted log-mass is at most sum_{p>P} 2/(p-1)^2 <= 2/(P-1), giving
//   prod * exp(-2/(P-1)) <= Pi_2 <= prod.
struct TwinPrimeBracket {
    Real lo, hi;
};

inline TwinPrimeBracket twin_prime_oracle(std::uint64_t P, long prec = 192) {
    Real prod(prec), num(prec), den(prec);
    mpfr_set_ui(prod.get(), 1, MPFR_RNDN);
    for_each_prime(3, P, [&](std::uint64_t p) {
        mpfr_set_ui(num.get(), p, MPFR_RNDN);
        mpfr_mul_ui(num.get(), num.get(), p - 2, MPFR_RNDN);
        mpfr_set_ui(den.get(), p - 1, MPFR_RNDN);
        mpfr_sqr(den.get(), den.get(), MPFR_RNDN);
        mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
        mpfr_mul(prod.get(), prod.get(), num.get(), MPFR_RNDN);
    });
    Real tail(prec);
    mpfr_set_ui(tail.get(), 2, MPFR_RNDN);
    mpfr_div_ui(tail.get(), tail.get(), P - 1, MPFR_RNDN);
    mpfr_neg(tail.get(), tail.get(), MPFR_RNDN);
    mpfr_exp(tail.get(), tail.get(), MPFR_RNDN);
    TwinPrimeBracket b{Real(prec), Real(prec)};
    mpfr_mul(b.lo.get(), prod.get(), tail.get(), MPFR_RNDD);
    // widen the upper side by a whisker for the accumulated rounding
    mpfr_set_ui(num.get(), 1, MPFR_RNDN);
    mpfr_nextabove(num.get());
    mpfr_mul(b.hi.get(), prod.get(), num.get(), MPFR_RNDU);
    return b;
}

// Adaptive Simpson quadrature in long double; plenty for 1e-12-ish targets
// on the smooth integrands used in tests.
template <typename F>
long double simpson_step(F&& f, long double a, long double b, long double fa,
                         long double fm, long double fb) {
    return (b - a) / 6.0L * (fa + 4.0L * fm + fb);
}

template <typename F>
long double adaptive_simpson_rec(F&& f, long double a, long double m, long double b,
                                 long double fa, long double fm, long double fb,
                                 long double whole, long double tol, int depth) {
    const long double lm = (a + m) / 2, rm = (m + b) / 2;
    const long double flm = f(lm), frm = f(rm);
    const long double left = simpson_step(f, a, m, fa, flm, fm);
    const long double right = simpson_step(f, m, b, fm, frm, fb);
    if (depth <= 0 || fabsl(left + right - whole) < 15.0L * tol)
        return left + right + (left + right - whole) / 15.0L;
    return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <typename F>
long double adaptive_simpson(F&& f, long double a, long double b, long double rel_tol) {
    const long double m = (a + b) / 2;
    const long double fa = f(a), fm = f(m), fb = f(b);
    const long double whole = simpson_step(f, a, b, fa, fm, fb);
    const long double tol = fabsl(whole) * rel_tol + 1e-300L;
    return adaptive_simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 60);
}

// integral of t^(-3/2) log t over [a, b]
inline long double quad_c2(long double a, long double b) {
    return adaptive_simpson([](long double t) { return logl(t) / (t * sqrtl(t)); },
                            a, b, 1e-14L);
}

// li(x) by quadrature of e^u/u over [log 2, log x] (substitution t = e^u);
// independent of the series oracle above.
inline long double quad_li(long double x) {
    return adaptive_simpson([](long double u) { return expl(u) / u; },
                            logl(2.0L), logl(x), 1e-14L);
}

} // namespace brun::testing

#endif
