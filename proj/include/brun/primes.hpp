// Small prime utilities: a plain Eratosthenes sieve for base-prime lists and
// a segmented visitor for streaming primes past memory-comfortable limits.

#ifndef BRUN_PRIMES_HPP
#define BRUN_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace brun {

inline std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= n; j += i)
                composite[j] = true;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

// Visit all primes in [lo, hi] in ascending order.
template <typename Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    if (hi < 2 || hi < lo) return;
    if (lo <= 2 && hi >= 2) fn(std::uint64_t{2});
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    const auto base = primes_upto(static_cast<std::uint32_t>(root));

    constexpr std::uint64_t span = 1 << 22; // odd candidates per segment
    std::uint64_t start = lo | 1;           // odds only from here on
    if (start < 3) start = 3;
    std::vector<bool> comp;
    for (std::uint64_t seg_lo = start; seg_lo <= hi; seg_lo += 2 * span) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + 2 * span - 2);
        const std::uint64_t count = (seg_hi - seg_lo) / 2 + 1;
        comp.assign(count, false);
        for (std::uint32_t p : base) {
            if (p == 2) continue;
            const std::uint64_t p2 = std::uint64_t{p} * p;
            if (p2 > seg_hi) break;
            // first odd multiple of p in [max(seg_lo, p^2), seg_hi]
            std::uint64_t m = std::max<std::uint64_t>(p2, ((seg_lo + p - 1) / p) * p);
            if (m % 2 == 0) m += p;
            for (; m <= seg_hi; m += 2 * p) comp[(m - seg_lo) / 2] = true;
        }
        for (std::uint64_t i = 0; i < count; ++i)
            if (!comp[i]) fn(seg_lo + 2 * i);
    }
}

} // namespace brun

#endif
