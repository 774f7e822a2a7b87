#pragma once
#include <algorithm>

#include <cstdint>
#include <numeric>
#include <vector>

namespace triverify {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1u) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1u;
    }
    return r;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// lcm with overflow reporting: returns 0 on overflow.
inline std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (q > UINT64_MAX / b) return 0;
    return q * b;
}

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n) {
    if ((n & 1u) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

inline void factor_u64_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    while (n > 1) {
        if (is_prime_u64(n)) {
            out.push_back(n);
            return;
        }
        std::uint64_t d = pollard_brent(n);
        factor_u64_rec(d, out);
        n /= d;
    }
}

}  // namespace detail

// Complete factorization of a 64-bit integer (trial division for small
// factors, Brent's rho for the rest). Returns sorted primes with multiplicity.
inline std::vector<std::uint64_t> factor_u64_complete(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) detail::factor_u64_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline const std::vector<std::uint32_t>& small_primes_to_million() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        sieve[0] = sieve[1] = false;
        for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i <= limit; ++i)
            if (sieve[i])
                for (std::uint32_t j = i * i; j <= limit; j += i) sieve[j] = false;
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i)
            if (sieve[i]) out.push_back(i);
        return out;
    }();
    return primes;
}

}  // namespace triverify
