#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triverify/bigint.hpp"
#include "triverify/errors.hpp"
#include "triverify/numtheory.hpp"

namespace triverify {

// The orders {m, n} of a putative generating pair. Order-1 entries are
// degenerate and rejected here rather than downstream.
struct OrderPair {
    std::uint64_t m;
    std::uint64_t n;

    OrderPair(std::uint64_t m_, std::uint64_t n_) : m(m_), n(n_) {
        if (m < 2 || n < 2) throw Error("OrderPair: m and n must be at least 2");
    }
};

struct TwoPrimeForm {
    std::uint32_t a = 0;  // exponent of 2
    std::uint64_t s = 0;  // the odd prime
    std::uint32_t b = 0;  // its exponent
};

// Prime factorization by trial division to 10^6 plus deterministic 64-bit
// primality on the cofactor. Anything that survives both is reported in
// `unfactored` rather than being guessed at.
struct Factorization {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_powers;  // ascending primes
    BigInt unfactored = 1;

    bool complete() const { return unfactored == 1; }

    BigInt reconstruct() const {
        BigInt v = unfactored;
        for (auto [p, e] : prime_powers) v *= bigint_pow(BigInt(p), e);
        return v;
    }
};

inline Factorization factor_integer(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) throw Error("factor_integer: zero has no factorization");
    Factorization out;
    for (std::uint32_t p : small_primes_to_million()) {
        if (n == 1) break;
        if (BigInt(p) * p > n) break;
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.prime_powers.emplace_back(p, e);
        }
    }
    if (n > 1) {
        auto small = to_u64(n);
        if (small && (*small <= 1'000'000ull * 1'000'000ull || is_prime_u64(*small))) {
            // After trial division to 10^6 a cofactor below 10^12 is prime.
            out.prime_powers.emplace_back(*small, 1);
        } else {
            out.unfactored = n;
        }
    }
    return out;
}

inline std::optional<TwoPrimeForm> two_prime_form(const BigInt& chi) {
    if (chi == 0) throw Error("two_prime_form: chi must be nonzero");
    BigInt v = chi < 0 ? BigInt(-chi) : chi;
    std::uint32_t a = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++a;
    }
    if (a == 0 || v == 1) return std::nullopt;
    Factorization odd = factor_integer(v);
    if (!odd.complete() || odd.prime_powers.size() != 1) return std::nullopt;
    TwoPrimeForm f;
    f.a = a;
    f.s = odd.prime_powers[0].first;
    f.b = odd.prime_powers[0].second;
    return f;
}

// Largest power of p dividing x, and the cofactor: x = x_p * x_p'.
inline std::pair<BigInt, BigInt> p_part(const BigInt& x, std::uint64_t p) {
    if (x < 1) throw Error("p_part: x must be positive");
    if (!is_prime_u64(p)) throw Error("p_part: p must be prime");
    BigInt xp = 1, rest = x;
    while (rest % p == 0) {
        rest /= p;
        xp *= p;
    }
    return {xp, rest};
}

inline std::string signed_prime_power_string(const BigInt& value, const Factorization& fact) {
    if (value == 0) return "0";
    std::string out = value < 0 ? "-" : "";
    bool first = true;
    for (auto [p, e] : fact.prime_powers) {
        if (!first) out += '*';
        out += std::to_string(p);
        if (e > 1) out += '^' + std::to_string(e);
        first = false;
    }
    if (!fact.complete()) {
        if (!first) out += '*';
        out += '[' + fact.unfactored.str() + ']';
        first = false;
    }
    if (first) out += '1';  // |value| == 1
    return out;
}

// chi = |G| (1/m - 1/2 + 1/n), held exactly. A non-integer chi is a flagged
// result (the triple is not realizable with that order), never an exception.
struct EulerResult {
    BigInt numerator;    // chi = numerator / denominator, fully reduced
    BigInt denominator;  // >= 1
    Factorization factorization;  // of |chi| when integral and nonzero
    std::optional<TwoPrimeForm> two_prime;

    bool integral() const { return denominator == 1; }
    const BigInt& chi() const { return numerator; }  // meaningful when integral()

    std::string to_string() const {
        if (!integral()) return numerator.str() + "/" + denominator.str() + " (non-integer)";
        if (numerator == 0) return "0";
        return numerator.str() + " = " + signed_prime_power_string(numerator, factorization);
    }

    std::string canonical_form() const {
        if (!integral()) return numerator.str() + "/" + denominator.str();
        return signed_prime_power_string(numerator, factorization);
    }
};

inline EulerResult euler_characteristic(const BigInt& group_order, const OrderPair& pair) {
    if (group_order < 1) throw Error("euler_characteristic: order must be positive");
    BigInt m(pair.m), n(pair.n);
    EulerResult out;
    out.numerator = group_order * (2 * n - m * n + 2 * m);
    out.denominator = 2 * m * n;
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(out.numerator), out.denominator);
    if (g > 1) {
        out.numerator /= g;
        out.denominator /= g;
    }
    if (out.denominator == 1 && out.numerator != 0) {
        out.factorization = factor_integer(out.numerator);
        out.two_prime = two_prime_form(out.numerator);
    }
    return out;
}

namespace detail {

inline int mobius(std::uint32_t n) {
    int mu = 1;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Phi_a(q), evaluated exactly via prod_{d|a} (q^d - 1)^{mu(a/d)}.
inline BigInt cyclotomic_value(std::uint32_t a, std::uint64_t q) {
    BigInt num = 1, den = 1;
    for (std::uint32_t d = 1; d <= a; ++d) {
        if (a % d != 0) continue;
        int mu = mobius(a / d);
        if (mu == 0) continue;
        BigInt term = bigint_pow(BigInt(q), d) - 1;
        (mu == 1 ? num : den) *= term;
    }
    if (num % den != 0) throw Error("cyclotomic_value: non-exact division");
    return num / den;
}

}  // namespace detail

struct PpdQuery {
    std::uint64_t q;
    std::uint32_t a;
};

// Smallest primitive prime divisor of q^a - 1, or nullopt exactly when
// Zsigmondy's exceptions apply. Every primitive prime divides Phi_a(q), so
// only the cyclotomic value needs factoring; the budget bounds that value.
inline std::optional<std::uint64_t> zsigmondy_ppd(const PpdQuery& query,
                                                  const BigInt& factor_budget = bigint_pow(BigInt(2), 64)) {
    if (query.q < 2 || query.a < 2) throw Error("zsigmondy_ppd: require q >= 2, a >= 2");

    BigInt phi = detail::cyclotomic_value(query.a, query.q);
    if (phi > factor_budget)
        throw BudgetExceeded("zsigmondy_ppd: cyclotomic value " + phi.str() +
                             " exceeds factorization budget");
    auto phi64 = to_u64(phi);
    if (!phi64)
        throw BudgetExceeded("zsigmondy_ppd: cyclotomic value exceeds 64 bits");
    std::vector<std::uint64_t> primes = factor_u64_complete(*phi64);

    auto primitive = [&](std::uint64_t t) {
        for (std::uint32_t i = 1; i < query.a; ++i)
            if (powmod_u64(query.q % t, i, t) == 1) return false;
        return true;
    };
    for (std::uint64_t t : primes)
        if (primitive(t)) return t;
    return std::nullopt;
}

enum class CatalanCase {
    NineException,  // q = 9, the unique proper-power value of the form 2^a +- 1
    PrimeForced,    // q itself prime (consistent with q = p)
    Unconstrained,  // q is not of the form 2^a +- 1
};

inline CatalanCase catalan_constraint(std::uint64_t q) {
    if (q < 2) throw Error("catalan_constraint: q must be a prime power >= 2");
    Factorization f = factor_integer(BigInt(q));
    if (!f.complete() || f.prime_powers.size() != 1)
        throw Error("catalan_constraint: q is not a prime power");
    std::uint32_t k = f.prime_powers[0].second;

    auto is_pow2 = [](std::uint64_t x) { return x >= 2 && (x & (x - 1)) == 0; };
    bool of_form = is_pow2(q - 1) || is_pow2(q + 1);
    if (!of_form) return CatalanCase::Unconstrained;
    if (k == 1) return CatalanCase::PrimeForced;
    if (q == 9) return CatalanCase::NineException;
    throw Error("catalan_constraint: proper prime power of form 2^a +- 1 other than 9 "
                "contradicts Mihailescu's theorem");
}

// One row of the even-characteristic PSL_2 scan: |G| = q(q^2-1) with
// {m, n} = {q+1, q-1}, q = 2^x. Exact evaluation gives
// chi = -q (q^2 - 4q - 1) / 2; the printed source polynomial q^2 - 4q + 1 is
// reported alongside so the two readings can be compared.
struct ScanRow {
    std::uint32_t x = 0;
    std::uint64_t q = 0;
    EulerResult chi;
    BigInt derived_polynomial;              // q^2 - 4q - 1
    BigInt printed_polynomial;              // q^2 - 4q + 1
    std::optional<bool> derived_poly_prime;  // nullopt when beyond 64-bit testing
    std::optional<bool> printed_poly_prime;
    bool flagged = false;  // |chi| = 2^a s^b with a, b >= 1
};

inline std::vector<ScanRow> scan_psl2_even(std::uint32_t x_max) {
    if (x_max < 2 || x_max > 63) throw Error("scan_psl2_even: require 2 <= x_max <= 63");
    std::vector<ScanRow> rows;
    for (std::uint32_t x = 2; x <= x_max; ++x) {
        ScanRow row;
        row.x = x;
        row.q = 1ull << x;
        BigInt q(row.q);
        BigInt order = q * (q * q - 1);
        row.chi = euler_characteristic(order, OrderPair(row.q + 1, row.q - 1));
        row.derived_polynomial = q * q - 4 * q - 1;
        row.printed_polynomial = q * q - 4 * q + 1;
        if (!row.chi.integral() || row.chi.chi() * 2 != -q * row.derived_polynomial)
            throw Error("scan_psl2_even: exact evaluation disagrees with derived polynomial");
        auto prime_flag = [](const BigInt& v) -> std::optional<bool> {
            auto u = to_u64(v);
            if (!u) return std::nullopt;
            return is_prime_u64(*u);
        };
        row.derived_poly_prime = prime_flag(row.derived_polynomial);
        row.printed_poly_prime = prime_flag(row.printed_polynomial);
        row.flagged = row.chi.two_prime.has_value();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace triverify
