#pragma once

#include <cstdint>
#include <vector>

#include "triverify/errors.hpp"
#include "triverify/numtheory.hpp"

namespace triverify {

namespace polyn {

// Dense polynomials over Z_p, least-significant coefficient first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

inline Poly mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    std::uint32_t lead_inv = static_cast<std::uint32_t>(powmod_u64(f.back(), p - 2, p));
    while (a.size() >= f.size()) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    base = mod(std::move(base), f, p);
    while (e) {
        if (e & 1u) r = mod(mul(r, base, p), f, p);
        base = mod(mul(base, base, p), f, p);
        e >>= 1u;
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t k = f.size() - 1;
    // x^{p^i} mod f, stepping i = 1..k by p-th powering.
    Poly x{0, 1};
    Poly xp = x;
    std::vector<Poly> frob(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        xp = powmod(xp, p, f, p);
        frob[i] = xp;
    }
    // Irreducible iff x^{p^k} = x and gcd(x^{p^{k/r}} - x, f) = 1 for prime r | k.
    Poly diff = frob[k];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : factor_u64_complete(k)) {
        std::size_t i = k / r;
        Poly d = frob[i];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        Poly g = gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace polyn

// GF(p^k) with the canonical modulus: the lexicographically least monic
// irreducible of degree k, ordering coefficient tuples (c_0,...,c_{k-1}) by
// their base-p integer encoding. Elements are encoded the same way, so the
// field of a given order is identical across runs and machines.
class GaloisField {
  public:
    using Element = std::uint32_t;

    GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
        if (!is_prime_u64(p)) throw Error("GaloisField: characteristic must be prime");
        if (k < 1) throw Error("GaloisField: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            q *= p;
            if (q > (1u << 20)) throw Error("GaloisField: field order exceeds 2^20 cap");
        }
        q_ = q;
        if (k_ > 1) {
            for (std::uint64_t enc = 0;; ++enc) {
                if (enc >= q_) throw Error("GaloisField: no irreducible modulus found");
                polyn::Poly f = decode(static_cast<Element>(enc));
                f.resize(k_ + 1, 0);
                f[k_] = 1;
                if (polyn::is_irreducible(f, p_)) {
                    modulus_ = f;
                    break;
                }
            }
        }
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    const polyn::Poly& modulus() const { return modulus_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element add(Element a, Element b) const {
        check(a);
        check(b);
        Element r = 0, scale = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += static_cast<Element>((a % p_ + b % p_) % p_ * scale);
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    Element neg(Element a) const {
        check(a);
        Element r = 0, scale = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += static_cast<Element>((p_ - a % p_) % p_ * scale);
            a /= p_;
            scale *= p_;
        }
        return r;
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        check(a);
        check(b);
        if (k_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
        polyn::Poly r = polyn::mod(polyn::mul(decode(a), decode(b), p_), modulus_, p_);
        return encode(r);
    }

    Element pow(Element a, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }

    Element inv(Element a) const {
        if (a == 0) throw Error("GaloisField: inverse of zero");
        return pow(a, q_ - 2);
    }

    Element frobenius(Element a) const { return pow(a, p_); }

    // Least multiplicative generator.
    Element generator() const {
        auto primes = factor_u64_complete(q_ - 1);
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (Element v = 1; v < q_; ++v) {
            bool gen = true;
            for (std::uint64_t r : primes)
                if (pow(v, (q_ - 1) / r) == 1) {
                    gen = false;
                    break;
                }
            if (gen) return v;
        }
        throw Error("GaloisField: no generator found");
    }

    polyn::Poly decode(Element a) const {
        polyn::Poly c;
        for (std::uint32_t i = 0; i < k_; ++i) {
            c.push_back(a % p_);
            a /= p_;
        }
        polyn::trim(c);
        return c;
    }

    Element encode(const polyn::Poly& c) const {
        Element r = 0, scale = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += static_cast<Element>((i < c.size() ? c[i] : 0) * scale);
            scale *= p_;
        }
        return r;
    }

  private:
    void check(Element a) const {
        if (a >= q_) throw Error("GaloisField: element out of range");
    }

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    polyn::Poly modulus_;  // empty for k == 1
};

}  // namespace triverify
