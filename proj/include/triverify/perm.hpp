#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "triverify/errors.hpp"
#include "triverify/numtheory.hpp"

namespace triverify {

using Point = std::uint32_t;

inline constexpr Point kMaxDegree = 65535;

// A permutation of {0,...,degree-1}, stored as its image array.
// Composition is left-to-right throughout the project:
// compose(p,q) maps x to q(p(x)).
class Permutation {
  public:
    explicit Permutation(std::size_t degree) : images_(degree) {
        if (degree > kMaxDegree) throw Error("degree exceeds 65535-point cap");
        for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
    }

    static Permutation from_images(std::vector<Point> images) {
        if (images.size() > kMaxDegree) throw Error("degree exceeds 65535-point cap");
        std::vector<bool> seen(images.size(), false);
        for (Point img : images) {
            if (img >= images.size() || seen[img])
                throw Error("image array is not a bijection");
            seen[img] = true;
        }
        Permutation p(0);
        p.images_ = std::move(images);
        return p;
    }

    // Test convenience: build from disjoint cycles, e.g. {{0,1},{2,3,4}}.
    static Permutation from_cycles(std::size_t degree,
                                   std::initializer_list<std::initializer_list<Point>> cycles) {
        Permutation p(degree);
        for (const auto& cyc : cycles) {
            std::vector<Point> c(cyc);
            for (std::size_t i = 0; i < c.size(); ++i) {
                Point from = c[i];
                Point to = c[(i + 1) % c.size()];
                if (from >= degree || to >= degree) throw Error("cycle point out of range");
                p.images_[from] = to;
            }
        }
        return from_images(std::move(p.images_));
    }

    // Unchecked: callers guarantee `images` is a bijection.
    static Permutation from_images_unchecked(std::vector<Point> images) {
        Permutation p(0);
        p.images_ = std::move(images);
        return p;
    }

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

  private:
    std::vector<Point> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
    std::vector<Point> r(p.degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = q[p[static_cast<Point>(i)]];
    return Permutation::from_images_unchecked(std::move(r));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<Point> r(p.degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[p[static_cast<Point>(i)]] = static_cast<Point>(i);
    return Permutation::from_images_unchecked(std::move(r));
}

// s^{-1} p s  (apply s-inverse, then p, then s).
inline Permutation conjugate(const Permutation& p, const Permutation& s) {
    if (p.degree() != s.degree()) throw Error("conjugate: degree mismatch");
    std::vector<Point> r(p.degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[s[static_cast<Point>(i)]] = s[p[static_cast<Point>(i)]];
    return Permutation::from_images_unchecked(std::move(r));
}

inline Permutation power(const Permutation& p, std::uint64_t k) {
    Permutation acc(p.degree());
    Permutation base = p;
    while (k) {
        if (k & 1u) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1u;
    }
    return acc;
}

struct CycleProfile {
    std::vector<std::uint32_t> cycle_lengths;  // sorted descending, fixed points included
    std::size_t cycle_count = 0;
    std::uint64_t element_order = 1;
};

inline CycleProfile cycle_profile(const Permutation& p) {
    CycleProfile out;
    std::vector<bool> seen(p.degree(), false);
    for (Point start = 0; start < p.degree(); ++start) {
        if (seen[start]) continue;
        std::uint32_t len = 0;
        Point x = start;
        do {
            seen[x] = true;
            x = p[x];
            ++len;
        } while (x != start);
        out.cycle_lengths.push_back(len);
        std::uint64_t l = lcm_u64_checked(out.element_order, len);
        if (l == 0) throw Error("element order overflows 64 bits");
        out.element_order = l;
    }
    std::sort(out.cycle_lengths.rbegin(), out.cycle_lengths.rend());
    out.cycle_count = out.cycle_lengths.size();
    return out;
}

inline std::uint64_t element_order(const Permutation& p) { return cycle_profile(p).element_order; }

inline bool is_even(const Permutation& p) {
    // sign = (-1)^(degree - #cycles)
    return ((p.degree() - cycle_profile(p).cycle_count) % 2) == 0;
}

inline std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.degree(), false);
    for (Point start = 0; start < p.degree(); ++start) {
        if (seen[start] || p[start] == start) {
            seen[start] = true;
            continue;
        }
        out += '(';
        Point x = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(x);
            seen[x] = true;
            x = p[x];
            first = false;
        } while (x != start);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace triverify
