#pragma once

// Shared helpers for the test suites: small standard groups and independent
// brute-force oracles. Everything here is oracle-side code and deliberately
// avoids the stabilizer-chain machinery it is used to check.

#include <map>
#include <set>
#include <vector>

#include "triverify/perm.hpp"

namespace testsupport {

using triverify::Permutation;
using triverify::Point;

inline Permutation transposition(std::size_t degree, Point a, Point b) {
    return Permutation::from_cycles(degree, {{a, b}});
}

inline Permutation full_cycle(std::size_t degree) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>((i + 1) % degree);
    return Permutation::from_images(std::move(img));
}

inline std::vector<Permutation> symmetric_group_gens(std::size_t n) {
    return {transposition(n, 0, 1), full_cycle(n)};
}

inline std::vector<Permutation> alternating_group_gens(std::size_t n) {
    // (0 1 2) together with an n-cycle (n odd) or (0 1)*cycle (n even).
    Permutation three = Permutation::from_cycles(n, {{0, 1, 2}});
    if (n % 2 == 1) return {three, full_cycle(n)};
    return {three, triverify::compose(transposition(n, 0, 1), full_cycle(n))};
}

inline std::vector<Permutation> cyclic_group_gens(std::size_t n) { return {full_cycle(n)}; }

// Plain breadth-first closure of the generated set, no chain involved.
inline std::set<Permutation> naive_closure(const std::vector<Permutation>& gens) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    Permutation id(gens.at(0).degree());
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = triverify::compose(queue[head], g);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace testsupport
