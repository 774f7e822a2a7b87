#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "support.hpp"
#include "triverify/perm_group.hpp"

// Seeded randomized cross-checks of the chain engine against from-scratch
// enumeration on small degrees.

using namespace triverify;
using namespace testsupport;

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = degree; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
    return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("random generator sets: chain order equals naive closure") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t degree = 2 + rng() % 6;  // up to 7 points
        std::size_t ngens = 1 + rng() % 3;
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_permutation(rng, degree));
        auto G = PermGroup::from_generators(gens);
        auto closure = naive_closure(gens);
        INFO("trial " << trial << " degree " << degree);
        REQUIRE(G.order() == BigInt(closure.size()));

        // Indexing is a bijection onto exactly the closure.
        std::set<Permutation> decoded;
        for (std::uint64_t idx = 0; idx < *G.order_u64(); ++idx) {
            Permutation p = G.element_at(idx);
            REQUIRE(G.element_index(p) == idx);
            decoded.insert(p);
        }
        REQUIRE(decoded == closure);

        // Membership agrees with the closure for random probes.
        for (int probe = 0; probe < 20; ++probe) {
            Permutation p = random_permutation(rng, degree);
            REQUIRE(G.contains(p) == (closure.count(p) != 0));
        }
    }
}

TEST_CASE("random generator sets: classes match a from-scratch partition") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t degree = 3 + rng() % 4;  // up to 6 points
        std::vector<Permutation> gens{random_permutation(rng, degree), random_permutation(rng, degree)};
        auto G = PermGroup::from_generators(gens);
        auto closure = naive_closure(gens);
        auto cc = conjugacy_classes(G, 100000);

        // Oracle: partition the closure by conjugating with every element.
        std::map<Permutation, Permutation> canon;  // element -> least conjugate
        for (const auto& x : closure) {
            Permutation least = x;
            for (const auto& s : closure) {
                Permutation c = conjugate(x, s);
                if (c < least) least = c;
            }
            canon.emplace(x, least);
        }
        std::map<Permutation, std::uint64_t> oracle_sizes;
        for (const auto& [x, least] : canon) ++oracle_sizes[least];

        REQUIRE(cc.classes.size() == oracle_sizes.size());
        std::multiset<std::uint64_t> sizes_a, sizes_b;
        for (const auto& c : cc.classes) sizes_a.insert(c.size);
        for (const auto& [least, sz] : oracle_sizes) sizes_b.insert(sz);
        REQUIRE(sizes_a == sizes_b);

        // Same-class elements share a canonical conjugate; different classes
        // never do.
        for (std::uint64_t i = 0; i < *G.order_u64(); ++i)
            for (std::uint64_t j = i + 1; j < *G.order_u64(); ++j) {
                bool same_chain = cc.class_of[i] == cc.class_of[j];
                bool same_oracle =
                    canon.at(G.element_at(i)) == canon.at(G.element_at(j));
                REQUIRE(same_chain == same_oracle);
            }
    }
}
