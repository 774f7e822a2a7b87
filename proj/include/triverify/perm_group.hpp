#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triverify/bigint.hpp"
#include "triverify/errors.hpp"
#include "triverify/perm.hpp"

namespace triverify {

// A permutation group given by generators, certified by a deterministic
// stabilizer chain (Schreier-Sims). Immutable once built: order, membership,
// element indexing and orbit queries are all safe for concurrent reads.
class PermGroup {
  public:
    struct Level {
        Point base = 0;
        // orbit of `base` under the strong generators of this level, in
        // BFS discovery order; transversal[p] maps base -> p.
        std::vector<Point> orbit;
        std::unordered_map<Point, Permutation> transversal;
        std::unordered_map<Point, Permutation> transversal_inv;
        // orbit sorted ascending, used for canonical element indexing.
        std::vector<Point> sorted_orbit;
    };

    static PermGroup from_generators(std::vector<Permutation> generators) {
        if (generators.empty()) throw Error("PermGroup: empty generator list");
        std::size_t deg = generators[0].degree();
        for (const auto& g : generators)
            if (g.degree() != deg) throw Error("PermGroup: generators of mixed degree");
        PermGroup G;
        G.degree_ = deg;
        G.generators_ = std::move(generators);
        G.build_chain();
        return G;
    }

    std::size_t degree() const { return degree_; }
    const BigInt& order() const { return order_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Level>& chain() const { return levels_; }

    std::vector<Point> base_points() const {
        std::vector<Point> b;
        for (const auto& lvl : levels_) b.push_back(lvl.base);
        return b;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_) throw Error("contains: degree mismatch");
        Permutation r = p;
        if (!sift(r)) return false;
        return r.is_identity();
    }

    // Canonical bijection between group elements and [0, |G|).
    // Level 0 is the most significant mixed-radix digit; digits are positions
    // in the sorted orbit of each level.
    std::uint64_t element_index(const Permutation& p) const {
        if (!order_u64_) throw Error("element_index: group order exceeds 2^63");
        Permutation r = p;
        std::uint64_t idx = 0;
        for (const auto& lvl : levels_) {
            Point image = r[lvl.base];
            auto it = std::lower_bound(lvl.sorted_orbit.begin(), lvl.sorted_orbit.end(), image);
            if (it == lvl.sorted_orbit.end() || *it != image)
                throw Error("element_index: permutation not in group");
            idx = idx * lvl.sorted_orbit.size() +
                  static_cast<std::uint64_t>(it - lvl.sorted_orbit.begin());
            r = compose(r, lvl.transversal_inv.at(image));
        }
        if (!r.is_identity()) throw Error("element_index: permutation not in group");
        return idx;
    }

    Permutation element_at(std::uint64_t idx) const {
        if (!order_u64_) throw Error("element_at: group order exceeds 2^63");
        if (idx >= *order_u64_) throw Error("element_at: index out of range");
        std::vector<Point> chosen(levels_.size());
        for (std::size_t i = levels_.size(); i-- > 0;) {
            std::uint64_t radix = levels_[i].sorted_orbit.size();
            chosen[i] = levels_[i].sorted_orbit[idx % radix];
            idx /= radix;
        }
        Permutation g(degree_);
        for (std::size_t i = levels_.size(); i-- > 0;)
            g = compose(g, levels_[i].transversal.at(chosen[i]));
        return g;
    }

    std::optional<std::uint64_t> order_u64() const { return order_u64_; }

    std::vector<Point> orbit_of(Point start) const {
        std::vector<Point> orbit{start};
        std::vector<bool> seen(degree_, false);
        seen[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& g : generators_) {
                Point img = g[orbit[head]];
                if (!seen[img]) {
                    seen[img] = true;
                    orbit.push_back(img);
                }
            }
        }
        return orbit;
    }

    bool is_transitive() const {
        if (degree_ == 0) return true;
        return orbit_of(0).size() == degree_;
    }

  private:
    PermGroup() = default;

    struct StrongGen {
        Permutation perm;
        std::size_t level;  // fixes base points of all levels < level
        StrongGen(Permutation p, std::size_t l) : perm(std::move(p)), level(l) {}
    };

    // Reduce r through levels [from, end); returns false if it fell out of an
    // orbit (r then holds the residue), true if it sifted through completely.
    bool sift(Permutation& r, std::size_t from = 0) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            Point image = r[levels_[i].base];
            auto it = levels_[i].transversal_inv.find(image);
            if (it == levels_[i].transversal_inv.end()) return false;
            r = compose(r, it->second);
        }
        return true;
    }

    // Level of the first orbit r falls out of (== levels_.size() if it sifts
    // to the bottom); r is reduced in place.
    std::size_t sift_level(Permutation& r, std::size_t from = 0) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            Point image = r[levels_[i].base];
            auto it = levels_[i].transversal_inv.find(image);
            if (it == levels_[i].transversal_inv.end()) return i;
            r = compose(r, it->second);
        }
        return levels_.size();
    }

    static Point smallest_moved_point(const Permutation& p) {
        for (Point i = 0; i < p.degree(); ++i)
            if (p[i] != i) return i;
        throw Error("identity has no moved point");
    }

    void recompute_orbit(std::size_t lvl_idx) {
        Level& lvl = levels_[lvl_idx];
        lvl.orbit.clear();
        lvl.transversal.clear();
        lvl.transversal_inv.clear();
        lvl.orbit.push_back(lvl.base);
        lvl.transversal.emplace(lvl.base, Permutation(degree_));
        lvl.transversal_inv.emplace(lvl.base, Permutation(degree_));
        for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
            Point pt = lvl.orbit[head];
            for (const auto& sg : strong_) {
                if (!available_at(sg, lvl_idx)) continue;
                Point img = sg.perm[pt];
                if (!lvl.transversal.count(img)) {
                    lvl.orbit.push_back(img);
                    Permutation rep = compose(lvl.transversal.at(pt), sg.perm);
                    lvl.transversal_inv.emplace(img, inverse(rep));
                    lvl.transversal.emplace(img, std::move(rep));
                }
            }
        }
    }

    // Strong generators available at level i: those fixing base points of all
    // earlier levels, i.e. with sg.level >= i... sg.level records where the
    // residue was inserted; every sg with level >= i fixes b_0..b_{i-1}.
    bool available_at(const StrongGen& sg, std::size_t lvl_idx) const {
        return sg.level >= lvl_idx;
    }

    void insert_residue(Permutation res, std::size_t lvl) {
        if (lvl == levels_.size()) {
            Level l;
            l.base = smallest_moved_point(res);
            levels_.push_back(std::move(l));
        }
        strong_.emplace_back(std::move(res), lvl);
    }

    void build_chain() {
        // Seed with the input generators.
        for (const auto& g : generators_) {
            if (g.is_identity()) continue;
            Permutation r = g;
            std::size_t lvl = sift_level(r);
            if (!r.is_identity()) insert_residue(std::move(r), lvl);
        }
        if (levels_.empty()) {
            order_ = 1;
            order_u64_ = 1;
            return;
        }

        // Bottom-up verification (Schreier-Sims): level i is accepted once all
        // its Schreier generators sift to the identity through deeper levels.
        std::size_t i = levels_.size() - 1;
        recompute_all_orbits();
        while (true) {
            bool clean = true;
            Level& lvl = levels_[i];
            for (std::size_t head = 0; clean && head < lvl.orbit.size(); ++head) {
                Point pt = lvl.orbit[head];
                for (std::size_t s = 0; s < strong_.size(); ++s) {
                    if (!available_at(strong_[s], i)) continue;
                    const Permutation& gen = strong_[s].perm;
                    Point img = gen[pt];
                    Permutation schreier =
                        compose(compose(lvl.transversal.at(pt), gen), inverse(lvl.transversal.at(img)));
                    Permutation r = std::move(schreier);
                    std::size_t j = sift_level(r, i + 1);
                    if (!r.is_identity()) {
                        insert_residue(std::move(r), j);
                        recompute_all_orbits();
                        i = j;
                        clean = false;
                        break;
                    }
                }
            }
            if (clean) {
                if (i == 0) break;
                --i;
            }
        }

        order_ = 1;
        for (auto& lvl : levels_) {
            lvl.sorted_orbit = lvl.orbit;
            std::sort(lvl.sorted_orbit.begin(), lvl.sorted_orbit.end());
            order_ *= BigInt(lvl.orbit.size());
        }
        if (order_ <= BigInt(INT64_MAX)) order_u64_ = static_cast<std::uint64_t>(order_);
    }

    void recompute_all_orbits() {
        for (std::size_t i = 0; i < levels_.size(); ++i) recompute_orbit(i);
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<StrongGen> strong_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
    std::optional<std::uint64_t> order_u64_;
};

// Product-replacement random element sampler. State is caller-owned and the
// stream is fully determined by the seed (mt19937_64 plus plain modulo
// reduction, both pinned by the standard).
class RandomElementSampler {
  public:
    static constexpr std::size_t kSlots = 15;
    static constexpr int kMixingSteps = 60;

    RandomElementSampler(const PermGroup& G, std::uint64_t seed) : rng_(seed) {
        const auto& gens = G.generators();
        for (std::size_t i = 0; i < kSlots; ++i) slots_.push_back(gens[i % gens.size()]);
        bool trivial = true;
        for (const auto& g : gens)
            if (!g.is_identity()) trivial = false;
        if (!trivial)
            for (int i = 0; i < kMixingSteps; ++i) step();
    }

    const Permutation& next() {
        step();
        return slots_[last_];
    }

  private:
    std::uint64_t bounded(std::uint64_t n) { return rng_() % n; }

    void step() {
        std::size_t i = bounded(kSlots);
        std::size_t j = bounded(kSlots - 1);
        if (j >= i) ++j;
        bool invert = bounded(2) != 0;
        slots_[i] = compose(slots_[i], invert ? inverse(slots_[j]) : slots_[j]);
        last_ = i;
    }

    std::vector<Permutation> slots_;
    std::mt19937_64 rng_;
    std::size_t last_ = 0;
};

// Exhaustive conjugacy class data for a group within the element budget.
// Elements are identified by their canonical chain index; classes are listed
// in order of their smallest element index, so the decomposition is
// deterministic for a fixed generator list.
struct ConjugacyClasses {
    struct ClassInfo {
        std::uint64_t rep_index = 0;
        std::uint64_t size = 0;
        std::uint64_t element_order = 1;
    };
    std::vector<ClassInfo> classes;
    std::vector<std::uint16_t> class_of;                 // element index -> class id
    std::vector<std::vector<std::uint64_t>> members;     // class id -> element indices (sorted)
};

inline ConjugacyClasses conjugacy_classes(const PermGroup& G, std::uint64_t element_budget) {
    auto n_opt = G.order_u64();
    if (!n_opt || *n_opt > element_budget)
        throw BudgetExceeded("conjugacy_classes: group order " + G.order().str() +
                             " exceeds element budget " + std::to_string(element_budget));
    std::uint64_t n = *n_opt;

    ConjugacyClasses out;
    out.class_of.assign(n, UINT16_MAX);
    std::vector<Permutation> gen_inv;
    for (const auto& g : G.generators()) gen_inv.push_back(inverse(g));

    for (std::uint64_t start = 0; start < n; ++start) {
        if (out.class_of[start] != UINT16_MAX) continue;
        if (out.classes.size() >= UINT16_MAX)
            throw Error("conjugacy_classes: more than 65534 classes unsupported");
        std::uint16_t cid = static_cast<std::uint16_t>(out.classes.size());
        Permutation rep = G.element_at(start);
        std::vector<std::uint64_t> members{start};
        out.class_of[start] = cid;
        std::deque<std::uint64_t> queue{start};
        while (!queue.empty()) {
            std::uint64_t idx = queue.front();
            queue.pop_front();
            Permutation e = G.element_at(idx);
            for (const auto& g : G.generators()) {
                Permutation c = conjugate(e, g);
                std::uint64_t cidx = G.element_index(c);
                if (out.class_of[cidx] == UINT16_MAX) {
                    out.class_of[cidx] = cid;
                    members.push_back(cidx);
                    queue.push_back(cidx);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjugacyClasses::ClassInfo info;
        info.rep_index = start;
        info.size = members.size();
        info.element_order = element_order(rep);
        out.classes.push_back(info);
        out.members.push_back(std::move(members));
    }
    return out;
}

}  // namespace triverify
