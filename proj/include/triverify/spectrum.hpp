#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "triverify/arith.hpp"
#include "triverify/bigint.hpp"
#include "triverify/perm_group.hpp"

namespace triverify {

enum class SpectrumMode { Exhaustive, ClassBased };

// The set {o(g) : g in G}. Exhaustive mode walks every element through the
// chain index; class-based mode reads representative orders off supplied
// class data. Both need |G| within the element budget.
inline std::set<std::uint64_t> order_spectrum(const PermGroup& G, SpectrumMode mode,
                                              std::uint64_t element_budget,
                                              const ConjugacyClasses* classes = nullptr) {
    std::set<std::uint64_t> spec;
    if (mode == SpectrumMode::ClassBased) {
        if (!classes) throw Error("order_spectrum: class-based mode needs class data");
        for (const auto& c : classes->classes) spec.insert(c.element_order);
        return spec;
    }
    auto n = G.order_u64();
    if (!n || *n > element_budget)
        throw BudgetExceeded("order_spectrum: group order " + G.order().str() +
                             " exceeds element budget " + std::to_string(element_budget));
    for (std::uint64_t i = 0; i < *n; ++i) spec.insert(element_order(G.element_at(i)));
    return spec;
}

// Element-order spectrum, prime graph, Sylow-cyclicity partition and
// independence numbers for one group.
struct SpectrumProfile {
    BigInt group_order;
    std::set<std::uint64_t> spectrum;
    std::vector<std::uint64_t> pi;     // primes dividing |G|, ascending
    std::vector<std::uint64_t> pi_c;   // cyclic Sylow subgroup
    std::vector<std::uint64_t> pi_nc;  // non-cyclic Sylow subgroup
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q with pq in spectrum
    std::uint32_t t = 0;    // independence number over pi
    std::uint32_t t_c = 0;  // independence number over pi_c

    bool has_edge(std::uint64_t p, std::uint64_t q) const {
        if (p > q) std::swap(p, q);
        return edges.count({p, q}) != 0;
    }
};

// A Sylow p-subgroup is cyclic iff the group has an element of order |G|_p.
inline bool sylow_cyclic(const BigInt& group_order, const std::set<std::uint64_t>& spectrum,
                         std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("sylow_cyclic: p must be prime");
    if (group_order % p != 0) throw Error("sylow_cyclic: p does not divide |G|");
    auto [gp, rest] = p_part(group_order, p);
    auto gp64 = to_u64(gp);
    if (!gp64) return false;  // no element order exceeds 2^64 at desk scale
    return spectrum.count(*gp64) != 0;
}

inline bool sylow_cyclic(const PermGroup& G, std::uint64_t p, std::uint64_t element_budget) {
    return sylow_cyclic(G.order(), order_spectrum(G, SpectrumMode::Exhaustive, element_budget), p);
}

namespace spectrum_detail {

// Exact maximum independent set by subset enumeration; vertex counts here
// never exceed 8.
inline std::uint32_t independence_number(const std::vector<std::uint64_t>& verts,
                                         const SpectrumProfile& profile) {
    std::uint32_t best = 0;
    std::size_t n = verts.size();
    if (n > 20) throw Error("independence_number: unexpectedly many primes");
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> j & 1) && profile.has_edge(verts[i], verts[j])) ok = false;
        }
        if (ok) best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(__builtin_popcountll(mask)));
    }
    return best;
}

}  // namespace spectrum_detail

inline SpectrumProfile prime_graph_profile(const BigInt& group_order,
                                           const std::set<std::uint64_t>& spectrum) {
    SpectrumProfile prof;
    prof.group_order = group_order;
    prof.spectrum = spectrum;
    Factorization f = factor_integer(group_order);
    if (!f.complete())
        throw Error("prime_graph_profile: group order not factorable within bounds");
    for (auto [p, e] : f.prime_powers) prof.pi.push_back(p);
    for (std::uint64_t p : prof.pi) {
        if (sylow_cyclic(group_order, spectrum, p))
            prof.pi_c.push_back(p);
        else
            prof.pi_nc.push_back(p);
    }
    for (std::size_t i = 0; i < prof.pi.size(); ++i)
        for (std::size_t j = i + 1; j < prof.pi.size(); ++j)
            if (spectrum.count(prof.pi[i] * prof.pi[j]))
                prof.edges.insert({prof.pi[i], prof.pi[j]});
    prof.t = spectrum_detail::independence_number(prof.pi, prof);
    prof.t_c = spectrum_detail::independence_number(prof.pi_c, prof);
    return prof;
}

inline SpectrumProfile prime_graph_profile(const PermGroup& G, std::uint64_t element_budget) {
    return prime_graph_profile(G.order(), order_spectrum(G, SpectrumMode::Exhaustive, element_budget));
}

// |G|_t > [m,n]_t for an odd prime t dividing |G|: any (2,m,n)-structure on G
// then forces t | chi.
inline bool lemma31_filter(const BigInt& group_order, const OrderPair& pair, std::uint64_t t) {
    if (t == 2 || !is_prime_u64(t)) throw Error("lemma31_filter: t must be an odd prime");
    if (group_order % t != 0) throw Error("lemma31_filter: t does not divide |G|");
    std::uint64_t l = lcm_u64_checked(pair.m, pair.n);
    if (l == 0) throw Error("lemma31_filter: lcm overflow");
    auto [gt, g_rest] = p_part(group_order, t);
    auto [lt, l_rest] = p_part(BigInt(l), t);
    return gt > lt;
}

// Lower bounds on the number of primes dividing |G|/[m,n]: the displayed
// bound max{0, t_c(N) - 2} + |pi_nc(N)| and the companion bound t(N) - 2.
// The profile is for a normal subgroup N with non-cyclic Sylow 2-subgroups;
// desk-scale callers use N = G itself and must assert that hypothesis.
inline bool prop36_bound_satisfiable(const SpectrumProfile& profile, const OrderPair& pair,
                                     const BigInt& group_order) {
    std::uint64_t l = lcm_u64_checked(pair.m, pair.n);
    if (l == 0) throw Error("prop36_bound_satisfiable: lcm overflow");
    if (group_order % l != 0)
        throw Error("prop36_bound_satisfiable: [m,n] does not divide |G|");
    Factorization f = factor_integer(group_order / l);
    if (!f.complete()) throw Error("prop36_bound_satisfiable: quotient not factorable");
    std::uint32_t omega = static_cast<std::uint32_t>(f.prime_powers.size());
    std::uint32_t displayed =
        (profile.t_c > 2 ? profile.t_c - 2 : 0) + static_cast<std::uint32_t>(profile.pi_nc.size());
    std::uint32_t companion = profile.t > 2 ? profile.t - 2 : 0;
    return omega >= displayed && omega >= companion;
}

inline nlohmann::ordered_json profile_to_json(const SpectrumProfile& prof) {
    nlohmann::ordered_json j;
    j["order"] = prof.group_order.str();
    j["spectrum"] = prof.spectrum;
    j["pi"] = prof.pi;
    j["pi_c"] = prof.pi_c;
    j["pi_nc"] = prof.pi_nc;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [p, q] : prof.edges) edges.push_back({p, q});
    j["edges"] = std::move(edges);
    j["t"] = prof.t;
    j["t_c"] = prof.t_c;
    return j;
}

}  // namespace triverify
