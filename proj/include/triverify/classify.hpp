#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "triverify/arith.hpp"
#include "triverify/catalog.hpp"
#include "triverify/chartab.hpp"
#include "triverify/perm_group.hpp"

namespace triverify {

inline constexpr std::uint64_t kDefaultSeed = 0xC2C2C2C2ull;

struct Budgets {
    std::uint64_t element_budget = 2'000'000;   // exhaustive class enumeration
    std::uint64_t sample_budget = 1'000'000;    // randomized (g,h) samples
    std::uint64_t pair_budget = 100'000'000;    // conjugacy-reduced pair tests
};

enum class VerdictStatus { ProvenYes, ProvenNo, Inconclusive };

inline std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::ProvenYes: return "PROVEN_YES";
        case VerdictStatus::ProvenNo: return "PROVEN_NO";
        default: return "INCONCLUSIVE";
    }
}

struct Witness {
    Permutation g, h;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<Witness> witness;
    std::optional<std::string> refutation_rule;
    EulerResult chi;
    Json transcript;
};

// ---- cycle types ----

// Cycle counts achievable by a degree-n permutation of order exactly k:
// cycle lengths are divisors of k, the unused points are fixed, and the lcm
// of the chosen lengths must be exactly k.
inline std::set<std::uint32_t> achievable_cycle_counts(std::uint32_t degree, std::uint64_t k) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 2; d <= k; ++d)
        if (k % d == 0 && d <= degree) divs.push_back(d);
    std::set<std::uint32_t> counts;
    if (k == 1) {
        counts.insert(degree);
        return counts;
    }
    // DFS over multisets of non-fixed cycle lengths.
    std::function<void(std::size_t, std::uint32_t, std::uint32_t, std::uint64_t)> rec =
        [&](std::size_t from, std::uint32_t used, std::uint32_t parts, std::uint64_t lcm_so_far) {
            if (parts > 0 && lcm_so_far == k)
                counts.insert(parts + (degree - used));
            for (std::size_t di = from; di < divs.size(); ++di) {
                std::uint64_t d = divs[di];
                if (used + d > degree) continue;
                std::uint64_t l = lcm_u64_checked(lcm_so_far, d);
                if (l == 0 || k % l != 0) continue;
                rec(di, used + static_cast<std::uint32_t>(d), parts + 1, l);
            }
        };
    rec(0, 0, 0, 1);
    return counts;
}

inline std::optional<std::uint32_t> min_cycles(std::uint32_t degree, std::uint64_t k) {
    auto counts = achievable_cycle_counts(degree, k);
    if (counts.empty()) return std::nullopt;
    return *counts.begin();
}

struct CycleBoundResult {
    bool refuted = false;
    std::string detail;
};

// Transitive-generation bound for the natural S_n / A_n catalog entries.
// For a generating triple (g, h, (gh)^{-1}) of a transitive group on n points,
// Ree's bound gives c(g) + c(h) + c(gh) <= n + 2; the sign homomorphism
// forces sgn(g) sgn(h) = sgn(gh), and generating the full symmetric group
// additionally needs an odd generator. Refute when no cycle-type assignment
// survives all three constraints. Note the permutation sign is determined by
// the cycle count: sgn = (-1)^(n - c).
inline CycleBoundResult cycle_bound_refute(std::uint32_t degree, bool symmetric_full,
                                           const OrderPair& pair) {
    auto cm = achievable_cycle_counts(degree, pair.m);
    auto cn = achievable_cycle_counts(degree, pair.n);
    auto cz = achievable_cycle_counts(degree, 2);
    auto even = [&](std::uint32_t c) { return (degree - c) % 2 == 0; };
    for (std::uint32_t a : cm)
        for (std::uint32_t b : cn)
            for (std::uint32_t c : cz) {
                if (symmetric_full) {
                    if (even(a) == even(b) ? !even(c) : even(c)) continue;  // sign consistency
                    if (even(a) && even(b)) continue;  // all-even pairs stay inside A_n
                } else {
                    if (!even(a) || !even(b) || !even(c)) continue;
                }
                if (a + b + c <= degree + 2) {
                    CycleBoundResult r;
                    r.detail = "admissible cycle counts (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")";
                    return r;
                }
            }
    CycleBoundResult r;
    r.refuted = true;
    r.detail = "no cycle-type assignment satisfies the transitive generation bound";
    if (cm.empty()) r.detail = "no element of order " + std::to_string(pair.m);
    else if (cn.empty()) r.detail = "no element of order " + std::to_string(pair.n);
    return r;
}

// ---- verdict engine ----

struct VerifySubject {
    std::string name;
    const PermGroup* group = nullptr;
    bool natural_symmetric = false;
    bool natural_alternating = false;
    const PermGroup* socle = nullptr;  // designated index-2 normal subgroup
};

inline VerifySubject subject_of(const CatalogEntry& e) {
    VerifySubject s;
    s.name = e.name;
    s.group = e.group.get();
    s.natural_symmetric = e.natural_symmetric;
    s.natural_alternating = e.natural_alternating;
    s.socle = e.socle.get();
    return s;
}

// Re-check a claimed witness from scratch: orders, (gh)^2 = 1 and full
// closure, against a freshly built chain. Never trusts the search that
// produced it.
inline bool verify_witness(const PermGroup& G, const Permutation& g, const Permutation& h,
                           const OrderPair& pair, bool allow_product_identity = false) {
    if (g.degree() != G.degree() || h.degree() != G.degree()) return false;
    if (!G.contains(g) || !G.contains(h)) return false;
    if (element_order(g) != pair.m || element_order(h) != pair.n) return false;
    Permutation z = compose(g, h);
    std::uint64_t oz = element_order(z);
    if (oz != 2 && !(oz == 1 && allow_product_identity)) return false;
    return PermGroup::from_generators({g, h}).order() == G.order();
}

namespace classify_detail {

inline void parallel_chunks(std::size_t count, unsigned jobs, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    unsigned workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> threads;
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(fn, lo, hi);
    }
    for (auto& t : threads) t.join();
}

inline bool witness_less(const Witness& a, const Witness& b) {
    if (a.g.images() != b.g.images()) return a.g.images() < b.g.images();
    return a.h.images() < b.h.images();
}

// Test a window of candidate pairs; all verified witnesses are collected and
// the lexicographically least wins, so the result is independent of the
// worker count.
inline std::optional<Witness> test_window(const PermGroup& G,
                                          const std::vector<Witness>& candidates, unsigned jobs) {
    std::vector<char> good(candidates.size(), 0);
    parallel_chunks(candidates.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& c = candidates[i];
            if (PermGroup::from_generators({c.g, c.h}).order() == G.order()) good[i] = 1;
        }
    });
    std::optional<Witness> best;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (good[i] && (!best || witness_less(candidates[i], *best))) best = candidates[i];
    return best;
}

}  // namespace classify_detail

// Decide whether (G, m, n) carries a (2,m,n)-generating pair. Pipeline:
// cycle bound, coset parity, zero structure constants, randomized witness
// search, conjugacy-reduced exhaustive search; every failure mode is a
// verdict, and identical seeds give identical transcripts.
inline Verdict verify_triple(const VerifySubject& subject, const OrderPair& pair,
                             const Budgets& budgets = {}, std::uint64_t seed = kDefaultSeed,
                             unsigned jobs = 1) {
    const PermGroup& G = *subject.group;
    Verdict verdict;
    verdict.chi = euler_characteristic(G.order(), pair);
    Json& t = verdict.transcript;
    t["group"] = subject.name;
    t["degree"] = G.degree();
    t["m"] = pair.m;
    t["n"] = pair.n;
    t["seed"] = seed;
    t["budgets"] = {{"element", budgets.element_budget},
                    {"sample", budgets.sample_budget},
                    {"pair", budgets.pair_budget}};
    t["chi"] = {{"integral", verdict.chi.integral()},
                {"value", verdict.chi.integral() ? verdict.chi.chi().str()
                                                 : verdict.chi.numerator.str() + "/" +
                                                       verdict.chi.denominator.str()},
                {"form", verdict.chi.canonical_form()}};
    t["phases"] = Json::array();

    auto finish = [&](VerdictStatus st, std::optional<std::string> rule,
                      std::optional<Witness> w) -> Verdict& {
        verdict.status = st;
        verdict.refutation_rule = std::move(rule);
        verdict.witness = std::move(w);
        t["status"] = to_string(verdict.status);
        t["refutation_rule"] = verdict.refutation_rule ? Json(*verdict.refutation_rule) : Json(nullptr);
        if (verdict.witness) {
            t["witness"] = {{"g", verdict.witness->g.images()},
                            {"h", verdict.witness->h.images()},
                            {"gh_order", element_order(compose(verdict.witness->g, verdict.witness->h))}};
        } else {
            t["witness"] = nullptr;
        }
        return verdict;
    };

    bool cyclic = false;
    {
        // G cyclic iff some single generator already spans it; catalog groups
        // are tiny enough to check via the chain.
        for (const auto& g : G.generators())
            if (!g.is_identity() && BigInt(element_order(g)) == G.order()) cyclic = true;
    }

    // Degenerate witness for cyclic G: g and g^{-1} with gh = 1.
    if (cyclic && BigInt(pair.m) == G.order() && pair.m == pair.n) {
        for (const auto& g : G.generators()) {
            if (BigInt(element_order(g)) == G.order()) {
                Witness w{g, inverse(g)};
                t["phases"].push_back({{"phase", "cyclic-degenerate"}, {"result", "witness"}});
                if (verify_witness(G, w.g, w.h, pair, true))
                    return finish(VerdictStatus::ProvenYes, std::nullopt, w);
            }
        }
    }

    // Phase: cycle bound (natural symmetric/alternating entries only; the
    // bound is representation-relative).
    if (subject.natural_symmetric || subject.natural_alternating) {
        auto r = cycle_bound_refute(static_cast<std::uint32_t>(G.degree()), subject.natural_symmetric,
                                    pair);
        t["phases"].push_back({{"phase", "cycle-bound"},
                               {"refuted", r.refuted},
                               {"detail", r.detail}});
        if (r.refuted) return finish(VerdictStatus::ProvenNo, "cycle-bound", std::nullopt);
    }

    auto order64 = G.order_u64();
    bool within_element_budget = order64 && *order64 <= budgets.element_budget;

    // Phase: coset parity against a designated index-2 normal subgroup.
    // Generation forces (g,h) outside N x N; the product coset follows, and
    // o(gh) = 2 needs an involution there.
    if (subject.socle && within_element_budget && !cyclic) {
        std::set<std::uint64_t> inside, outside;
        for (std::uint64_t i = 0; i < *order64; ++i) {
            Permutation p = G.element_at(i);
            (subject.socle->contains(p) ? inside : outside).insert(element_order(p));
        }
        bool feasible = false;
        for (int mask = 1; mask < 4; ++mask) {  // (g out?, h out?) != (in, in)
            bool g_out = mask & 1, h_out = mask & 2;
            const auto& g_set = g_out ? outside : inside;
            const auto& h_set = h_out ? outside : inside;
            bool z_out = g_out != h_out;
            const auto& z_set = z_out ? outside : inside;
            if (g_set.count(pair.m) && h_set.count(pair.n) && z_set.count(2)) feasible = true;
        }
        t["phases"].push_back({{"phase", "coset-parity"},
                               {"refuted", !feasible},
                               {"socle_index", 2},
                               {"orders_outside", outside}});
        if (!feasible) return finish(VerdictStatus::ProvenNo, "coset-parity", std::nullopt);
    }

    // Phase: zero structure constants (brute-force class arithmetic).
    std::optional<ConjugacyClasses> classes;
    if (within_element_budget) {
        classes = conjugacy_classes(G, budgets.element_budget);
        // Soundness of the refutations below requires ruling out the gh = 1
        // degenerate witness, which exists only for cyclic G with
        // m = n = |G|; the generator shortcut above can miss cyclic groups
        // given by non-generating single elements.
        if (BigInt(pair.m) == G.order() && pair.m == pair.n) {
            for (const auto& c : classes->classes) {
                if (BigInt(c.element_order) == G.order()) {
                    Permutation g = G.element_at(c.rep_index);
                    Witness w{g, inverse(g)};
                    t["phases"].push_back({{"phase", "cyclic-degenerate"}, {"result", "witness"}});
                    if (verify_witness(G, w.g, w.h, pair, true))
                        return finish(VerdictStatus::ProvenYes, std::nullopt, w);
                }
            }
        }
        auto rows = brute_force_triple_count(G, *classes, pair.m, pair.n);
        Json jrows = Json::array();
        bool any_nonzero = false;
        for (const auto& r : rows) {
            jrows.push_back({{"i", r.i}, {"j", r.j}, {"k", r.k}, {"value", r.value}});
            if (r.value > 0) any_nonzero = true;
        }
        t["phases"].push_back({{"phase", "zero-structure-constants"},
                               {"refuted", !any_nonzero},
                               {"triples", jrows}});
        if (!any_nonzero)
            return finish(VerdictStatus::ProvenNo, "zero-structure-constants", std::nullopt);
    } else {
        t["phases"].push_back({{"phase", "zero-structure-constants"}, {"skipped", "element budget"}});
    }

    // Remaining phases: randomized witness search and conjugacy-reduced
    // exhaustive search. Exhaustion is decisive either way, so when it is
    // clearly cheaper than the full sample budget it runs first.
    std::vector<std::size_t> m_classes;
    std::uint64_t n_total = 0;
    if (classes) {
        for (std::size_t c = 0; c < classes->classes.size(); ++c) {
            if (classes->classes[c].element_order == pair.m) m_classes.push_back(c);
            if (classes->classes[c].element_order == pair.n) n_total += classes->classes[c].size;
        }
    }
    std::uint64_t pair_tests_required = m_classes.size() * n_total;
    bool exhaustive_feasible = classes.has_value() && pair_tests_required <= budgets.pair_budget;
    bool exhaustive_first = exhaustive_feasible && pair_tests_required <= budgets.sample_budget / 4;

    // Randomized search via product replacement: sample candidate orders,
    // power down to order m and n, test the product order, then closure.
    auto randomized_phase = [&]() -> std::optional<Verdict> {
        if (budgets.sample_budget == 0) {
            t["phases"].push_back({{"phase", "randomized-search"}, {"skipped", "sample budget"}});
            return std::nullopt;
        }
        RandomElementSampler sampler(G, seed);
        const std::uint64_t window_size = 4096;
        std::uint64_t samples_used = 0;
        std::uint64_t windows = 0;
        std::optional<Witness> found;
        while (samples_used < budgets.sample_budget && !found) {
            std::vector<Witness> candidates;
            std::uint64_t this_window = std::min(window_size, budgets.sample_budget - samples_used);
            for (std::uint64_t s = 0; s < this_window; ++s) {
                ++samples_used;
                Permutation a = sampler.next();
                std::uint64_t oa = element_order(a);
                if (oa % pair.m != 0) continue;
                Permutation g = power(a, oa / pair.m);
                Permutation b = sampler.next();
                std::uint64_t ob = element_order(b);
                if (ob % pair.n != 0) continue;
                Permutation h = power(b, ob / pair.n);
                if (element_order(compose(g, h)) != 2) continue;
                candidates.push_back({std::move(g), std::move(h)});
            }
            ++windows;
            if (!candidates.empty()) found = classify_detail::test_window(G, candidates, jobs);
        }
        t["phases"].push_back({{"phase", "randomized-search"},
                               {"samples", samples_used},
                               {"windows", windows},
                               {"found", found.has_value()}});
        if (found && verify_witness(G, found->g, found->h, pair))
            return finish(VerdictStatus::ProvenYes, std::nullopt, *found);
        return std::nullopt;
    };

    // One representative per order-m class against every order-n element
    // covers all pairs up to simultaneous conjugation, so exhaustion refutes.
    auto exhaustive_phase = [&]() -> std::optional<Verdict> {
        if (!classes) {
            t["phases"].push_back({{"phase", "exhausted-search"}, {"skipped", "element budget"}});
            return std::nullopt;
        }
        if (!exhaustive_feasible) {
            t["phases"].push_back({{"phase", "exhausted-search"},
                                   {"skipped", "pair budget"},
                                   {"pair_tests_required", pair_tests_required}});
            return std::nullopt;
        }
        std::optional<Witness> found;
        std::uint64_t tested = 0;
        const std::uint64_t window_size = 8192;
        for (std::size_t mc : m_classes) {
            if (found) break;
            Permutation g = G.element_at(classes->classes[mc].rep_index);
            for (std::size_t nc = 0; nc < classes->classes.size() && !found; ++nc) {
                if (classes->classes[nc].element_order != pair.n) continue;
                const auto& members = classes->members[nc];
                for (std::size_t lo = 0; lo < members.size() && !found; lo += window_size) {
                    std::size_t hi = std::min(members.size(), lo + window_size);
                    std::vector<Witness> candidates;
                    for (std::size_t idx = lo; idx < hi; ++idx) {
                        ++tested;
                        Permutation h = G.element_at(members[idx]);
                        if (element_order(compose(g, h)) != 2) continue;
                        candidates.push_back({g, std::move(h)});
                    }
                    if (!candidates.empty())
                        found = classify_detail::test_window(G, candidates, jobs);
                }
            }
        }
        t["phases"].push_back({{"phase", "exhausted-search"},
                               {"pair_tests", tested},
                               {"found", found.has_value()}});
        if (found && verify_witness(G, found->g, found->h, pair))
            return finish(VerdictStatus::ProvenYes, std::nullopt, *found);
        if (!found) return finish(VerdictStatus::ProvenNo, "exhausted-search", std::nullopt);
        return std::nullopt;
    };

    if (exhaustive_first) {
        if (auto v = exhaustive_phase()) return *v;
        if (auto v = randomized_phase()) return *v;
    } else {
        if (auto v = randomized_phase()) return *v;
        if (auto v = exhaustive_phase()) return *v;
    }

    return finish(VerdictStatus::Inconclusive, std::nullopt, std::nullopt);
}

// ---- table replay ----

struct TableRow {
    std::string group;
    std::uint64_t m = 0, n = 0;
    std::optional<std::string> expected_chi;  // signed prime-power string
    bool expected_yes = true;
};

inline std::vector<TableRow> load_table_rows_json(const Json& doc) {
    std::vector<TableRow> rows;
    for (const auto& r : doc.at("rows")) {
        TableRow row;
        row.group = r.at("group").get<std::string>();
        row.m = r.at("m").get<std::uint64_t>();
        row.n = r.at("n").get<std::uint64_t>();
        if (r.contains("expected_chi") && !r["expected_chi"].is_null())
            row.expected_chi = r["expected_chi"].get<std::string>();
        std::string e = r.at("expected").get<std::string>();
        if (e != "YES" && e != "NO") throw ValidationError("table row: expected must be YES or NO");
        row.expected_yes = e == "YES";
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<TableRow> load_table_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("table rows: cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("table rows: malformed JSON: ") + ex.what());
    }
    return load_table_rows_json(doc);
}

struct TableReport {
    Json report;
    std::string text;
    bool all_ok = true;
};

inline TableReport run_tables(const CatalogLoadResult& catalog, const std::vector<TableRow>& rows,
                              const Budgets& budgets = {}, std::uint64_t seed = kDefaultSeed,
                              unsigned jobs = 1) {
    TableReport out;
    Json jrows = Json::array();
    std::size_t pass = 0, fail = 0, skipped = 0;
    std::string text;
    for (const auto& row : rows) {
        Json jr;
        jr["group"] = row.group;
        jr["m"] = row.m;
        jr["n"] = row.n;
        jr["expected"] = row.expected_yes ? "YES" : "NO";
        jr["expected_chi"] = row.expected_chi ? Json(*row.expected_chi) : Json(nullptr);
        const CatalogEntry* entry = catalog.find(row.group);
        std::string status;
        if (!entry) {
            status = "SKIPPED";
            jr["status"] = status;
            jr["reason"] = "group not in catalog";
            ++skipped;
        } else {
            Verdict v = verify_triple(subject_of(*entry), OrderPair(row.m, row.n), budgets, seed, jobs);
            bool verdict_ok = (v.status == VerdictStatus::ProvenYes) == row.expected_yes &&
                              v.status != VerdictStatus::Inconclusive;
            bool chi_ok = true;
            if (row.expected_chi && row.expected_yes)
                chi_ok = v.chi.canonical_form() == *row.expected_chi;
            bool row_ok = verdict_ok && chi_ok;
            status = row_ok ? "PASS" : "FAIL";
            jr["status"] = status;
            jr["verdict"] = to_string(v.status);
            if (v.refutation_rule) jr["refutation_rule"] = *v.refutation_rule;
            jr["chi"] = v.chi.canonical_form();
            if (!chi_ok) jr["chi_mismatch"] = true;
            if (row_ok) ++pass; else { ++fail; out.all_ok = false; }
        }
        char line[256];
        std::snprintf(line, sizeof(line), "%-24s {%llu,%llu}  %-14s %-10s %s\n", row.group.c_str(),
                      static_cast<unsigned long long>(row.m), static_cast<unsigned long long>(row.n),
                      row.expected_chi ? row.expected_chi->c_str() : "-",
                      entry ? jr.value("verdict", "") .c_str() : "-", status.c_str());
        text += line;
        jrows.push_back(std::move(jr));
    }
    out.report["rows"] = std::move(jrows);
    out.report["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    char tail[128];
    std::snprintf(tail, sizeof(tail), "pass %zu  fail %zu  skipped %zu\n", pass, fail, skipped);
    out.text = text + tail;
    return out;
}

}  // namespace triverify
