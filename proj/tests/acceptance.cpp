// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run from the repository root (data/ paths are relative); the CLI
// binary path for the determinism criterion comes from TRIVERIFY_CLI.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "factor_oracle.hpp"
#include "tables.hpp"
#include "triverify/classify.hpp"
#include "triverify/constructions.hpp"
#include "triverify/spectrum.hpp"

using namespace triverify;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

struct ChiRow {
    const char* group;
    const char* order;
    std::uint64_t m, n;
    const char* expected;
};

// The classification rows, with T-only lines expanded to S = T and S = T.2.
const ChiRow kChiRows[] = {
    {"PSL_2(9).2 = S_6", "720", 5, 6, "-2^5*3"},
    {"PSL_2(9).(C_2xC_2)", "1440", 4, 10, "-2^3*3^3"},
    {"PSL_2(25).2", "15600", 6, 13, "-2^5*5^3"},
    {"SL_3(3)", "5616", 4, 13, "-2^2*3^5"},
    {"SL_3(3).2", "11232", 4, 13, "-2^3*3^5"},
    {"SL_3(3)", "5616", 13, 13, "-2^3*3^5"},
    {"SL_3(5)", "372000", 3, 31, "-2^4*5^5"},
    {"PSL_3(4).2", "40320", 5, 14, "-2^10*3^2"},
    {"PSL_3(4).2", "40320", 10, 7, "-2^7*3^4"},
    {"PSL_3(4).3", "60480", 15, 21, "-2^5*3^6"},
    {"SU_3(3).2", "12096", 4, 7, "-2^4*3^4"},
    {"SU_3(3)", "6048", 6, 7, "-2^7*3^2"},
    {"SU_3(3).2", "12096", 6, 7, "-2^8*3^2"},
    {"SU_3(3)", "6048", 7, 7, "-2^4*3^4"},
    {"SU_3(4).2", "124800", 6, 13, "-2^8*5^3"},
    {"PSU_3(8)", "5515776", 7, 19, "-2^8*3^8"},
    {"G_2(3).2", "8491392", 13, 14, "-2^12*3^6"},
    {"Sp_6(2)", "1451520", 7, 10, "-2^9*3^6"},
    {"PSU_4(3).2", "6531840", 5, 14, "-2^11*3^6"},
    {"PSU_4(3).2", "6531840", 10, 7, "-2^8*3^8"},
    {"SL_4(2).2 = S_8", "40320", 10, 7, "-2^7*3^4"},
    {"S_7", "5040", 10, 7, "-2^4*3^4"},
    {"A_9", "181440", 10, 7, "-2^6*3^6"},
    {"SU_4(2)", "25920", 5, 6, "-2^7*3^3"},
    {"SU_4(2).2", "51840", 5, 6, "-2^8*3^3"},
    {"SU_4(2).2", "51840", 10, 4, "-2^5*3^5"},
    {"SU_4(2).2", "51840", 10, 5, "-2^7*3^4"},
    {"SU_4(2).2", "51840", 10, 10, "-2^6*3^5"},
};

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("TRIVERIFY_CLI");
    if (!cli) return {};
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main() {
    CatalogLoadResult catalog;
    try {
        catalog = load_catalog("data/catalog.json");
        if (!catalog.rejected.empty()) throw Error("catalog has rejected entries");
    } catch (const std::exception& e) {
        std::printf("[FAIL] catalog load: %s\n", e.what());
        return 1;
    }

    criterion(1, "Euler characteristic table replay (zero tolerance)", [&](std::string& detail) {
        for (const auto& row : kChiRows) {
            auto r = euler_characteristic(parse_bigint(row.order), OrderPair(row.m, row.n));
            if (!r.integral() || r.canonical_form() != row.expected) {
                detail = std::string(row.group) + " gave " + r.canonical_form() + ", expected " +
                         row.expected;
                return false;
            }
        }
        detail = std::to_string(std::size(kChiRows)) + " rows exact";
        return true;
    });

    criterion(2, "positive generation verdicts with verified witnesses", [&](std::string& detail) {
        struct YesCase {
            const char* group;
            std::uint64_t m, n;
            const char* chi;  // nullptr: no table form to compare
        };
        const YesCase cases[] = {
            {"A_5", 3, 5, nullptr},
            {"S_6", 5, 6, "-2^5*3"},
            {"PSL_2(9).(C_2xC_2)", 4, 10, "-2^3*3^3"},
            {"SL_3(3)", 4, 13, "-2^2*3^5"},
            {"SL_3(3)", 13, 13, "-2^3*3^5"},
            {"PSL_2(25).2", 6, 13, "-2^5*5^3"},
            {"S_7", 10, 7, "-2^4*3^4"},
            {"SU_4(2)", 5, 6, "-2^7*3^3"},
            {"A_9", 10, 7, "-2^6*3^6"},
            {"Sp_6(2)", 7, 10, "-2^9*3^6"},
        };
        for (const auto& c : cases) {
            const CatalogEntry* e = catalog.find(c.group);
            if (!e) {
                detail = std::string(c.group) + " missing from catalog";
                return false;
            }
            Verdict v = verify_triple(subject_of(*e), OrderPair(c.m, c.n));
            if (v.status != VerdictStatus::ProvenYes || !v.witness) {
                detail = std::string(c.group) + " {" + std::to_string(c.m) + "," +
                         std::to_string(c.n) + "} gave " + to_string(v.status);
                return false;
            }
            if (!verify_witness(*e->group, v.witness->g, v.witness->h, OrderPair(c.m, c.n))) {
                detail = std::string(c.group) + ": witness failed independent re-check";
                return false;
            }
            if (c.chi && v.chi.canonical_form() != c.chi) {
                detail = std::string(c.group) + ": chi " + v.chi.canonical_form() + " != " + c.chi;
                return false;
            }
            if (c.chi) {
                // These rows are the -2^a s^b cases: the two-prime form must
                // be detected and must reconstruct |chi| exactly.
                if (!v.chi.two_prime) {
                    detail = std::string(c.group) + ": two-prime form not detected";
                    return false;
                }
                BigInt rebuilt = bigint_pow(BigInt(2), v.chi.two_prime->a) *
                                 bigint_pow(BigInt(v.chi.two_prime->s), v.chi.two_prime->b);
                if (rebuilt != -v.chi.chi()) {
                    detail = std::string(c.group) + ": two-prime form does not reconstruct chi";
                    return false;
                }
            }
            // Empirical invariants on every positive witness: chi is an even
            // integer <= 2, and whenever the lcm filter fires for an odd
            // prime t, t divides chi.
            if (!v.chi.integral() || v.chi.chi() % 2 != 0 || v.chi.chi() > 2) {
                detail = std::string(c.group) + ": chi " + v.chi.to_string() +
                         " is not an even integer <= 2";
                return false;
            }
            Factorization of_order = factor_integer(e->group->order());
            for (auto [t, exp] : of_order.prime_powers) {
                if (t == 2) continue;
                if (lemma31_filter(e->group->order(), OrderPair(c.m, c.n), t) &&
                    v.chi.chi() % t != 0) {
                    detail = std::string(c.group) + ": lemma 3.1 fired for t=" +
                             std::to_string(t) + " but t does not divide chi";
                    return false;
                }
            }
        }
        // SU_4(2) {5,5}: the existence analysis rules it out while the main
        // table omits it; report the verdict without asserting either way.
        const CatalogEntry* su42 = catalog.find("SU_4(2)");
        Verdict v55 = verify_triple(subject_of(*su42), OrderPair(5, 5));
        detail = "10 verdicts with witnesses; informational SU_4(2) {5,5}: " + to_string(v55.status) +
                 (v55.refutation_rule ? " (" + *v55.refutation_rule + ")" : "") +
                 ", chi = " + v55.chi.canonical_form() +
                 " [table omits the pair; discrepancy recorded, not asserted]";
        return true;
    });

    criterion(3, "negative verdicts", [&](std::string& detail) {
        struct NoCase {
            const char* group;
            std::uint64_t m, n;
            const char* rule;  // nullptr: any rule acceptable
        };
        const NoCase cases[] = {
            {"S_9", 10, 7, "cycle-bound"},
            {"S_9", 5, 14, "cycle-bound"},
            {"M_10", 4, 5, nullptr},
            {"SU_3(3)", 3, 7, "exhausted-search"},
            {"SU_3(3)", 4, 7, "exhausted-search"},
        };
        for (const auto& c : cases) {
            const CatalogEntry* e = catalog.find(c.group);
            if (!e) {
                detail = std::string(c.group) + " missing from catalog";
                return false;
            }
            Verdict v = verify_triple(subject_of(*e), OrderPair(c.m, c.n));
            if (v.status != VerdictStatus::ProvenNo) {
                detail = std::string(c.group) + " {" + std::to_string(c.m) + "," +
                         std::to_string(c.n) + "} gave " + to_string(v.status);
                return false;
            }
            if (c.rule && v.refutation_rule != std::string(c.rule)) {
                detail = std::string(c.group) + ": rule " +
                         (v.refutation_rule ? *v.refutation_rule : "none") + " != " + c.rule;
                return false;
            }
        }
        detail = "5 refutations, rules as stated";
        return true;
    });

    criterion(4, "structure-constant oracle equivalence", [&](std::string& detail) {
        struct Fixture {
            CharacterTable table;
            PermGroup group;
        };
        std::vector<Fixture> fixtures;
        fixtures.push_back({load_character_table_json(testsupport::s3_table()),
                            PermGroup::from_generators(construct::symmetric_natural(3).generators)});
        fixtures.push_back({load_character_table_json(testsupport::a4_table()),
                            PermGroup::from_generators(construct::alternating_natural(4).generators)});
        fixtures.push_back({load_character_table_json(testsupport::s4_table()),
                            PermGroup::from_generators(construct::symmetric_natural(4).generators)});
        fixtures.push_back(
            {load_character_table_json(testsupport::d5_table()),
             PermGroup::from_generators({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                         Permutation::from_cycles(5, {{1, 4}, {2, 3}})})});
        fixtures.push_back({load_character_table_json(testsupport::a5_table()),
                            PermGroup::from_generators(construct::alternating_natural(5).generators)});
        std::size_t triples = 0;
        for (const auto& f : fixtures) {
            auto cc = conjugacy_classes(f.group, 1'000'000);
            auto map = match_table_to_group_classes(f.table, cc);
            for (std::size_t i = 0; i < f.table.num_classes(); ++i)
                for (std::size_t j = 0; j < f.table.num_classes(); ++j)
                    for (std::size_t k = 0; k < f.table.num_classes(); ++k) {
                        ++triples;
                        if (structure_constant(f.table, i, j, k) !=
                            brute_force_structure_constant(f.group, cc, map[i], map[j], map[k])) {
                            detail = f.table.name + " mismatch at (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")";
                            return false;
                        }
                    }
        }
        // PGL_2(13), order 2184 <= 10^4: shipped table is class-aligned with
        // the catalog entry; sweep every triple, then pin the count of 13.
        const CatalogEntry* pgl = catalog.find("PGL_2(13)");
        CharacterTable table = load_character_table("data/chartab/pgl2_13.json");
        auto cc = conjugacy_classes(*pgl->group, 1'000'000);
        if (table.num_classes() != cc.classes.size()) {
            detail = "PGL_2(13) class count mismatch";
            return false;
        }
        std::size_t invol_outside = 0, order13 = 0;
        std::vector<std::size_t> order14;
        for (std::size_t c = 0; c < cc.classes.size(); ++c) {
            if (BigInt(cc.classes[c].size) != table.classes[c].size ||
                cc.classes[c].element_order != table.classes[c].element_order) {
                detail = "PGL_2(13) table misaligned at class " + std::to_string(c);
                return false;
            }
            if (cc.classes[c].element_order == 2 && cc.classes[c].size == 78) invol_outside = c;
            if (cc.classes[c].element_order == 13) order13 = c;
            if (cc.classes[c].element_order == 14) order14.push_back(c);
        }
        for (std::size_t i = 0; i < table.num_classes(); ++i)
            for (std::size_t j = 0; j < table.num_classes(); ++j)
                for (std::size_t k = 0; k < table.num_classes(); ++k) {
                    ++triples;
                    if (structure_constant(table, i, j, k) !=
                        brute_force_structure_constant(*pgl->group, cc, i, j, k)) {
                        detail = "PGL_2(13) mismatch at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")";
                        return false;
                    }
                }
        for (std::size_t j : order14) {
            if (brute_force_structure_constant(*pgl->group, cc, invol_outside, j, order13) != 13) {
                detail = "PGL_2(13) brute-force count at an order-14 class is not 13";
                return false;
            }
            if (structure_constant(table, invol_outside, j, order13) != 13) {
                detail = "PGL_2(13) formula count at an order-14 class is not 13";
                return false;
            }
        }
        detail = std::to_string(triples) + " triples equal on both paths; PGL_2(13) count is 13";
        return true;
    });

    criterion(5, "Zsigmondy property suite, q <= 50, a <= 12", [&](std::string& detail) {
        for (std::uint64_t q = 2; q <= 50; ++q) {
            for (std::uint32_t a = 2; a <= 12; ++a) {
                BigInt qa = bigint_pow(BigInt(q), a) - 1;
                std::optional<std::uint64_t> expected;
                for (const auto& [prime, exp] : testsupport::factor_oracle(qa)) {
                    bool primitive = true;
                    for (std::uint32_t i = 1; i < a && primitive; ++i)
                        if ((bigint_pow(BigInt(q), i) - 1) % prime == 0) primitive = false;
                    if (primitive) {
                        auto p64 = to_u64(prime);
                        if (!p64) continue;
                        if (!expected || *p64 < *expected) expected = *p64;
                    }
                }
                auto got = zsigmondy_ppd({q, a});
                if (got != expected) {
                    detail = "mismatch at q=" + std::to_string(q) + ", a=" + std::to_string(a);
                    return false;
                }
                bool mersenne = ((q + 1) & q) == 0;
                bool exceptional = (q == 2 && a == 6) || (a == 2 && mersenne);
                if (got.has_value() != !exceptional) {
                    detail = "exception set wrong at q=" + std::to_string(q) +
                             ", a=" + std::to_string(a);
                    return false;
                }
            }
        }
        detail = "539 queries match the brute-force oracle; exceptions exactly (2,6) and Mersenne a=2";
        return true;
    });

    criterion(6, "prime-graph / Sylow agreement on every catalog group in budget",
              [&](std::string& detail) {
                  Budgets budgets;
                  std::size_t checked = 0;
                  for (const auto& e : catalog.entries) {
                      auto n = e.group->order_u64();
                      if (!n || *n > budgets.element_budget) continue;
                      auto spec = order_spectrum(*e.group, SpectrumMode::Exhaustive,
                                                 budgets.element_budget);
                      auto prof = prime_graph_profile(e.group->order(), spec);
                      for (std::uint64_t p : prof.pi) {
                          bool in_nc = std::find(prof.pi_nc.begin(), prof.pi_nc.end(), p) !=
                                       prof.pi_nc.end();
                          auto [gp, rest] = p_part(e.group->order(), p);
                          bool has_full_part = gp <= BigInt(UINT64_MAX) &&
                                               spec.count(static_cast<std::uint64_t>(gp)) != 0;
                          if (in_nc != !has_full_part ||
                              in_nc != !sylow_cyclic(e.group->order(), spec, p)) {
                              detail = e.name + ": three-way disagreement at p=" + std::to_string(p);
                              return false;
                          }
                      }
                      // Independence numbers against a second exhaustive search.
                      std::function<std::uint32_t(const std::vector<std::uint64_t>&)> brute =
                          [&](const std::vector<std::uint64_t>& verts) {
                              std::uint32_t best = 0;
                              for (std::uint64_t mask = 0; mask < (1ull << verts.size()); ++mask) {
                                  bool ok = true;
                                  for (std::size_t i = 0; i < verts.size() && ok; ++i)
                                      for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
                                          if ((mask >> i & 1) && (mask >> j & 1) &&
                                              spec.count(verts[i] * verts[j]))
                                              ok = false;
                                  if (ok)
                                      best = std::max<std::uint32_t>(
                                          best, __builtin_popcountll(mask));
                              }
                              return best;
                          };
                      if (prof.t != brute(prof.pi) || prof.t_c != brute(prof.pi_c)) {
                          detail = e.name + ": independence number mismatch";
                          return false;
                      }
                      ++checked;
                  }
                  detail = std::to_string(checked) + " groups checked";
                  return checked > 0;
              });

    criterion(7, "PSL_2(2^x) scan, x <= 20", [&](std::string& detail) {
        auto rows = scan_psl2_even(20);
        for (const auto& r : rows) {
            // Independent re-derivation of the flag: strip the 2-part of chi,
            // then let the oracle decide whether the odd part is a prime power.
            if (!r.chi.integral()) {
                detail = "non-integral chi at x=" + std::to_string(r.x);
                return false;
            }
            BigInt v = r.chi.chi() < 0 ? BigInt(-r.chi.chi()) : r.chi.chi();
            std::uint32_t a = 0;
            while (v % 2 == 0) {
                v /= 2;
                ++a;
            }
            bool expect_flag = false;
            if (a >= 1 && v > 1) {
                auto odd_factors = testsupport::factor_oracle(v);
                expect_flag = odd_factors.size() == 1;
            }
            if (r.flagged != expect_flag) {
                detail = "flag mismatch at x=" + std::to_string(r.x);
                return false;
            }
            if (r.x == 4) {
                if (!r.flagged || r.derived_polynomial != 191 || r.printed_polynomial != 193 ||
                    !r.derived_poly_prime.value_or(false) || !r.printed_poly_prime.value_or(false)) {
                    detail = "x=4 row wrong: expected flagged with 191 and 193 both prime";
                    return false;
                }
            }
        }
        detail = "19 rows; flags match the independent factorization; x=4 shows 191/193 both prime";
        return true;
    });

    criterion(8, "byte-identical transcripts for repeated seeded runs", [&](std::string& detail) {
        if (!std::getenv("TRIVERIFY_CLI")) {
            detail = "TRIVERIFY_CLI not set";
            return false;
        }
        auto v1 = run_cli("--format json verify --group 'Sp_6(2)' --m 7 --n 10");
        auto v2 = run_cli("--format json verify --group 'Sp_6(2)' --m 7 --n 10");
        if (v1.exit_code != 0 || v1.output.empty() || v1.output != v2.output) {
            detail = "verify transcripts differ between runs";
            return false;
        }
        auto t1 = run_cli("--format json tables --rows data/classification_rows.json");
        auto t2 = run_cli("--format json tables --rows data/classification_rows.json");
        if (t1.output.empty() || t1.output != t2.output) {
            detail = "tables reports differ between runs";
            return false;
        }
        if (t1.exit_code != 0) {
            detail = "tables replay reported mismatches";
            return false;
        }
        detail = "verify and tables byte-identical across consecutive runs";
        return true;
    });

    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                g_failures);
    std::printf(
        "not reproducible at desk scale (no construction shipped; exercised only as chi replay\n"
        "rows and a SKIPPED table row): G_2(3).2 {13,14} and its existence counts 286/273.\n"
        "PSU_3(8) {7,19} and the PSU_4(3).2 rows, though beyond the class-enumeration budget,\n"
        "are verified by the randomized witness path (see data/classification_rows.json).\n");
    return g_failures == 0 ? 0 : 1;
}
