// Batch front end: every pipeline stage behind one binary with
// machine-readable output. Exit codes: 0 success, 1 expectation mismatch,
// 2 input error. All randomness flows through --seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "triverify/classify.hpp"
#include "triverify/spectrum.hpp"

using namespace triverify;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string catalog_path = "data/catalog.json";
    std::uint64_t seed = kDefaultSeed;
    Budgets budgets;
    unsigned jobs = 1;
};

void emit(const GlobalOpts& opts, const Json& doc, const std::string& text) {
    if (opts.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

const CatalogEntry& find_entry(const CatalogLoadResult& catalog, const std::string& name) {
    const CatalogEntry* e = catalog.find(name);
    if (!e) throw Error("group '" + name + "' not found in catalog");
    return *e;
}

CatalogLoadResult load_catalog_checked(const std::string& path) {
    CatalogLoadResult catalog = load_catalog(path);
    if (!catalog.rejected.empty()) {
        std::string msg = "catalog entries rejected:";
        for (const auto& r : catalog.rejected) msg += "\n  " + r.name + ": " + r.reason;
        throw ValidationError(msg);
    }
    return catalog;
}

Json chi_json(const BigInt& order, const OrderPair& pair, const EulerResult& r) {
    Json j;
    j["order"] = order.str();
    j["m"] = pair.m;
    j["n"] = pair.n;
    j["integral"] = r.integral();
    if (r.integral()) {
        j["chi"] = r.chi().str();
        j["form"] = r.canonical_form();
        Json factors = Json::array();
        for (auto [p, e] : r.factorization.prime_powers) factors.push_back({p, e});
        j["factorization"] = std::move(factors);
        if (!r.factorization.complete()) j["unfactored"] = r.factorization.unfactored.str();
        if (r.two_prime)
            j["two_prime_form"] = {{"a", r.two_prime->a}, {"s", r.two_prime->s}, {"b", r.two_prime->b}};
        else
            j["two_prime_form"] = nullptr;
    } else {
        j["chi"] = r.numerator.str() + "/" + r.denominator.str();
        j["form"] = nullptr;
    }
    return j;
}

int run_verify_replay(const GlobalOpts& opts, const std::string& replay_path) {
    std::ifstream in(replay_path);
    if (!in) throw Error("cannot open transcript " + replay_path);
    Json old;
    in >> old;
    auto catalog = load_catalog_checked(opts.catalog_path);
    const CatalogEntry& entry = find_entry(catalog, old.at("group").get<std::string>());
    Budgets budgets;
    budgets.element_budget = old.at("budgets").at("element").get<std::uint64_t>();
    budgets.sample_budget = old.at("budgets").at("sample").get<std::uint64_t>();
    budgets.pair_budget = old.at("budgets").at("pair").get<std::uint64_t>();
    Verdict v = verify_triple(subject_of(entry),
                              OrderPair(old.at("m").get<std::uint64_t>(), old.at("n").get<std::uint64_t>()),
                              budgets, old.at("seed").get<std::uint64_t>(), opts.jobs);
    std::string fresh = v.transcript.dump(2);
    std::string stored = Json(old).dump(2);
    if (fresh == stored) {
        std::cout << "replay OK: transcript reproduced bit-for-bit\n";
        return 0;
    }
    std::cout << "replay MISMATCH\n--- stored ---\n" << stored << "\n--- fresh ---\n" << fresh << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triverify: desk-scale verification of (2,m,n)-group classifications"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts opts;
    if (const char* env = std::getenv("TRIVERIFY_BUDGET"))
        opts.budgets.element_budget = std::strtoull(env, nullptr, 10);
    app.add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--catalog", opts.catalog_path, "catalog JSON path");
    app.add_option("--seed", opts.seed, "seed for all randomized behavior");
    app.add_option("--element-budget", opts.budgets.element_budget)->check(CLI::PositiveNumber);
    app.add_option("--sample-budget", opts.budgets.sample_budget)->check(CLI::PositiveNumber);
    app.add_option("--pair-budget", opts.budgets.pair_budget)->check(CLI::PositiveNumber);
    app.add_option("--jobs", opts.jobs, "worker cap for parallel phases");

    // chi
    std::string chi_order;
    std::uint64_t chi_m = 0, chi_n = 0;
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of (|G|, {m,n})");
    chi_cmd->add_option("--order", chi_order)->required();
    chi_cmd->add_option("--m", chi_m)->required();
    chi_cmd->add_option("--n", chi_n)->required();

    // ppd
    std::uint64_t ppd_q = 0;
    std::uint32_t ppd_a = 0;
    auto* ppd_cmd = app.add_subcommand("ppd", "smallest primitive prime divisor of q^a - 1");
    ppd_cmd->add_option("--q", ppd_q)->required();
    ppd_cmd->add_option("--a", ppd_a)->required();

    // primegraph
    std::string pg_group;
    auto* pg_cmd = app.add_subcommand("primegraph", "spectrum and prime graph of a catalog group");
    pg_cmd->add_option("--group", pg_group)->required();

    // verify
    std::string v_group, v_replay;
    std::uint64_t v_m = 0, v_n = 0;
    auto* v_cmd = app.add_subcommand("verify", "decide whether (G, m, n) is a (2,m,n)-group");
    v_cmd->add_option("--group", v_group);
    v_cmd->add_option("--m", v_m);
    v_cmd->add_option("--n", v_n);
    v_cmd->add_option("--replay", v_replay, "re-run from a transcript and compare bit-for-bit");

    // tables
    std::string t_rows;
    auto* t_cmd = app.add_subcommand("tables", "replay classification table rows");
    t_cmd->add_option("--rows", t_rows)->required();

    // scan-psl2
    std::uint32_t scan_xmax = 20;
    auto* scan_cmd = app.add_subcommand("scan-psl2", "even-characteristic PSL_2 chi scan");
    scan_cmd->add_option("--xmax", scan_xmax);

    // structconst
    std::string sc_table, sc_group;
    std::int64_t sc_i = -1, sc_j = -1, sc_k = -1;
    bool sc_show = false;
    auto* sc_cmd = app.add_subcommand("structconst", "class-multiplication structure constant");
    sc_cmd->add_option("--table", sc_table, "character table JSON (formula path)");
    sc_cmd->add_option("--group", sc_group, "catalog group (brute-force path)");
    sc_cmd->add_option("--i", sc_i);
    sc_cmd->add_option("--j", sc_j);
    sc_cmd->add_option("--k", sc_k);
    sc_cmd->add_flag("--show-classes", sc_show, "list class indices and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chi_cmd->parsed()) {
            BigInt order = parse_bigint(chi_order);
            OrderPair pair(chi_m, chi_n);
            EulerResult r = euler_characteristic(order, pair);
            std::string text = "chi(" + order.str() + ", {" + std::to_string(pair.m) + "," +
                               std::to_string(pair.n) + "}) = " + r.to_string() + "\n";
            emit(opts, chi_json(order, pair, r), text);
            return 0;
        }
        if (ppd_cmd->parsed()) {
            auto p = zsigmondy_ppd({ppd_q, ppd_a});
            Json j;
            j["q"] = ppd_q;
            j["a"] = ppd_a;
            j["ppd"] = p ? Json(*p) : Json(nullptr);
            std::string text = "ppd(q=" + std::to_string(ppd_q) + ", a=" + std::to_string(ppd_a) +
                               ") = " + (p ? std::to_string(*p) : "none (exception)") + "\n";
            emit(opts, j, text);
            return 0;
        }
        if (pg_cmd->parsed()) {
            auto catalog = load_catalog_checked(opts.catalog_path);
            const CatalogEntry& entry = find_entry(catalog, pg_group);
            auto prof = prime_graph_profile(*entry.group, opts.budgets.element_budget);
            Json j;
            j["group"] = entry.name;
            j.update(profile_to_json(prof));
            std::string text = entry.name + ": |G| = " + prof.group_order.str() + "\n  spectrum:";
            for (auto o : prof.spectrum) text += " " + std::to_string(o);
            text += "\n  pi_c:";
            for (auto p : prof.pi_c) text += " " + std::to_string(p);
            text += "\n  pi_nc:";
            for (auto p : prof.pi_nc) text += " " + std::to_string(p);
            text += "\n  edges:";
            for (auto [p, q] : prof.edges)
                text += " " + std::to_string(p) + "-" + std::to_string(q);
            text += "\n  t = " + std::to_string(prof.t) + ", t_c = " + std::to_string(prof.t_c) + "\n";
            emit(opts, j, text);
            return 0;
        }
        if (v_cmd->parsed()) {
            if (!v_replay.empty()) return run_verify_replay(opts, v_replay);
            if (v_group.empty() || v_m == 0 || v_n == 0)
                throw Error("verify needs --group, --m and --n (or --replay)");
            auto catalog = load_catalog_checked(opts.catalog_path);
            const CatalogEntry& entry = find_entry(catalog, v_group);
            Verdict v = verify_triple(subject_of(entry), OrderPair(v_m, v_n), opts.budgets,
                                      opts.seed, opts.jobs);
            std::string text = entry.name + " {" + std::to_string(v_m) + "," + std::to_string(v_n) +
                               "}: " + to_string(v.status);
            if (v.refutation_rule) text += " (" + *v.refutation_rule + ")";
            if (v.witness)
                text += "\n  g = " + cycle_notation(v.witness->g) +
                        "\n  h = " + cycle_notation(v.witness->h);
            text += "\n  chi = " + v.chi.to_string() + "\n";
            emit(opts, v.transcript, text);
            return 0;
        }
        if (t_cmd->parsed()) {
            auto catalog = load_catalog_checked(opts.catalog_path);
            auto rows = load_table_rows(t_rows);
            auto report = run_tables(catalog, rows, opts.budgets, opts.seed, opts.jobs);
            emit(opts, report.report, report.text);
            return report.all_ok ? 0 : 1;
        }
        if (scan_cmd->parsed()) {
            auto rows = scan_psl2_even(scan_xmax);
            Json arr = Json::array();
            std::string text =
                "x   q          chi                          derived q^2-4q-1   printed q^2-4q+1   flagged\n";
            for (const auto& r : rows) {
                Json j;
                j["x"] = r.x;
                j["q"] = r.q;
                j["chi"] = r.chi.chi().str();
                j["form"] = r.chi.canonical_form();
                j["derived_polynomial"] = r.derived_polynomial.str();
                j["derived_polynomial_prime"] =
                    r.derived_poly_prime ? Json(*r.derived_poly_prime) : Json(nullptr);
                j["printed_polynomial"] = r.printed_polynomial.str();
                j["printed_polynomial_prime"] =
                    r.printed_poly_prime ? Json(*r.printed_poly_prime) : Json(nullptr);
                j["flagged"] = r.flagged;
                arr.push_back(std::move(j));
                char line[256];
                std::snprintf(line, sizeof(line), "%-3u %-10llu %-28s %-18s %-18s %s\n", r.x,
                              static_cast<unsigned long long>(r.q), r.chi.canonical_form().c_str(),
                              (r.derived_polynomial.str() +
                               (r.derived_poly_prime && *r.derived_poly_prime ? "*" : ""))
                                  .c_str(),
                              (r.printed_polynomial.str() +
                               (r.printed_poly_prime && *r.printed_poly_prime ? "*" : ""))
                                  .c_str(),
                              r.flagged ? "yes" : "no");
                text += line;
            }
            Json doc;
            doc["rows"] = std::move(arr);
            emit(opts, doc, text + "(* marks a prime polynomial value)\n");
            return 0;
        }
        if (sc_cmd->parsed()) {
            if (sc_table.empty() == sc_group.empty())
                throw Error("structconst needs exactly one of --table or --group");
            Json j;
            std::string text;
            if (!sc_table.empty()) {
                CharacterTable table = load_character_table(sc_table);
                if (sc_show) {
                    text = "classes of " + table.name + ":\n";
                    for (std::size_t c = 0; c < table.num_classes(); ++c)
                        text += "  " + std::to_string(c) + ": " + table.classes[c].label +
                                " order " + std::to_string(table.classes[c].element_order) +
                                " size " + table.classes[c].size.str() + "\n";
                    std::cout << text;
                    return 0;
                }
                if (sc_i < 0 || sc_j < 0 || sc_k < 0) throw Error("structconst needs --i --j --k");
                std::uint64_t value = structure_constant(table, sc_i, sc_j, sc_k);
                j["path"] = "character-formula";
                j["table"] = table.name;
                j["i"] = sc_i;
                j["j"] = sc_j;
                j["k"] = sc_k;
                j["value"] = value;
                text = "a(" + std::to_string(sc_i) + "," + std::to_string(sc_j) + "," +
                       std::to_string(sc_k) + ") = " + std::to_string(value) + "\n";
            } else {
                auto catalog = load_catalog_checked(opts.catalog_path);
                const CatalogEntry& entry = find_entry(catalog, sc_group);
                auto cc = conjugacy_classes(*entry.group, opts.budgets.element_budget);
                if (sc_show) {
                    text = "classes of " + entry.name + ":\n";
                    for (std::size_t c = 0; c < cc.classes.size(); ++c)
                        text += "  " + std::to_string(c) + ": order " +
                                std::to_string(cc.classes[c].element_order) + " size " +
                                std::to_string(cc.classes[c].size) + "\n";
                    std::cout << text;
                    return 0;
                }
                if (sc_i < 0 || sc_j < 0 || sc_k < 0) throw Error("structconst needs --i --j --k");
                std::uint64_t value = brute_force_structure_constant(*entry.group, cc, sc_i, sc_j, sc_k);
                j["path"] = "brute-force";
                j["group"] = entry.name;
                j["i"] = sc_i;
                j["j"] = sc_j;
                j["k"] = sc_k;
                j["value"] = value;
                text = "a(" + std::to_string(sc_i) + "," + std::to_string(sc_j) + "," +
                       std::to_string(sc_k) + ") = " + std::to_string(value) + "\n";
            }
            emit(opts, j, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
