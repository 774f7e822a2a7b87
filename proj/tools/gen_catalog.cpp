// Deterministic generator for the shipped data files:
//   data/catalog.json        certified permutation-group catalog
//   data/classification_rows.json  classification table rows plus refuted pairs
//   data/chartab/pgl2_13.json  PGL_2(13) character table (classical generic table)
//
// Everything here is reproducible: constructions are deterministic, random
// generator reduction and witness searches run under fixed seeds, and every
// emitted entry is re-certified by the ordinary load path before writing.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "triverify/catalog.hpp"
#include "triverify/chartab.hpp"
#include "triverify/classify.hpp"
#include "triverify/constructions.hpp"

using namespace triverify;
using namespace triverify::construct;

namespace {

CatalogEntry make_entry(const std::string& name, std::vector<std::string> aliases, Built built,
                        const std::string& provenance, bool pair_reduction = false) {
    CatalogEntry e;
    e.name = name;
    e.aliases = std::move(aliases);
    e.degree = built.degree;
    e.generators = pair_reduction ? pair_reduce(built.generators, built.expected_order)
                                  : built.generators;
    e.claimed_order = built.expected_order;
    e.provenance = provenance;
    return e;
}

VerdictStatus quick_verdict(const CatalogEntry& entry, std::uint64_t m, std::uint64_t n) {
    CatalogEntry certified = entry;
    certified.group = std::make_shared<PermGroup>(PermGroup::from_generators(entry.generators));
    return verify_triple(subject_of(certified), OrderPair(m, n)).status;
}

// ---- PGL_2(13) generic character table ----

struct ClassTag {
    enum Kind { Identity, Unipotent, Split, NonSplit } kind = Identity;
    std::uint32_t k = 0;  // torus exponent for Split (d_k) / NonSplit (theta_k)
};

Json pgl2_13_table_json(const PermGroup& G, const ConjugacyClasses& cc) {
    constexpr std::uint64_t q = 13;
    const std::size_t nclasses = cc.classes.size();
    if (nclasses != 15) throw Error("PGL_2(13): expected 15 classes, got " + std::to_string(nclasses));

    // Tag every group class: the unipotent class has order 13; the split
    // torus classes are the powers of any order-12 element, the nonsplit ones
    // the powers of any order-14 element.
    std::vector<ClassTag> tags(nclasses);
    auto class_of_power = [&](const Permutation& rep, std::uint32_t k) {
        return cc.class_of[G.element_index(power(rep, k))];
    };
    std::optional<Permutation> split_rep, nonsplit_rep;
    for (const auto& c : cc.classes) {
        if (c.element_order == 12 && !split_rep) split_rep = G.element_at(c.rep_index);
        if (c.element_order == 14 && !nonsplit_rep) nonsplit_rep = G.element_at(c.rep_index);
    }
    if (!split_rep || !nonsplit_rep) throw Error("PGL_2(13): missing torus representatives");
    std::vector<bool> tagged(nclasses, false);
    auto tag = [&](std::size_t cls, ClassTag t) {
        if (tagged[cls]) throw Error("PGL_2(13): class tagged twice");
        tags[cls] = t;
        tagged[cls] = true;
    };
    for (std::size_t c = 0; c < nclasses; ++c) {
        if (cc.classes[c].element_order == 1) tag(c, {ClassTag::Identity, 0});
        if (cc.classes[c].element_order == 13) tag(c, {ClassTag::Unipotent, 0});
    }
    for (std::uint32_t k = 1; k <= 6; ++k) tag(class_of_power(*split_rep, k), {ClassTag::Split, k});
    for (std::uint32_t k = 1; k <= 7; ++k) tag(class_of_power(*nonsplit_rep, k), {ClassTag::NonSplit, k});
    for (bool b : tagged)
        if (!b) throw Error("PGL_2(13): untagged class");

    auto cyc_pair = [](std::uint32_t conductor, std::uint32_t e, int sign) {
        Json v;
        v["conductor"] = conductor;
        std::uint32_t e1 = e % conductor, e2 = (conductor - e % conductor) % conductor;
        if (e1 == e2) {
            v["terms"] = Json::array({Json::array({e1, 2 * sign, 1})});
        } else {
            v["terms"] = Json::array({Json::array({e1, sign, 1}), Json::array({e2, sign, 1})});
        }
        return v;
    };

    // Character values by class tag.
    auto sgn_of = [&](const ClassTag& t) -> int {
        if (t.kind == ClassTag::Split || t.kind == ClassTag::NonSplit) return t.k % 2 == 0 ? 1 : -1;
        return 1;
    };
    std::vector<Json> rows;
    {
        Json triv = Json::array(), sgn = Json::array(), st = Json::array(), st_sgn = Json::array();
        for (std::size_t c = 0; c < nclasses; ++c) {
            const ClassTag& tg = tags[c];
            triv.push_back(1);
            sgn.push_back(sgn_of(tg));
            int st_val = tg.kind == ClassTag::Identity ? static_cast<int>(q)
                         : tg.kind == ClassTag::Unipotent ? 0
                         : tg.kind == ClassTag::Split     ? 1
                                                          : -1;
            st.push_back(st_val);
            st_sgn.push_back(st_val * sgn_of(tg));
        }
        rows.push_back(triv);
        rows.push_back(sgn);
        rows.push_back(st);
        rows.push_back(st_sgn);
    }
    for (std::uint32_t j = 1; j <= 5; ++j) {  // principal series, dim q+1
        Json row = Json::array();
        for (std::size_t c = 0; c < nclasses; ++c) {
            const ClassTag& tg = tags[c];
            if (tg.kind == ClassTag::Identity) row.push_back(static_cast<int>(q + 1));
            else if (tg.kind == ClassTag::Unipotent) row.push_back(1);
            else if (tg.kind == ClassTag::Split) row.push_back(cyc_pair(12, j * tg.k % 12, 1));
            else row.push_back(0);
        }
        rows.push_back(row);
    }
    for (std::uint32_t j = 1; j <= 6; ++j) {  // discrete series, dim q-1
        Json row = Json::array();
        for (std::size_t c = 0; c < nclasses; ++c) {
            const ClassTag& tg = tags[c];
            if (tg.kind == ClassTag::Identity) row.push_back(static_cast<int>(q - 1));
            else if (tg.kind == ClassTag::Unipotent) row.push_back(-1);
            else if (tg.kind == ClassTag::Split) row.push_back(0);
            else row.push_back(cyc_pair(14, j * tg.k % 14, -1));
        }
        rows.push_back(row);
    }

    Json doc;
    doc["name"] = "PGL_2(13)";
    doc["order"] = "2184";
    Json classes = Json::array();
    for (std::size_t c = 0; c < nclasses; ++c) {
        const ClassTag& tg = tags[c];
        std::string label;
        switch (tg.kind) {
            case ClassTag::Identity: label = "1A"; break;
            case ClassTag::Unipotent: label = "13A"; break;
            case ClassTag::Split: label = "d" + std::to_string(tg.k); break;
            case ClassTag::NonSplit: label = "t" + std::to_string(tg.k); break;
        }
        classes.push_back({{"label", label},
                           {"element_order", cc.classes[c].element_order},
                           {"size", std::to_string(cc.classes[c].size)}});
    }
    doc["classes"] = std::move(classes);
    doc["irreducibles"] = rows;
    return doc;
}

Json row_json(const std::string& group, std::uint64_t m, std::uint64_t n, const char* chi,
              const char* expected) {
    Json r;
    r["group"] = group;
    r["m"] = m;
    r["n"] = n;
    r["expected_chi"] = chi ? Json(chi) : Json(nullptr);
    r["expected"] = expected;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(out_dir);
    std::filesystem::create_directories(out_dir + "/chartab");

    std::vector<CatalogEntry> entries;
    auto add = [&](CatalogEntry e) {
        std::cerr << "  " << e.name << ": degree " << e.degree << ", order " << e.claimed_order
                  << ", " << e.generators.size() << " generators\n";
        entries.push_back(std::move(e));
    };

    std::cerr << "natural actions\n";
    add(make_entry("A_5", {"Alt(5)"}, alternating_natural(5), "natural 3-cycle and 5-cycle"));
    add(make_entry("A_7", {"Alt(7)"}, alternating_natural(7), "natural 3-cycle and 7-cycle"));
    {
        CatalogEntry e = make_entry("A_9", {"Alt(9)"}, alternating_natural(9),
                                    "natural 3-cycle and 9-cycle");
        e.natural_alternating = true;
        add(e);
    }
    for (std::size_t n : {6, 7, 8, 9}) {
        CatalogEntry e = make_entry("S_" + std::to_string(n),
                                    n == 8 ? std::vector<std::string>{"Sym(8)", "SL_4(2).2"}
                                    : n == 6 ? std::vector<std::string>{"Sym(6)", "PSL_2(9).2"}
                                             : std::vector<std::string>{"Sym(" + std::to_string(n) + ")"},
                                    symmetric_natural(n), "natural transposition and n-cycle");
        e.natural_symmetric = true;
        add(e);
    }
    add(make_entry("C_6", {}, cyclic_natural(6), "regular 6-cycle"));

    std::cerr << "projective linear groups\n";
    add(make_entry("PSL_2(9)", {"A_6", "Alt(6)"}, psl2(9), "SL_2(9) on the projective line"));
    add(make_entry("PSL_2(25)", {}, psl2(25), "SL_2(25) on the projective line"));
    add(make_entry("PGL_2(13)", {}, pgl2(13), "GL_2(13) on the projective line"));
    {
        // M_10 = the non-split index-2 extension of A_6 inside PGammaL_2(9),
        // generated over PSL_2(9) by diag * Frobenius. Ships its socle so the
        // coset-parity rule applies.
        Built socle = psl2(9);
        Built m10 = psl2_ext(9, Psl2ExtKind::Mixed);
        CatalogEntry e = make_entry("M_10", {"A_6.2_3", "PSL_2(9).2_mixed"}, m10,
                                    "PSL_2(9) extended by diag*Frobenius on the projective line; "
                                    "spectrum {1,2,3,4,5,8} certifies the non-split extension");
        e.socle_generators = socle.generators;
        auto spec = [&] {
            auto G = PermGroup::from_generators(e.generators);
            std::set<std::uint64_t> s;
            for (std::uint64_t i = 0; i < *G.order_u64(); ++i)
                s.insert(element_order(G.element_at(i)));
            return s;
        }();
        if (spec != std::set<std::uint64_t>{1, 2, 3, 4, 5, 8})
            throw Error("M_10 construction has the wrong spectrum");
        add(e);
    }
    add(make_entry("PSL_2(9).(C_2xC_2)", {"PGammaL_2(9)", "Aut(A_6)"}, pgammal2_of_square(9),
                   "PSL_2(9) extended by diag and Frobenius on the projective line"));
    {
        // The classification's PSL_2(25).2 is the index-2 extension, distinct from
        // PGL_2(25), that a (2,6,13)-pair generates; decide which of the two
        // candidates that is by running the verdict engine.
        Built field_ext = psl2_ext(25, Psl2ExtKind::Field);
        Built mixed_ext = psl2_ext(25, Psl2ExtKind::Mixed);
        CatalogEntry cand_field = make_entry("PSL_2(25).2", {"PSigmaL_2(25)"}, field_ext,
                                             "PSL_2(25) extended by Frobenius on the projective line");
        CatalogEntry cand_mixed = make_entry("PSL_2(25).2", {"PSL_2(25).2_mixed"}, mixed_ext,
                                             "PSL_2(25) extended by diag*Frobenius on the projective line");
        bool field_yes = quick_verdict(cand_field, 6, 13) == VerdictStatus::ProvenYes;
        bool mixed_yes = quick_verdict(cand_mixed, 6, 13) == VerdictStatus::ProvenYes;
        std::cerr << "  PSL_2(25).2 candidates: field " << (field_yes ? "YES" : "no") << ", mixed "
                  << (mixed_yes ? "YES" : "no") << "\n";
        if (field_yes == mixed_yes)
            throw Error("PSL_2(25).2: expected exactly one working extension");
        add(field_yes ? cand_field : cand_mixed);
    }
    add(make_entry("SL_2(16)", {"PSL_2(16)"}, sl2_16(), "SL_2(16) on the projective line"));
    add(make_entry("SL_2(16).2", {}, sl2_16_ext(),
                   "SL_2(16) extended by the square of the Frobenius"));

    std::cerr << "three-dimensional linear groups\n";
    add(make_entry("SL_3(3)", {"PSL_3(3)", "L_3(3)"}, psl3(3), "SL_3(3) on the projective plane"));
    add(make_entry("SL_3(3).2", {"PSL_3(3).2"}, psl3_graph_ext(3, Psl3GraphKind::Graph),
                   "SL_3(3) on plane points and lines, extended by the polarity"));
    add(make_entry("SL_3(5)", {"PSL_3(5)", "L_3(5)"}, psl3(5), "SL_3(5) on the projective plane",
                   true));
    add(make_entry("PSL_3(4)", {"L_3(4)"}, psl3(4), "SL_3(4) on the projective plane", true));
    add(make_entry("PSL_3(4).3", {"PGL_3(4)"}, pgl3(4),
                   "GL_3(4) on the projective plane (diagonal extension)", true));
    {
        CatalogEntry f = make_entry("PSL_3(4).2_field", {"PSigmaL_3(4)"}, psl3_field_ext(4),
                                    "PSL_3(4) extended by Frobenius on the projective plane");
        CatalogEntry g = make_entry("PSL_3(4).2_graph", {}, psl3_graph_ext(4, Psl3GraphKind::Graph),
                                    "PSL_3(4) on plane points and lines, extended by the polarity");
        CatalogEntry gf = make_entry("PSL_3(4).2_graph-field", {},
                                     psl3_graph_ext(4, Psl3GraphKind::GraphField),
                                     "PSL_3(4) on plane points and lines, extended by "
                                     "polarity*Frobenius");
        // Assign the classification-table aliases by the generation property:
        // exactly one degree-2 extension is a (2,5,14)-group and exactly one
        // is a (2,7,10)-group.
        std::vector<CatalogEntry*> exts{&f, &g, &gf};
        CatalogEntry* five14 = nullptr;
        CatalogEntry* seven10 = nullptr;
        for (auto* e : exts) {
            if (quick_verdict(*e, 5, 14) == VerdictStatus::ProvenYes) {
                if (five14) throw Error("two PSL_3(4).2 extensions realize {5,14}");
                five14 = e;
            }
            if (quick_verdict(*e, 10, 7) == VerdictStatus::ProvenYes) {
                if (seven10) throw Error("two PSL_3(4).2 extensions realize {10,7}");
                seven10 = e;
            }
        }
        if (!five14 || !seven10 || five14 == seven10)
            throw Error("PSL_3(4).2 alias assignment failed");
        five14->aliases.push_back("PSL_3(4).2_2");
        five14->provenance += "; realizes {5,14}";
        seven10->aliases.push_back("PSL_3(4).2_3");
        seven10->provenance += "; realizes {10,7}";
        std::cerr << "  {5,14} realized by " << five14->name << ", {10,7} by " << seven10->name
                  << "\n";
        add(f);
        add(g);
        add(gf);
    }

    std::cerr << "unitary and symplectic groups\n";
    add(make_entry("SU_3(3)", {"PSU_3(3)", "U_3(3)"}, psu3(3),
                   "SU_3(3) on the 28 isotropic points of the Hermitian plane over GF(9)"));
    add(make_entry("SU_3(3).2", {"PSU_3(3).2", "U_3(3).2", "G_2(2)"}, psu3_bar_ext(3),
                   "SU_3(3) extended by the order-2 field automorphism"));
    add(make_entry("SU_3(4)", {"PSU_3(4)", "U_3(4)"}, psu3(4),
                   "SU_3(4) on the 65 isotropic points of the Hermitian plane over GF(16)", true));
    add(make_entry("SU_3(4).2", {"PSU_3(4).2", "U_3(4).2"}, psu3_bar_ext(4),
                   "SU_3(4) extended by the order-2 field automorphism x -> x^4", true));
    add(make_entry("SU_4(2)", {"PSU_4(2)", "U_4(2)", "PSp_4(3)"}, psu4_2(),
                   "SU_4(2) on the 45 isotropic points of Hermitian 4-space over GF(4), "
                   "generated by unitary transvections",
                   true));
    add(make_entry("SU_4(2).2", {"PSU_4(2).2", "U_4(2).2", "SU(4,2).2"}, psu4_2_ext(),
                   "SU_4(2) extended by the field automorphism x -> x^2", true));
    add(make_entry("Sp_6(2)", {"S_6(2)", "PSp_6(2)"}, sp6_2(),
                   "Sp_6(2) on the 63 nonzero vectors of F_2^6, generated by symplectic "
                   "transvections",
                   true));
    add(make_entry("PSU_3(8)", {"U_3(8)"}, psu3(8),
                   "SU_3(8) on the 513 isotropic points of the Hermitian plane over GF(64); "
                   "the order-3 center acts trivially",
                   true));
    add(make_entry("PSU_4(3)", {"U_4(3)"}, psu4(3),
                   "SU_4(3) on the 280 isotropic points of Hermitian 4-space over GF(9), "
                   "generated by unitary transvections; the order-4 center acts trivially",
                   true));
    {
        // The three degree-2 extensions of PSU_4(3). All occur as
        // (2,7,10)-groups; exactly one is a (2,5,14)-group and receives the
        // plain PSU_4(3).2 alias the classification rows use.
        CatalogEntry f = make_entry("PSU_4(3).2_field", {}, psu4_ext(3, Psu4ExtKind::Field),
                                    "PSU_4(3) extended by the field automorphism x -> x^3", true);
        CatalogEntry d = make_entry("PSU_4(3).2_diag", {}, psu4_ext(3, Psu4ExtKind::Diagonal),
                                    "PSU_4(3) extended by a diagonal unitary similitude", true);
        CatalogEntry x = make_entry("PSU_4(3).2_mixed", {}, psu4_ext(3, Psu4ExtKind::Mixed),
                                    "PSU_4(3) extended by similitude*Frobenius", true);
        std::vector<CatalogEntry*> exts{&f, &d, &x};
        CatalogEntry* five14 = nullptr;
        for (auto* e : exts) {
            if (quick_verdict(*e, 10, 7) != VerdictStatus::ProvenYes)
                throw Error(e->name + " failed to realize {10,7}");
            if (quick_verdict(*e, 5, 14) == VerdictStatus::ProvenYes) {
                if (five14) throw Error("two PSU_4(3).2 extensions realize {5,14}");
                five14 = e;
            }
        }
        if (!five14) throw Error("no PSU_4(3).2 extension realizes {5,14}");
        five14->aliases.push_back("PSU_4(3).2");
        five14->provenance += "; realizes {5,14}";
        std::cerr << "  {5,14} realized by " << five14->name << "; all three realize {10,7}\n";
        add(f);
        add(d);
        add(x);
    }

    // Certify everything through the ordinary load path before writing.
    Json catalog_doc = save_catalog_json(entries);
    auto reload = load_catalog_json(catalog_doc);
    if (!reload.rejected.empty()) {
        for (const auto& r : reload.rejected)
            std::cerr << "REJECTED " << r.name << ": " << r.reason << "\n";
        return 1;
    }
    {
        std::ofstream out(out_dir + "/catalog.json");
        out << catalog_doc.dump(1) << "\n";
    }
    std::cerr << "wrote " << out_dir << "/catalog.json (" << entries.size() << " entries)\n";

    // ---- PGL_2(13) character table, aligned with the catalog entry ----
    {
        const CatalogEntry* pgl = reload.find("PGL_2(13)");
        auto cc = conjugacy_classes(*pgl->group, 1'000'000);
        Json table_doc = pgl2_13_table_json(*pgl->group, cc);
        CharacterTable table = load_character_table_json(table_doc);
        // Full oracle sweep: the formula path must equal brute force on every
        // triple under the identity class matching.
        for (std::size_t i = 0; i < table.num_classes(); ++i) {
            if (BigInt(cc.classes[i].size) != table.classes[i].size ||
                cc.classes[i].element_order != table.classes[i].element_order)
                throw Error("PGL_2(13) table misaligned with group classes");
            for (std::size_t j = 0; j < table.num_classes(); ++j)
                for (std::size_t k = 0; k < table.num_classes(); ++k)
                    if (structure_constant(table, i, j, k) !=
                        brute_force_structure_constant(*pgl->group, cc, i, j, k))
                        throw Error("PGL_2(13) table fails the oracle sweep at (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
        }
        std::ofstream out(out_dir + "/chartab/pgl2_13.json");
        out << table_doc.dump(1) << "\n";
        std::cerr << "wrote " << out_dir << "/chartab/pgl2_13.json (oracle sweep passed)\n";
    }

    // ---- classification table rows ----
    {
        Json rows = Json::array();
        // Degree-2 and Klein extensions of PSL_2(9) and PSL_2(25).
        rows.push_back(row_json("PSL_2(9).2", 5, 6, "-2^5*3", "YES"));
        rows.push_back(row_json("PSL_2(9).(C_2xC_2)", 4, 10, "-2^3*3^3", "YES"));
        rows.push_back(row_json("PSL_2(25).2", 6, 13, "-2^5*5^3", "YES"));
        // Remaining classification rows (T-only lines expanded to S = T and S = T.2).
        rows.push_back(row_json("SL_3(3)", 4, 13, "-2^2*3^5", "YES"));
        rows.push_back(row_json("SL_3(3).2", 4, 13, "-2^3*3^5", "YES"));
        rows.push_back(row_json("SL_3(3)", 13, 13, "-2^3*3^5", "YES"));
        rows.push_back(row_json("SL_3(5)", 3, 31, "-2^4*5^5", "YES"));
        rows.push_back(row_json("PSL_3(4).2_2", 5, 14, "-2^10*3^2", "YES"));
        rows.push_back(row_json("PSL_3(4).2_3", 10, 7, "-2^7*3^4", "YES"));
        rows.push_back(row_json("PSL_3(4).3", 15, 21, "-2^5*3^6", "YES"));
        rows.push_back(row_json("SU_3(3).2", 4, 7, "-2^4*3^4", "YES"));
        rows.push_back(row_json("SU_3(3)", 6, 7, "-2^7*3^2", "YES"));
        rows.push_back(row_json("SU_3(3).2", 6, 7, "-2^8*3^2", "YES"));
        rows.push_back(row_json("SU_3(3)", 7, 7, "-2^4*3^4", "YES"));
        rows.push_back(row_json("SU_3(4).2", 6, 13, "-2^8*5^3", "YES"));
        rows.push_back(row_json("PSU_3(8)", 7, 19, "-2^8*3^8", "YES"));
        rows.push_back(row_json("G_2(3).2", 13, 14, "-2^12*3^6", "YES"));    // beyond desk scale
        rows.push_back(row_json("Sp_6(2)", 7, 10, "-2^9*3^6", "YES"));
        rows.push_back(row_json("PSU_4(3).2", 5, 14, "-2^11*3^6", "YES"));
        rows.push_back(row_json("PSU_4(3).2_field", 10, 7, "-2^8*3^8", "YES"));
        rows.push_back(row_json("PSU_4(3).2_diag", 10, 7, "-2^8*3^8", "YES"));
        rows.push_back(row_json("PSU_4(3).2_mixed", 10, 7, "-2^8*3^8", "YES"));
        rows.push_back(row_json("SL_4(2).2", 10, 7, "-2^7*3^4", "YES"));
        rows.push_back(row_json("S_7", 10, 7, "-2^4*3^4", "YES"));
        rows.push_back(row_json("A_9", 10, 7, "-2^6*3^6", "YES"));
        rows.push_back(row_json("SU_4(2)", 5, 6, "-2^7*3^3", "YES"));
        rows.push_back(row_json("SU_4(2).2", 5, 6, "-2^8*3^3", "YES"));
        rows.push_back(row_json("SU_4(2).2", 10, 4, "-2^5*3^5", "YES"));
        rows.push_back(row_json("SU_4(2).2", 10, 5, "-2^7*3^4", "YES"));
        rows.push_back(row_json("SU_4(2).2", 10, 10, "-2^6*3^5", "YES"));
        // Candidate pairs the classification refutes.
        rows.push_back(row_json("PSL_2(9).2", 4, 5, nullptr, "NO"));
        rows.push_back(row_json("M_10", 4, 5, nullptr, "NO"));
        rows.push_back(row_json("SL_2(16).2", 6, 5, nullptr, "NO"));
        rows.push_back(row_json("SL_2(16).2", 10, 3, nullptr, "NO"));
        rows.push_back(row_json("SU_3(3)", 3, 7, nullptr, "NO"));
        rows.push_back(row_json("SU_3(3)", 4, 7, nullptr, "NO"));
        rows.push_back(row_json("SU_4(2)", 5, 4, nullptr, "NO"));
        rows.push_back(row_json("SU_4(2).2", 5, 4, nullptr, "NO"));
        rows.push_back(row_json("SU_4(2)", 5, 5, nullptr, "NO"));
        rows.push_back(row_json("SU_4(2).2", 10, 3, nullptr, "NO"));
        rows.push_back(row_json("S_9", 10, 7, nullptr, "NO"));
        rows.push_back(row_json("S_9", 5, 14, nullptr, "NO"));
        Json doc;
        doc["rows"] = std::move(rows);
        std::ofstream out(out_dir + "/classification_rows.json");
        out << doc.dump(1) << "\n";
        std::cerr << "wrote " << out_dir << "/classification_rows.json\n";
    }

    return 0;
}
