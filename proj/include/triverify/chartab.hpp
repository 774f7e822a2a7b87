#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "triverify/bigint.hpp"
#include "triverify/errors.hpp"
#include "triverify/perm_group.hpp"

namespace triverify {

// A character value as an exact cyclotomic expression sum_k (num_k/den_k) * zeta_n^{e_k},
// evaluated numerically in extended precision only at the point of use.
struct CyclotomicValue {
    std::uint32_t conductor = 1;
    struct Term {
        std::uint32_t exponent = 0;
        std::int64_t num = 0;
        std::int64_t den = 1;
    };
    std::vector<Term> terms;

    static CyclotomicValue integer(std::int64_t v) {
        CyclotomicValue c;
        if (v != 0) c.terms.push_back({0, v, 1});
        return c;
    }

    std::complex<long double> eval() const {
        static const long double two_pi = 2.0L * std::acos(-1.0L);
        std::complex<long double> acc{0.0L, 0.0L};
        for (const auto& t : terms) {
            long double angle = two_pi * static_cast<long double>(t.exponent % conductor) /
                                static_cast<long double>(conductor);
            long double coeff = static_cast<long double>(t.num) / static_cast<long double>(t.den);
            acc += coeff * std::complex<long double>{std::cos(angle), std::sin(angle)};
        }
        return acc;
    }
};

struct CharClass {
    std::string label;
    std::uint32_t element_order = 1;
    BigInt size;
    BigInt centralizer_order;
};

class CharacterTable {
  public:
    std::string name;
    BigInt order;
    std::vector<CharClass> classes;
    std::vector<std::vector<CyclotomicValue>> irreducibles;  // [character][class]
    std::vector<std::uint64_t> degrees;

    std::size_t num_classes() const { return classes.size(); }

    std::vector<std::size_t> classes_of_order(std::uint64_t o) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].element_order == o) out.push_back(i);
        return out;
    }

    std::size_t class_by_label(const std::string& label) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].label == label) return i;
        throw Error("character table: no class labelled " + label);
    }
};

namespace chartab_detail {

constexpr long double kTolerance = 1e-6L;

inline void validate(const CharacterTable& t) {
    std::vector<std::string> problems;
    if (t.classes.empty()) problems.push_back("no classes");
    std::set<std::string> labels;
    BigInt size_sum = 0;
    for (const auto& c : t.classes) {
        if (!labels.insert(c.label).second) problems.push_back("duplicate class label " + c.label);
        if (c.size < 1) problems.push_back("class " + c.label + " has nonpositive size");
        if (t.order % c.size != 0)
            problems.push_back("class size of " + c.label + " does not divide the group order");
        else if (c.size * c.centralizer_order != t.order)
            problems.push_back("class " + c.label + ": size * centralizer != order");
        size_sum += c.size;
    }
    if (!t.classes.empty() &&
        (t.classes[0].element_order != 1 || t.classes[0].size != 1))
        problems.push_back("first class must be the identity class");
    if (size_sum != t.order) problems.push_back("class sizes sum to " + size_sum.str() +
                                                ", not the group order " + t.order.str());
    if (t.irreducibles.size() != t.classes.size())
        problems.push_back("number of irreducibles != number of classes");
    for (const auto& row : t.irreducibles)
        if (row.size() != t.classes.size()) problems.push_back("irreducible row of wrong length");

    if (problems.empty()) {
        // Degrees: positive integers with sum of squares |G|.
        BigInt degsq = 0;
        for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
            auto v = t.irreducibles[i][0].eval();
            long double re = v.real();
            if (std::abs(v.imag()) > kTolerance || re < 1 - kTolerance ||
                std::abs(re - std::llroundl(re)) > kTolerance)
                problems.push_back("degree of irreducible " + std::to_string(i) +
                                   " is not a positive integer");
            else
                degsq += BigInt(static_cast<long long>(std::llroundl(re))) *
                         BigInt(static_cast<long long>(std::llroundl(re)));
        }
        if (problems.empty() && degsq != t.order)
            problems.push_back("sum of squared degrees " + degsq.str() + " != order " + t.order.str());
    }

    if (problems.empty()) {
        // Row orthogonality at the working precision.
        long double order_ld = t.order.convert_to<long double>();
        for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
            for (std::size_t j = i; j < t.irreducibles.size(); ++j) {
                std::complex<long double> acc{0.0L, 0.0L};
                for (std::size_t k = 0; k < t.classes.size(); ++k) {
                    long double sz = t.classes[k].size.convert_to<long double>();
                    acc += sz * t.irreducibles[i][k].eval() * std::conj(t.irreducibles[j][k].eval());
                }
                acc /= order_ld;
                long double expect = i == j ? 1.0L : 0.0L;
                if (std::abs(acc.real() - expect) > kTolerance || std::abs(acc.imag()) > kTolerance) {
                    problems.push_back("row orthogonality fails for characters " + std::to_string(i) +
                                       "," + std::to_string(j));
                    break;
                }
            }
        }
    }

    if (!problems.empty()) {
        std::string msg = "character table rejected:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }
}

inline CyclotomicValue parse_value(const nlohmann::json& v) {
    CyclotomicValue c;
    if (v.is_number_integer()) return CyclotomicValue::integer(v.get<std::int64_t>());
    c.conductor = v.at("conductor").get<std::uint32_t>();
    if (c.conductor == 0) throw ValidationError("cyclotomic conductor must be positive");
    for (const auto& t : v.at("terms")) {
        if (!t.is_array() || (t.size() != 2 && t.size() != 3))
            throw ValidationError("cyclotomic term must be [exp, num] or [exp, num, den]");
        CyclotomicValue::Term term;
        term.exponent = t[0].get<std::uint32_t>();
        term.num = t[1].get<std::int64_t>();
        term.den = t.size() == 3 ? t[2].get<std::int64_t>() : 1;
        if (term.den == 0) throw ValidationError("cyclotomic term with zero denominator");
        c.terms.push_back(term);
    }
    return c;
}

}  // namespace chartab_detail

inline CharacterTable load_character_table_json(const nlohmann::json& doc) {
    CharacterTable t;
    t.name = doc.at("name").get<std::string>();
    t.order = parse_bigint(doc.at("order").get<std::string>());
    for (const auto& c : doc.at("classes")) {
        CharClass cc;
        cc.label = c.at("label").get<std::string>();
        cc.element_order = c.at("element_order").get<std::uint32_t>();
        cc.size = parse_bigint(c.at("size").get<std::string>());
        if (cc.size > 0 && t.order % cc.size == 0) cc.centralizer_order = t.order / cc.size;
        t.classes.push_back(std::move(cc));
    }
    for (const auto& row : doc.at("irreducibles")) {
        std::vector<CyclotomicValue> r;
        for (const auto& v : row) r.push_back(chartab_detail::parse_value(v));
        t.irreducibles.push_back(std::move(r));
    }
    chartab_detail::validate(t);
    for (const auto& row : t.irreducibles)
        t.degrees.push_back(static_cast<std::uint64_t>(std::llroundl(row[0].eval().real())));
    return t;
}

inline CharacterTable load_character_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("character table: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("character table: malformed JSON: ") + ex.what());
    }
    return load_character_table_json(doc);
}

// a_{g,h,z} = |K| / (|C(g)||C(h)|) * sum_chi chi(g) chi(h) conj(chi(z)) / chi(1),
// evaluated numerically and asserted integral. A failed integrality assertion
// signals a corrupt table and is never rounded away.
inline std::uint64_t structure_constant(const CharacterTable& t, std::size_t i, std::size_t j,
                                        std::size_t k) {
    if (i >= t.num_classes() || j >= t.num_classes() || k >= t.num_classes())
        throw Error("structure_constant: class index out of range");
    std::complex<long double> sum{0.0L, 0.0L};
    for (std::size_t c = 0; c < t.irreducibles.size(); ++c) {
        const auto& row = t.irreducibles[c];
        sum += row[i].eval() * row[j].eval() * std::conj(row[k].eval()) /
               static_cast<long double>(t.degrees[c]);
    }
    long double prefactor = (t.classes[i].size * t.classes[j].size).convert_to<long double>() /
                            t.order.convert_to<long double>();
    std::complex<long double> value = prefactor * sum;
    long double rounded = std::llroundl(value.real());
    if (std::abs(value.imag()) > chartab_detail::kTolerance ||
        std::abs(value.real() - rounded) > chartab_detail::kTolerance || rounded < 0)
        throw ValidationError("structure_constant: non-integral value " +
                              std::to_string(static_cast<double>(value.real())) + " + " +
                              std::to_string(static_cast<double>(value.imag())) +
                              "i; table is corrupt");
    return static_cast<std::uint64_t>(rounded);
}

struct TripleCountRow {
    std::size_t i, j, k;
    std::uint64_t value;
};

// Structure constants over every class triple with element orders (m, n, 2).
// An all-zero result certifies that no pair (g, h) with o(g)=m, o(h)=n,
// o(gh)=2 exists.
inline std::vector<TripleCountRow> triple_count(const CharacterTable& t, std::uint64_t m,
                                                std::uint64_t n) {
    std::vector<TripleCountRow> rows;
    for (std::size_t i : t.classes_of_order(m))
        for (std::size_t j : t.classes_of_order(n))
            for (std::size_t k : t.classes_of_order(2))
                rows.push_back({i, j, k, structure_constant(t, i, j, k)});
    return rows;
}

// Independent path: count pairs (x, y) in C_i x C_j with x*y = z for the
// fixed representative z of C_k, by iterating C_i and classifying x^{-1} z
// through the precomputed element->class index.
inline std::uint64_t brute_force_structure_constant(const PermGroup& G, const ConjugacyClasses& cc,
                                                    std::size_t i, std::size_t j, std::size_t k) {
    if (i >= cc.classes.size() || j >= cc.classes.size() || k >= cc.classes.size())
        throw Error("brute_force_structure_constant: class index out of range");
    Permutation z = G.element_at(cc.classes[k].rep_index);
    std::uint64_t count = 0;
    for (std::uint64_t idx : cc.members[i]) {
        Permutation x = G.element_at(idx);
        Permutation y = compose(inverse(x), z);
        if (cc.class_of[G.element_index(y)] == j) ++count;
    }
    return count;
}

inline std::vector<TripleCountRow> brute_force_triple_count(const PermGroup& G,
                                                            const ConjugacyClasses& cc,
                                                            std::uint64_t m, std::uint64_t n) {
    std::vector<std::size_t> is, js, ks;
    for (std::size_t c = 0; c < cc.classes.size(); ++c) {
        if (cc.classes[c].element_order == m) is.push_back(c);
        if (cc.classes[c].element_order == n) js.push_back(c);
        if (cc.classes[c].element_order == 2) ks.push_back(c);
    }
    std::vector<TripleCountRow> rows;
    for (std::size_t i : is) {
        for (std::size_t k : ks) {
            // One sweep over C_i buckets every j at once.
            std::vector<std::uint64_t> bucket(cc.classes.size(), 0);
            Permutation z = G.element_at(cc.classes[k].rep_index);
            for (std::uint64_t idx : cc.members[i]) {
                Permutation x = G.element_at(idx);
                ++bucket[cc.class_of[G.element_index(compose(inverse(x), z))]];
            }
            for (std::size_t j : js) rows.push_back({i, j, k, bucket[j]});
        }
    }
    return rows;
}

// Match table classes to the group's canonical classes by (element order,
// class size), ties resolved in listed order. Returns table index -> group
// class id.
inline std::vector<std::size_t> match_table_to_group_classes(const CharacterTable& t,
                                                             const ConjugacyClasses& cc) {
    if (t.classes.size() != cc.classes.size())
        throw Error("class matching: table and group disagree on class count");
    std::vector<bool> used(cc.classes.size(), false);
    std::vector<std::size_t> map(t.classes.size());
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        bool found = false;
        for (std::size_t g = 0; g < cc.classes.size() && !found; ++g) {
            if (used[g]) continue;
            if (BigInt(cc.classes[g].size) == t.classes[i].size &&
                cc.classes[g].element_order == t.classes[i].element_order) {
                map[i] = g;
                used[g] = true;
                found = true;
            }
        }
        if (!found)
            throw Error("class matching: no group class for table class " + t.classes[i].label);
    }
    return map;
}

}  // namespace triverify
