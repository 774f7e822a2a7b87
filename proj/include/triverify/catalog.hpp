#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triverify/bigint.hpp"
#include "triverify/errors.hpp"
#include "triverify/perm_group.hpp"

namespace triverify {

using Json = nlohmann::ordered_json;

// One externally supplied group. Correctness never rests on trusting the
// file: an entry is usable only after its stabilizer chain reproduces
// claimed_order exactly (and the socle, when present, is an index-2 subgroup).
struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    BigInt claimed_order;
    std::string provenance;

    // Optional structure hints consumed by the verdict engine.
    bool natural_symmetric = false;    // the entry is S_degree in natural action
    bool natural_alternating = false;  // the entry is A_degree in natural action
    std::vector<Permutation> socle_generators;  // designated index-2 normal subgroup

    std::shared_ptr<const PermGroup> group;  // certified
    std::shared_ptr<const PermGroup> socle;  // certified when socle_generators given

    bool matches(const std::string& query) const {
        if (name == query) return true;
        for (const auto& a : aliases)
            if (a == query) return true;
        return false;
    }
};

struct CatalogLoadResult {
    std::vector<CatalogEntry> entries;
    struct Rejection {
        std::string name;
        std::string reason;
    };
    std::vector<Rejection> rejected;

    const CatalogEntry* find(const std::string& query) const {
        for (const auto& e : entries)
            if (e.matches(query)) return &e;
        return nullptr;
    }
};

namespace catalog_detail {

inline std::vector<Permutation> parse_generators(const Json& arr, std::size_t degree) {
    std::vector<Permutation> gens;
    for (const auto& g : arr) {
        std::vector<Point> images;
        for (const auto& v : g) {
            long long x = v.get<long long>();
            if (x < 0 || static_cast<std::size_t>(x) >= degree)
                throw ValidationError("generator image out of range");
            images.push_back(static_cast<Point>(x));
        }
        if (images.size() != degree) throw ValidationError("generator length != degree");
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    if (gens.empty()) throw ValidationError("empty generator list");
    return gens;
}

inline Json serialize_generators(const std::vector<Permutation>& gens) {
    Json arr = Json::array();
    for (const auto& g : gens) {
        Json img = Json::array();
        for (Point x : g.images()) img.push_back(x);
        arr.push_back(std::move(img));
    }
    return arr;
}

}  // namespace catalog_detail

inline CatalogLoadResult load_catalog_json(const Json& doc) {
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ValidationError("catalog: missing entries array");
    CatalogLoadResult out;
    for (const auto& e : doc["entries"]) {
        std::string name = e.value("name", std::string("<unnamed>"));
        try {
            CatalogEntry entry;
            entry.name = e.at("name").get<std::string>();
            if (e.contains("aliases"))
                for (const auto& a : e["aliases"]) entry.aliases.push_back(a.get<std::string>());
            entry.degree = e.at("degree").get<std::size_t>();
            entry.generators = catalog_detail::parse_generators(e.at("generators"), entry.degree);
            entry.claimed_order = parse_bigint(e.at("claimed_order").get<std::string>());
            entry.provenance = e.value("provenance", std::string());
            entry.natural_symmetric = e.value("natural_symmetric", false);
            entry.natural_alternating = e.value("natural_alternating", false);

            auto group = std::make_shared<PermGroup>(PermGroup::from_generators(entry.generators));
            if (group->order() != entry.claimed_order)
                throw ValidationError("order certification failed: computed " + group->order().str() +
                                      " != claimed " + entry.claimed_order.str());
            entry.group = group;

            if (e.contains("socle_generators")) {
                entry.socle_generators =
                    catalog_detail::parse_generators(e["socle_generators"], entry.degree);
                auto socle = std::make_shared<PermGroup>(PermGroup::from_generators(entry.socle_generators));
                for (const auto& g : entry.socle_generators)
                    if (!group->contains(g))
                        throw ValidationError("socle generator not contained in group");
                if (socle->order() * 2 != group->order())
                    throw ValidationError("designated socle is not index 2: |G| = " +
                                          group->order().str() + ", |N| = " + socle->order().str());
                entry.socle = socle;
            }
            out.entries.push_back(std::move(entry));
        } catch (const std::exception& ex) {
            out.rejected.push_back({name, ex.what()});
        }
    }
    return out;
}

inline CatalogLoadResult load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("catalog: cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("catalog: malformed JSON: ") + ex.what());
    }
    return load_catalog_json(doc);
}

inline Json save_catalog_json(const std::vector<CatalogEntry>& entries) {
    Json doc;
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["name"] = e.name;
        j["aliases"] = e.aliases;
        j["degree"] = e.degree;
        j["generators"] = catalog_detail::serialize_generators(e.generators);
        j["claimed_order"] = e.claimed_order.str();
        j["provenance"] = e.provenance;
        if (e.natural_symmetric) j["natural_symmetric"] = true;
        if (e.natural_alternating) j["natural_alternating"] = true;
        if (!e.socle_generators.empty())
            j["socle_generators"] = catalog_detail::serialize_generators(e.socle_generators);
        arr.push_back(std::move(j));
    }
    doc["entries"] = std::move(arr);
    return doc;
}

}  // namespace triverify
