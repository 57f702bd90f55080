// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/io.hpp"

#include <algorithm>
#include <fstream>

#include "hyperborn/errors.hpp"

namespace hyperborn {

namespace {

int label_index(const FiniteSpace& space, const std::string& label) {
    const auto& labels = space.labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ParseError("unknown point label '" + label + "'");
    return static_cast<int>(it - labels.begin());
}

// order subsets by size, then by sorted point-index sequence
bool subset_order(Subset a, Subset b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
}

} // namespace

FiniteSpace parse_space(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("dist"))
        throw ParseError("space needs 'points' and 'dist'");
    std::vector<std::string> labels;
    for (const auto& p : j.at("points")) {
        if (!p.is_string()) throw ParseError("point labels must be strings");
        std::string lab = p.get<std::string>();
        if (std::find(labels.begin(), labels.end(), lab) != labels.end())
            throw ParseError("duplicate point label '" + lab + "'");
        labels.push_back(std::move(lab));
    }
    std::vector<std::vector<Rat>> dist;
    for (const auto& row : j.at("dist")) {
        std::vector<Rat> r;
        for (const auto& cell : row) {
            if (cell.is_string())
                r.push_back(Rat::parse(cell.get<std::string>()));
            else if (cell.is_number_integer())
                r.push_back(Rat(cell.get<std::int64_t>()));
            else
                throw ParseError("distances must be strings or integers");
        }
        dist.push_back(std::move(r));
    }
    return FiniteSpace::make(std::move(labels), std::move(dist));
}

FiniteSpace parse_space_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("instance text is not valid JSON");
    return parse_space(j);
}

nlohmann::json space_to_json(const FiniteSpace& space) {
    nlohmann::json j;
    j["points"] = space.labels();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < space.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k).str());
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    return j;
}

Subset parse_subset(const FiniteSpace& space, const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("subset must be an array of labels");
    Subset s = 0;
    for (const auto& p : j) s |= Subset{1} << label_index(space, p.get<std::string>());
    return s;
}

nlohmann::json subset_to_json(const FiniteSpace& space, Subset s) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < space.size(); ++i)
        if ((s >> i) & 1u) out.push_back(space.labels()[i]);
    return out;
}

Family parse_family(const FiniteSpace& space, const nlohmann::json& j) {
    const nlohmann::json& arr = (j.is_object() && j.contains("family")) ? j.at("family") : j;
    if (!arr.is_array()) throw ParseError("family must be an array of subsets");
    Family f = 0;
    for (const auto& sub : arr) f = family_with(f, parse_subset(space, sub));
    return f;
}

nlohmann::json family_to_json(const FiniteSpace& space, Family f) {
    std::vector<Subset> subs;
    for (Subset s = 0; s <= space.full_set(); ++s)
        if (subset_in(f, s)) subs.push_back(s);
    std::sort(subs.begin(), subs.end(), subset_order);
    nlohmann::json out = nlohmann::json::array();
    for (Subset s : subs) out.push_back(subset_to_json(space, s));
    return out;
}

Ideal parse_ideal(const FiniteSpace& space, const nlohmann::json& j) {
    const nlohmann::json& gens =
        (j.is_object() && j.contains("generators")) ? j.at("generators") : j;
    if (!gens.is_array()) throw ParseError("ideal needs a 'generators' array");
    std::vector<Subset> generators;
    for (const auto& g : gens) generators.push_back(parse_subset(space, g));
    return generate_ideal(space, generators);
}

nlohmann::json ideal_to_json(const FiniteSpace& space, const Ideal& s) {
    nlohmann::json j;
    j["members"] = family_to_json(space, s.members());
    return j;
}

HyperTopology parse_topology(const FiniteSpace& space, const nlohmann::json& j) {
    const nlohmann::json& spec =
        (j.is_object() && j.contains("topology")) ? j.at("topology") : j;
    if (!spec.is_object() || !spec.contains("kind"))
        throw InvalidSpec("topology spec needs a 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "metric-lower") return make_metric_topology(space, Side::Lower);
    if (kind == "metric-upper") return make_metric_topology(space, Side::Upper);
    if (kind == "metric-both") return make_metric_topology(space, Side::Both);
    if (kind == "tau") {
        if (!spec.contains("generators")) throw InvalidSpec("tau topology needs 'generators'");
        return make_tau_topology(space, parse_ideal(space, spec.at("generators")));
    }
    if (kind == "miss") {
        if (!spec.contains("collection")) throw InvalidSpec("miss topology needs 'collection'");
        std::vector<Subset> coll;
        for (const auto& g : spec.at("collection")) coll.push_back(parse_subset(space, g));
        return make_miss_topology(space, coll);
    }
    if (kind == "table") {
        if (!spec.contains("closed")) throw InvalidSpec("table topology needs 'closed'");
        std::vector<Family> closed;
        for (const auto& c : spec.at("closed")) closed.push_back(parse_family(space, c));
        return make_table_topology(space, closed);
    }
    throw InvalidSpec("unknown topology kind '" + kind + "'");
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("file '" + path + "' is not valid JSON");
    return j;
}

} // namespace hyperborn
