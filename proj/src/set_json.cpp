#include "sumlab/set_json.hpp"

#include "json.hpp"

namespace sumlab {

namespace {

using nlohmann::json;

json parse_or_diagnose(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("json parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Rat rat_field(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(std::string(what) + ": " + e.what());
        }
    }
    throw InputError(std::string(what) + ": expected rational string \"p/q\"");
}

ConstructibleSet constructible_from(const json& j);

std::vector<ConstructibleSet> parts_of(const json& j) {
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
        throw InputError("constructible set: \"parts\" must be a non-empty array");
    std::vector<ConstructibleSet> parts;
    for (const auto& p : j["parts"]) parts.push_back(constructible_from(p));
    return parts;
}

ConstructibleSet constructible_from(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("constructible set: expected object with \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "interval") {
        return ConstructibleSet::interval(rat_field(j.at("a"), "interval a"),
                                          rat_field(j.at("b"), "interval b"));
    }
    if (type == "cantor") {
        if (!j.contains("depth") || !j["depth"].is_number_unsigned())
            throw InputError("cantor: \"depth\" must be a non-negative integer");
        return ConstructibleSet::cantor(j["depth"].get<unsigned>());
    }
    if (type == "point") {
        std::vector<Rat> coords;
        for (const auto& c : j.at("coords")) coords.push_back(rat_field(c, "point coord"));
        return ConstructibleSet::point(coords);
    }
    if (type == "box") {
        std::vector<std::pair<Rat, Rat>> ivs;
        for (const auto& iv : j.at("intervals"))
            ivs.emplace_back(rat_field(iv.at("a"), "box a"), rat_field(iv.at("b"), "box b"));
        return ConstructibleSet::box(ivs);
    }
    if (type == "union") return ConstructibleSet::union_of(parts_of(j));
    if (type == "product") return ConstructibleSet::product(parts_of(j));
    if (type == "translate") {
        std::vector<Rat> by;
        for (const auto& c : j.at("by")) by.push_back(rat_field(c, "translate by"));
        return constructible_from(j.at("of")).translated(by);
    }
    if (type == "full") {
        std::size_t d = j.contains("dim") ? j["dim"].get<std::size_t>() : 1;
        return ConstructibleSet::full_torus(d);
    }
    throw InputError("constructible set: unknown type \"" + type + "\"");
}

} // namespace

ConstructibleSet parse_constructible(const std::string& text) {
    try {
        return constructible_from(parse_or_diagnose(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("constructible set: ") + e.what());
    }
}

GroupSubset parse_subset(const GroupPtr& g, const std::string& text) {
    // inline shorthand "0,1,4" for cyclic groups
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] != '{') {
        if (g->factor_count() != 1)
            throw InputError("inline set shorthand is only valid for cyclic groups");
        std::vector<std::uint64_t> idx;
        std::uint64_t cur = 0;
        bool have = false;
        for (std::size_t i = first; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                if (!have) throw InputError("inline set: empty entry at position " +
                                            std::to_string(i));
                idx.push_back(cur);
                cur = 0;
                have = false;
            } else if (text[i] >= '0' && text[i] <= '9') {
                cur = cur * 10 + static_cast<std::uint64_t>(text[i] - '0');
                have = true;
            } else if (text[i] != ' ') {
                throw InputError("inline set: unexpected character '" +
                                 std::string(1, text[i]) + "' at position " + std::to_string(i));
            }
        }
        return GroupSubset::from_indices(g, idx);
    }

    json j = parse_or_diagnose(text);
    try {
        if (!j.is_object() || !j.contains("type"))
            throw InputError("set descriptor: expected object with \"type\"");
        std::string type = j["type"].get<std::string>();
        if (type == "literal") {
            std::vector<GroupElement> elems;
            for (const auto& e : j.at("elements")) {
                if (!e.is_array()) throw InputError("literal set: elements must be arrays");
                GroupElement el;
                for (const auto& c : e) el.coords.push_back(c.get<std::uint64_t>());
                elems.push_back(std::move(el));
            }
            return GroupSubset::from_elements(g, elems);
        }
        if (type == "random") {
            Rat density = rat_field(j.at("density"), "random density");
            std::uint64_t seed = j.at("seed").get<std::uint64_t>();
            return GroupSubset::random(g, density, seed);
        }
        if (type == "full") return GroupSubset::full(g);
        throw InputError("set descriptor: unknown type \"" + type + "\"");
    } catch (const json::exception& e) {
        throw InputError(std::string("set descriptor: ") + e.what());
    }
}

} // namespace sumlab
