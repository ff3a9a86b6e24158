#pragma once

// Lossless JSON serialization of doodle maps.  The JSON schema is the
// single source of truth for persistence; Gauss and PD files are
// interchange formats.

#include <string>

#include <json.hpp>

#include "doodle/map.hpp"

namespace doodle {

inline constexpr int kMapSchemaVersion = 1;

inline nlohmann::ordered_json map_to_json_value(const DoodleMap& m) {
    require_valid(m, "to_json");
    nlohmann::ordered_json j;
    j["format"] = "doodle-map";
    j["version"] = kMapSchemaVersion;
    j["mode"] = {{"orientation",
                  m.mode().orientation == Orientation::oriented ? "oriented" : "unoriented"},
                 {"ordering", m.mode().ordering == Ordering::ordered ? "ordered" : "unordered"}};
    j["crossings"] = m.crossing_count();
    j["pairing"] = m.pairing();
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : m.components()) {
        if (c.is_circle())
            comps.push_back({{"type", "circle"}});
        else
            comps.push_back({{"type", "strand"}, {"dart", c.rep}});
    }
    j["components"] = comps;
    return j;
}

inline std::string to_json(const DoodleMap& m) { return map_to_json_value(m).dump(); }

inline DoodleMap map_from_json_value(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("version"))
        throw ParseError("json: missing version field");
    if (j["version"] != kMapSchemaVersion)
        throw ParseError("json: unsupported schema version");
    if (j.value("format", "") != "doodle-map") throw ParseError("json: not a doodle-map");
    Mode mode;
    if (j.contains("mode")) {
        mode.orientation = j["mode"].value("orientation", "unoriented") == "oriented"
                               ? Orientation::oriented
                               : Orientation::unoriented;
        mode.ordering = j["mode"].value("ordering", "unordered") == "ordered"
                            ? Ordering::ordered
                            : Ordering::unordered;
    }
    std::uint32_t n = j.at("crossings").get<std::uint32_t>();
    std::vector<DartId> pairing = j.at("pairing").get<std::vector<DartId>>();
    std::vector<Component> table;
    for (const auto& c : j.at("components")) {
        if (c.at("type") == "circle")
            table.push_back(Component::circle());
        else
            table.push_back(Component::strand(c.at("dart").get<DartId>()));
    }
    if (pairing.size() != static_cast<std::size_t>(n) * 4)
        throw ParseError("json: pairing size mismatch");
    auto m = DoodleMap::with_components(n, std::move(pairing), std::move(table), mode);
    if (auto bad = validate(m); !bad.empty()) throw ParseError("json: " + bad.front());
    return m;
}

inline DoodleMap from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    try {
        return map_from_json_value(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

}  // namespace doodle
