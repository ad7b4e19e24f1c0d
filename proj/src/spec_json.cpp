// Parser for JSON region-spec documents.

#include "tilecount/spec_json.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilecount {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("region spec: " + what);
}

int get_int(const json& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) {
        fail("missing required key \"" + key + '"');
    }
    if (!it->is_number_integer()) {
        fail('"' + key + "\" must be an integer");
    }
    return it->get<int>();
}

std::vector<int> get_int_list(const json& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) {
        return {};
    }
    if (!it->is_array()) {
        fail('"' + key + "\" must be an array of integers");
    }
    std::vector<int> values;
    for (const auto& item : *it) {
        if (!item.is_number_integer()) {
            fail('"' + key + "\" must be an array of integers");
        }
        values.push_back(item.get<int>());
    }
    return values;
}

void reject_unknown(const json& object, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.contains(key)) {
            fail("unknown key \"" + key + "\" in " + where);
        }
    }
}

}  // namespace

RegionSpec parse_region_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("document must be an object");
    }
    reject_unknown(doc, {"family", "params"}, "the document");
    const auto family_it = doc.find("family");
    if (family_it == doc.end() || !family_it->is_string()) {
        fail("\"family\" must be present and a string");
    }
    RegionSpec spec;
    spec.family = family_from_name(family_it->get<std::string>());
    json params = json::object();
    if (const auto it = doc.find("params"); it != doc.end()) {
        if (!it->is_object()) {
            fail("\"params\" must be an object");
        }
        params = *it;
    }

    switch (spec.family) {
        case Family::AztecDiamond:
        case Family::TrimmedAztecDiamond:
            reject_unknown(params, {"n"}, "params");
            spec.n = get_int(params, "n");
            break;
        case Family::AztecRectangle:
        case Family::TrimmedAztecRectangle:
            reject_unknown(params, {"m", "n"}, "params");
            spec.m = get_int(params, "m");
            spec.n = get_int(params, "n");
            break;
        case Family::QuarteredR:
        case Family::QuarteredKa:
        case Family::QuarteredKna: {
            reject_unknown(params, {"order", "n"}, "params");
            const bool has_order = params.contains("order");
            const bool has_n = params.contains("n");
            if (has_order == has_n) {
                fail("exactly one of \"order\" or \"n\" is required");
            }
            spec.n = get_int(params, has_order ? "order" : "n");
            break;
        }
        case Family::SemiHexagon:
            reject_unknown(params, {"a", "b", "s"}, "params");
            spec.m = get_int(params, "a");
            spec.n = get_int(params, "b");
            spec.a = get_int_list(params, "s");
            break;
        default:
            reject_unknown(params, {"m", "n", "a"}, "params");
            spec.m = get_int(params, "m");
            spec.n = get_int(params, "n");
            spec.a = get_int_list(params, "a");
            break;
    }
    return spec;
}

}  // namespace tilecount
