#include "gridsalvage/json_io.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

namespace gridsalvage {

namespace {

using json = nlohmann::ordered_json;

json coord_to_json(const Coord& v) {
    json arr = json::array();
    for (int c : v) arr.push_back(c);
    return arr;
}

Coord coord_from_json(const json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a coordinate array");
    if (dim >= 0 && static_cast<int>(j.size()) != dim) {
        throw ParseError(where + ": expected " + std::to_string(dim) + " components, got " +
                         std::to_string(j.size()));
    }
    Coord v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) {
            throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer");
        }
        v.push_back(j[i].get<int>());
    }
    return v;
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "': expected an integer");
    return f.get<int>();
}

GridSpec spec_from_json(const json& j, const std::string& where) {
    try {
        return GridSpec(int_field(j, "d"), int_field(j, "n"));
    } catch (const InvalidInputError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json spec_to_json(const GridSpec& spec) {
    json j = json::object();
    j["d"] = spec.dim();
    j["n"] = spec.side();
    return j;
}

std::vector<Coord> sorted_coords(std::vector<Coord> coords) {
    std::sort(coords.begin(), coords.end());
    return coords;
}

}  // namespace

std::string serialize(const DamageSet& damage) {
    json j = spec_to_json(damage.spec());
    json arr = json::array();
    for (const Coord& v : damage.vertices()) arr.push_back(coord_to_json(v));
    j["damaged"] = std::move(arr);
    return j.dump();
}

DamageSet parse_damage_set(std::string_view text) {
    const json j = parse_text(text);
    const GridSpec spec = spec_from_json(j, "damage set");
    const json& arr = field(j, "damaged");
    if (!arr.is_array()) throw ParseError("field 'damaged': expected an array");
    std::vector<Coord> coords;
    coords.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        coords.push_back(coord_from_json(arr[i], spec.dim(), "damaged[" + std::to_string(i) + "]"));
    }
    try {
        return DamageSet(spec, std::move(coords));
    } catch (const InvalidInputError& e) {
        throw ParseError(std::string("damage set: ") + e.what());
    }
}

std::string serialize(const MinorModel& model) {
    json j = json::object();
    j["host"] = spec_to_json(model.host);
    j["minor"] = spec_to_json(model.minor);
    j["depth"] = model.depth;
    std::vector<const BranchSet*> order;
    order.reserve(model.branches.size());
    for (const BranchSet& b : model.branches) order.push_back(&b);
    std::sort(order.begin(), order.end(),
              [](const BranchSet* a, const BranchSet* b) { return a->minor_vertex < b->minor_vertex; });
    json branches = json::array();
    for (const BranchSet* b : order) {
        json jb = json::object();
        jb["v"] = coord_to_json(b->minor_vertex);
        json hosts = json::array();
        for (const Coord& h : sorted_coords(b->hosts)) hosts.push_back(coord_to_json(h));
        jb["hosts"] = std::move(hosts);
        branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);
    return j.dump();
}

MinorModel parse_minor_model(std::string_view text) {
    const json j = parse_text(text);
    MinorModel model;
    model.host = spec_from_json(field(j, "host"), "host");
    model.minor = spec_from_json(field(j, "minor"), "minor");
    const json& depth = field(j, "depth");
    if (!depth.is_number_integer() || depth.get<int>() < 0) {
        throw ParseError("field 'depth': expected a non-negative integer");
    }
    model.depth = depth.get<int>();
    const json& branches = field(j, "branches");
    if (!branches.is_array()) throw ParseError("field 'branches': expected an array");
    model.branches.reserve(branches.size());
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const std::string where = "branches[" + std::to_string(i) + "]";
        const json& jb = branches[i];
        if (!jb.is_object()) throw ParseError(where + ": expected an object");
        BranchSet b;
        b.minor_vertex = coord_from_json(field(jb, "v"), model.minor.dim(), where + ".v");
        const json& hosts = field(jb, "hosts");
        if (!hosts.is_array()) throw ParseError(where + ".hosts: expected an array");
        b.hosts.reserve(hosts.size());
        for (std::size_t k = 0; k < hosts.size(); ++k) {
            b.hosts.push_back(coord_from_json(hosts[k], model.host.dim(),
                                              where + ".hosts[" + std::to_string(k) + "]"));
        }
        std::sort(b.hosts.begin(), b.hosts.end());
        model.branches.push_back(std::move(b));
    }
    return model;
}

std::string serialize(const PathDecomposition& pd) {
    json j = json::object();
    json bags = json::array();
    for (const auto& bag : pd.bags) {
        json jb = json::array();
        for (const Coord& v : sorted_coords(bag)) jb.push_back(coord_to_json(v));
        bags.push_back(std::move(jb));
    }
    j["bags"] = std::move(bags);
    return j.dump();
}

PathDecomposition parse_path_decomposition(std::string_view text) {
    const json j = parse_text(text);
    const json& bags = field(j, "bags");
    if (!bags.is_array()) throw ParseError("field 'bags': expected an array");
    PathDecomposition pd;
    pd.bags.reserve(bags.size());
    for (std::size_t i = 0; i < bags.size(); ++i) {
        const json& jb = bags[i];
        if (!jb.is_array()) throw ParseError("bags[" + std::to_string(i) + "]: expected an array");
        std::vector<Coord> bag;
        bag.reserve(jb.size());
        for (std::size_t k = 0; k < jb.size(); ++k) {
            bag.push_back(coord_from_json(jb[k], -1,
                                          "bags[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        }
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

std::string serialize(const SubcubePattern& pattern) {
    return json(pattern.symbols).dump();
}

SubcubePattern parse_subcube_pattern(std::string_view text) {
    const json j = parse_text(text);
    if (!j.is_string()) throw ParseError("subcube pattern: expected a JSON string over 01*");
    const std::string s = j.get<std::string>();
    if (s.empty()) throw ParseError("subcube pattern: empty string");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1' && s[i] != '*') {
            throw ParseError("subcube pattern: invalid symbol '" + std::string(1, s[i]) +
                             "' at position " + std::to_string(i));
        }
    }
    return SubcubePattern{s};
}

std::string serialize(const hypercube::HypercubeDamage& damage) {
    json j = json::object();
    j["d"] = damage.dim();
    std::vector<std::string> strings;
    strings.reserve(damage.size());
    for (std::uint64_t mask : damage.masks()) strings.push_back(damage.bit_string(mask));
    std::sort(strings.begin(), strings.end());
    json arr = json::array();
    for (const std::string& s : strings) arr.push_back(s);
    j["damaged"] = std::move(arr);
    return j.dump();
}

hypercube::HypercubeDamage parse_hypercube_damage(std::string_view text) {
    const json j = parse_text(text);
    const int d = int_field(j, "d");
    const json& arr = field(j, "damaged");
    if (!arr.is_array()) throw ParseError("field 'damaged': expected an array");
    std::vector<std::uint64_t> masks;
    masks.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) {
            throw ParseError("damaged[" + std::to_string(i) + "]: expected a bit string");
        }
        try {
            masks.push_back(hypercube::HypercubeDamage::parse_bit_string(arr[i].get<std::string>(), d));
        } catch (const InvalidInputError& e) {
            throw ParseError("damaged[" + std::to_string(i) + "]: " + e.what());
        }
    }
    try {
        return hypercube::HypercubeDamage(d, std::move(masks));
    } catch (const InvalidInputError& e) {
        throw ParseError(std::string("hypercube damage: ") + e.what());
    }
}

std::string serialize(const SubgridRegion& region, const GridSpec& host) {
    json j = json::object();
    j["host"] = spec_to_json(host);
    j["origin"] = coord_to_json(region.origin);
    j["side"] = region.side;
    return j.dump();
}

std::pair<SubgridRegion, GridSpec> parse_subgrid_region(std::string_view text) {
    const json j = parse_text(text);
    const GridSpec host = spec_from_json(field(j, "host"), "host");
    SubgridRegion region;
    region.origin = coord_from_json(field(j, "origin"), host.dim(), "origin");
    region.side = int_field(j, "side");
    try {
        require_region_in_grid(host, region);
    } catch (const InvalidInputError& e) {
        throw ParseError(std::string("subgrid region: ") + e.what());
    }
    return {region, host};
}

}  // namespace gridsalvage
