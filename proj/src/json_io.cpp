#include "swc/json_io.hpp"

#include "swc/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace swc::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidParameter, what); }

std::size_t read_dim(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer()) bad("missing integer field 'd'");
    const auto d = j["d"].get<std::int64_t>();
    if (d < 2 || d > 64) bad("'d' must be between 2 and 64");
    return static_cast<std::size_t>(d);
}

std::vector<Int> read_row(const json& row, std::size_t d) {
    if (!row.is_array() || row.size() != d) bad("row must be an array of " + std::to_string(d) + " integers");
    std::vector<Int> v;
    v.reserve(d);
    for (const auto& c : row) {
        if (!c.is_number_integer()) bad("coordinates must be integers");
        v.push_back(c.get<Int>());
    }
    return v;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j[name];
}

}  // namespace

json point_to_json(const LatticePoint& p) { return json(std::vector<Int>(p.coords().begin(), p.coords().end())); }

json direction_to_json(const Direction& s) { return json(std::vector<Int>(s.coords().begin(), s.coords().end())); }

json to_json(const PointConfiguration& F) {
    json pts = json::array();
    for (const auto& p : F.expanded()) pts.push_back(point_to_json(p));
    return json{{"d", F.dim()}, {"points", std::move(pts)}};
}

PointConfiguration configuration_from_json(const json& j) {
    const std::size_t d = read_dim(j);
    const json& rows = field(j, "points");
    if (!rows.is_array()) bad("'points' must be an array");
    PointConfiguration F(d);
    for (const auto& row : rows) F.add(LatticePoint(read_row(row, d)));
    return F;
}

json directions_to_json(std::span<const Direction> S, std::size_t d) {
    json rows = json::array();
    for (const auto& s : S) rows.push_back(direction_to_json(s));
    return json{{"d", d}, {"directions", std::move(rows)}};
}

RawDirections directions_from_json(const json& j) {
    RawDirections out;
    out.d = read_dim(j);
    const json& rows = field(j, "directions");
    if (!rows.is_array()) bad("'directions' must be an array");
    for (const auto& row : rows) {
        const auto v = read_row(row, out.d);
        out.directions.push_back(canonicalize_direction(v));
    }
    return out;
}

json to_json(const XRayProfile& profile) {
    json lines = json::array();
    for (const auto& [key, count] : profile.counts) lines.push_back(json{{"key", key}, {"count", count}});
    return json{{"direction", direction_to_json(profile.direction)}, {"lines", std::move(lines)}};
}

json ghost_pair_to_json(const PointConfiguration& F, const PointConfiguration& G, std::span<const Direction> S,
                        std::size_t d, bool verified) {
    return json{{"F", to_json(F)}, {"G", to_json(G)}, {"S", directions_to_json(S, d)}, {"verified", verified}};
}

RawGhostPair ghost_pair_from_json(const json& j) {
    RawGhostPair out;
    out.first = configuration_from_json(field(j, "F"));
    out.second = configuration_from_json(field(j, "G"));
    out.directions = directions_from_json(field(j, "S"));
    return out;
}

json to_json(const PTESolution& sol) {
    return json{{"r", sol.r}, {"degree", sol.degree}, {"size", sol.size()}, {"X", sol.X}, {"Y", sol.Y}};
}

PTESolution pte_from_json(const json& j) {
    PTESolution sol;
    const json& r = field(j, "r");
    const json& degree = field(j, "degree");
    if (!r.is_number_integer() || r.get<Int>() < 1 || r.get<Int>() > 64) bad("'r' must be an integer in [1, 64]");
    if (!degree.is_number_integer() || degree.get<Int>() < 0) bad("'degree' must be a nonnegative integer");
    sol.r = r.get<std::size_t>();
    sol.degree = degree.get<Int>();
    for (const char* side : {"X", "Y"}) {
        const json& rows = field(j, side);
        if (!rows.is_array()) bad(std::string("'") + side + "' must be an array");
        auto& dst = side[0] == 'X' ? sol.X : sol.Y;
        for (const auto& row : rows) dst.push_back(read_row(row, sol.r));
    }
    if (j.contains("size") && (!j["size"].is_number_integer() || j["size"].get<std::size_t>() != sol.X.size())) {
        bad("'size' does not match the number of tuples in X");
    }
    sol.normalize();
    return sol;
}

json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) bad("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        bad("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace swc::io
