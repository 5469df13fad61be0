#pragma once

#include "swc/constructions.hpp"
#include "swc/lattice.hpp"
#include "swc/pte.hpp"
#include "swc/xray.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace swc::io {

using nlohmann::json;

/// {"d": d, "points": [[...], ...]}; repeated rows encode multiplicity,
/// rows sorted lexicographically.
json to_json(const PointConfiguration& F);
PointConfiguration configuration_from_json(const json& j);

/// {"d": d, "directions": [[...], ...]} in the given order.
json directions_to_json(std::span<const Direction> S, std::size_t d);
struct RawDirections {
    std::size_t d = 0;
    std::vector<Direction> directions;
};
/// Canonicalizes every row; does not validate independence or spanning.
RawDirections directions_from_json(const json& j);

/// {"direction": [...], "lines": [{"key": [...], "count": k}, ...]}
json to_json(const XRayProfile& profile);

/// {"F": config, "G": config, "S": directions, "verified": bool}
json ghost_pair_to_json(const PointConfiguration& F, const PointConfiguration& G, std::span<const Direction> S,
                        std::size_t d, bool verified);
struct RawGhostPair {
    PointConfiguration first{2};
    PointConfiguration second{2};
    RawDirections directions;
};
RawGhostPair ghost_pair_from_json(const json& j);

/// {"r": r, "degree": k, "size": n, "X": [...], "Y": [...]}
json to_json(const PTESolution& sol);
PTESolution pte_from_json(const json& j);

json point_to_json(const LatticePoint& p);
json direction_to_json(const Direction& s);

/// Reads and parses a JSON document; "-" reads standard input.
json read_json_file(const std::string& path);

}  // namespace swc::io
