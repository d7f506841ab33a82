#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gorcontract/clfunc.hpp"
#include "gorcontract/contract.hpp"
#include "gorcontract/cover.hpp"

namespace gorcontract {

using json = nlohmann::ordered_json;

// Input document shared by every command:
//   {"genus": g, "mu": [...],
//    "vertices": [{"id", "branch_count", "markings": [{"id", "zero_order"}]}],
//    "edges": [{"id", "ends": [a, b], "ramified", "length"?}],
//    "datum"?: CL block, "lambda_bar"?: CL block}
// CL block: {"values": {vertex-id: "n" | "m/2"}, "edge_slopes": {edge-id: ...},
//            "leg_slopes"?: {marking-id: "n"}, "branch_leg_slope"?: ...}
// Fractions are exact strings; unknown fields are rejected everywhere.
struct InputDoc {
    TropCover cover;
    std::optional<CLFunction> datum;
    std::optional<CLFunction> lambda_bar;
};

InputDoc parse_input(const std::string& text);

json cover_to_json(const TropCover& t);
json clfunc_to_json(const TropCover& t, const CLFunction& f);
CLFunction clfunc_from_json(const TropCover& t, const json& block);
json input_to_json(const InputDoc& doc);

// Cover graph in the figure style: blue for ramified edges and branch legs,
// genus labels on the cover vertices.
std::string cover_dot(const TropCover& t, const CoverGraph& g);

// Contracted target with fused vertices for the m-fold points.
std::string pbar_dot(const TropCover& t, const ContractionOutcome& outcome);

}  // namespace gorcontract
