#ifndef MOTGRP_SERIALIZE_HPP_
#define MOTGRP_SERIALIZE_HPP_

// JSON documents for the exact types. Rationals are strings "p/q" (or "p"
// for integers) so that a write/read round trip is lossless.
//
//   flow      {"ambient": "interval"|"line"|"circle", "key_times": [r...],
//              "frames": [[[x, y], ...], ...]}
//   homeo     {"ambient": ..., "degree": 1|-1, "knots": [[x, y], ...]}
//   subset    {"components": [{"pt": r} | {"iv": [a, b]}, ...],
//              "contains0": bool, "contains1": bool}
//   config    {"points": [[x, y], ...]}
//   strands   {"strands": [{"times": [r...], "verts": [[x, y], ...]}, ...]}
//
// Every reader throws Error(ParseError) for malformed documents and lets the
// type's own validation errors through.

#include <string>
#include <string_view>

#include <json.hpp>

#include "motgrp/pl_flow.hpp"
#include "motgrp/point_motions.hpp"
#include "motgrp/subset.hpp"

namespace motgrp::json {

using Json = nlohmann::json;

Json parse(std::string_view text);
// Two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& doc);

Json to_json(const Rational& r);
Rational rational_from(const Json& doc);

Json to_json(const PLHomeo& h);
PLHomeo homeo_from(const Json& doc);

Json to_json(const PLFlow& f);
PLFlow flow_from(const Json& doc);

Json to_json(const CompactSubsetI& n);
CompactSubsetI subset_from(const Json& doc);

Json to_json(const PointConfig& k);
PointConfig config_from(const Json& doc);

Json to_json(const StrandSet& s);
StrandSet strands_from(const Json& doc);

}  // namespace motgrp::json

#endif  // MOTGRP_SERIALIZE_HPP_
