#pragma once

#include "lieclass/classifier.hpp"
#include "lieclass/geometry.hpp"
#include "lieclass/rational_topology.hpp"

#include <json.hpp>

#include <string>

namespace lieclass {

/// Canonical JSON and text renderings shared by the CLI and the tests.
/// Objects use sorted keys, integers are exact (strings beyond 64 bits), and
/// no floating-point value is ever emitted.

using Json = nlohmann::json;

Json to_json(const Int& v);
Json to_json(const SimpleType& t);
Json to_json(const IrrepDescriptor& d);
Json to_json(const AbelianGroup& g);
Json to_json(const CandidatePair& c);
Json to_json(const Check& c);
Json to_json(const AdmissibilityReport& r);
Json to_json(const AtlasPoint& p);
Json to_json(const RankTable& t);

/// Static data for every canonical type of rank <= max_rank.
Json dump_tables(int max_rank);

/// Canonical serialization: two-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

/// Line-oriented text rendering of the same data: "key: value" lines,
/// scalar arrays space-separated, nested values indented, list items "- ".
std::string render_text(const Json& j);

}  // namespace lieclass
