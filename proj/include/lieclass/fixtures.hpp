#pragma once

#include "lieclass/serialize.hpp"

#include <string>
#include <vector>

namespace lieclass {

/// Regression harness over JSON fixtures transcribing the reference tables.
/// Each fixture file `<id>.json` holds an "id", a "kind", a "quote" anchor and
/// a list of "rows", every row with its own "quote".

/// Directory holding the fixtures: $LIECLASS_FIXTURES if set, otherwise the
/// directory configured at build time.
std::string fixture_dir();

/// Ids of the fixtures shipped with the project, in a fixed order.
const std::vector<std::string>& fixture_ids();

/// Reads `<dir>/<id>.json`.  DomainError for an unknown id or unreadable file.
Json load_fixture(const std::string& id, const std::string& dir = fixture_dir());

/// Compares a fixture against freshly computed data.  Returns one line per
/// discrepancy ("missing: ...", "extra: ...", "changed: ...",
/// "coincidence: ..."); an empty list means the table is reproduced.
std::vector<std::string> diff_fixture(const Json& fixture);

/// load_fixture() followed by diff_fixture().
std::vector<std::string> reproduce_tables(const std::string& id, const std::string& dir = fixture_dir());

/// Witness in canonical form for a simple target G; falls back to the
/// whitespace-stripped text when the witness names no weights (circle
/// subgroups, non-split composites).
std::string normalize_witness(const std::string& g, const std::vector<std::string>& h, const std::string& witness);

}  // namespace lieclass
