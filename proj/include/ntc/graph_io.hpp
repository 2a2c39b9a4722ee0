#pragma once

#include <filesystem>
#include <string>

#include "ntc/graph.hpp"

namespace ntc {

// Parses a .wdg.json document:
//
//   {
//     "name": "optional string",
//     "vertices": [ {"id": "E0", "self": -2, "genus": 1}, ... ],
//     "edges":    [ ["E0", "E1"], ... ],        // repetition = multiplicity
//     "arrows":   [ {"at": "E1", "weight": 1}, ... ]
//   }
//
// "genus" defaults to 0 and is omitted from canonical output when zero.
// Full validation runs at load (structure, connectivity, negative
// definiteness). Throws GraphError with a distinct code and the offending
// token's position (line/column for syntax errors, JSON pointer otherwise).
WeightedDualGraph parse_graph(const std::string& text);

WeightedDualGraph load_graph_file(const std::filesystem::path& path);

// Canonical form: 2-space indent, object keys sorted, vertices in input
// order, edge endpoints normalized to vertex order and the list sorted,
// arrows sorted by (vertex, weight), trailing newline. parse(serialize(g))
// reproduces g, and serialize is idempotent on parsed documents.
std::string serialize_graph(const WeightedDualGraph& g);

}  // namespace ntc
