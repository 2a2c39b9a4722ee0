#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntc {

// Diagnostic codes for graph validation and parsing. Every rejection path
// carries one of these plus the location of the offending token.
enum class GraphErrorCode {
  syntax_error,
  bad_document,
  no_vertices,
  duplicate_id,
  unknown_id,
  bad_self,
  bad_genus,
  bad_edge,
  self_loop,
  bad_weight,
  disconnected,
  not_negative_definite,
  dimension_mismatch,
  no_arrows,
};

const char* to_string(GraphErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, std::string where, const std::string& what);
  GraphErrorCode code() const { return code_; }
  // Location of the offending token: "line L, column C" for syntax errors,
  // a JSON pointer such as "/vertices/2/self" for semantic ones, or the
  // offending id for programmatic construction.
  const std::string& where() const { return where_; }

 private:
  GraphErrorCode code_;
  std::string where_;
};

struct Vertex {
  std::string id;
  long long self = -1;  // self-intersection, always <= -1
  long long genus = 0;  // >= 0
  bool operator==(const Vertex&) const = default;
};

struct Arrow {
  std::string at;        // id of the vertex carrying the arrowhead
  long long weight = 1;  // >= 1
  bool operator==(const Arrow&) const = default;
};

// A weighted dual graph: exceptional curves with self-intersection and
// genus, an edge multiset (repetition = intersection multiplicity), and
// optional weighted arrowheads encoding the cycle Z = sum weight * E_at^*.
//
// Vertex input order is the coordinate order used by every cycle vector in
// the library. Edges are normalized so the endpoint earlier in vertex order
// comes first.
struct WeightedDualGraph {
  std::string name;  // optional, empty when absent
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, first < second
  std::vector<Arrow> arrows;

  std::size_t size() const { return vertices.size(); }
  std::size_t index_of(const std::string& id) const;  // throws unknown_id

  bool operator==(const WeightedDualGraph&) const = default;
};

// Builds and fully validates a graph from parts (edges given by vertex ids).
// Checks, in order: vertex list nonempty, unique ids, self <= -1, genus >= 0,
// edge arity/ids/self-loops, arrow ids/weights, connectivity, and negative
// definiteness of the intersection form. Throws GraphError.
WeightedDualGraph make_graph(std::string name,
                             std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             std::vector<Arrow> arrows);

// Re-runs all validation on an already-built graph (used after mutation in
// tests). Throws GraphError on the first violation.
void validate_graph(const WeightedDualGraph& g);

}  // namespace ntc
