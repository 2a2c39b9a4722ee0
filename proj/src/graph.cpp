#include "ntc/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ntc/lattice.hpp"

namespace ntc {

const char* to_string(GraphErrorCode code) {
  switch (code) {
    case GraphErrorCode::syntax_error: return "syntax_error";
    case GraphErrorCode::bad_document: return "bad_document";
    case GraphErrorCode::no_vertices: return "no_vertices";
    case GraphErrorCode::duplicate_id: return "duplicate_id";
    case GraphErrorCode::unknown_id: return "unknown_id";
    case GraphErrorCode::bad_self: return "bad_self";
    case GraphErrorCode::bad_genus: return "bad_genus";
    case GraphErrorCode::bad_edge: return "bad_edge";
    case GraphErrorCode::self_loop: return "self_loop";
    case GraphErrorCode::bad_weight: return "bad_weight";
    case GraphErrorCode::disconnected: return "disconnected";
    case GraphErrorCode::not_negative_definite: return "not_negative_definite";
    case GraphErrorCode::dimension_mismatch: return "dimension_mismatch";
    case GraphErrorCode::no_arrows: return "no_arrows";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrorCode code, std::string where, const std::string& what)
    : std::runtime_error(what + " [" + ntc::to_string(code) + " at " + where + "]"),
      code_(code),
      where_(std::move(where)) {}

std::size_t WeightedDualGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw GraphError(GraphErrorCode::unknown_id, id, "unknown vertex id '" + id + "'");
}

namespace {

void validate_structure(const WeightedDualGraph& g) {
  if (g.vertices.empty())
    throw GraphError(GraphErrorCode::no_vertices, "/vertices", "graph has no vertices");

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& v = g.vertices[i];
    const std::string path = "/vertices/" + std::to_string(i);
    if (v.id.empty())
      throw GraphError(GraphErrorCode::bad_document, path + "/id", "vertex id must be nonempty");
    if (!seen.insert(v.id).second)
      throw GraphError(GraphErrorCode::duplicate_id, path + "/id",
                       "duplicate vertex id '" + v.id + "'");
    if (v.self > -1)
      throw GraphError(GraphErrorCode::bad_self, path + "/self",
                       "vertex '" + v.id + "': self-intersection must be <= -1, got " +
                           std::to_string(v.self));
    if (v.genus < 0)
      throw GraphError(GraphErrorCode::bad_genus, path + "/genus",
                       "vertex '" + v.id + "': genus must be >= 0, got " +
                           std::to_string(v.genus));
  }

  const std::size_t n = g.vertices.size();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    auto [i, j] = g.edges[k];
    const std::string path = "/edges/" + std::to_string(k);
    if (i >= n || j >= n)
      throw GraphError(GraphErrorCode::unknown_id, path, "edge endpoint index out of range");
    if (i == j)
      throw GraphError(GraphErrorCode::self_loop, path,
                       "self-loop at vertex '" + g.vertices[i].id +
                           "' (self-intersections belong in 'self', not 'edges')");
  }

  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    const Arrow& a = g.arrows[k];
    const std::string path = "/arrows/" + std::to_string(k);
    bool known = false;
    for (const Vertex& v : g.vertices) known = known || v.id == a.at;
    if (!known)
      throw GraphError(GraphErrorCode::unknown_id, path + "/at",
                       "arrow attached to unknown vertex id '" + a.at + "'");
    if (a.weight < 1)
      throw GraphError(GraphErrorCode::bad_weight, path + "/weight",
                       "arrow at '" + a.at + "': weight must be >= 1, got " +
                           std::to_string(a.weight));
  }

  // Connectivity over the underlying simple graph.
  std::vector<char> reached(n, 0);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  reached[0] = 1;
  while (!bfs.empty()) {
    std::size_t at = bfs.front();
    bfs.pop();
    for (auto [i, j] : g.edges) {
      std::size_t other = n;
      if (i == at) other = j;
      if (j == at) other = i;
      if (other < n && !reached[other]) {
        reached[other] = 1;
        bfs.push(other);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!reached[i])
      throw GraphError(GraphErrorCode::disconnected, "/vertices/" + std::to_string(i),
                       "graph is disconnected: vertex '" + g.vertices[i].id +
                           "' is not reachable from '" + g.vertices[0].id + "'");
}

}  // namespace

void validate_graph(const WeightedDualGraph& g) {
  validate_structure(g);
  if (!is_negative_definite(intersection_form(g)))
    throw GraphError(GraphErrorCode::not_negative_definite, "/edges",
                     "intersection form is not negative definite");
}

WeightedDualGraph make_graph(std::string name, std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             std::vector<Arrow> arrows) {
  WeightedDualGraph g;
  g.name = std::move(name);
  g.vertices = std::move(vertices);

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i].id, i);

  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [a, b] = edges[k];
    const std::string path = "/edges/" + std::to_string(k);
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw GraphError(GraphErrorCode::unknown_id, path + "/0",
                       "edge endpoint '" + a + "' is not a vertex id");
    if (ib == index.end())
      throw GraphError(GraphErrorCode::unknown_id, path + "/1",
                       "edge endpoint '" + b + "' is not a vertex id");
    std::size_t i = ia->second, j = ib->second;
    if (i > j) std::swap(i, j);
    g.edges.emplace_back(i, j);
  }
  std::sort(g.edges.begin(), g.edges.end());

  g.arrows = std::move(arrows);
  std::stable_sort(g.arrows.begin(), g.arrows.end(), [&](const Arrow& x, const Arrow& y) {
    auto ix = index.count(x.at) ? index.at(x.at) : index.size();
    auto iy = index.count(y.at) ? index.at(y.at) : index.size();
    return std::tie(ix, x.weight) < std::tie(iy, y.weight);
  });

  validate_graph(g);
  return g;
}

}  // namespace ntc
