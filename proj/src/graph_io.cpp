#include "ntc/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ntc {

namespace {

using nlohmann::json;

// Maps a byte offset (as reported by the JSON parser) to "line L, column C"
// so syntax errors point at the offending token in the original text.
std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t pos = byte == 0 ? 0 : byte - 1;  // parser offsets are 1-based
  if (pos > text.size()) pos = text.size();
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream out;
  out << "line " << line << ", column " << col;
  return out.str();
}

[[noreturn]] void fail(GraphErrorCode code, const std::string& where, const std::string& what) {
  throw GraphError(code, where, what);
}

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(GraphErrorCode::bad_document, where + "/" + it.key(), "unexpected key");
  }
}

// Accepts only plain JSON integers (no floats, strings, etc.).
long long require_int(const json& v, GraphErrorCode code, const std::string& where) {
  if (!v.is_number_integer()) fail(code, where, "expected an integer");
  return v.get<long long>();
}

std::string require_string(const json& v, GraphErrorCode code, const std::string& where) {
  if (!v.is_string()) fail(code, where, "expected a string");
  return v.get<std::string>();
}

}  // namespace

WeightedDualGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(GraphErrorCode::syntax_error, line_column(text, e.byte), "malformed JSON");
  }

  if (!doc.is_object()) fail(GraphErrorCode::bad_document, "/", "expected a JSON object");
  require_keys(doc, "", {"name", "vertices", "edges", "arrows"});

  std::string name;
  if (doc.contains("name")) name = require_string(doc["name"], GraphErrorCode::bad_document, "/name");

  if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
    fail(GraphErrorCode::no_vertices, "/vertices", "expected a nonempty array of vertices");
  }
  std::vector<Vertex> vertices;
  std::size_t vi = 0;
  for (const json& v : doc["vertices"]) {
    const std::string where = "/vertices/" + std::to_string(vi);
    if (!v.is_object()) fail(GraphErrorCode::bad_document, where, "expected a vertex object");
    require_keys(v, where, {"id", "self", "genus"});
    Vertex vx;
    if (!v.contains("id")) fail(GraphErrorCode::bad_document, where + "/id", "missing vertex id");
    vx.id = require_string(v["id"], GraphErrorCode::bad_document, where + "/id");
    if (!v.contains("self")) fail(GraphErrorCode::bad_self, where + "/self", "missing self-intersection");
    vx.self = require_int(v["self"], GraphErrorCode::bad_self, where + "/self");
    if (v.contains("genus")) {
      vx.genus = require_int(v["genus"], GraphErrorCode::bad_genus, where + "/genus");
    }
    vertices.push_back(std::move(vx));
    ++vi;
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(GraphErrorCode::bad_edge, "/edges", "expected an array");
    std::size_t ei = 0;
    for (const json& e : doc["edges"]) {
      const std::string where = "/edges/" + std::to_string(ei);
      if (!e.is_array() || e.size() != 2) {
        fail(GraphErrorCode::bad_edge, where, "expected a pair of vertex ids");
      }
      edges.emplace_back(require_string(e[0], GraphErrorCode::bad_edge, where + "/0"),
                         require_string(e[1], GraphErrorCode::bad_edge, where + "/1"));
      ++ei;
    }
  }

  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) fail(GraphErrorCode::bad_document, "/arrows", "expected an array");
    std::size_t ai = 0;
    for (const json& a : doc["arrows"]) {
      const std::string where = "/arrows/" + std::to_string(ai);
      if (!a.is_object()) fail(GraphErrorCode::bad_document, where, "expected an arrow object");
      require_keys(a, where, {"at", "weight"});
      Arrow ar;
      if (!a.contains("at")) fail(GraphErrorCode::bad_document, where + "/at", "missing arrow vertex");
      ar.at = require_string(a["at"], GraphErrorCode::bad_document, where + "/at");
      if (a.contains("weight")) {
        ar.weight = require_int(a["weight"], GraphErrorCode::bad_weight, where + "/weight");
      }
      arrows.push_back(std::move(ar));
      ++ai;
    }
  }

  return make_graph(std::move(name), std::move(vertices), edges, std::move(arrows));
}

WeightedDualGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError(GraphErrorCode::bad_document, path.string(), "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const WeightedDualGraph& g) {
  json doc = json::object();
  if (!g.name.empty()) doc["name"] = g.name;

  json vs = json::array();
  for (const Vertex& v : g.vertices) {
    json jv = json::object();
    jv["id"] = v.id;
    jv["self"] = v.self;
    if (v.genus != 0) jv["genus"] = v.genus;
    vs.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vs);

  if (!g.edges.empty()) {
    json es = json::array();
    for (const auto& [i, j] : g.edges) {
      es.push_back(json::array({g.vertices[i].id, g.vertices[j].id}));
    }
    doc["edges"] = std::move(es);
  }

  if (!g.arrows.empty()) {
    json as = json::array();
    for (const Arrow& a : g.arrows) {
      json ja = json::object();
      ja["at"] = a.at;
      ja["weight"] = a.weight;
      as.push_back(std::move(ja));
    }
    doc["arrows"] = std::move(as);
  }

  return doc.dump(2) + "\n";
}

}  // namespace ntc
