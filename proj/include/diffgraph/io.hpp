#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "search.hpp"

namespace diffgraph {

// Schema or syntax problem in an input document; the message carries the
// offending field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The one structured input/output format:
// {
//   "name": optional string,
//   "vertices": ["a", "b", ...],        unique names, order is significant
//   "edges": [["a","b"], ...],          no self-loops, no duplicates
//   "labels": {"a": 1, ...}             optional; total and distinct if present
// }
struct GraphDocument {
  std::string name;  // empty when absent
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices
  std::optional<std::vector<Label>> labels;  // by vertex index

  Graph to_graph() const {
    Graph g((int)vertices.size(), vertices);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  LabeledGraph to_labeled_graph() const {
    if (!labels) throw std::invalid_argument("document has no labels");
    return LabeledGraph(to_graph(), Labeling(*labels));
  }

  static GraphDocument from_graph(const Graph& g, std::string doc_name = "") {
    GraphDocument doc;
    doc.name = std::move(doc_name);
    for (int v = 0; v < g.order(); ++v) doc.vertices.push_back(g.vertex_name(v));
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (g.has_edge(u, v)) doc.edges.emplace_back(u, v);
    return doc;
  }

  static GraphDocument from_labeled_graph(const LabeledGraph& lg, std::string doc_name = "") {
    GraphDocument doc = from_graph(lg.graph, std::move(doc_name));
    doc.labels = lg.labeling.values();
    return doc;
  }

  friend bool operator==(const GraphDocument& a, const GraphDocument& b) {
    return a.name == b.name && a.vertices == b.vertices && a.edges == b.edges &&
           a.labels == b.labels;
  }
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(key) + ": required field missing");
  return *it;
}

}  // namespace detail

inline GraphDocument parse_graph_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document root must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "vertices" && key != "edges" && key != "labels")
      throw ParseError(key + ": unknown field");
  }

  GraphDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name: must be a string");
    doc.name = j["name"].get<std::string>();
  }

  const auto& vertices = detail::field(j, "vertices");
  if (!vertices.is_array()) throw ParseError("vertices: must be an array");
  std::map<std::string, int> index_of;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& entry = vertices[i];
    if (!entry.is_string())
      throw ParseError("vertices[" + std::to_string(i) + "]: must be a string");
    std::string name = entry.get<std::string>();
    if (!index_of.emplace(name, (int)i).second)
      throw ParseError("vertices[" + std::to_string(i) + "]: duplicate vertex name '" + name +
                       "'");
    doc.vertices.push_back(std::move(name));
  }

  if (j.contains("edges")) {
    const auto& edges = j["edges"];
    if (!edges.is_array()) throw ParseError("edges: must be an array");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = "edges[" + std::to_string(i) + "]";
      const auto& entry = edges[i];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !entry[1].is_string())
        throw ParseError(path + ": must be a pair of vertex names");
      int ends[2];
      for (int side = 0; side < 2; ++side) {
        std::string name = entry[side].get<std::string>();
        auto it = index_of.find(name);
        if (it == index_of.end())
          throw ParseError(path + "[" + std::to_string(side) + "]: unknown vertex '" + name +
                           "'");
        ends[side] = it->second;
      }
      if (ends[0] == ends[1])
        throw ParseError(path + ": self-loop on '" + doc.vertices[ends[0]] + "'");
      auto key = std::minmax(ends[0], ends[1]);
      if (!seen.insert({key.first, key.second}).second)
        throw ParseError(path + ": duplicate edge");
      doc.edges.emplace_back(ends[0], ends[1]);
    }
  }

  if (j.contains("labels")) {
    const auto& labels = j["labels"];
    if (!labels.is_object()) throw ParseError("labels: must be an object");
    std::vector<Label> values(doc.vertices.size(), 0);
    std::vector<bool> present(doc.vertices.size(), false);
    for (const auto& [key, value] : labels.items()) {
      auto it = index_of.find(key);
      if (it == index_of.end()) throw ParseError("labels: unknown vertex '" + key + "'");
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
        throw ParseError("labels." + key + ": label must be a positive integer");
      values[it->second] = value.get<std::uint64_t>();
      present[it->second] = true;
    }
    for (std::size_t v = 0; v < present.size(); ++v)
      if (!present[v]) throw ParseError("labels: vertex '" + doc.vertices[v] + "' has no label");
    Labeling check(values);
    check.validate();  // duplicates are an invalid labeling, not a parse error
    doc.labels = std::move(values);
  }
  return doc;
}

inline std::string emit_graph_json(const GraphDocument& doc) {
  nlohmann::ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["vertices"] = doc.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : doc.edges)
    j["edges"].push_back({doc.vertices[u], doc.vertices[v]});
  if (doc.labels) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < doc.vertices.size(); ++v) labels[doc.vertices[v]] = (*doc.labels)[v];
    j["labels"] = std::move(labels);
  }
  return j.dump(2) + "\n";
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

// Export-only Graphviz rendering: one node line per vertex (in vertex order,
// labeled with its integer), one edge line per edge (ascending index pairs).
inline std::string emit_dot(const LabeledGraph& lg) {
  std::string out = "graph G {\n";
  const Graph& g = lg.graph;
  for (int v = 0; v < g.order(); ++v)
    out += "  " + detail::dot_quote(g.vertex_name(v)) +
           " [label=\"" + std::to_string(lg.labeling[v]) + "\"];\n";
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v))
        out += "  " + detail::dot_quote(g.vertex_name(u)) + " -- " +
               detail::dot_quote(g.vertex_name(v)) + ";\n";
  out += "}\n";
  return out;
}

// One catalog record per line:
// {"order":3,"canonical":"a0","witness":[1,2,4],"edge_count":2}
inline std::string catalog_record_line(const CatalogEntry& entry) {
  nlohmann::ordered_json j;
  j["order"] = entry.order;
  j["canonical"] = entry.form.hex();
  j["witness"] = entry.witness.values();
  j["edge_count"] = entry.edge_count;
  return j.dump();
}

inline std::string catalog_to_json_lines(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& entry : entries) {
    out += catalog_record_line(entry);
    out.push_back('\n');
  }
  return out;
}

}  // namespace diffgraph
