#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace diffgraph {

// Simple undirected graph: no self-loops, no multi-edges. Vertices are
// indices 0..n-1; optional display names ride along for I/O.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : adj_(order_checked(order), std::vector<bool>(order, false)) {}

  Graph(int order, std::vector<std::string> names) : Graph(order) {
    if ((int)names.size() != order)
      throw std::invalid_argument("vertex name count does not match order");
    names_ = std::move(names);
  }

  int order() const { return (int)adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u][v];
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!adj_[u][v]) {
      adj_[u][v] = adj_[v][u] = true;
      ++edges_;
    }
  }

  int degree(int v) const {
    check_vertex(v);
    return (int)std::count(adj_[v].begin(), adj_[v].end(), true);
  }

  // Display name for a vertex; defaults to "v<i>" when none was provided.
  std::string vertex_name(int v) const {
    check_vertex(v);
    if (!names_.empty()) return names_[v];
    return "v" + std::to_string(v);
  }

  bool has_names() const { return !names_.empty(); }

  void set_names(std::vector<std::string> names) {
    if ((int)names.size() != order())
      throw std::invalid_argument("vertex name count does not match order");
    names_ = std::move(names);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  static int order_checked(int order) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    if (order > kMaxOrder)
      throw std::invalid_argument("graph order " + std::to_string(order) +
                                  " exceeds supported maximum " + std::to_string(kMaxOrder));
    return order;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range");
  }

  static constexpr int kMaxOrder = 1 << 16;

  std::vector<std::vector<bool>> adj_;
  std::vector<std::string> names_;
  std::size_t edges_ = 0;
};

// Sorted set of distinct positive labels; the label image of a graph and the
// alphabet the difference predicate is evaluated against.
class Signature {
 public:
  explicit Signature(std::vector<Label> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("signature must be non-empty");
    std::sort(values_.begin(), values_.end());
    if (values_.front() == 0) throw std::invalid_argument("signature values must be positive");
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
      throw std::invalid_argument("signature values must be distinct");
  }

  const std::vector<Label>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Label min() const { return values_.front(); }
  Label max() const { return values_.back(); }

  bool contains(Label x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Label> values_;
};

// Assignment of a label to each vertex, indexed by vertex. Deliberately
// permissive: duplicates and zeros can be *represented* so that the verifier
// and parsers can report them; validate() enforces the bijection contract.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  int size() const { return (int)labels_.size(); }
  Label operator[](int v) const { return labels_.at(v); }
  const std::vector<Label>& values() const { return labels_; }

  void validate() const {
    std::vector<Label> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0)
      throw InvalidLabelingError("labels must be positive");
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw InvalidLabelingError("duplicate label " + std::to_string(*dup));
  }

  bool is_valid() const noexcept {
    try {
      validate();
      return true;
    } catch (const InvalidLabelingError&) {
      return false;
    }
  }

  // Sorted image of the labeling; requires validity.
  Signature signature() const {
    validate();
    return Signature(labels_);
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<Label> labels_;
};

// A graph together with a candidate labeling of its vertices.
struct LabeledGraph {
  Graph graph;
  Labeling labeling;

  LabeledGraph(Graph g, Labeling l) : graph(std::move(g)), labeling(std::move(l)) {
    if (labeling.size() != graph.order())
      throw std::invalid_argument("labeling size does not match graph order");
  }
};

// The graph a signature induces on itself: vertices are the signature values,
// two values adjacent iff their difference is again in the signature.
inline LabeledGraph induced_difference_graph(const Signature& s) {
  const auto& v = s.values();
  const int n = (int)v.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (Label x : v) names.push_back(std::to_string(x));
  Graph g(n, std::move(names));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.contains(v[j] - v[i])) g.add_edge(i, j);
  return LabeledGraph(std::move(g), Labeling(v));
}

// Multiply every label by c > 0 (checked); the difference predicate is
// invariant under this.
inline LabeledGraph scale_labeling(const LabeledGraph& lg, Label c) {
  if (c == 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Label> scaled;
  scaled.reserve(lg.labeling.size());
  for (Label x : lg.labeling.values()) scaled.push_back(checked_mul(x, c));
  return LabeledGraph(lg.graph, Labeling(std::move(scaled)));
}

// Degrees in non-increasing order.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  d.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace diffgraph
