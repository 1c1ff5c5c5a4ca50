#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace diffgraph {

// A labeled graph is a difference graph iff for every vertex pair {x,y}:
// edge xy exists ⟺ |f(x)-f(y)| is itself one of the labels.

enum class ViolationKind {
  missing_edge,  // the edge is present but its label difference is missing from the signature
  extra_edge,    // the edge is absent but its label difference is in the signature
};

struct Violation {
  ViolationKind kind;
  int u, v;  // vertex indices, u < v
  Label difference;
};

struct VerificationReport {
  bool valid;
  std::vector<Violation> violations;
  Signature signature;
};

inline VerificationReport verify(const LabeledGraph& lg) {
  if (lg.graph.order() == 0)
    throw std::invalid_argument("cannot verify an empty graph: its signature would be empty");
  Signature sig = lg.labeling.signature();
  const int n = lg.graph.order();
  std::vector<Violation> violations;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Label a = lg.labeling[u], b = lg.labeling[v];
      Label d = a < b ? b - a : a - b;
      bool wanted = sig.contains(d);
      bool present = lg.graph.has_edge(u, v);
      if (present && !wanted)
        violations.push_back({ViolationKind::missing_edge, u, v, d});
      else if (!present && wanted)
        violations.push_back({ViolationKind::extra_edge, u, v, d});
    }
  }
  return {violations.empty(), std::move(violations), std::move(sig)};
}

inline bool verify_valid(const LabeledGraph& lg) {
  if (lg.graph.order() == 0)
    throw std::invalid_argument("cannot verify an empty graph: its signature would be empty");
  Signature sig = lg.labeling.signature();
  const int n = lg.graph.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Label a = lg.labeling[u], b = lg.labeling[v];
      Label d = a < b ? b - a : a - b;
      if (sig.contains(d) != lg.graph.has_edge(u, v)) return false;
    }
  }
  return true;
}

// Every edge of a valid difference graph falls into exactly one class:
// first type  — the endpoint labels are s and 2s;
// second type — the larger label is r + t where r is the smaller endpoint
//               label and the difference t is itself a label.
// A first-type edge also fits the second-type shape (t = s), so the
// classifier applies the first-type test first.
enum class EdgeType { first_type, second_type };

struct ClassifiedEdge {
  int u, v;  // vertex indices with label(u) < label(v)
  Label smaller, larger;
  EdgeType type;
  Label witness_r, witness_t;  // witness_r + witness_t == larger; both are labels
};

inline std::vector<ClassifiedEdge> classify_edges(const LabeledGraph& lg) {
  if (!verify_valid(lg))
    throw PreconditionError("edge classification requires a valid difference labeling");
  const int n = lg.graph.order();
  std::vector<ClassifiedEdge> out;
  out.reserve(lg.graph.edge_count());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!lg.graph.has_edge(u, v)) continue;
      ClassifiedEdge e;
      e.u = lg.labeling[u] < lg.labeling[v] ? u : v;
      e.v = lg.labeling[u] < lg.labeling[v] ? v : u;
      e.smaller = lg.labeling[e.u];
      e.larger = lg.labeling[e.v];
      e.witness_r = e.smaller;
      e.witness_t = e.larger - e.smaller;
      e.type = (e.witness_t == e.smaller) ? EdgeType::first_type : EdgeType::second_type;
      out.push_back(e);
    }
  }
  return out;
}

// Structural forms a single label can take relative to the rest of the
// signature. "Sum" and "difference" range over pairs of distinct members.
struct LabelForms {
  Label value = 0;
  bool double_of_member = false;      // value = 2a for some member a != value
  bool half_of_member = false;        // 2*value is a member
  bool sum_of_members = false;        // value = a + b, members a != b
  bool difference_of_members = false; // value = a - b for members a > b

  bool any() const {
    return double_of_member || half_of_member || sum_of_members || difference_of_members;
  }
};

inline LabelForms label_forms(const Signature& sig, Label value) {
  LabelForms f;
  f.value = value;
  if (value % 2 == 0 && value / 2 != value && sig.contains(value / 2)) f.double_of_member = true;
  if (value <= sig.max() / 2 && sig.contains(2 * value)) f.half_of_member = true;
  for (Label a : sig.values()) {
    if (a >= value) break;
    Label b = value - a;
    if (b != a && sig.contains(b)) {
      f.sum_of_members = true;
      break;
    }
  }
  for (Label b : sig.values()) {
    if (b > sig.max() - value) break;
    if (sig.contains(b + value)) {
      f.difference_of_members = true;
      break;
    }
  }
  return f;
}

// Structural facts that hold in any valid difference graph without isolated
// vertices: every label takes at least one of the four forms, the minimum is
// half-of-member or difference-of-members, the maximum is double-of-member or
// sum-of-members, and the vertex with the maximum label has odd degree iff
// one of its neighbors carries exactly half its label (the other neighbors
// pair up as {a, max-a}).
struct FormDiagnostics {
  std::vector<LabelForms> members;  // one entry per signature value, ascending
  bool min_form_ok = false;
  bool max_form_ok = false;
  bool every_member_has_form = false;
  int max_vertex = -1;
  int max_degree = 0;
  bool max_has_half_neighbor = false;
  bool parity_consistent = false;
};

inline FormDiagnostics label_form_diagnostics(const LabeledGraph& lg) {
  if (!verify_valid(lg))
    throw PreconditionError("form diagnostics require a valid difference labeling");
  Signature sig = lg.labeling.signature();
  FormDiagnostics d;
  d.members.reserve(sig.size());
  for (Label s : sig.values()) d.members.push_back(label_forms(sig, s));
  d.min_form_ok = d.members.front().half_of_member || d.members.front().difference_of_members;
  d.max_form_ok = d.members.back().double_of_member || d.members.back().sum_of_members;
  d.every_member_has_form = true;
  for (const auto& m : d.members)
    if (!m.any()) d.every_member_has_form = false;

  const int n = lg.graph.order();
  for (int v = 0; v < n; ++v)
    if (lg.labeling[v] == sig.max()) d.max_vertex = v;
  d.max_degree = lg.graph.degree(d.max_vertex);
  Label mx = sig.max();
  for (int u = 0; u < n; ++u) {
    if (u != d.max_vertex && lg.graph.has_edge(d.max_vertex, u) && mx % 2 == 0 &&
        lg.labeling[u] == mx / 2)
      d.max_has_half_neighbor = true;
  }
  d.parity_consistent = ((d.max_degree % 2 == 1) == d.max_has_half_neighbor);
  return d;
}

}  // namespace diffgraph
