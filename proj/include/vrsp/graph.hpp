#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vrsp/errors.hpp"
#include "vrsp/weight.hpp"

namespace vrsp {

struct Label {
  std::string action;
  Weight weight;

  std::string str() const { return action + "/" + weight.str(); }
  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
};

enum class VertexKind { Plain, Contracted, Pair };

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Plain;
  // Contracted: sorted ids absorbed by the contraction (transitively).
  // Pair: the two operand ids, in order.
  std::vector<std::string> origin;
};

struct Arc {
  std::string tail;
  std::string head;
  Label label;

  std::string key() const { return tail + " -> " + head + " [" + label.str() + "]"; }
  auto operator<=>(const Arc&) const = default;
};

// Labelled acyclic directed multigraph. Immutable after build_graph;
// vertices sorted by id, arcs by (tail, head, label). Parallel arcs with
// equal (tail, head, label) are merged at construction.
class Graph {
 public:
  Graph() = default;

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }
  const Vertex& vertex(const std::string& id) const;
  std::set<std::string> vertex_ids() const;

  const std::vector<int>& out_arcs(const std::string& id) const;
  const std::vector<int>& in_arcs(const std::string& id) const;
  int in_degree(const std::string& id) const { return static_cast<int>(in_arcs(id).size()); }
  int out_degree(const std::string& id) const { return static_cast<int>(out_arcs(id).size()); }

  std::set<Label> label_set() const;
  // Labels of arcs u -> v (parallel arcs differ in label).
  std::set<Label> arcs_between(const std::string& u, const std::string& v) const;
  bool has_arc(const std::string& tail, const std::string& head, const Label& l) const;

  friend Graph build_graph(std::vector<Vertex> vertices, std::vector<Arc> arcs);

 private:
  std::vector<Vertex> verts_;
  std::vector<Arc> arcs_;
  std::map<std::string, int> vindex_;
  std::map<std::string, std::vector<int>> out_;
  std::map<std::string, std::vector<int>> in_;
};

// Validates and constructs. Errors: CycleDetected (cycle reported),
// DanglingEndpoint, EmptyAction, ValidationError (duplicate/empty ids).
Graph build_graph(std::vector<Vertex> vertices, std::vector<Arc> arcs);

struct Degrees {
  int in = 0;
  int out = 0;
  bool operator==(const Degrees&) const = default;
};

Degrees degrees(const Graph& g, const std::string& v);

std::set<std::string> source_set(const Graph& g);
std::set<std::string> sink_set(const Graph& g);

struct LevelAssignment {
  std::map<std::string, int> level;
  int max_level = -1;
};

// Iterative peeling of in-degree-0 sets; level(v) = j iff v is removed in
// round j. Total on every valid Graph.
LevelAssignment level_assignment(const Graph& g);

// Maximal weakly connected subgraphs, ordered by smallest vertex id.
std::vector<Graph> components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::set<std::string>& x);
Graph arc_induced_subgraph(const Graph& g, const std::vector<int>& arc_indices);

struct CutSet {
  std::set<std::string> x;
  std::set<std::string> y;
  std::vector<int> forward;   // head in y
  std::vector<int> backward;  // head in x
};

// Errors: EmptySet, OverlappingSets, UnknownVertex.
CutSet cut(const Graph& g, const std::set<std::string>& x, const std::set<std::string>& y);

// Single operand is returned unchanged; otherwise ids are namespaced
// "<k>:<id>" per operand.
Graph disjoint_union(const std::vector<Graph>& gs);

// Exact equality of vertex ids and arc triples.
bool same_graph(const Graph& a, const Graph& b);

}  // namespace vrsp
