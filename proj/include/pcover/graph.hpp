#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pcover/label.hpp"

namespace pcover {

struct Edge {
  int u, v;
  int other(int w) const { return w == u ? v : u; }
};

// Vertex-labelled multigraph without loops. Edge ids are dense and stable;
// dart 2e runs u->v and dart 2e+1 runs v->u.
class LabeledGraph {
public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::vector<Label> labels, bool simple = false);

  int add_vertex(Label l);
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  Label label(int v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const { return labels_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return inc_.at(v); }
  int degree(int v) const { return static_cast<int>(inc_.at(v).size()); }
  std::vector<int> neighbors(int v) const;
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  bool simple() const { return simple_; }
  bool has_parallel_edges() const;
  // Every edge joins base-adjacent labels.
  bool label_consistent() const;

  // Darts.
  static int dart(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
  static int edge_of(int d) { return d >> 1; }
  static int rev(int d) { return d ^ 1; }
  int tail(int d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
  int head(int d) const { return (d & 1) ? edges_[d >> 1].u : edges_[d >> 1].v; }
  // The dart of edge e leaving v.
  int dart_from(int e, int v) const { return edges_.at(e).u == v ? 2 * e : 2 * e + 1; }

private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
  bool simple_ = false;
};

enum class BaseKind { K1222, K4neg };

std::string to_string(BaseKind k);
BaseKind base_kind_from_string(const std::string& s);

struct BaseGraph {
  BaseKind kind;
  LabeledGraph graph;
  // Base vertex carrying label l, or -1.
  int vertex_of_label(Label l) const;
};

// Vertex order: K1222 is 0,+1,-1,+2,-2,+3,-3; K4neg is 0,-1,-2,-3.
// Edges are the base-adjacent pairs (u<v) in lexicographic order.
BaseGraph make_base(BaseKind kind);
const BaseGraph& base_graph(BaseKind kind);

std::vector<int> component_ids(const LabeledGraph& g, int* count = nullptr);
bool is_connected(const LabeledGraph& g);

// Vertex connectivity, capped at 3. K_n gives n-1.
int connectivity(const LabeledGraph& g);

// Articulation points of the subgraph avoiding `removed` (may be -1).
std::vector<int> articulation_points(const LabeledGraph& g, int removed = -1);

struct Subgraph {
  LabeledGraph graph;
  std::vector<int> to_parent;     // subgraph vertex -> parent vertex
  std::vector<int> from_parent;   // parent vertex -> subgraph vertex or -1
  std::vector<int> edge_to_parent;
};

Subgraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& vertices);
Subgraph edge_subgraph(const LabeledGraph& g, const std::vector<int>& edges);

struct LiftComponent {
  enum Kind { Cycle, Path, Other } kind;
  std::vector<int> vertices;  // walk order for cycles and paths
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

// Components of the subgraph of edges whose endpoint labels both lie in the
// label triple; components without edges are omitted.
std::vector<LiftComponent> find_cycles_covering(const LabeledGraph& g, std::array<Label, 3> base_cycle);

// All triangles {a<b<c} of a simple-underlying graph.
std::vector<std::array<int, 3>> triangles(const LabeledGraph& g);

} // namespace pcover
