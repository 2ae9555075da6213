#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcover/embedding.hpp"
#include "pcover/graph.hpp"

namespace pcover {

struct CoverProjection {
  LabeledGraph source;
  BaseKind base;
  std::vector<int> vertex_map;  // source vertex -> base vertex
};

// Maps each vertex to the base vertex with the same label.
std::vector<int> map_by_label(const LabeledGraph& g, BaseKind base);

struct CoverViolation {
  int vertex = -1;
  int base_vertex = -1;
  std::vector<int> neighbor_images;  // base images of the neighbours, sorted
  std::string reason;
};

struct CoverCheck {
  bool ok = false;
  int fold = -1;                     // common fibre size, -1 if fibres differ
  std::vector<int> component_folds;  // per connected component of the source
  std::optional<CoverViolation> violation;
};

// Throws PreconditionError when the map is not onto, or when fibres differ on
// a connected source whose neighbourhoods are all bijective.
CoverCheck verify_cover(const LabeledGraph& source, const BaseGraph& base, const std::vector<int>& vertex_map);
CoverCheck verify_cover(const CoverProjection& p);

struct SemiCover {
  PlaneEmbedding embedding;
  BaseKind base;
  std::vector<int> vertex_map;
};

// Interior vertices bijective, outer-face vertices injective.
CoverCheck verify_semicover(const SemiCover& sc);

// Edges of a base graph oriented from the lower to the higher vertex index.
struct VoltageAssignment {
  BaseKind base = BaseKind::K4neg;
  int n = 1;
  std::vector<std::vector<int>> perm;  // per base edge: sheet i at u goes to perm[i] at v
  bool normalized = false;
};

// BFS tree from the 0-labelled root, neighbours in increasing index order.
std::vector<int> spanning_tree_edges(const BaseGraph& b);
std::vector<int> cotree_edges(const BaseGraph& b);

VoltageAssignment identity_voltage(BaseKind base, int n);
void validate(const VoltageAssignment& v);
// Relabels sheets per vertex so that tree edges carry the identity.
VoltageAssignment normalize(const VoltageAssignment& v);

struct DerivedCover {
  LabeledGraph graph;
  CoverProjection projection;
};

// Vertex (u, sheet i) has index i*|V(base)| + u.
DerivedCover derive(const VoltageAssignment& v);
bool is_connected_cover(const VoltageAssignment& v);

// Net voltage along a closed base walk given by vertex sequence.
std::vector<int> net_voltage(const VoltageAssignment& v, const std::vector<int>& closed_walk);
std::vector<int> permutation_cycle_lengths(const std::vector<int>& p);
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b);  // a after b
std::vector<int> inverse(const std::vector<int>& p);

struct BaseSubgraph {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Source vertices over the given base vertices and source edges over the given base edges.
Subgraph lift_subgraph(const CoverProjection& p, const BaseSubgraph& s);
BaseSubgraph base_subgraph_on_labels(BaseKind base, const std::vector<Label>& labels);

} // namespace pcover
