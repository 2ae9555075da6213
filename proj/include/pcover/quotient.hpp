#pragma once

#include <optional>
#include <vector>

#include "pcover/bounds.hpp"
#include "pcover/embedding.hpp"
#include "pcover/io.hpp"

namespace pcover {

// H'' as an embedded bipartite multigraph: label 0 marks a 0-vertex of H,
// label -1 a contracted (-1,-2,-3) triangle. Each edge carries the number of
// beads on the string it replaces.
struct QuotientGraph {
  PlaneEmbedding embedding;
  std::vector<int> beads;          // per edge
  std::vector<Label> string_type;  // per edge: label of the beads' vk, 0 without beads
  int a = 0;                       // number of 0-vertices

  FaceCensus census() const;
  // Beads on the boundary of face f, counted once per edge occurrence.
  int face_beads(int f) const;
  // Length of the corresponding face of H: 3(k + beta) for a 2k-face.
  int h_face_length(int f) const;
  int total_beads() const;
};

// Bead-free quotient over a bipartite embedded multigraph (labels 0 / -1).
QuotientGraph make_quotient(PlaneEmbedding e);

// Contracts every (-1,-2,-3) triangle and replaces strings of beads by edges.
// Throws PreconditionError on a (-1,-2,-3) lift that is not a facial triangle
// and on a necklace.
QuotientGraph quotient_Hpp(const PlaneEmbedding& h);

// Proper 3-edge-colouring with colours 1..3, or nullopt.
std::optional<std::vector<int>> three_edge_colouring(const LabeledGraph& g);

// Rebuilds an embedded H: an edge of colour c joins the 0-vertex to the
// triangle vertex labelled -c, and its beads have type -c. flips[e][t]
// mirrors bead t of edge e. The outer face follows the quotient's.
PlaneEmbedding inflate_Hpp(const QuotientGraph& q, const std::vector<int>& colour,
                           const std::vector<std::vector<char>>& flips = {});

// Code of a rooted traversal minimized over roots and both orientations;
// equal iff the maps are isomorphic up to reflection (vertex labels kept).
std::vector<int> canonical_map_code(const PlaneEmbedding& e);

struct HppOptions {
  bool exclude_theta = true;  // drop the two-vertex triple edge (a = 1)
};

// Every connected cubic bipartite planar multigraph with 1 <= a <= a_max
// vertices per side, one entry per embedding up to reflection. Outer face 0.
std::vector<QuotientGraph> enumerate_Hpp(int a_max, const HppOptions& opt = {});

struct BeadDemand {
  int face;
  int demand;
};

// Internal 2-face: 2, internal 4-face: 1, outer 2-face: 1.
std::vector<BeadDemand> bead_demands(const QuotientGraph& q);

struct PairFiring {
  int f1, f2;
  long placements;  // demand-satisfying placements rejected by this pair
};

struct MinBeadsResult {
  bool feasible = false;
  int beads = -1;
  std::vector<int> placement;  // per edge
  std::vector<PairFiring> fired;
  long placements_examined = 0;
};

// Minimum total beads meeting the face demands such that no two distinct
// internal faces trigger the shared-bead exclusion. The search covers totals
// up to the demand sum plus the edge count.
MinBeadsResult min_beads(const QuotientGraph& q);

Json quotient_to_json(const QuotientGraph& q);
QuotientGraph quotient_from_json(const Json& j);
Json min_beads_to_json(const MinBeadsResult& r);

} // namespace pcover
