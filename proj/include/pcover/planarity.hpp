#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcover/embedding.hpp"

namespace pcover {

struct KuratowskiWitness {
  enum Kind { None, K5, K33 } kind = None;
  std::vector<int> edges;            // edge ids of g forming the subdivision
  std::vector<int> branch_vertices;  // 5 or 6 vertices of g
};

std::string to_string(KuratowskiWitness::Kind k);

struct PlanarityResult {
  bool planar = false;
  std::optional<PlaneEmbedding> embedding;
  KuratowskiWitness witness;
};

// Embedding or validated Kuratowski subdivision. Parallel edges are placed
// consecutively around their endpoints.
PlanarityResult planarity(const LabeledGraph& g);

// Witness-free test; accepts disconnected graphs.
bool is_planar(const LabeledGraph& g);

// Independent check that an edge set of g is a subdivision of K5 or K3,3.
KuratowskiWitness classify_kuratowski(const LabeledGraph& g, const std::vector<int>& edges);

} // namespace pcover
