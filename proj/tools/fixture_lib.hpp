#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcover/cover.hpp"
#include "pcover/io.hpp"
#include "pcover/quotient.hpp"

namespace pcover::fixtures {

// Cyclic chain of beads of type -k; flips[t] swaps the inner labels of bead t.
PlaneEmbedding necklace(int beads, Label k = 3, const std::vector<char>& flips = {});

// Two vertices joined by three edges; zero rotation (0,1,2).
QuotientGraph theta(const std::vector<int>& beads);

// a = 2 quotient with an outer 2-face, an inner 2-face and two 4-faces.
// Edge ids 0..5 are e1..e6; the outer face is the (e4,e5) digon.
QuotientGraph fig8(const std::vector<int>& beads = {0, 0, 0, 0, 0, 0});

// Cube as a bipartite map; outer face 0.
QuotientGraph cube(const std::vector<int>& beads = std::vector<int>(12, 0));

struct FillOptions {
  long node_limit = 2000000;
  // Return false to keep searching.
  std::function<bool(const SemiCover&)> accept;
};

// Completes every internal non-triangular face of h with (1,2,3) triangles
// attached to the face boundary, so that all vertices off the outer face get
// their full K1222 neighbourhood. Deterministic.
std::optional<SemiCover> fill_semicover(const PlaneEmbedding& h, const FillOptions& opt = {});

// name -> document, in generation order.
std::vector<std::pair<std::string, Json>> build_all();

} // namespace pcover::fixtures
