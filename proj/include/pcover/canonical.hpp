#pragma once

#include <string>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

// Printable certificate; equal iff the graphs are label-preserving isomorphic.
std::string canonical_form(const LabeledGraph& g);

// Canonical position of every vertex (the relabeling achieving the form).
std::vector<int> canonical_labeling(const LabeledGraph& g);

// Relabel vertices: vertex v of g becomes perm[v]. Edge order follows g.
LabeledGraph permute_vertices(const LabeledGraph& g, const std::vector<int>& perm);

} // namespace pcover
