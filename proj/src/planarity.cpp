#include "pcover/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace pcover {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

bool simple_planar(int n, const std::vector<std::pair<int, int>>& es)
{
  BGraph bg(n);
  int i = 0;
  for (auto [u, v] : es) boost::add_edge(u, v, i++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Drops edges at degree-1 vertices until none remain.
std::vector<int> prune_pendant(const LabeledGraph& g, std::vector<int> edges)
{
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, int> deg;
    for (int e : edges) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
    std::vector<int> keep;
    for (int e : edges)
      if (deg[g.edge(e).u] > 1 && deg[g.edge(e).v] > 1) keep.push_back(e);
      else changed = true;
    edges = std::move(keep);
  }
  return edges;
}

// Greedy edge deletion keeping non-planarity; the result is edge-minimal.
std::vector<int> minimize_nonplanar(const LabeledGraph& g, std::vector<int> edges)
{
  for (size_t i = 0; i < edges.size();) {
    std::vector<std::pair<int, int>> rest;
    for (size_t j = 0; j < edges.size(); ++j)
      if (j != i) rest.push_back({g.edge(edges[j]).u, g.edge(edges[j]).v});
    if (!simple_planar(g.num_vertices(), rest)) edges.erase(edges.begin() + static_cast<long>(i));
    else ++i;
  }
  return prune_pendant(g, edges);
}

} // namespace

std::string to_string(KuratowskiWitness::Kind k)
{
  switch (k) {
  case KuratowskiWitness::K5: return "K5";
  case KuratowskiWitness::K33: return "K33";
  default: return "none";
  }
}

KuratowskiWitness classify_kuratowski(const LabeledGraph& g, const std::vector<int>& edges)
{
  KuratowskiWitness w;
  std::set<int> es(edges.begin(), edges.end());
  if (es.size() != edges.size()) return w;
  std::map<int, std::vector<int>> inc;
  for (int e : es) {
    inc[g.edge(e).u].push_back(e);
    inc[g.edge(e).v].push_back(e);
  }
  std::vector<int> branch;
  for (auto& [v, ie] : inc) {
    if (ie.size() < 2) return w;
    if (ie.size() >= 3) branch.push_back(v);
  }
  // Contract each degree-2 chain between branch vertices.
  std::set<int> bset(branch.begin(), branch.end());
  std::set<int> used;
  std::map<std::pair<int, int>, int> pairs;
  for (int b : branch)
    for (int e0 : inc[b]) {
      if (used.count(e0)) continue;
      int v = b, e = e0;
      for (;;) {
        used.insert(e);
        v = g.edge(e).other(v);
        if (bset.count(v)) break;
        int nxt = inc[v][0] == e ? inc[v][1] : inc[v][0];
        if (used.count(nxt)) return w;
        e = nxt;
      }
      if (v == b) return w;
      ++pairs[{std::min(b, v), std::max(b, v)}];
    }
  if (used.size() != es.size()) return w;  // stray cycle without branch vertices
  for (auto& [p, c] : pairs)
    if (c != 1) return w;
  if (branch.size() == 5 && pairs.size() == 10) {
    w.kind = KuratowskiWitness::K5;
  } else if (branch.size() == 6 && pairs.size() == 9) {
    // Contracted graph must be 3-regular bipartite with sides of size 3.
    std::map<int, int> side;
    side[branch[0]] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [p, c] : pairs) {
        auto a = side.find(p.first), b = side.find(p.second);
        if (a != side.end() && b == side.end()) side[p.second] = 1 - a->second, changed = true;
        else if (b != side.end() && a == side.end()) side[p.first] = 1 - b->second, changed = true;
        else if (a != side.end() && b != side.end() && a->second == b->second) return w;
      }
    }
    if (side.size() != 6) return w;
    int zeros = 0;
    for (auto& [v, s] : side) zeros += s == 0;
    if (zeros != 3) return w;
    w.kind = KuratowskiWitness::K33;
  } else {
    return w;
  }
  w.edges.assign(es.begin(), es.end());
  w.branch_vertices = branch;
  return w;
}

PlanarityResult planarity(const LabeledGraph& g)
{
  if (!is_connected(g)) throw PreconditionError("planarity test of a disconnected graph");
  int n = g.num_vertices();
  PlanarityResult res;
  // Simple underlying graph; parallel copies are re-inserted afterwards.
  std::map<std::pair<int, int>, int> rep;
  std::map<int, std::vector<int>> parallels;
  BGraph bg(n);
  int idx = 0;
  std::vector<int> bedge_to_edge;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto key = std::make_pair(std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v));
    auto it = rep.find(key);
    if (it != rep.end()) {
      parallels[it->second].push_back(e);
      continue;
    }
    rep[key] = e;
    boost::add_edge(g.edge(e).u, g.edge(e).v, idx++, bg);
    bedge_to_edge.push_back(e);
  }
  using Storage = std::vector<std::vector<BEdge>>;
  Storage storage(n);
  auto emb_map = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BEdge> kur;
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = emb_map,
                                                    boost::boyer_myrvold_params::kuratowski_subgraph =
                                                        std::back_inserter(kur));
  auto eidx = boost::get(boost::edge_index, bg);
  if (!planar) {
    std::vector<int> edges;
    for (const BEdge& be : kur) edges.push_back(bedge_to_edge[boost::get(eidx, be)]);
    res.witness = classify_kuratowski(g, prune_pendant(g, edges));
    if (res.witness.kind == KuratowskiWitness::None) res.witness = classify_kuratowski(g, minimize_nonplanar(g, edges));
    if (res.witness.kind == KuratowskiWitness::None) throw Error("planarity backend returned an invalid Kuratowski witness");
    return res;
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    for (const BEdge& be : storage[v]) {
      int e = bedge_to_edge[boost::get(eidx, be)];
      auto it = parallels.find(e);
      std::vector<int> ps = it == parallels.end() ? std::vector<int>{} : it->second;
      // Nested digons: p_k..p_1 r at one end, r p_1..p_k at the other.
      if (v == std::min(g.edge(e).u, g.edge(e).v)) {
        for (auto p = ps.rbegin(); p != ps.rend(); ++p) rot[v].push_back(*p);
        rot[v].push_back(e);
      } else {
        rot[v].push_back(e);
        for (int p : ps) rot[v].push_back(p);
      }
    }
  }
  res.planar = true;
  res.embedding = PlaneEmbedding(g, rot, 0);
  return res;
}

bool is_planar(const LabeledGraph& g)
{
  std::set<std::pair<int, int>> simple;
  for (const Edge& e : g.edges())
    if (e.u != e.v) simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return simple_planar(g.num_vertices(), {simple.begin(), simple.end()});
}

} // namespace pcover
