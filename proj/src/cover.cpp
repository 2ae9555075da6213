#include "pcover/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace pcover {

std::vector<int> map_by_label(const LabeledGraph& g, BaseKind base)
{
  const BaseGraph& b = base_graph(base);
  std::vector<int> m(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    m[v] = b.vertex_of_label(g.label(v));
    if (m[v] < 0)
      throw PreconditionError("label " + label_name(g.label(v)) + " of vertex " + std::to_string(v) + " is not in base " +
                              to_string(base));
  }
  return m;
}

namespace {

void check_map_shape(const LabeledGraph& source, const BaseGraph& base, const std::vector<int>& vertex_map)
{
  if (static_cast<int>(vertex_map.size()) != source.num_vertices())
    throw PreconditionError("vertex map size differs from source vertex count");
  std::vector<char> hit(base.graph.num_vertices(), 0);
  for (int b : vertex_map) {
    if (b < 0 || b >= base.graph.num_vertices()) throw PreconditionError("vertex map image out of range");
    hit[b] = 1;
  }
  for (int b = 0; b < base.graph.num_vertices(); ++b)
    if (!hit[b]) throw PreconditionError("vertex map is not onto: base vertex " + std::to_string(b) + " has no preimage");
}

// Checks one vertex; injective_only relaxes bijectivity to injectivity.
std::optional<CoverViolation> check_vertex(const LabeledGraph& source, const BaseGraph& base,
                                           const std::vector<int>& vmap, int v, bool injective_only)
{
  CoverViolation viol;
  viol.vertex = v;
  viol.base_vertex = vmap[v];
  for (int w : source.neighbors(v)) viol.neighbor_images.push_back(vmap[w]);
  std::sort(viol.neighbor_images.begin(), viol.neighbor_images.end());
  if (source.label(v) != base.graph.label(vmap[v])) {
    viol.reason = "label differs from image label";
    return viol;
  }
  std::vector<int> expect = base.graph.neighbors(vmap[v]);
  std::sort(expect.begin(), expect.end());
  const auto& got = viol.neighbor_images;
  if (std::adjacent_find(got.begin(), got.end()) != got.end()) {
    viol.reason = "two neighbours share an image";
    return viol;
  }
  if (!std::includes(expect.begin(), expect.end(), got.begin(), got.end())) {
    viol.reason = "a neighbour maps outside the image's neighbourhood";
    return viol;
  }
  if (!injective_only && got.size() != expect.size()) {
    viol.reason = "neighbourhood map is not onto";
    return viol;
  }
  return std::nullopt;
}

void fill_folds(CoverCheck& r, const LabeledGraph& source, const BaseGraph& base, const std::vector<int>& vmap)
{
  int nb = base.graph.num_vertices();
  std::vector<int> fibre(nb, 0);
  for (int b : vmap) ++fibre[b];
  bool equal = std::all_of(fibre.begin(), fibre.end(), [&](int f) { return f == fibre[0]; });
  int ncomp = 0;
  auto comp = component_ids(source, &ncomp);
  r.component_folds.assign(ncomp, 0);
  for (int v = 0; v < source.num_vertices(); ++v)
    if (vmap[v] == 0) ++r.component_folds[comp[v]];
  if (!equal && ncomp == 1) throw PreconditionError("unequal fibres on a connected source");
  r.fold = equal ? fibre[0] : -1;
}

} // namespace

CoverCheck verify_cover(const LabeledGraph& source, const BaseGraph& base, const std::vector<int>& vertex_map)
{
  check_map_shape(source, base, vertex_map);
  CoverCheck r;
  for (int v = 0; v < source.num_vertices(); ++v)
    if (auto viol = check_vertex(source, base, vertex_map, v, false)) {
      r.violation = viol;
      return r;
    }
  fill_folds(r, source, base, vertex_map);
  r.ok = true;
  return r;
}

CoverCheck verify_cover(const CoverProjection& p) { return verify_cover(p.source, base_graph(p.base), p.vertex_map); }

CoverCheck verify_semicover(const SemiCover& sc)
{
  const LabeledGraph& g = sc.embedding.graph();
  const BaseGraph& base = base_graph(sc.base);
  check_map_shape(g, base, sc.vertex_map);
  auto outer = sc.embedding.outer_vertex_mask();
  CoverCheck r;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (auto viol = check_vertex(g, base, sc.vertex_map, v, outer[v] != 0)) {
      if (!outer[v]) viol->reason = "interior vertex: " + viol->reason;
      else viol->reason = "outer-face vertex: " + viol->reason;
      r.violation = viol;
      return r;
    }
  r.ok = true;
  return r;
}

std::vector<int> spanning_tree_edges(const BaseGraph& b)
{
  const LabeledGraph& g = b.graph;
  int root = b.vertex_of_label(0);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> tree;
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    std::vector<std::pair<int, int>> nb;
    for (int e : g.incident(v)) nb.push_back({g.edge(e).other(v), e});
    std::sort(nb.begin(), nb.end());
    for (auto [w, e] : nb)
      if (!seen[w]) {
        seen[w] = 1;
        tree.push_back(e);
        q.push(w);
      }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<int> cotree_edges(const BaseGraph& b)
{
  auto t = spanning_tree_edges(b);
  std::vector<int> out;
  for (int e = 0; e < b.graph.num_edges(); ++e)
    if (!std::binary_search(t.begin(), t.end(), e)) out.push_back(e);
  return out;
}

VoltageAssignment identity_voltage(BaseKind base, int n)
{
  VoltageAssignment v;
  v.base = base;
  v.n = n;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  v.perm.assign(base_graph(base).graph.num_edges(), id);
  v.normalized = true;
  return v;
}

void validate(const VoltageAssignment& v)
{
  if (v.n < 1) throw PreconditionError("fold must be positive");
  if (static_cast<int>(v.perm.size()) != base_graph(v.base).graph.num_edges())
    throw PreconditionError("voltage count differs from base edge count");
  for (const auto& p : v.perm) {
    if (static_cast<int>(p.size()) != v.n) throw PreconditionError("permutation of wrong size");
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < v.n; ++i)
      if (s[i] != i) throw PreconditionError("voltage is not a permutation");
  }
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b)
{
  std::vector<int> c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> inverse(const std::vector<int>& p)
{
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

VoltageAssignment normalize(const VoltageAssignment& v)
{
  validate(v);
  const BaseGraph& b = base_graph(v.base);
  const LabeledGraph& g = b.graph;
  int nv = g.num_vertices();
  std::vector<int> id(v.n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> phi(nv);
  int root = b.vertex_of_label(0);
  phi[root] = id;
  auto tree = spanning_tree_edges(b);
  // Tree edges in BFS discovery order: repeat until every vertex is reached.
  for (size_t done = 1; done < static_cast<size_t>(nv);) {
    for (int e : tree) {
      int u = g.edge(e).u, w = g.edge(e).v;
      if (!phi[u].empty() && phi[w].empty()) {
        phi[w] = compose(phi[u], inverse(v.perm[e]));
        ++done;
      } else if (phi[u].empty() && !phi[w].empty()) {
        phi[u] = compose(phi[w], v.perm[e]);
        ++done;
      }
    }
  }
  VoltageAssignment out = v;
  for (int e = 0; e < g.num_edges(); ++e)
    out.perm[e] = compose(compose(phi[g.edge(e).v], v.perm[e]), inverse(phi[g.edge(e).u]));
  out.normalized = true;
  return out;
}

DerivedCover derive(const VoltageAssignment& v)
{
  validate(v);
  const BaseGraph& b = base_graph(v.base);
  int nv = b.graph.num_vertices();
  std::vector<Label> labels;
  std::vector<int> vmap;
  for (int i = 0; i < v.n; ++i)
    for (int u = 0; u < nv; ++u) {
      labels.push_back(b.graph.label(u));
      vmap.push_back(u);
    }
  LabeledGraph g(labels);
  for (int e = 0; e < b.graph.num_edges(); ++e)
    for (int i = 0; i < v.n; ++i) g.add_edge(i * nv + b.graph.edge(e).u, v.perm[e][i] * nv + b.graph.edge(e).v);
  return {g, CoverProjection{g, v.base, vmap}};
}

bool is_connected_cover(const VoltageAssignment& v)
{
  VoltageAssignment nv = normalize(v);
  std::vector<char> seen(v.n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int count = 1;
  auto cot = cotree_edges(base_graph(v.base));
  while (!st.empty()) {
    int s = st.back();
    st.pop_back();
    for (int e : cot) {
      int t = nv.perm[e][s];
      if (!seen[t]) {
        seen[t] = 1;
        ++count;
        st.push_back(t);
      }
    }
  }
  return count == v.n;
}

std::vector<int> net_voltage(const VoltageAssignment& v, const std::vector<int>& walk)
{
  const LabeledGraph& g = base_graph(v.base).graph;
  std::vector<int> p(v.n);
  std::iota(p.begin(), p.end(), 0);
  int k = static_cast<int>(walk.size());
  for (int i = 0; i < k; ++i) {
    int a = walk[i], c = walk[(i + 1) % k];
    int e = -1;
    for (int x : g.incident(a))
      if (g.edge(x).other(a) == c) e = x;
    if (e < 0) throw PreconditionError("walk uses a non-edge of the base");
    const auto& s = g.edge(e).u == a ? v.perm[e] : inverse(v.perm[e]);
    p = compose(s, p);
  }
  return p;
}

std::vector<int> permutation_cycle_lengths(const std::vector<int>& p)
{
  std::vector<char> seen(p.size(), 0);
  std::vector<int> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) seen[j] = 1, ++len;
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph lift_subgraph(const CoverProjection& p, const BaseSubgraph& s)
{
  const LabeledGraph& bg = base_graph(p.base).graph;
  std::vector<char> bv(bg.num_vertices(), 0), be(bg.num_edges(), 0);
  for (int v : s.vertices) {
    if (v < 0 || v >= bg.num_vertices()) throw PreconditionError("subgraph vertex not in base");
    bv[v] = 1;
  }
  for (int e : s.edges) {
    if (e < 0 || e >= bg.num_edges() || !bv[bg.edge(e).u] || !bv[bg.edge(e).v])
      throw PreconditionError("subgraph edge not contained in base subgraph");
    be[e] = 1;
  }
  // Base edge between two base vertices (base graphs are simple).
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < bg.num_edges(); ++e) {
    edge_id[{bg.edge(e).u, bg.edge(e).v}] = e;
    edge_id[{bg.edge(e).v, bg.edge(e).u}] = e;
  }
  Subgraph out;
  const LabeledGraph& g = p.source;
  out.from_parent.assign(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bv[p.vertex_map[v]]) {
      out.from_parent[v] = out.graph.add_vertex(g.label(v));
      out.to_parent.push_back(v);
    }
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = g.edge(e).u, c = g.edge(e).v;
    auto it = edge_id.find({p.vertex_map[a], p.vertex_map[c]});
    if (it == edge_id.end() || !be[it->second] || out.from_parent[a] < 0 || out.from_parent[c] < 0) continue;
    out.graph.add_edge(out.from_parent[a], out.from_parent[c]);
    out.edge_to_parent.push_back(e);
  }
  return out;
}

BaseSubgraph base_subgraph_on_labels(BaseKind base, const std::vector<Label>& labels)
{
  const BaseGraph& b = base_graph(base);
  BaseSubgraph s;
  std::vector<char> in(b.graph.num_vertices(), 0);
  for (Label l : labels) {
    int v = b.vertex_of_label(l);
    if (v < 0) throw PreconditionError("label not in base");
    if (!in[v]) s.vertices.push_back(v);
    in[v] = 1;
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  for (int e = 0; e < b.graph.num_edges(); ++e)
    if (in[b.graph.edge(e).u] && in[b.graph.edge(e).v]) s.edges.push_back(e);
  return s;
}

} // namespace pcover
