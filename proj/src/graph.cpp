#include "pcover/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pcover {

LabeledGraph::LabeledGraph(std::vector<Label> labels, bool simple)
    : labels_(std::move(labels)), inc_(labels_.size()), simple_(simple)
{
  for (Label l : labels_)
    if (!valid_label(l)) throw PreconditionError("invalid vertex label " + std::to_string(l));
}

int LabeledGraph::add_vertex(Label l)
{
  if (!valid_label(l)) throw PreconditionError("invalid vertex label " + std::to_string(l));
  labels_.push_back(l);
  inc_.emplace_back();
  return num_vertices() - 1;
}

int LabeledGraph::add_edge(int u, int v)
{
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  if (simple_ && adjacent(u, v))
    throw PreconditionError("parallel edge " + std::to_string(u) + "-" + std::to_string(v) + " in simple graph");
  edges_.push_back({u, v});
  int e = num_edges() - 1;
  inc_[u].push_back(e);
  inc_[v].push_back(e);
  return e;
}

std::vector<int> LabeledGraph::neighbors(int v) const
{
  std::vector<int> out;
  for (int e : inc_.at(v)) out.push_back(edges_[e].other(v));
  return out;
}

int LabeledGraph::multiplicity(int u, int v) const
{
  const auto& a = inc_.at(u);
  const auto& b = inc_.at(v);
  const auto& s = a.size() <= b.size() ? a : b;
  int w = a.size() <= b.size() ? u : v;
  int t = w == u ? v : u;
  int c = 0;
  for (int e : s)
    if (edges_[e].other(w) == t) ++c;
  return c;
}

bool LabeledGraph::has_parallel_edges() const
{
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_)
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return true;
  return false;
}

bool LabeledGraph::label_consistent() const
{
  for (const Edge& e : edges_)
    if (!labels_adjacent(labels_[e.u], labels_[e.v])) return false;
  return true;
}

std::string to_string(BaseKind k) { return k == BaseKind::K1222 ? "K1222" : "K4neg"; }

BaseKind base_kind_from_string(const std::string& s)
{
  if (s == "K1222" || s == "k1222") return BaseKind::K1222;
  if (s == "K4neg" || s == "k4neg" || s == "K4") return BaseKind::K4neg;
  throw PreconditionError("unknown base '" + s + "'");
}

int BaseGraph::vertex_of_label(Label l) const
{
  for (int v = 0; v < graph.num_vertices(); ++v)
    if (graph.label(v) == l) return v;
  return -1;
}

BaseGraph make_base(BaseKind kind)
{
  std::vector<Label> labels = kind == BaseKind::K1222 ? std::vector<Label>{0, 1, -1, 2, -2, 3, -3}
                                                      : std::vector<Label>{0, -1, -2, -3};
  LabeledGraph g(labels, true);
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (labels_adjacent(labels[u], labels[v])) g.add_edge(u, v);
  return {kind, std::move(g)};
}

const BaseGraph& base_graph(BaseKind kind)
{
  static const BaseGraph k1222 = make_base(BaseKind::K1222);
  static const BaseGraph k4 = make_base(BaseKind::K4neg);
  return kind == BaseKind::K1222 ? k1222 : k4;
}

std::vector<int> component_ids(const LabeledGraph& g, int* count)
{
  int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const LabeledGraph& g)
{
  int c = 0;
  component_ids(g, &c);
  return c <= 1;
}

std::vector<int> articulation_points(const LabeledGraph& g, int removed)
{
  int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int e : g.incident(v)) {
      if (e == parent_edge) continue;
      int w = g.edge(e).other(v);
      if (w == removed) continue;
      if (disc[w] == -1) {
        ++children;
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (parent_edge != -1 && low[w] >= disc[v]) is_cut[v] = 1;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent_edge == -1 && children > 1) is_cut[v] = 1;
  };
  for (int s = 0; s < n; ++s)
    if (s != removed && disc[s] == -1) dfs(s, -1);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

int connectivity(const LabeledGraph& g)
{
  int n = g.num_vertices();
  if (n < 2) throw PreconditionError("connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;
  int cap = std::min(3, n - 1);
  if (cap <= 1) return cap;
  if (!articulation_points(g).empty()) return 1;
  if (cap == 2) return 2;
  for (int v = 0; v < n; ++v)
    if (!articulation_points(g, v).empty()) return 2;
  return cap;
}

Subgraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& vertices)
{
  Subgraph s;
  s.from_parent.assign(g.num_vertices(), -1);
  for (int v : vertices) {
    if (s.from_parent.at(v) != -1) continue;
    s.from_parent[v] = s.graph.add_vertex(g.label(v));
    s.to_parent.push_back(v);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = s.from_parent[g.edge(e).u], b = s.from_parent[g.edge(e).v];
    if (a != -1 && b != -1) {
      s.graph.add_edge(a, b);
      s.edge_to_parent.push_back(e);
    }
  }
  return s;
}

Subgraph edge_subgraph(const LabeledGraph& g, const std::vector<int>& edges)
{
  Subgraph s;
  s.from_parent.assign(g.num_vertices(), -1);
  auto vid = [&](int v) {
    if (s.from_parent[v] == -1) {
      s.from_parent[v] = s.graph.add_vertex(g.label(v));
      s.to_parent.push_back(v);
    }
    return s.from_parent[v];
  };
  for (int e : edges) {
    int a = vid(g.edge(e).u), b = vid(g.edge(e).v);
    s.graph.add_edge(a, b);
    s.edge_to_parent.push_back(e);
  }
  return s;
}

std::vector<LiftComponent> find_cycles_covering(const LabeledGraph& g, std::array<Label, 3> c)
{
  for (int i = 0; i < 3; ++i)
    if (!valid_label(c[i]) || !labels_adjacent(c[i], c[(i + 1) % 3]))
      throw PreconditionError("label triple is not a triangle of the base");
  auto on = [&](Label l) { return l == c[0] || l == c[1] || l == c[2]; };
  int n = g.num_vertices();
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (on(g.label(ed.u)) && on(g.label(ed.v))) {
      inc[ed.u].push_back(e);
      inc[ed.v].push_back(e);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<LiftComponent> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || inc[s].empty()) continue;
    std::vector<int> verts, stack{s};
    std::set<int> edges;
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int e : inc[v]) {
        edges.insert(e);
        int w = g.edge(e).other(v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    LiftComponent comp;
    int max_deg = 0, ones = 0;
    for (int v : verts) {
      int d = static_cast<int>(inc[v].size());
      max_deg = std::max(max_deg, d);
      if (d == 1) ++ones;
    }
    bool cycle = max_deg == 2 && ones == 0;
    bool path = max_deg <= 2 && ones == 2;
    comp.kind = cycle ? LiftComponent::Cycle : path ? LiftComponent::Path : LiftComponent::Other;
    if (comp.kind == LiftComponent::Other) {
      std::sort(verts.begin(), verts.end());
      comp.vertices = verts;
      comp.edges.assign(edges.begin(), edges.end());
    } else {
      int start = *std::min_element(verts.begin(), verts.end());
      if (path)
        for (int v : verts)
          if (inc[v].size() == 1) {
            start = v;
            break;
          }
      // Walk, leaving the start by its lowest edge id.
      int v = start, prev_e = -1;
      std::vector<int> inc_start = inc[start];
      std::sort(inc_start.begin(), inc_start.end());
      do {
        comp.vertices.push_back(v);
        int next_e = -1;
        if (prev_e == -1) {
          next_e = inc_start[0];
        } else {
          for (int e : inc[v])
            if (e != prev_e) next_e = e;
          if (inc[v].size() == 1) next_e = -1;
        }
        if (next_e == -1) break;
        comp.edges.push_back(next_e);
        v = g.edge(next_e).other(v);
        prev_e = next_e;
      } while (v != start);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::array<int, 3>> triangles(const LabeledGraph& g)
{
  std::vector<std::array<int, 3>> out;
  int n = g.num_vertices();
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v))
      if (w > v) nb[v].push_back(w);
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  for (int a = 0; a < n; ++a)
    for (size_t i = 0; i < nb[a].size(); ++i)
      for (size_t j = i + 1; j < nb[a].size(); ++j) {
        int b = nb[a][i], c = nb[a][j];
        if (std::binary_search(nb[b].begin(), nb[b].end(), c)) out.push_back({a, b, c});
      }
  return out;
}

} // namespace pcover
