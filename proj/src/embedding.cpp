#include "pcover/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pcover {

bool FaceWalk::is_simple_cycle() const
{
  std::set<int> s(vertices.begin(), vertices.end());
  return s.size() == vertices.size();
}

PlaneEmbedding::PlaneEmbedding(LabeledGraph g, std::vector<std::vector<int>> rotation, int outer_face)
    : g_(std::move(g)), rot_(std::move(rotation))
{
  int n = g_.num_vertices(), m = g_.num_edges();
  if (static_cast<int>(rot_.size()) != n) throw PreconditionError("rotation size differs from vertex count");
  if (!is_connected(g_)) throw PreconditionError("embedding of a disconnected graph");
  succ_.assign(2 * m, -1);
  pred_.assign(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> a = rot_[v], b = g_.incident(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw PreconditionError("malformed rotation at vertex " + std::to_string(v));
    int d = static_cast<int>(rot_[v].size());
    for (int i = 0; i < d; ++i) {
      int x = g_.dart_from(rot_[v][i], v), y = g_.dart_from(rot_[v][(i + 1) % d], v);
      succ_[x] = y;
      pred_[y] = x;
    }
  }
  face_of_.assign(2 * m, -1);
  if (m == 0) {
    faces_.push_back({});
  }
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (face_of_[d0] != -1) continue;
    FaceWalk f;
    int id = static_cast<int>(faces_.size());
    int d = d0;
    do {
      face_of_[d] = id;
      f.darts.push_back(d);
      f.vertices.push_back(g_.tail(d));
      f.labels.push_back(g_.label(g_.tail(d)));
      d = next_in_face(d);
    } while (d != d0);
    faces_.push_back(std::move(f));
  }
  if (n - m + num_faces() != 2)
    throw PreconditionError("rotation system is not spherical (V-E+F=" + std::to_string(n - m + num_faces()) + ")");
  set_outer_face(outer_face);
}

void PlaneEmbedding::set_outer_face(int f)
{
  if (f < 0 || f >= num_faces()) throw PreconditionError("unknown face id " + std::to_string(f));
  outer_ = f;
}

std::vector<char> PlaneEmbedding::outer_vertex_mask() const
{
  std::vector<char> mask(g_.num_vertices(), 0);
  if (g_.num_edges() == 0) {
    std::fill(mask.begin(), mask.end(), 1);
    return mask;
  }
  for (int v : faces_[outer_].vertices) mask[v] = 1;
  return mask;
}

const std::vector<FaceWalk>& faces(const PlaneEmbedding& e) { return e.faces(); }

PlaneEmbedding reembed_with_outer(const PlaneEmbedding& e, int face_id)
{
  PlaneEmbedding out = e;
  out.set_outer_face(face_id);
  return out;
}

PlaneEmbedding mirror(const PlaneEmbedding& e)
{
  auto rot = e.rotation();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  PlaneEmbedding m(e.graph(), rot, 0);
  // The outer face keeps its edge set; its darts are reversed.
  if (e.graph().num_edges() > 0) {
    int d = LabeledGraph::rev(e.face(e.outer_face()).darts[0]);
    m.set_outer_face(m.face_of_dart(d));
  }
  return m;
}

SubEmbedding restrict_embedding(const PlaneEmbedding& e, const std::vector<int>& vertices)
{
  const LabeledGraph& g = e.graph();
  Subgraph sub = induced_subgraph(g, vertices);
  std::vector<int> edge_from_parent(g.num_edges(), -1);
  for (int i = 0; i < static_cast<int>(sub.edge_to_parent.size()); ++i) edge_from_parent[sub.edge_to_parent[i]] = i;
  std::vector<std::vector<int>> rot(sub.graph.num_vertices());
  for (int i = 0; i < sub.graph.num_vertices(); ++i)
    for (int pe : e.rotation()[sub.to_parent[i]])
      if (edge_from_parent[pe] != -1) rot[i].push_back(edge_from_parent[pe]);
  PlaneEmbedding emb(sub.graph, rot, 0);
  int outer = 0;
  if (g.num_edges() > 0)
    for (int d : e.face(e.outer_face()).darts) {
      int se = edge_from_parent[LabeledGraph::edge_of(d)];
      if (se == -1) continue;
      // Orientation of the dart is preserved by the vertex map.
      int sd = sub.graph.dart_from(se, sub.from_parent[g.tail(d)]);
      outer = emb.face_of_dart(sd);
      break;
    }
  emb.set_outer_face(outer);
  return {std::move(emb), std::move(sub)};
}

long for_each_plane_embedding(const LabeledGraph& g, const EnumerateOptions& opt,
                              const std::function<bool(const PlaneEmbedding&)>& fn)
{
  int n = g.num_vertices(), m = g.num_edges();
  if (!is_connected(g)) throw PreconditionError("embedding enumeration of a disconnected graph");
  std::vector<std::vector<int>> rot(n);
  std::vector<int> succ(2 * m, -1);
  // Triangles checked once their largest vertex is assigned.
  std::vector<std::vector<std::array<int, 3>>> tri_at(n);
  if (opt.require_facial_triangles && !g.has_parallel_edges())
    for (auto t : triangles(g)) tri_at[t[2]].push_back(t);
  int mirror_vertex = -1;
  if (opt.skip_mirrors)
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= 3) {
        mirror_vertex = v;
        break;
      }
  auto edge_between = [&](int a, int b) {
    for (int e : g.incident(a))
      if (g.edge(e).other(a) == b) return e;
    return -1;
  };
  auto facial = [&](const std::array<int, 3>& t) {
    int a = t[0], b = t[1], c = t[2];
    int ab = g.dart_from(edge_between(a, b), a), bc = g.dart_from(edge_between(b, c), b),
        ca = g.dart_from(edge_between(c, a), c);
    using G = LabeledGraph;
    bool fwd = succ[G::rev(ab)] == bc && succ[G::rev(bc)] == ca && succ[G::rev(ca)] == ab;
    bool bwd = succ[ab] == G::rev(ca) && succ[bc] == G::rev(ab) && succ[ca] == G::rev(bc);
    return fwd || bwd;
  };
  long visited = 0;
  bool stop = false;
  std::function<void(int)> rec = [&](int v) {
    if (stop) return;
    if (v == n) {
      std::vector<char> seen(2 * m, 0);
      int f = 0;
      for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[d0]) continue;
        ++f;
        for (int d = d0; !seen[d]; d = succ[LabeledGraph::rev(d)]) seen[d] = 1;
      }
      if (m == 0) f = 1;
      if (n - m + f != 2) return;
      ++visited;
      if (!fn(PlaneEmbedding(g, rot, 0))) stop = true;
      return;
    }
    std::vector<int> inc = g.incident(v);
    int d = static_cast<int>(inc.size());
    std::vector<int> perm(d > 0 ? d - 1 : 0);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      if (d >= 3 && v == mirror_vertex && perm.front() > perm.back()) continue;
      rot[v].clear();
      if (d > 0) rot[v].push_back(inc[0]);
      for (int i : perm) rot[v].push_back(inc[i]);
      for (int i = 0; i < d; ++i) succ[g.dart_from(rot[v][i], v)] = g.dart_from(rot[v][(i + 1) % d], v);
      bool ok = true;
      for (const auto& t : tri_at[v])
        if (!facial(t)) {
          ok = false;
          break;
        }
      if (ok) rec(v + 1);
      if (stop) return;
      // Cyclic orders of degree <= 2 are unique.
      if (d <= 2) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return visited;
}

bool is_peripheral(const LabeledGraph& g, const std::vector<int>& c)
{
  int k = static_cast<int>(c.size());
  std::set<int> cs(c.begin(), c.end());
  if (k < 3 || static_cast<int>(cs.size()) != k) throw PreconditionError("not a cycle");
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % k])) throw PreconditionError("not a cycle");
  // Chordless: the cycle's vertices induce exactly the k cycle edges.
  int induced = 0;
  for (const Edge& e : g.edges())
    if (cs.count(e.u) && cs.count(e.v)) ++induced;
  if (induced != k) return false;
  std::vector<int> rest;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!cs.count(v)) rest.push_back(v);
  if (rest.empty()) return true;
  return is_connected(induced_subgraph(g, rest).graph);
}

EulerFold euler_fold_from_one_long_face(long m)
{
  if (m < 2) throw PreconditionError("m must be at least 2");
  // F = 11n+2 faces, of which F-1 triangles: 3(F-1) + 3m = 2E = 36n.
  // 33n + 3 + 3m = 36n, so 3n = 3m + 3.
  long rhs = 3 * m + 3;
  if (rhs % 3 != 0) throw Error("no integral fold");
  long n = rhs / 3;
  EulerFold r{n, 7 * n, 18 * n, 11 * n + 2, 11 * n + 1};
  if (r.vertices - r.edges + r.faces != 2 || 3 * r.triangular_faces + 3 * m != 2 * r.edges)
    throw Error("inconsistent Euler count");
  return r;
}

} // namespace pcover
