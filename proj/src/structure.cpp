#include "pcover/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pcover {

FacePattern face_label_pattern(const std::vector<Label>& labels)
{
  FacePattern p;
  int len = static_cast<int>(labels.size());
  for (int i = 0; i < len; ++i)
    if (!is_k4_label(labels[i]))
      throw PreconditionError("face label " + label_name(labels[i]) + " outside {0,-1,-2,-3}");
  if (len == 3) {
    p.kind = FacePattern::Triangle;
    p.m = 1;
    return p;
  }
  int z = -1;
  for (int i = 0; i < len && z == -1; ++i)
    if (labels[i] == 0) z = i;
  if (z == -1) {
    p.mismatch_position = 0;
    return p;
  }
  for (int i = 0; i < len; ++i) {
    int at = (z + i) % len;
    if ((labels[at] == 0) != (i % 3 == 0)) {
      p.mismatch_position = at;
      return p;
    }
  }
  if (len % 3 != 0) {
    // The sequence closes up with two zeros too close together.
    p.mismatch_position = z;
    return p;
  }
  p.kind = FacePattern::Pattern;
  p.m = len / 3;
  for (int i = 0; i < p.m; ++i)
    p.pairs.emplace_back(labels[(z + 3 * i + 1) % len], labels[(z + 3 * i + 2) % len]);
  return p;
}

FacePattern face_label_pattern(const FaceWalk& f) { return face_label_pattern(f.labels); }

namespace {

// The unique neighbour of v outside `excl`, or -1 if there is not exactly one.
int other_neighbor(const LabeledGraph& g, int v, std::initializer_list<int> excl)
{
  int found = -1;
  for (int e : g.incident(v)) {
    int w = g.edge(e).other(v);
    if (std::find(excl.begin(), excl.end(), w) != excl.end()) continue;
    if (found != -1) return -1;
    found = w;
  }
  return found;
}

bool single_edge(const LabeledGraph& g, int u, int v) { return g.multiplicity(u, v) == 1; }

} // namespace

std::vector<Bead> detect_beads(const LabeledGraph& g)
{
  std::vector<Bead> out;
  for (int v0 = 0; v0 < g.num_vertices(); ++v0) {
    if (g.label(v0) != 0) continue;
    std::vector<int> nb = g.neighbors(v0);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        int x = nb[a], y = nb[b];
        if (g.degree(x) != 3 || g.degree(y) != 3) continue;
        if (!single_edge(g, v0, x) || !single_edge(g, v0, y) || !single_edge(g, x, y)) continue;
        int kx = other_neighbor(g, x, {v0, y}), ky = other_neighbor(g, y, {v0, x});
        if (kx == -1 || kx != ky || kx == v0) continue;
        if (!single_edge(g, x, kx) || !single_edge(g, y, kx) || g.adjacent(v0, kx)) continue;
        if (g.label(x) < g.label(y)) std::swap(x, y);
        out.push_back({v0, x, y, kx, g.label(kx)});
      }
  }
  return out;
}

std::vector<Bead> detect_beads(const PlaneEmbedding& h) { return detect_beads(h.graph()); }

std::vector<StringDesc> detect_strings(const LabeledGraph& g, const std::vector<Bead>& beads)
{
  int nb = static_cast<int>(beads.size());
  std::vector<int> by_vk(g.num_vertices(), -1);
  for (int b = 0; b < nb; ++b) by_vk[beads[b].vk] = b;
  std::vector<int> up(nb, -1), down(nb, -1), next(nb, -1), prev(nb, -1);
  for (int b = 0; b < nb; ++b) {
    const Bead& x = beads[b];
    up[b] = other_neighbor(g, x.v0, {x.vi, x.vj});
    down[b] = other_neighbor(g, x.vk, {x.vi, x.vj});
    if (up[b] != -1 && by_vk[up[b]] != -1 && by_vk[up[b]] != b) next[b] = by_vk[up[b]];
  }
  for (int b = 0; b < nb; ++b)
    if (next[b] != -1) prev[next[b]] = b;
  std::vector<StringDesc> out;
  std::vector<char> seen(nb, 0);
  auto chain = [&](int start, bool cyclic) {
    StringDesc s;
    s.type = beads[start].type;
    s.cyclic = cyclic;
    for (int b = start; b != -1 && !seen[b]; b = next[b]) {
      seen[b] = 1;
      s.beads.push_back(b);
    }
    if (!cyclic) {
      s.bottom = down[s.beads.front()];
      s.top = up[s.beads.back()];
    }
    out.push_back(std::move(s));
  };
  for (int b = 0; b < nb; ++b)
    if (prev[b] == -1) chain(b, false);
  for (int b = 0; b < nb; ++b)
    if (!seen[b]) chain(b, true);
  return out;
}

std::vector<StringDesc> detect_strings(const PlaneEmbedding& h)
{
  return detect_strings(h.graph(), detect_beads(h.graph()));
}

bool is_necklace(const LabeledGraph& g)
{
  auto beads = detect_beads(g);
  if (beads.empty() || 4 * static_cast<int>(beads.size()) != g.num_vertices()) return false;
  auto strings = detect_strings(g, beads);
  return strings.size() == 1 && strings[0].cyclic;
}

bool is_necklace(const PlaneEmbedding& h) { return is_necklace(h.graph()); }

std::vector<Trapezium> detect_trapezia(const LabeledGraph& g)
{
  std::vector<Trapezium> out;
  auto neighbor_labelled = [&](int v, Label l) {
    for (int w : g.neighbors(v))
      if (g.label(w) == l) return w;
    return -1;
  };
  for (auto t : triangles(g)) {
    std::array<int, 4> by_label{-1, -1, -1, -1};
    for (int v : t)
      if (g.label(v) > 0) by_label[g.label(v)] = v;
    if (by_label[1] == -1 || by_label[2] == -1 || by_label[3] == -1) continue;
    for (Label j = 1; j <= 3; ++j) {
      Label i = j == 1 ? 2 : 1;
      Label k = 6 - i - j;
      int vi = by_label[i], vj = by_label[j], vk = by_label[k];
      int nk = neighbor_labelled(vi, -k);
      int ni = neighbor_labelled(vk, -i);
      if (nk == -1 || ni == -1) continue;
      if (!g.adjacent(nk, vj) || !g.adjacent(ni, vj) || g.adjacent(nk, ni)) continue;
      out.push_back({vi, vj, vk, nk, ni, j});
    }
  }
  return out;
}

std::vector<Trapezium> detect_trapezia(const SemiCover& sc) { return detect_trapezia(sc.embedding.graph()); }

std::vector<std::vector<int>> k4_lift_components(const LabeledGraph& g)
{
  std::vector<int> vs;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (is_k4_label(g.label(v))) vs.push_back(v);
  Subgraph s = induced_subgraph(g, vs);
  int count = 0;
  auto comp = component_ids(s.graph, &count);
  std::vector<std::vector<int>> out(count);
  for (int i = 0; i < s.graph.num_vertices(); ++i) out[comp[i]].push_back(s.to_parent[i]);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Face of sub.embedding containing each parent vertex outside the subgraph.
std::vector<int> locate_outside(const PlaneEmbedding& parent, const SubEmbedding& sub)
{
  const LabeledGraph& g = parent.graph();
  std::vector<int> face(g.num_vertices(), -1);
  std::vector<int> edge_from_parent(g.num_edges(), -1);
  for (int i = 0; i < static_cast<int>(sub.sub.edge_to_parent.size()); ++i)
    edge_from_parent[sub.sub.edge_to_parent[i]] = i;
  auto inside = [&](int v) { return sub.sub.from_parent[v] != -1; };
  for (int p = 0; p < g.num_vertices(); ++p) {
    if (!inside(p)) continue;
    for (int e : g.incident(p)) {
      int x = g.edge(e).other(p);
      if (inside(x) || face[x] != -1) continue;
      int d = g.dart_from(e, p);
      int guard = 0;
      do {
        d = parent.pred(d);
        if (++guard > 2 * g.num_edges()) throw Error("rotation walk did not close");
      } while (edge_from_parent[LabeledGraph::edge_of(d)] == -1);
      int sd = sub.embedding.graph().dart_from(edge_from_parent[LabeledGraph::edge_of(d)], sub.sub.from_parent[p]);
      int f = sub.embedding.face_of_dart(sub.embedding.succ(sd));
      std::deque<int> q{x};
      face[x] = f;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
          if (!inside(w) && face[w] == -1) {
            face[w] = f;
            q.push_back(w);
          }
      }
    }
  }
  return face;
}

} // namespace

HInSemiCover locate_H(const SemiCover& sc, const std::vector<int>& h_vertices)
{
  HInSemiCover loc{restrict_embedding(sc.embedding, h_vertices), {}};
  loc.face_of_vertex = locate_outside(sc.embedding, loc.h);
  return loc;
}

namespace {

std::vector<std::array<int, 3>> positive_triangles(const LabeledGraph& g)
{
  std::vector<std::array<int, 3>> out;
  for (auto t : triangles(g)) {
    std::array<int, 3> s{};
    bool ok = true;
    for (int v : t) {
      Label l = g.label(v);
      if (l <= 0 || s[l - 1] != 0) {
        ok = false;
        break;
      }
      s[l - 1] = v + 1;
    }
    if (ok) out.push_back({s[0] - 1, s[1] - 1, s[2] - 1});
  }
  return out;
}

int match_configuration(const SupportedTriangle& t, const LabeledGraph& g, const std::vector<int>& path, Label k)
{
  std::map<Label, std::set<int>> pos;
  for (const auto& a : t.attachments) pos[g.label(a.triangle_vertex)].insert(a.position);
  const auto& K = pos[k];
  if (K.size() != 3) return 0;
  int p_lo = *K.begin(), p_hi = p_lo + 3;
  if (K != std::set<int>{p_lo, p_lo + 1, p_hi}) return 0;
  if (p_lo < 2 || p_hi + 2 >= static_cast<int>(path.size())) return 0;
  Label j = -g.label(path[p_lo]);
  Label i = -g.label(path[p_hi]);
  if (i <= 0 || j <= 0 || i == j || i == k || j == k) return 0;
  const auto& I = pos[i];
  const auto& J = pos[j];
  bool top_i = I == std::set<int>{p_lo - 2, p_lo, p_hi + 2};
  bool bottom_i = I == std::set<int>{p_lo - 2, p_lo - 1, p_lo};
  bool top_j = J == std::set<int>{p_hi, p_hi + 1, p_hi + 2};
  bool bottom_j = J == std::set<int>{p_lo - 2, p_hi, p_hi + 2};
  if (top_i && top_j) return 1;
  if (bottom_i && top_j) return 2;
  if (bottom_i && bottom_j) return 3;
  return 0;
}

} // namespace

SupportForest triangles_supported_on_string(const SemiCover& sc, const HInSemiCover& loc, const StringDesc& s,
                                            const std::vector<Bead>& beads, int face)
{
  const LabeledGraph& g = sc.embedding.graph();
  const PlaneEmbedding& H = loc.h.embedding;
  const auto& to_parent = loc.h.sub.to_parent;
  if (face < 0 || face >= H.num_faces()) throw PreconditionError("no such face of H");
  std::set<int> fset(H.face(face).vertices.begin(), H.face(face).vertices.end());
  auto on_face = [&](int v) {
    if (!fset.count(v)) throw PreconditionError("face is not bounded by the string");
    return v;
  };
  SupportForest out;
  out.face = face;
  std::vector<int> hpath;
  if (!s.cyclic) hpath.push_back(on_face(s.bottom));
  for (int b : s.beads) {
    const Bead& x = beads.at(b);
    hpath.push_back(on_face(x.vk));
    hpath.push_back(fset.count(x.vi) ? x.vi : on_face(x.vj));
    hpath.push_back(on_face(x.v0));
  }
  if (!s.cyclic) hpath.push_back(on_face(s.top));
  std::vector<int> pos_of(g.num_vertices(), -1);
  for (int p = 0; p < static_cast<int>(hpath.size()); ++p) {
    out.string_path.push_back(to_parent[hpath[p]]);
    if (pos_of[to_parent[hpath[p]]] == -1) pos_of[to_parent[hpath[p]]] = p;
  }

  for (auto t : positive_triangles(g)) {
    if (loc.face_of_vertex[t[0]] != face) continue;
    SupportedTriangle st;
    st.vertices = t;
    st.supported = true;
    for (int v : t)
      for (int w : g.neighbors(v))
        if (is_k4_label(g.label(w)) && loc.h.sub.from_parent[w] != -1) {
          st.attachments.push_back({v, w, g.label(w), pos_of[w]});
          if (pos_of[w] == -1) st.supported = false;
        }
    if (st.attachments.empty()) st.supported = false;
    if (st.supported) {
      auto [lo, hi] = std::minmax_element(st.attachments.begin(), st.attachments.end(),
                                          [](const Attachment& a, const Attachment& b) { return a.position < b.position; });
      st.bottom = lo->position;
      st.top = hi->position;
      st.bottom_label = g.label(out.string_path[st.bottom]);
      st.top_label = g.label(out.string_path[st.top]);
    }
    out.triangles.push_back(std::move(st));
  }

  // Order: the region cut off by a triangle between its extreme attachments is
  // found on the embedding of H plus that triangle.
  int nt = static_cast<int>(out.triangles.size());
  for (int a = 0; a < nt; ++a) {
    SupportedTriangle& A = out.triangles[a];
    if (!A.supported) continue;
    std::vector<int> kv(to_parent.begin(), to_parent.end());
    kv.insert(kv.end(), A.vertices.begin(), A.vertices.end());
    SubEmbedding K = restrict_embedding(sc.embedding, kv);
    std::vector<int> kface = locate_outside(sc.embedding, K);
    std::vector<int> edge_from_parent(g.num_edges(), -1);
    for (int i = 0; i < static_cast<int>(K.sub.edge_to_parent.size()); ++i) edge_from_parent[K.sub.edge_to_parent[i]] = i;
    std::set<int> inner_faces, wrap_faces;
    for (int hd : H.face(face).darts) {
      int pe = loc.h.sub.edge_to_parent[LabeledGraph::edge_of(hd)];
      int pt = to_parent[H.graph().tail(hd)], ph = to_parent[H.graph().head(hd)];
      int kd = K.embedding.graph().dart_from(edge_from_parent[pe], K.sub.from_parent[pt]);
      int kf = K.embedding.face_of_dart(kd);
      int p1 = pos_of[pt], p2 = pos_of[ph];
      bool between = p1 != -1 && p2 != -1 && std::abs(p1 - p2) == 1 && std::min(p1, p2) >= A.bottom &&
                     std::max(p1, p2) <= A.top;
      (between ? inner_faces : wrap_faces).insert(kf);
    }
    for (int f : wrap_faces) inner_faces.erase(f);
    for (int b = 0; b < nt; ++b) {
      if (b == a || !out.triangles[b].supported) continue;
      if (inner_faces.count(kface[out.triangles[b].vertices[0]])) A.below.push_back(b);
    }
  }
  Label k = -s.type;
  for (auto& t : out.triangles) {
    if (!t.supported) continue;
    t.minimal = t.below.empty();
    if (t.minimal) t.configuration = match_configuration(t, g, out.string_path, k);
  }
  int lo = -1, hi = -1;
  for (auto& t : out.triangles)
    if (t.supported) {
      if (lo == -1 || t.bottom < lo) lo = t.bottom;
      if (hi == -1 || t.top > hi) hi = t.top;
    }
  if (lo != -1) {
    out.any_supported = true;
    out.set_bottom_label = g.label(out.string_path[lo]);
    out.set_top_label = g.label(out.string_path[hi]);
  }

  auto traps = detect_trapezia(g);
  for (int i = 0; i < static_cast<int>(traps.size()); ++i)
    if (loc.face_of_vertex[traps[i].vj] == face)
      out.trapezia.push_back({i, pos_of[traps[i].neg_k], pos_of[traps[i].neg_i]});
  return out;
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Pass: return "pass";
  case Verdict::Fail: return "fail";
  default: return "not evaluated";
  }
}

bool StructureReport::all_clauses_pass() const
{
  for (const auto& [c, r] : clauses)
    if (r.verdict == Verdict::Fail) return false;
  return true;
}

bool bead_sharing_fires(int len1, int len2, int shared, int* m_out)
{
  int m = (std::max(len1, len2) + 2) / 3;
  if (m_out) *m_out = m;
  return m >= 3 && shared >= m - 2;
}

ExclusionVerdict check_exclusions(const StructureReport& r)
{
  ExclusionVerdict x;
  std::size_t k = r.internal_nontriangular.size();
  x.no_room = k == 0;
  x.necklace = k == 1;
  x.two_faces = k == 2;
  for (const auto& s : r.shared_beads) {
    int m = 0;
    if (bead_sharing_fires(r.faces[s.f1].length, r.faces[s.f2].length, s.shared, &m))
      x.bead_sharing.push_back({s.f1, s.f2, m, s.shared});
  }
  return x;
}

} // namespace pcover
