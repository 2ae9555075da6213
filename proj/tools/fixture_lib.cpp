#include "fixture_lib.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cstdlib>

#include "pcover/structure.hpp"

namespace pcover::fixtures {

PlaneEmbedding necklace(int beads, Label k, const std::vector<char>& flips)
{
  if (beads < 1) throw PreconditionError("necklace needs a bead");
  Label i = k == 1 ? 2 : 1, j = 6 - i - k;
  LabeledGraph g;
  struct B {
    int vk, left, right, v0;
    int kl, kr, lr, l0, r0, up;
  };
  std::vector<B> bs(beads);
  for (int t = 0; t < beads; ++t) {
    B& b = bs[t];
    b.vk = g.add_vertex(-k);
    bool flip = t < static_cast<int>(flips.size()) && flips[t];
    b.left = g.add_vertex(flip ? -j : -i);
    b.right = g.add_vertex(flip ? -i : -j);
    b.v0 = g.add_vertex(0);
    b.kl = g.add_edge(b.vk, b.left);
    b.kr = g.add_edge(b.vk, b.right);
    b.lr = g.add_edge(b.left, b.right);
    b.l0 = g.add_edge(b.left, b.v0);
    b.r0 = g.add_edge(b.right, b.v0);
  }
  for (int t = 0; t < beads; ++t) bs[t].up = g.add_edge(bs[t].v0, bs[(t + 1) % beads].vk);
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int t = 0; t < beads; ++t) {
    const B& b = bs[t];
    int down = bs[(t + beads - 1) % beads].up;
    rot[b.vk] = {down, b.kr, b.kl};
    rot[b.v0] = {b.up, b.l0, b.r0};
    rot[b.left] = {b.kl, b.lr, b.l0};
    rot[b.right] = {b.r0, b.lr, b.kr};
  }
  PlaneEmbedding e(g, rot, 0);
  for (int f = 0; f < e.num_faces(); ++f)
    if (e.face(f).length() > 3) {
      e.set_outer_face(f);
      break;
    }
  return e;
}

QuotientGraph theta(const std::vector<int>& beads)
{
  LabeledGraph g({0, -1});
  for (int x = 0; x < 3; ++x) g.add_edge(0, 1);
  QuotientGraph q = make_quotient(PlaneEmbedding(g, {{0, 1, 2}, {0, 2, 1}}, 0));
  q.beads = beads;
  return q;
}

namespace {

int digon_face(const PlaneEmbedding& e, int e1, int e2)
{
  for (int f = 0; f < e.num_faces(); ++f) {
    const auto& d = e.face(f).darts;
    if (d.size() != 2) continue;
    int a = LabeledGraph::edge_of(d[0]), b = LabeledGraph::edge_of(d[1]);
    if ((a == e1 && b == e2) || (a == e2 && b == e1)) return f;
  }
  throw Error("digon not found");
}

} // namespace

QuotientGraph fig8(const std::vector<int>& beads)
{
  // B1 = 0, W1 = 1, B2 = 2, W2 = 3.
  LabeledGraph g({0, -1, 0, -1});
  g.add_edge(0, 1);  // e1
  g.add_edge(0, 1);  // e2
  g.add_edge(2, 1);  // e3
  g.add_edge(2, 3);  // e4
  g.add_edge(2, 3);  // e5
  g.add_edge(0, 3);  // e6
  PlaneEmbedding e(g, {{1, 0, 5}, {2, 0, 1}, {3, 4, 2}, {3, 5, 4}}, 0);
  e.set_outer_face(digon_face(e, 3, 4));
  QuotientGraph q = make_quotient(std::move(e));
  q.beads = beads;
  return q;
}

QuotientGraph cube(const std::vector<int>& beads)
{
  // Q3 with the even-weight corners as 0-vertices.
  LabeledGraph g;
  std::vector<int> id(8);
  for (int x = 0; x < 8; ++x) id[x] = g.add_vertex(__builtin_popcount(x) % 2 == 0 ? 0 : -1);
  for (int x = 0; x < 8; ++x)
    for (int b = 0; b < 3; ++b)
      if (x < (x ^ (1 << b))) g.add_edge(id[x], id[x ^ (1 << b)]);
  std::optional<PlaneEmbedding> first;
  for_each_plane_embedding(g, {}, [&](const PlaneEmbedding& e) {
    first = e;
    return false;
  });
  QuotientGraph q = make_quotient(std::move(*first));
  q.beads = beads;
  return q;
}

namespace {

struct Corner {
  int v;
  int pred;  // outgoing dart at v just before the corner; -1 for a saturated vertex
};

struct State {
  LabeledGraph g;
  std::vector<std::vector<int>> rot;  // outgoing darts
  std::vector<std::array<char, 4>> have;
  std::vector<char> full;
  std::vector<std::vector<Corner>> regions;
};

bool needs(const State& s, int v, Label c)
{
  return s.full[v] && labels_adjacent(s.g.label(v), c) && !s.have[v][c];
}

void insert_after(std::vector<int>& r, int pred, int d)
{
  auto it = std::find(r.begin(), r.end(), pred);
  r.insert(it + 1, d);
}

struct Placement {
  int region, p0;
  std::array<Label, 3> labs;
  std::array<int, 9> off;
};

State apply(const State& s, const Placement& pl)
{
  State n = s;
  const auto& R = s.regions[pl.region];
  int L = static_cast<int>(R.size());
  std::array<int, 3> tv{};
  for (int t = 0; t < 3; ++t) {
    tv[t] = n.g.add_vertex(pl.labs[t]);
    n.rot.emplace_back();
    n.have.push_back({0, 0, 0, 0});
    n.full.push_back(1);
  }
  std::array<int, 3> side{};
  for (int t = 0; t < 3; ++t) side[t] = n.g.add_edge(tv[t], tv[(t + 1) % 3]);
  struct Att {
    int slot, ci, e, key, h_dart, pred_before;
  };
  std::array<Att, 9> at{};
  for (int sl = 0; sl < 9; ++sl) {
    int t = sl / 3;
    int ci = (pl.p0 + pl.off[sl]) % L;
    int v = R[ci].v;
    int e = n.g.add_edge(v, tv[t]);
    n.have[v][pl.labs[t]] = 1;
    at[sl] = {sl, ci, e, (sl == 8 && pl.off[8] == L) ? -1 : sl, n.g.dart_from(e, v), -1};
  }
  for (int t = 0; t < 3; ++t) {
    auto& r = n.rot[tv[t]];
    r.push_back(n.g.dart_from(side[t], tv[t]));
    for (int sl = 3 * t + 2; sl >= 3 * t; --sl) r.push_back(n.g.dart_from(at[sl].e, tv[t]));
    r.push_back(n.g.dart_from(side[(t + 2) % 3], tv[t]));
  }
  std::vector<int> order(9);
  for (int sl = 0; sl < 9; ++sl) order[sl] = sl;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return at[a].ci != at[b].ci ? at[a].ci < at[b].ci : at[a].key < at[b].key;
  });
  for (std::size_t x = 0; x < order.size(); ++x) {
    Att& a = at[order[x]];
    bool first = x == 0 || at[order[x - 1]].ci != a.ci;
    a.pred_before = first ? R[a.ci].pred : at[order[x - 1]].h_dart;
    insert_after(n.rot[R[a.ci].v], a.pred_before, a.h_dart);
  }
  std::vector<std::vector<Corner>> sub;
  for (int sl = 0; sl < 9; ++sl) {
    int nx = (sl + 1) % 9;
    int dist = sl < 8 ? pl.off[nx] - pl.off[sl] : L - pl.off[8];
    std::vector<Corner> reg{{R[at[sl].ci].v, at[sl].h_dart}};
    for (int k = 1; k < dist; ++k) reg.push_back(R[(at[sl].ci + k) % L]);
    if (dist >= 1) reg.push_back({R[at[nx].ci].v, at[nx].pred_before});
    reg.push_back({tv[nx / 3], -1});
    if (nx / 3 != sl / 3) reg.push_back({tv[sl / 3], -1});
    sub.push_back(std::move(reg));
  }
  n.regions.erase(n.regions.begin() + pl.region);
  for (auto& r : sub) n.regions.push_back(std::move(r));
  return n;
}

struct Filler {
  const FillOptions& opt;
  int outer_dart;
  long nodes = 0;
  std::optional<SemiCover> result;

  // Enumerates placements in region r giving label c to vertex v.
  void placements(const State& s, int r, int v, Label c, const std::function<bool(const Placement&)>& fn)
  {
    const auto& R = s.regions[r];
    int L = static_cast<int>(R.size());
    for (int orient = 0; orient < 2; ++orient) {
      std::array<Label, 3> labs = orient == 0 ? std::array<Label, 3>{1, 2, 3} : std::array<Label, 3>{1, 3, 2};
      for (int p0 = 0; p0 < L; ++p0) {
        Placement pl{r, p0, labs, {}};
        // Labels granted so far, to keep every vertex injective.
        std::vector<std::pair<int, Label>> granted;
        std::array<std::array<char, 4>, 3> used{};
        bool hit = false;
        std::function<bool(int)> slot = [&](int sl) -> bool {
          if (sl == 9) return !hit || fn(pl);
          int t = sl / 3;
          int lo = sl == 0 ? 0 : pl.off[sl - 1] + (sl % 3 != 0 ? 1 : 0);
          int hi = sl == 0 ? 0 : (sl == 8 ? L : L - 1);
          for (int o = lo; o <= hi; ++o) {
            const Corner& cn = R[(p0 + o) % L];
            if (cn.pred == -1) continue;
            Label l = s.g.label(cn.v);
            Label tl = labs[t];
            if (!labels_adjacent(l, tl) || l > 0) continue;
            int slot_in_block = l == 0 ? 0 : -l;
            if (used[t][slot_in_block]) continue;
            if (s.have[cn.v][tl]) continue;
            bool dup = false;
            for (auto [gv, gl] : granted)
              if (gv == cn.v && gl == tl) dup = true;
            if (dup) continue;
            pl.off[sl] = o;
            used[t][slot_in_block] = 1;
            granted.push_back({cn.v, tl});
            bool was = hit;
            if (cn.v == v && tl == c) hit = true;
            bool stop = !slot(sl + 1);
            hit = was;
            granted.pop_back();
            used[t][slot_in_block] = 0;
            if (stop) return false;
          }
          return true;
        };
        if (!slot(0)) return;
      }
    }
  }

  // false stops the search.
  bool dfs(const State& s)
  {
    if (++nodes > opt.node_limit) return false;
    int best = -1, best_count = 1 << 30;
    Label best_label = 0;
    for (int v = 0; v < s.g.num_vertices(); ++v) {
      if (!s.full[v] || s.g.label(v) > 0) continue;
      Label miss = 0;
      for (Label c = 1; c <= 3 && !miss; ++c)
        if (needs(s, v, c)) miss = c;
      if (!miss) continue;
      int count = 0;
      for (const auto& R : s.regions)
        for (const auto& cn : R)
          if (cn.v == v && cn.pred != -1) {
            ++count;
            break;
          }
      if (count < best_count) {
        best = v;
        best_count = count;
        best_label = miss;
      }
    }
    if (best == -1) return finish(s);
    if (best_count == 0) return true;
    for (int r = 0; r < static_cast<int>(s.regions.size()); ++r) {
      bool contains = false;
      for (const auto& cn : s.regions[r])
        if (cn.v == best && cn.pred != -1) contains = true;
      if (!contains) continue;
      bool go_on = true;
      placements(s, r, best, best_label, [&](const Placement& pl) {
        go_on = dfs(apply(s, pl));
        return go_on;
      });
      if (!go_on) return false;
    }
    return true;
  }

  bool finish(const State& s)
  {
    std::vector<std::vector<int>> rot(s.g.num_vertices());
    for (int v = 0; v < s.g.num_vertices(); ++v)
      for (int d : s.rot[v]) rot[v].push_back(LabeledGraph::edge_of(d));
    PlaneEmbedding e(s.g, rot, 0);
    e.set_outer_face(e.face_of_dart(outer_dart));
    SemiCover sc{e, BaseKind::K1222, map_by_label(s.g, BaseKind::K1222)};
    if (!verify_semicover(sc).ok) throw Error("filler produced an invalid semi-cover");
    if (opt.accept && !opt.accept(sc)) return true;
    result = std::move(sc);
    return false;
  }
};

} // namespace

std::optional<SemiCover> fill_semicover(const PlaneEmbedding& h, const FillOptions& opt)
{
  State s;
  s.g = h.graph();
  int n = s.g.num_vertices();
  s.rot.resize(n);
  for (int v = 0; v < n; ++v)
    for (int e : h.rotation()[v]) s.rot[v].push_back(s.g.dart_from(e, v));
  s.have.assign(n, {0, 0, 0, 0});
  auto outer = h.outer_vertex_mask();
  s.full.assign(n, 0);
  for (int v = 0; v < n; ++v) s.full[v] = !outer[v];
  for (int f = 0; f < h.num_faces(); ++f) {
    if (f == h.outer_face() || h.face(f).length() == 3) continue;
    const auto& d = h.face(f).darts;
    std::vector<Corner> R;
    for (std::size_t t = 0; t < d.size(); ++t) {
      int prev = d[(t + d.size() - 1) % d.size()];
      R.push_back({s.g.tail(d[t]), LabeledGraph::rev(prev)});
    }
    s.regions.push_back(std::move(R));
  }
  Filler fl{opt, h.face(h.outer_face()).darts.at(0)};
  fl.dfs(s);
  return fl.result;
}

} // namespace pcover::fixtures

namespace pcover::fixtures {

namespace {

Json doc(const std::string& kind, const std::string& note, Json body)
{
  Json j;
  j["format_version"] = 1;
  j["kind"] = kind;
  j["note"] = note;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json semicover_doc(const SemiCover& sc, const std::string& note)
{
  return doc("semicover", note, semicover_to_json(sc));
}

Json h_doc(const PlaneEmbedding& h, const std::string& note)
{
  return doc("h_embedding", note, {{"embedding", embedding_to_json(h)}});
}

// Exactly one type-2 trapezium, its triangle supported on a string of its face
// with a bottom attachment labelled 0, and at most max_traps trapezia overall.
bool fig3_shape(const SemiCover& sc, std::size_t max_traps)
{
  auto traps = detect_trapezia(sc);
  if (traps.size() > max_traps) return false;
  auto two = std::find_if(traps.begin(), traps.end(), [](const Trapezium& t) { return t.type == 2; });
  if (two == traps.end() || std::count_if(traps.begin(), traps.end(), [](const Trapezium& t) { return t.type == 2; }) != 1)
    return false;
  StructureReport r = check_lemma_Hfaces(sc);
  HInSemiCover loc = locate_H(sc, r.to_parent);
  int face = loc.face_of_vertex[two->vj];
  for (const auto& s : r.strings) {
    if (s.cyclic) continue;
    SupportForest f;
    try {
      f = triangles_supported_on_string(sc, loc, s, r.beads, face);
    } catch (const PreconditionError&) {
      continue;
    }
    for (const auto& t : f.triangles)
      if (t.supported && t.bottom_label == 0 &&
          std::find(t.vertices.begin(), t.vertices.end(), two->vj) != t.vertices.end())
        return true;
  }
  return false;
}

// The H of a theta quotient with the type -1 string removed, so F1 merges into
// the outer face and only F2 is interior.
PlaneEmbedding theta_without_l(const std::vector<int>& beads, const std::vector<std::vector<char>>& flips)
{
  PlaneEmbedding h = inflate_Hpp(theta(beads), {1, 3, 2}, flips);
  auto bl = detect_beads(h);
  std::vector<char> drop(h.graph().num_vertices(), 0);
  for (const auto& s : detect_strings(h.graph(), bl))
    if (s.type == -1)
      for (int b : s.beads) drop[bl[b].v0] = drop[bl[b].vi] = drop[bl[b].vj] = drop[bl[b].vk] = 1;
  std::vector<int> keep;
  for (int v = 0; v < h.graph().num_vertices(); ++v)
    if (!drop[v]) keep.push_back(v);
  return restrict_embedding(h, keep).embedding;
}

} // namespace

std::vector<std::pair<std::string, Json>> build_all()
{
  std::vector<std::pair<std::string, Json>> out;

  // No orientation of the four beads admits a triangle fill of the inner
  // face, so the necklace ships as a bare H.
  out.push_back({"necklace4_h", h_doc(necklace(4, 3, {0, 1, 0, 1}), "cyclic string of four beads of type -3")});

  // Strings l, s, r of types -1, -3, -2 from the 0-vertex to the triangle.
  std::vector<int> theta_colour{1, 3, 2};
  PlaneEmbedding fig4 = inflate_Hpp(theta({1, 1, 1}), theta_colour);
  out.push_back({"fig4_h", h_doc(fig4, "three one-bead strings joining a 0-vertex to a triangle")});

  // F2 of the fig4 shape with s and r carrying two beads each. The fill with
  // fewest extra trapezia wins; a lone type-2 trapezium does not occur.
  std::optional<SemiCover> fig3;
  for (std::size_t max_traps = 1; max_traps <= 3 && !fig3; ++max_traps)
    for (int mask = 0; mask < 16 && !fig3; ++mask) {
      std::vector<std::vector<char>> flips{{0}, {char(mask & 1), char(mask >> 1 & 1)}, {char(mask >> 2 & 1), char(mask >> 3 & 1)}};
      FillOptions fo;
      fo.accept = [max_traps](const SemiCover& sc) { return fig3_shape(sc, max_traps); };
      fig3 = fill_semicover(theta_without_l({1, 2, 2}, flips), fo);
    }
  if (!fig3) throw Error("no fill with a supported type-2 trapezium");
  out.push_back({"fig3_semicover", semicover_doc(*fig3, "face F2 of the three-string H filled; one type-2 trapezium, bottom attachment 0")});

  out.push_back({"fig8_hpp", doc("quotient", "a = 2 quotient needing four beads", quotient_to_json(fig8()))});
  auto colour8 = *three_edge_colouring(fig8().embedding.graph());
  out.push_back({"fig8_h6", h_doc(inflate_Hpp(fig8({1, 1, 1, 1, 0, 0}), colour8), "four beads on the a = 2 quotient")});
  out.push_back({"fig8_h_shared_bead",
                 h_doc(inflate_Hpp(fig8({1, 1, 0, 1, 0, 0}), colour8), "two internal 9-faces sharing one bead")});

  QuotientGraph q3 = cube();
  auto colour3 = *three_edge_colouring(q3.embedding.graph());
  out.push_back({"cube_h_hexagons", h_doc(inflate_Hpp(q3, colour3), "bead-free cube quotient: internal hexagons")});
  // Two internal faces sharing one edge carry two beads on it.
  int shared_edge = -1;
  for (int x = 0; x < q3.embedding.graph().num_edges() && shared_edge == -1; ++x) {
    int f1 = q3.embedding.face_of_dart(2 * x), f2 = q3.embedding.face_of_dart(2 * x + 1);
    if (f1 != q3.embedding.outer_face() && f2 != q3.embedding.outer_face()) shared_edge = x;
  }
  std::vector<int> b5(12, 0);
  b5[shared_edge] = 2;
  out.push_back({"fig5_h", h_doc(inflate_Hpp(cube(b5), colour3), "two internal 12-faces sharing a string of two beads")});

  // Files for cover verification.
  LabeledGraph k = base_graph(BaseKind::K1222).graph;
  std::vector<int> id(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v) id[v] = v;
  out.push_back({"k1222_graph", graph_to_json(k)});
  out.push_back({"k1222_identity_map", Json{{"map", id}}});
  VoltageAssignment cubev = identity_voltage(BaseKind::K4neg, 2);
  for (int e : cotree_edges(base_graph(BaseKind::K4neg))) cubev.perm[e] = {1, 0};
  DerivedCover dc = derive(cubev);
  out.push_back({"cube_voltage", voltage_to_json(cubev)});
  out.push_back({"cube_graph", graph_to_json(dc.graph)});
  out.push_back({"cube_map", Json{{"map", dc.projection.vertex_map}}});
  std::vector<int> broken = dc.projection.vertex_map;
  broken[1] = broken[0];
  out.push_back({"cube_broken_map", Json{{"map", broken}}});

  out.push_back({"spec_k1222_n2", Json{{"base", "K1222"}, {"n", 2}, {"filters", {"connected", "planar"}}, {"dedup", true}}});
  out.push_back({"spec_k4_n2", Json{{"base", "K4neg"}, {"n", 2}, {"filters", {"connected", "planar"}}, {"dedup", true}}});
  out.push_back({"spec_k4_h_le_5", Json{{"mode", "h-candidates"}, {"h_max", 5}}});
  return out;
}

} // namespace pcover::fixtures
