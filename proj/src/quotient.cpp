#include "pcover/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pcover/canonical.hpp"
#include "pcover/structure.hpp"

namespace pcover {

FaceCensus QuotientGraph::census() const
{
  FaceCensus c;
  for (const auto& f : embedding.faces()) ++c[f.length()];
  return c;
}

int QuotientGraph::face_beads(int f) const
{
  int s = 0;
  for (int d : embedding.face(f).darts) s += beads.at(LabeledGraph::edge_of(d));
  return s;
}

int QuotientGraph::h_face_length(int f) const { return 3 * (embedding.face(f).length() / 2 + face_beads(f)); }

int QuotientGraph::total_beads() const
{
  int s = 0;
  for (int b : beads) s += b;
  return s;
}

QuotientGraph make_quotient(PlaneEmbedding e)
{
  QuotientGraph q;
  int m = e.graph().num_edges();
  for (int v = 0; v < e.graph().num_vertices(); ++v)
    if (e.graph().label(v) == 0) ++q.a;
  q.embedding = std::move(e);
  q.beads.assign(m, 0);
  q.string_type.assign(m, 0);
  return q;
}

QuotientGraph quotient_Hpp(const PlaneEmbedding& h)
{
  const LabeledGraph& g = h.graph();
  int n = g.num_vertices();
  for (int v = 0; v < n; ++v)
    if (!is_k4_label(g.label(v)) || g.degree(v) != 3) throw PreconditionError("H must be a cubic cover of K4");

  // Triangles, each with the vertex order of its face walk.
  std::map<std::array<int, 3>, int> facial;
  for (int f = 0; f < h.num_faces(); ++f)
    if (h.face(f).length() == 3) {
      auto vs = h.face(f).vertices;
      std::array<int, 3> key{vs[0], vs[1], vs[2]};
      std::sort(key.begin(), key.end());
      facial.emplace(key, f);
    }
  std::vector<int> tri_of(n, -1);
  std::vector<std::vector<int>> tri_walk;
  for (const auto& c : find_cycles_covering(g, {-1, -2, -3})) {
    if (c.kind != LiftComponent::Cycle || c.length() != 3)
      throw PreconditionError("a (-1,-2,-3) lift that is not a triangle");
    std::array<int, 3> key{c.vertices[0], c.vertices[1], c.vertices[2]};
    std::sort(key.begin(), key.end());
    auto it = facial.find(key);
    if (it == facial.end()) throw PreconditionError("a (-1,-2,-3) triangle that is not a face");
    for (int v : key) tri_of[v] = static_cast<int>(tri_walk.size());
    tri_walk.push_back(h.face(it->second).vertices);
  }
  auto beads = detect_beads(g);
  std::vector<int> bead_of(n, -1);
  for (int b = 0; b < static_cast<int>(beads.size()); ++b)
    for (int v : {beads[b].v0, beads[b].vi, beads[b].vj, beads[b].vk}) bead_of[v] = b;

  // Nodes ordered by their least H vertex.
  std::vector<int> node_of(n, -1);
  std::vector<std::vector<int>> node_ports;  // H darts leaving the node, in rotation order
  std::vector<Label> node_label;
  std::vector<int> tri_node(tri_walk.size(), -1);
  for (int v = 0; v < n; ++v) {
    if (bead_of[v] != -1 || node_of[v] != -1) continue;
    int id = static_cast<int>(node_ports.size());
    if (g.label(v) == 0) {
      node_of[v] = id;
      std::vector<int> ports;
      for (int e : h.rotation()[v]) ports.push_back(g.dart_from(e, v));
      node_ports.push_back(ports);
      node_label.push_back(0);
    } else {
      const auto& w = tri_walk[tri_of[v]];
      std::vector<int> ports;
      for (int i = 2; i >= 0; --i) {
        node_of[w[i]] = id;
        for (int e : g.incident(w[i])) {
          int x = g.edge(e).other(w[i]);
          if (tri_of[x] != tri_of[w[i]]) ports.push_back(g.dart_from(e, w[i]));
        }
      }
      node_ports.push_back(ports);
      node_label.push_back(-1);
    }
  }
  if (node_ports.empty()) throw PreconditionError("necklace: H'' is undefined");

  LabeledGraph q(node_label);
  std::vector<int> edge_of_port(2 * g.num_edges(), -1);
  std::vector<int> bead_count;
  std::vector<Label> types;
  auto exit_dart = [&](int v, std::initializer_list<int> inside) {
    for (int e : g.incident(v)) {
      int x = g.edge(e).other(v);
      if (std::find(inside.begin(), inside.end(), x) == inside.end()) return g.dart_from(e, v);
    }
    throw Error("bead vertex without an outside edge");
  };
  for (int u = 0; u < static_cast<int>(node_ports.size()); ++u)
    for (int pd : node_ports[u]) {
      if (edge_of_port[pd] != -1) continue;
      int d = pd, count = 0;
      Label type = 0;
      while (node_of[g.head(d)] == -1) {
        int w = g.head(d);
        const Bead& b = beads.at(bead_of[w]);
        type = b.type;
        ++count;
        if (w == b.vk) d = exit_dart(b.v0, {b.vi, b.vj});
        else if (w == b.v0) d = exit_dart(b.vk, {b.vi, b.vj});
        else throw Error("string entered a bead at an inner vertex");
      }
      int v = node_of[g.head(d)];
      int e = node_label[u] == 0 ? q.add_edge(u, v) : q.add_edge(v, u);
      edge_of_port[pd] = e;
      edge_of_port[LabeledGraph::rev(d)] = e;
      bead_count.push_back(count);
      types.push_back(type);
    }
  std::vector<std::vector<int>> rot(node_ports.size());
  for (int u = 0; u < static_cast<int>(node_ports.size()); ++u)
    for (int pd : node_ports[u]) rot[u].push_back(edge_of_port[pd]);

  int outer = 0;
  PlaneEmbedding qe(q, rot, 0);
  for (int d : h.face(h.outer_face()).darts)
    if (edge_of_port[d] != -1 && node_of[g.tail(d)] != -1) {
      int e = edge_of_port[d];
      outer = qe.face_of_dart(q.dart_from(e, node_of[g.tail(d)]));
      break;
    }
  qe.set_outer_face(outer);
  QuotientGraph out = make_quotient(std::move(qe));
  out.beads = bead_count;
  out.string_type = types;
  return out;
}

std::optional<std::vector<int>> three_edge_colouring(const LabeledGraph& g)
{
  int m = g.num_edges();
  std::vector<int> col(m, 0);
  std::function<bool(int)> go = [&](int e) {
    if (e == m) return true;
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (int w : {g.edge(e).u, g.edge(e).v})
        for (int f : g.incident(w))
          if (f != e && col[f] == c) ok = false;
      if (!ok) continue;
      col[e] = c;
      if (go(e + 1)) return true;
      col[e] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return col;
}

PlaneEmbedding inflate_Hpp(const QuotientGraph& q, const std::vector<int>& colour,
                           const std::vector<std::vector<char>>& flips)
{
  const PlaneEmbedding& qe = q.embedding;
  const LabeledGraph& qg = qe.graph();
  int qn = qg.num_vertices(), qm = qg.num_edges();
  if (static_cast<int>(colour.size()) != qm) throw PreconditionError("colouring size mismatch");
  LabeledGraph h;
  std::vector<std::vector<int>> rot;
  auto vertex = [&](Label l) {
    rot.emplace_back();
    return h.add_vertex(l);
  };
  std::vector<int> zero(qn, -1);
  std::vector<std::vector<int>> corner(qn);  // triangle vertex per rotation slot
  for (int u = 0; u < qn; ++u) {
    const auto& r = qe.rotation()[u];
    if (r.size() != 3) throw PreconditionError("quotient must be cubic");
    if (qg.label(u) == 0) zero[u] = vertex(0);
    else
      for (int e : r) corner[u].push_back(vertex(-colour.at(e)));
  }
  auto slot = [&](int u, int e) {
    const auto& r = qe.rotation()[u];
    return static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
  };
  // H edge at each end of each quotient edge.
  std::vector<int> port_edge(2 * qm, -1);
  struct BeadEdges {
    int vk, left, right, v0, down, up, kl, kr, lr, l0, r0;
  };
  std::vector<BeadEdges> bead_list;
  for (int e = 0; e < qm; ++e) {
    int z = qg.edge(e).u, t = qg.edge(e).v;
    if (qg.label(z) != 0) std::swap(z, t);
    if (qg.label(z) != 0 || qg.label(t) == 0) throw PreconditionError("quotient must be bipartite");
    int c = colour[e];
    Label i = c == 1 ? 2 : 1, j = 6 - c - i;
    int prev = zero[z];
    int prev_edge = -1;
    for (int b = 0; b < q.beads.at(e); ++b) {
      BeadEdges be{};
      be.vk = vertex(-c);
      int vi = vertex(-i), vj = vertex(-j);
      bool flip = e < static_cast<int>(flips.size()) && b < static_cast<int>(flips[e].size()) && flips[e][b];
      be.left = flip ? vj : vi;
      be.right = flip ? vi : vj;
      be.v0 = vertex(0);
      be.down = h.add_edge(prev, be.vk);
      if (prev_edge == -1) port_edge[qg.dart_from(e, z)] = be.down;
      else bead_list.back().up = be.down;
      be.kl = h.add_edge(be.vk, be.left);
      be.kr = h.add_edge(be.vk, be.right);
      be.lr = h.add_edge(be.left, be.right);
      be.l0 = h.add_edge(be.left, be.v0);
      be.r0 = h.add_edge(be.right, be.v0);
      bead_list.push_back(be);
      prev = be.v0;
      prev_edge = be.down;
    }
    int last = h.add_edge(prev, corner[t][slot(t, e)]);
    if (prev_edge == -1) port_edge[qg.dart_from(e, z)] = last;
    else bead_list.back().up = last;
    port_edge[qg.dart_from(e, t)] = last;
  }
  for (const auto& b : bead_list) {
    rot[b.vk] = {b.down, b.kr, b.kl};
    rot[b.v0] = {b.up, b.l0, b.r0};
    rot[b.left] = {b.kl, b.lr, b.l0};
    rot[b.right] = {b.r0, b.lr, b.kr};
  }
  for (int u = 0; u < qn; ++u) {
    const auto& r = qe.rotation()[u];
    if (qg.label(u) == 0) {
      for (int e : r) rot[zero[u]].push_back(port_edge[qg.dart_from(e, u)]);
      continue;
    }
    std::array<int, 3> side{};
    for (int s = 0; s < 3; ++s) side[s] = h.add_edge(corner[u][s], corner[u][(s + 1) % 3]);
    for (int s = 0; s < 3; ++s)
      rot[corner[u][s]] = {port_edge[qg.dart_from(r[s], u)], side[s], side[(s + 2) % 3]};
  }
  PlaneEmbedding out(h, rot, 0);
  int d = qe.face(qe.outer_face()).darts.at(0);
  int pe = port_edge[d];
  int tail = qg.tail(d);
  int hv = qg.label(tail) == 0 ? zero[tail] : corner[tail][slot(tail, LabeledGraph::edge_of(d))];
  out.set_outer_face(out.face_of_dart(h.dart_from(pe, hv)));
  return out;
}

std::vector<int> canonical_map_code(const PlaneEmbedding& e)
{
  const LabeledGraph& g = e.graph();
  int n = g.num_vertices(), dn = 2 * g.num_edges();
  std::vector<int> best;
  for (int root = 0; root < dn; ++root)
    for (int orient = 0; orient < 2; ++orient) {
      auto step = [&](int d) { return orient == 0 ? e.succ(d) : e.pred(d); };
      std::vector<int> num(n, -1), start(n, -1), order;
      num[g.tail(root)] = 0;
      start[g.tail(root)] = root;
      order.push_back(g.tail(root));
      std::vector<int> code;
      bool worse = false;
      for (std::size_t k = 0; k < order.size() && !worse; ++k) {
        int v = order[k];
        code.push_back(g.label(v));
        code.push_back(g.degree(v));
        int d = start[v];
        for (int s = 0; s < g.degree(v); ++s, d = step(d)) {
          int w = g.head(d);
          if (num[w] == -1) {
            num[w] = static_cast<int>(order.size());
            start[w] = LabeledGraph::rev(d);
            order.push_back(w);
          }
          int pos = 0;
          for (int x = start[w]; x != LabeledGraph::rev(d); x = step(x)) ++pos;
          code.push_back(num[w]);
          code.push_back(pos);
        }
        if (!best.empty()) {
          std::size_t len = std::min(code.size(), best.size());
          int cmp = 0;
          for (std::size_t i = 0; i < len && cmp == 0; ++i)
            cmp = code[i] < best[i] ? -1 : (code[i] > best[i] ? 1 : 0);
          if (cmp > 0) worse = true;
        }
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  return best;
}

std::vector<QuotientGraph> enumerate_Hpp(int a_max, const HppOptions& opt)
{
  if (a_max > 4) throw PreconditionError("enumerate_Hpp supports a <= 4");
  std::vector<QuotientGraph> out;
  for (int a = 1; a <= a_max; ++a) {
    if (a == 1 && opt.exclude_theta) continue;
    std::set<std::string> graphs;
    std::vector<std::vector<int>> mat(a, std::vector<int>(a, 0));
    std::vector<int> colsum(a, 0);
    std::vector<LabeledGraph> found;
    std::function<void(int, int, int)> fill = [&](int r, int c, int rowsum) {
      if (r == a) {
        LabeledGraph g;
        for (int i = 0; i < a; ++i) g.add_vertex(0);
        for (int i = 0; i < a; ++i) g.add_vertex(-1);
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < a; ++j)
            for (int k = 0; k < mat[i][j]; ++k) g.add_edge(i, a + j);
        if (!is_connected(g)) return;
        if (graphs.insert(canonical_form(g)).second) found.push_back(g);
        return;
      }
      if (c == a) {
        if (rowsum == 3) fill(r + 1, 0, 0);
        return;
      }
      for (int x = 0; x + rowsum <= 3 && x + colsum[c] <= 3; ++x) {
        if (c == a - 1 && x + rowsum != 3) continue;
        if (r == a - 1 && x + colsum[c] != 3) continue;
        mat[r][c] = x;
        colsum[c] += x;
        fill(r, c + 1, rowsum + x);
        colsum[c] -= x;
        mat[r][c] = 0;
      }
    };
    fill(0, 0, 0);
    for (const auto& g : found) {
      std::set<std::vector<int>> maps;
      std::vector<PlaneEmbedding> embs;
      for_each_plane_embedding(g, {}, [&](const PlaneEmbedding& e) {
        if (maps.insert(canonical_map_code(e)).second) embs.push_back(e);
        return true;
      });
      for (auto& e : embs) out.push_back(make_quotient(std::move(e)));
    }
  }
  return out;
}

std::vector<BeadDemand> bead_demands(const QuotientGraph& q)
{
  std::vector<BeadDemand> d;
  const auto& e = q.embedding;
  for (int f = 0; f < e.num_faces(); ++f) {
    int len = e.face(f).length();
    bool outer = f == e.outer_face();
    int need = 0;
    if (len == 2) need = outer ? 1 : 2;
    else if (len == 4 && !outer) need = 1;
    if (need > 0) d.push_back({f, need});
  }
  return d;
}

MinBeadsResult min_beads(const QuotientGraph& q)
{
  const PlaneEmbedding& e = q.embedding;
  int m = e.graph().num_edges(), nf = e.num_faces();
  auto demands = bead_demands(q);
  int cap = m;
  for (const auto& d : demands) cap += d.demand;

  // Pairs of distinct internal faces with the edges they share.
  struct Pair {
    int f1, f2;
    std::vector<int> edges;
  };
  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (int x = 0; x < m; ++x) {
    int f1 = e.face_of_dart(2 * x), f2 = e.face_of_dart(2 * x + 1);
    if (f1 == f2 || f1 == e.outer_face() || f2 == e.outer_face()) continue;
    shared[{std::min(f1, f2), std::max(f1, f2)}].push_back(x);
  }
  std::vector<Pair> pairs;
  for (auto& [k, v] : shared) pairs.push_back({k.first, k.second, v});
  std::vector<long> fired(pairs.size(), 0);

  MinBeadsResult res;
  std::vector<int> b(m, 0);
  auto check = [&]() {
    ++res.placements_examined;
    std::vector<int> beta(nf, 0);
    for (int f = 0; f < nf; ++f)
      for (int d : e.face(f).darts) beta[f] += b[LabeledGraph::edge_of(d)];
    for (const auto& d : demands)
      if (beta[d.face] < d.demand) return false;
    bool ok = true;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      int s = 0;
      for (int x : pairs[p].edges) s += b[x];
      int l1 = 3 * (e.face(pairs[p].f1).length() / 2 + beta[pairs[p].f1]);
      int l2 = 3 * (e.face(pairs[p].f2).length() / 2 + beta[pairs[p].f2]);
      if (s > 0 && bead_sharing_fires(l1, l2, s)) {
        ++fired[p];
        ok = false;
      }
    }
    return ok;
  };
  std::function<bool(int, int)> place = [&](int x, int left) {
    if (x == m - 1 || m == 0) {
      if (m > 0) b[x] = left;
      else if (left > 0) return false;
      bool ok = check();
      if (m > 0 && !ok) b[x] = 0;
      return ok;
    }
    for (int c = left; c >= 0; --c) {
      b[x] = c;
      if (place(x + 1, left - c)) return true;
    }
    b[x] = 0;
    return false;
  };
  for (int total = 0; total <= cap; ++total)
    if (place(0, total)) {
      res.feasible = true;
      res.beads = total;
      res.placement = b;
      break;
    }
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (fired[p] > 0) res.fired.push_back({pairs[p].f1, pairs[p].f2, fired[p]});
  return res;
}

Json quotient_to_json(const QuotientGraph& q)
{
  Json j;
  j["embedding"] = embedding_to_json(q.embedding);
  j["beads"] = q.beads;
  j["string_type"] = q.string_type;
  j["a"] = q.a;
  Json census = Json::object();
  for (auto [len, c] : q.census()) census[std::to_string(len)] = c;
  j["census"] = census;
  Json faces = Json::array();
  for (int f = 0; f < q.embedding.num_faces(); ++f)
    faces.push_back({{"face", f},
                     {"length", q.embedding.face(f).length()},
                     {"beads", q.face_beads(f)},
                     {"h_length", q.h_face_length(f)},
                     {"outer", f == q.embedding.outer_face()}});
  j["faces"] = faces;
  j["eq_beads_holds"] = check_eq_beads(q.census());
  return j;
}

QuotientGraph quotient_from_json(const Json& j)
{
  try {
    QuotientGraph q = make_quotient(embedding_from_json(j.at("embedding")));
    if (j.contains("beads")) q.beads = j.at("beads").get<std::vector<int>>();
    if (j.contains("string_type")) q.string_type = j.at("string_type").get<std::vector<Label>>();
    if (static_cast<int>(q.beads.size()) != q.embedding.graph().num_edges() ||
        q.string_type.size() != q.beads.size())
      throw InputError("bead annotation does not match the edge count");
    return q;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("quotient: ") + ex.what());
  }
}

Json min_beads_to_json(const MinBeadsResult& r)
{
  Json j;
  j["feasible"] = r.feasible;
  if (r.feasible) {
    j["beads"] = r.beads;
    j["placement"] = r.placement;
  }
  Json fired = Json::array();
  for (const auto& p : r.fired) fired.push_back({{"faces", {p.f1, p.f2}}, {"rejected_placements", p.placements}});
  j["fired_pairs"] = fired;
  j["placements_examined"] = r.placements_examined;
  return j;
}

} // namespace pcover
