#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcover/canonical.hpp"
#include "pcover/conditions.hpp"
#include "pcover/cover.hpp"
#include "pcover/io.hpp"
#include "pcover/planarity.hpp"

using namespace pcover;

namespace {

// Voltage on the base edge joining labels a and b.
int base_edge(BaseKind k, Label a, Label b)
{
  const auto& g = base_graph(k);
  int x = g.vertex_of_label(a), y = g.vertex_of_label(b);
  for (int e = 0; e < g.graph.num_edges(); ++e)
    if ((g.graph.edge(e).u == x && g.graph.edge(e).v == y) || (g.graph.edge(e).u == y && g.graph.edge(e).v == x)) return e;
  return -1;
}

VoltageAssignment cube_voltage()
{
  auto v = identity_voltage(BaseKind::K4neg, 2);
  for (int e : cotree_edges(base_graph(BaseKind::K4neg))) v.perm[e] = {1, 0};
  return v;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST_CASE("spanning tree of the bases")
{
  auto t = spanning_tree_edges(base_graph(BaseKind::K1222));
  CHECK(t.size() == 6);
  CHECK(cotree_edges(base_graph(BaseKind::K1222)).size() == 12);
  CHECK(cotree_edges(base_graph(BaseKind::K4neg)).size() == 3);
  for (int e : t) CHECK(base_graph(BaseKind::K1222).graph.label(base_graph(BaseKind::K1222).graph.edge(e).u) == 0);
}

TEST_CASE("verify_cover examples")
{
  const auto& k = base_graph(BaseKind::K1222);
  auto r = verify_cover(k.graph, k, {0, 1, 2, 3, 4, 5, 6});
  CHECK(r.ok);
  CHECK(r.fold == 1);
  auto d = derive(cube_voltage());
  auto c = verify_cover(d.projection);
  CHECK(c.ok);
  CHECK(c.fold == 2);
  CHECK(oracle::connectivity(d.graph) == 3);
  // Collapse the adjacent vertices 0 and 1 of the cube onto base vertex 0.
  auto m = d.projection.vertex_map;
  REQUIRE(d.graph.adjacent(0, 1));
  m[1] = 0;
  auto b = verify_cover(d.graph, base_graph(BaseKind::K4neg), m);
  CHECK_FALSE(b.ok);
  CHECK(b.violation->vertex == 0);
  CHECK_THROWS_AS(verify_cover(k.graph, k, {0, 0, 2, 3, 4, 5, 6}), PreconditionError);
}

TEST_CASE("derive and connectivity of covers")
{
  auto id = derive(identity_voltage(BaseKind::K4neg, 2));
  CHECK_FALSE(is_connected(id.graph));
  auto r = verify_cover(id.projection);
  CHECK(r.ok);
  CHECK(r.fold == 2);
  CHECK(r.component_folds == std::vector<int>{1, 1});
  CHECK_FALSE(is_connected_cover(identity_voltage(BaseKind::K4neg, 3)));
  auto cube = derive(cube_voltage());
  CHECK(is_connected(cube.graph));
  CHECK(is_planar(cube.graph));
  auto one = identity_voltage(BaseKind::K4neg, 2);
  one.perm[cotree_edges(base_graph(BaseKind::K4neg))[0]] = {1, 0};
  CHECK(is_connected_cover(one));
}

TEST_CASE("is_connected_cover agrees with component count of the derived graph")
{
  std::mt19937_64 rng(19);
  for (int it = 0; it < 1000; ++it) {
    BaseKind base = it % 2 ? BaseKind::K4neg : BaseKind::K1222;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto v = identity_voltage(base, n);
    for (auto& p : v.perm)
      if (rng() % 3 == 0) p = random_perm(rng, n);
    v.normalized = false;
    REQUIRE(is_connected_cover(v) == is_connected(derive(v).graph));
  }
}

TEST_CASE("normalization preserves the derived graph")
{
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto v = identity_voltage(BaseKind::K1222, n);
    for (auto& p : v.perm) p = random_perm(rng, n);
    auto w = normalize(v);
    for (int e : spanning_tree_edges(base_graph(BaseKind::K1222))) {
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      REQUIRE(w.perm[e] == id);
    }
    REQUIRE(canonical_form(derive(v).graph) == canonical_form(derive(w).graph));
  }
}

TEST_CASE("every normalized K4 voltage at n=2,3 derives a verified cover with lifted cycle lengths")
{
  const auto& b = base_graph(BaseKind::K4neg);
  auto cot = cotree_edges(b);
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    int k = static_cast<int>(perms.size());
    int visited = 0;
    for (int a = 0; a < k; ++a)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          auto v = identity_voltage(BaseKind::K4neg, n);
          v.perm[cot[0]] = perms[a], v.perm[cot[1]] = perms[c], v.perm[cot[2]] = perms[d];
          auto dc = derive(v);
          auto r = verify_cover(dc.projection);
          REQUIRE(r.ok);
          REQUIRE(r.fold == n);
          ++visited;
          for (auto t : base_triangles(BaseKind::K4neg)) {
            std::vector<int> walk;
            for (Label l : t) walk.push_back(b.vertex_of_label(l));
            std::vector<int> expect;
            for (int len : permutation_cycle_lengths(net_voltage(v, walk))) expect.push_back(3 * len);
            std::vector<int> got;
            for (const auto& comp : find_cycles_covering(dc.graph, t)) {
              REQUIRE(comp.kind == LiftComponent::Cycle);
              got.push_back(comp.length());
            }
            std::sort(got.begin(), got.end());
            REQUIRE(got == expect);
          }
        }
    CHECK(visited == (n == 2 ? 8 : 216));
  }
}

TEST_CASE("lift_subgraph")
{
  auto dc = derive(cube_voltage());
  BaseSubgraph all{{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}};
  auto whole = lift_subgraph(dc.projection, all);
  CHECK(whole.graph.num_vertices() == 8);
  CHECK(whole.graph.num_edges() == 12);
  // Triangle with identity net voltage: n disjoint triangles.
  auto id3 = derive(identity_voltage(BaseKind::K4neg, 3));
  auto tri = lift_subgraph(id3.projection, base_subgraph_on_labels(BaseKind::K4neg, {-1, -2, -3}));
  int comps = 0;
  component_ids(tri.graph, &comps);
  CHECK(comps == 3);
  CHECK(tri.graph.num_edges() == 9);
  // K4 on 0,-1,-2,-3 inside a K1222 double cover: a union of K4 covers.
  auto v = identity_voltage(BaseKind::K1222, 2);
  v.perm[cotree_edges(base_graph(BaseKind::K1222))[0]] = {1, 0};
  auto kc = derive(v);
  auto h = lift_subgraph(kc.projection, base_subgraph_on_labels(BaseKind::K1222, {0, -1, -2, -3}));
  CHECK(verify_cover(h.graph, base_graph(BaseKind::K4neg), map_by_label(h.graph, BaseKind::K4neg)).ok);
  CHECK_THROWS_AS(lift_subgraph(dc.projection, BaseSubgraph{{0, 1}, {5}}), PreconditionError);
}

TEST_CASE("semi-covers")
{
  auto dc = derive(cube_voltage());
  auto emb = *planarity(dc.graph).embedding;
  for (int f = 0; f < emb.num_faces(); ++f) {
    SemiCover sc{reembed_with_outer(emb, f), BaseKind::K4neg, dc.projection.vertex_map};
    CHECK(verify_semicover(sc).ok);
  }
  // A single bead: K4 minus the 0,-3 edge; every vertex is on the outer face.
  LabeledGraph bead({0, -1, -2, -3}, true);
  bead.add_edge(1, 3), bead.add_edge(3, 2), bead.add_edge(2, 1), bead.add_edge(1, 0), bead.add_edge(0, 2);
  auto be = *planarity(bead).embedding;
  for (int f = 0; f < be.num_faces(); ++f) {
    SemiCover sc{reembed_with_outer(be, f), BaseKind::K4neg, map_by_label(bead, BaseKind::K4neg)};
    bool all_outer = true;
    for (char c : sc.embedding.outer_vertex_mask()) all_outer = all_outer && c;
    CHECK(verify_semicover(sc).ok == all_outer);
    if (all_outer) CHECK_FALSE(verify_cover(bead, base_graph(BaseKind::K4neg), sc.vertex_map).ok);
  }
  // Interior vertex with two neighbours of equal label.
  LabeledGraph w({0, -1, -1, -2, -3, 0}, true);
  w.add_edge(0, 1), w.add_edge(0, 2), w.add_edge(0, 3), w.add_edge(1, 3), w.add_edge(2, 3), w.add_edge(1, 4), w.add_edge(2, 4),
      w.add_edge(4, 5), w.add_edge(3, 5);
  auto we = *planarity(w).embedding;
  int outer = -1;
  for (int f = 0; f < we.num_faces(); ++f) {
    auto m = we.face(f).vertices;
    if (std::find(m.begin(), m.end(), 0) == m.end()) outer = f;
  }
  REQUIRE(outer >= 0);
  SemiCover sc{reembed_with_outer(we, outer), BaseKind::K4neg, map_by_label(w, BaseKind::K4neg)};
  auto r = verify_semicover(sc);
  CHECK_FALSE(r.ok);
  CHECK(r.violation->vertex == 0);
}

TEST_CASE("conditions A-D")
{
  // The identity cover of K1222 has no plane embedding to check.
  CHECK_FALSE(is_planar(base_graph(BaseKind::K1222).graph));
  auto cube = derive(cube_voltage());
  auto e = *planarity(cube.graph).embedding;
  auto r = check_conditions_ABCD(e, cube.projection);
  CHECK(r.fold == 2);
  CHECK(r.triangular_faces == 0);
  // Transposition on the (-1,-2) edge only: the (-1,-2,-3) lift is a 6-cycle.
  auto v = identity_voltage(BaseKind::K4neg, 2);
  v.perm[base_edge(BaseKind::K4neg, -1, -2)] = {1, 0};
  auto dc = derive(v);
  int found = 0;
  for_each_plane_embedding(dc.graph, {}, [&](const PlaneEmbedding& pe) {
    auto c = check_conditions_ABCD(pe, dc.projection);
    bool hexagon = false;
    for (const auto& f : pe.faces()) {
      std::set<Label> ls(f.labels.begin(), f.labels.end());
      hexagon = hexagon || (f.length() == 6 && ls == std::set<Label>{-1, -2, -3});
    }
    if (hexagon) {
      ++found;
      CHECK_FALSE(c.d_no_long_facial_lift);
      CHECK(c.c_short_lifts_facial);
      CHECK(c.triangular_faces == 4);
    }
    return true;
  });
  CHECK(found >= 1);
  LabeledGraph other = base_graph(BaseKind::K4neg).graph;
  CHECK_THROWS_AS(check_conditions_ABCD(*planarity(other).embedding, dc.projection), PreconditionError);
}

TEST_CASE("JSON round trips")
{
  auto dc = derive(cube_voltage());
  auto j = graph_to_json(dc.graph);
  auto s = dump(j);
  CHECK(dump(graph_to_json(graph_from_json(Json::parse(s)))) == s);
  auto e = *planarity(dc.graph).embedding;
  auto es = dump(embedding_to_json(reembed_with_outer(e, 3)));
  auto e2 = embedding_from_json(Json::parse(es));
  CHECK(e2.outer_face() == 3);
  CHECK(dump(embedding_to_json(e2)) == es);
  auto vs = dump(voltage_to_json(cube_voltage()));
  CHECK(dump(voltage_to_json(voltage_from_json(Json::parse(vs)))) == vs);
  // Reversed orientation is read as the inverse permutation.
  Json rj = {{"base", "K4neg"}, {"n", 3}, {"edges", {{{"from", 2}, {"to", 1}, {"perm", {1, 2, 0}}}}}};
  auto rv = voltage_from_json(rj);
  CHECK(rv.perm[base_edge(BaseKind::K4neg, -1, -2)] == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[{"id":0,"label":9}],"edges":[]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[{"id":0,"label":0}],"edges":[[0,0]]})")), InputError);
  CHECK(to_dot(dc.graph).find("v0 -- ") != std::string::npos);
}
