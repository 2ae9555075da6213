#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcover/embedding.hpp"
#include "pcover/planarity.hpp"

using namespace pcover;

namespace {

LabeledGraph complete(int n)
{
  LabeledGraph g(std::vector<Label>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph octahedron()
{
  LabeledGraph g({1, -1, 2, -2, 3, -3}, true);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (labels_adjacent(g.label(u), g.label(v))) g.add_edge(u, v);
  return g;
}

LabeledGraph cube()
{
  LabeledGraph g({0, -1, -2, -3, 0, -1, -2, -3}, true);
  const auto& b = base_graph(BaseKind::K4neg).graph;
  for (const auto& e : b.edges()) {
    g.add_edge(e.u, 4 + e.v);
    g.add_edge(e.v, 4 + e.u);
  }
  return g;
}

std::multiset<int> face_lengths(const PlaneEmbedding& e)
{
  std::multiset<int> s;
  for (const auto& f : e.faces()) s.insert(f.length());
  return s;
}

void check_euler(const PlaneEmbedding& e)
{
  int sum = 0;
  for (const auto& f : e.faces()) sum += f.length();
  CHECK(sum == 2 * e.graph().num_edges());
  CHECK(e.graph().num_vertices() - e.graph().num_edges() + e.num_faces() == 2);
}

} // namespace

TEST_CASE("planarity examples")
{
  auto r = planarity(base_graph(BaseKind::K4neg).graph);
  REQUIRE(r.planar);
  CHECK(face_lengths(*r.embedding) == std::multiset<int>{3, 3, 3, 3});
  auto k5 = planarity(complete(5));
  CHECK_FALSE(k5.planar);
  CHECK(k5.witness.kind == KuratowskiWitness::K5);
  auto k = planarity(base_graph(BaseKind::K1222).graph);
  CHECK_FALSE(k.planar);
  CHECK(k.witness.kind != KuratowskiWitness::None);
  CHECK(oracle::has_kuratowski_subdivision(base_graph(BaseKind::K1222).graph));
  LabeledGraph two({0, -1});
  CHECK_THROWS_AS(planarity(two), PreconditionError);
}

TEST_CASE("faces of standard polyhedra")
{
  auto o = planarity(octahedron());
  REQUIRE(o.planar);
  CHECK(face_lengths(*o.embedding) == std::multiset<int>(std::multiset<int>{3, 3, 3, 3, 3, 3, 3, 3}));
  auto c = planarity(cube());
  REQUIRE(c.planar);
  CHECK(face_lengths(*c.embedding) == std::multiset<int>{4, 4, 4, 4, 4, 4});
  check_euler(*c.embedding);
  // Malformed rotation.
  auto rot = c.embedding->rotation();
  std::swap(rot[0][0], rot[1][0]);
  CHECK_THROWS_AS(PlaneEmbedding(cube(), rot), PreconditionError);
}

TEST_CASE("multigraph embeddings place parallel edges as digons")
{
  LabeledGraph theta({0, -1});
  theta.add_edge(0, 1);
  theta.add_edge(0, 1);
  theta.add_edge(0, 1);
  auto r = planarity(theta);
  REQUIRE(r.planar);
  CHECK(face_lengths(*r.embedding) == std::multiset<int>{2, 2, 2});
  LabeledGraph dq({0, -1, 0, -1});
  dq.add_edge(0, 1), dq.add_edge(0, 1), dq.add_edge(1, 2), dq.add_edge(2, 3), dq.add_edge(3, 0), dq.add_edge(3, 0);
  auto s = planarity(dq);
  REQUIRE(s.planar);
  check_euler(*s.embedding);
}

TEST_CASE("reembed_with_outer")
{
  auto e = *planarity(cube()).embedding;
  for (int f = 0; f < e.num_faces(); ++f) {
    auto r = reembed_with_outer(e, f);
    CHECK(r.outer_face() == f);
    CHECK(face_lengths(r) == face_lengths(e));
    auto back = reembed_with_outer(r, e.outer_face());
    CHECK(back.outer_face() == e.outer_face());
    CHECK(back.rotation() == e.rotation());
  }
  CHECK_THROWS_AS(reembed_with_outer(e, 99), PreconditionError);
}

TEST_CASE("embedding enumeration")
{
  // K4 is 3-connected: one embedding up to mirror image.
  long k = for_each_plane_embedding(base_graph(BaseKind::K4neg).graph, {}, [](const PlaneEmbedding&) { return true; });
  CHECK(k == 1);
  EnumerateOptions both;
  both.skip_mirrors = false;
  CHECK(for_each_plane_embedding(base_graph(BaseKind::K4neg).graph, both, [](const PlaneEmbedding&) { return true; }) == 2);
  CHECK(for_each_plane_embedding(cube(), {}, [](const PlaneEmbedding& e) {
          CHECK(face_lengths(e) == std::multiset<int>{4, 4, 4, 4, 4, 4});
          return true;
        }) == 1);
  CHECK(for_each_plane_embedding(complete(5), {}, [](const PlaneEmbedding&) { return true; }) == 0);
  // The theta graph has two embeddings of which mirror pairs coincide.
  LabeledGraph theta({0, -1});
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  CHECK(for_each_plane_embedding(theta, {}, [](const PlaneEmbedding&) { return true; }) == 1);
}

TEST_CASE("is_peripheral")
{
  const auto& k4 = base_graph(BaseKind::K4neg).graph;
  CHECK(is_peripheral(k4, {0, 1, 2}));
  CHECK(is_peripheral(k4, {1, 2, 3}));
  const auto& k = base_graph(BaseKind::K1222).graph;
  // +1, +2, +3 is a facial octahedral triangle.
  CHECK(is_peripheral(k, {1, 3, 5}));
  LabeledGraph c({0, -1, -2, -3});
  for (int i = 0; i < 4; ++i) c.add_edge(i, (i + 1) % 4);
  c.add_edge(0, 2);
  CHECK_FALSE(is_peripheral(c, {0, 1, 2, 3}));
  CHECK_THROWS_AS(is_peripheral(c, {1, 3, 0}), PreconditionError);
}

TEST_CASE("Euler fold from one long face")
{
  CHECK(euler_fold_from_one_long_face(3).n == 4);
  CHECK(euler_fold_from_one_long_face(2).n == 3);
  auto r = euler_fold_from_one_long_face(3);
  CHECK(r.vertices == 28);
  CHECK(r.edges == 72);
  CHECK(r.vertices - r.edges + r.faces == 2);
  for (long m = 2; m <= 100; ++m) {
    auto x = euler_fold_from_one_long_face(m);
    CHECK(x.n == m + 1);
    CHECK(x.vertices - x.edges + x.faces == 2);
  }
  CHECK_THROWS_AS(euler_fold_from_one_long_face(1), PreconditionError);
}

TEST_CASE("planarity agrees with brute-force Kuratowski search")
{
  auto corpus = oracle::connected_graphs_upto(6);
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : corpus[n]) {
      auto r = planarity(g);
      REQUIRE(r.planar == !oracle::has_kuratowski_subdivision(g));
      if (r.planar) check_euler(*r.embedding);
    }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    int n = std::uniform_int_distribution<int>(5, 10)(rng);
    auto g = oracle::random_connected_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.6)(rng));
    auto r = planarity(g);
    REQUIRE(r.planar == !oracle::has_kuratowski_subdivision(g));
  }
}
