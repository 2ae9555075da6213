#include <doctest.h>

#include <functional>
#include <set>

#include "fixture_lib.hpp"
#include "pcover/io.hpp"
#include "pcover/quotient.hpp"
#include "pcover/structure.hpp"

using namespace pcover;

namespace {

PlaneEmbedding fixture_h(const std::string& name)
{
  return embedding_from_json(read_json_file(std::string(PCOVER_FIXTURE_DIR) + "/" + name + ".json")["embedding"]);
}

// Independent check of a bead placement: every face demand met and no two
// distinct internal faces of length 3m (m >= 3) share m-2 or more beads.
bool placement_ok(const QuotientGraph& q, const std::vector<int>& beads)
{
  const PlaneEmbedding& e = q.embedding;
  int nf = e.num_faces();
  std::vector<int> on(nf, 0), len(nf, 0);
  std::vector<std::vector<int>> shared(nf, std::vector<int>(nf, 0));
  for (int f = 0; f < nf; ++f) len[f] = e.face(f).length();
  for (int x = 0; x < e.graph().num_edges(); ++x) {
    int f1 = e.face_of_dart(2 * x), f2 = e.face_of_dart(2 * x + 1);
    on[f1] += beads[x];
    if (f2 != f1) on[f2] += beads[x];
    if (f1 != f2) shared[f1][f2] += beads[x], shared[f2][f1] += beads[x];
  }
  for (int f = 0; f < nf; ++f) {
    bool outer = f == e.outer_face();
    int need = 0;
    if (len[f] == 2) need = outer ? 1 : 2;
    if (len[f] == 4 && !outer) need = 1;
    if (on[f] < need) return false;
  }
  for (int f = 0; f < nf; ++f)
    for (int g = f + 1; g < nf; ++g) {
      if (f == e.outer_face() || g == e.outer_face()) continue;
      int m = std::max(len[f] / 2 + on[f], len[g] / 2 + on[g]);
      if (m >= 3 && shared[f][g] >= m - 2 && shared[f][g] > 0) return false;
    }
  return true;
}

// Smallest total over all placements with at most cap beads per edge.
int brute_min_beads(const QuotientGraph& q, int cap)
{
  int ne = q.embedding.graph().num_edges();
  int best = -1;
  std::vector<int> b(ne, 0);
  std::function<void(int, int)> rec = [&](int x, int total) {
    if (best >= 0 && total >= best) return;
    if (x == ne) {
      if (placement_ok(q, b)) best = total;
      return;
    }
    for (int c = 0; c <= cap; ++c) {
      b[x] = c;
      rec(x + 1, total + c);
    }
    b[x] = 0;
  };
  rec(0, 0);
  return best;
}

QuotientGraph cycle8()
{
  LabeledGraph g({0, -1, 0, -1, 0, -1, 0, -1}, false);
  for (int v = 0; v < 8; ++v) g.add_edge(v, (v + 1) % 8);
  std::vector<std::vector<int>> rot(8);
  for (int v = 0; v < 8; ++v) rot[v] = {(v + 7) % 8, v};
  return make_quotient(PlaneEmbedding(g, rot, 0));
}

} // namespace

TEST_CASE("the three-string H contracts to the theta graph")
{
  QuotientGraph q = quotient_Hpp(fixture_h("fig4_h"));
  CHECK(q.a == 1);
  CHECK(q.embedding.graph().num_vertices() == 2);
  CHECK(q.embedding.graph().num_edges() == 3);
  CHECK(q.embedding.num_faces() == 3);
  CHECK(q.beads == std::vector<int>{1, 1, 1});
  std::set<Label> types(q.string_type.begin(), q.string_type.end());
  CHECK(types == std::set<Label>{-1, -2, -3});
}

TEST_CASE("a necklace has no quotient")
{
  CHECK_THROWS_AS(quotient_Hpp(fixture_h("necklace4_h")), PreconditionError);
}

TEST_CASE("enumerated quotients: counts, bead identity, inflation round trip")
{
  auto all = enumerate_Hpp(4);
  REQUIRE_FALSE(all.empty());
  std::map<int, int> per_a;
  for (const auto& q : all) {
    const auto& g = q.embedding.graph();
    CAPTURE(q.a);
    ++per_a[q.a];
    CHECK(g.num_vertices() == 2 * q.a);
    CHECK(g.num_edges() == 3 * q.a);
    CHECK(q.embedding.num_faces() == q.a + 2);
    CHECK(check_eq_beads(q.census()));
    CHECK(q.a >= 2);

    auto colour = three_edge_colouring(g);
    REQUIRE(colour);
    for (int x = 0; x < g.num_edges(); ++x)
      for (int y = x + 1; y < g.num_edges(); ++y) {
        const auto &ex = g.edge(x), &ey = g.edge(y);
        bool meet = ex.u == ey.u || ex.u == ey.v || ex.v == ey.u || ex.v == ey.v;
        if (meet) CHECK((*colour)[x] != (*colour)[y]);
      }

    // A bead-free 2-face inflates to a zero and a triangle forming a bead, so
    // the bead-free round trip needs a census without 2-faces.
    if (q.census().count(2) == 0) {
      PlaneEmbedding h = inflate_Hpp(q, *colour);
      QuotientGraph back = quotient_Hpp(h);
      CHECK(back.census() == q.census());
      CHECK(canonical_map_code(back.embedding) == canonical_map_code(q.embedding));
      CHECK(check_eq_beads(back.census()));
    }

    // One bead on every edge: face lengths grow to 3(k + beta).
    QuotientGraph beaded = q;
    beaded.beads.assign(g.num_edges(), 1);
    PlaneEmbedding hb = inflate_Hpp(beaded, *colour);
    QuotientGraph qb = quotient_Hpp(hb);
    CHECK(qb.total_beads() == g.num_edges());
    CHECK(canonical_map_code(qb.embedding) == canonical_map_code(q.embedding));
    CHECK(check_eq_beads(qb.census()));
    std::multiset<int> want, got;
    for (int f = 0; f < beaded.embedding.num_faces(); ++f) want.insert(beaded.h_face_length(f));
    for (const auto& f : hb.faces())
      if (f.length() != 3) got.insert(f.length());
    CHECK(want == got);
  }
  CHECK(per_a.count(1) == 0);
  CHECK(per_a[2] >= 1);
}

TEST_CASE("a bead-free 2-face reads as a bead")
{
  QuotientGraph q = fixtures::fig8();
  PlaneEmbedding h = inflate_Hpp(q, *three_edge_colouring(q.embedding.graph()));
  CHECK(detect_beads(h).size() == 2);
  CHECK(is_necklace(h));
  CHECK_THROWS_AS(quotient_Hpp(h), PreconditionError);
}

TEST_CASE("the theta graph appears only with the a >= 2 flag off")
{
  auto count_theta = [](const std::vector<QuotientGraph>& v) {
    return std::count_if(v.begin(), v.end(), [](const QuotientGraph& q) { return q.a == 1; });
  };
  CHECK(count_theta(enumerate_Hpp(2)) == 0);
  HppOptions opt;
  opt.exclude_theta = false;
  CHECK(count_theta(enumerate_Hpp(2, opt)) == 1);
}

TEST_CASE("the a = 2 list contains the fig8 quotient")
{
  auto want = canonical_map_code(fixtures::fig8().embedding);
  bool found = false;
  for (const auto& q : enumerate_Hpp(2)) {
    if (canonical_map_code(q.embedding) != want) continue;
    found = true;
    auto c = q.census();
    CHECK(c[2] == 2);
    CHECK(c[4] == 2);
  }
  CHECK(found);
}

TEST_CASE("bead demands of the fig8 quotient")
{
  QuotientGraph q = fixtures::fig8();
  std::map<int, int> demand;
  for (auto d : bead_demands(q)) demand[d.face] = d.demand;
  int outer = q.embedding.outer_face();
  CHECK(demand[outer] == 1);
  int twos = 0, fours = 0;
  for (auto [f, d] : demand) {
    if (f == outer) continue;
    int len = q.embedding.face(f).length();
    if (len == 2) {
      CHECK(d == 2);
      ++twos;
    }
    if (len == 4) {
      CHECK(d == 1);
      ++fours;
    }
  }
  CHECK(twos == 1);
  CHECK(fours == 2);
}

TEST_CASE("the fig8 quotient needs exactly four beads")
{
  QuotientGraph q = fixtures::fig8();
  MinBeadsResult r = min_beads(q);
  REQUIRE(r.feasible);
  CHECK(r.beads == 4);
  CHECK(placement_ok(q, r.placement));
  CHECK(brute_min_beads(q, 3) == 4);
  CHECK_FALSE(r.fired.empty());
}

TEST_CASE("min_beads agrees with brute force on small quotients")
{
  for (const auto& q : enumerate_Hpp(3)) {
    MinBeadsResult r = min_beads(q);
    REQUIRE(r.feasible);
    CHECK(placement_ok(q, r.placement));
    CHECK(r.beads == brute_min_beads(q, 2));
  }
}

TEST_CASE("the cube quotient needs at least three beads")
{
  QuotientGraph q = fixtures::cube();
  CHECK(q.census()[4] == 6);
  MinBeadsResult r = min_beads(q);
  REQUIRE(r.feasible);
  CHECK(r.beads >= 3);
  CHECK(q.a + r.beads >= 7);
}

TEST_CASE("a quotient with only 8-faces needs no beads")
{
  QuotientGraph q = cycle8();
  CHECK(bead_demands(q).empty());
  MinBeadsResult r = min_beads(q);
  CHECK(r.feasible);
  CHECK(r.beads == 0);
}

TEST_CASE("quotient JSON round trip")
{
  QuotientGraph q = fixtures::fig8({1, 1, 1, 1, 0, 0});
  QuotientGraph back = quotient_from_json(quotient_to_json(q));
  CHECK(back.beads == q.beads);
  CHECK(back.census() == q.census());
  CHECK(canonical_map_code(back.embedding) == canonical_map_code(q.embedding));
  Json j = quotient_to_json(q);
  CHECK(j["eq_beads_holds"] == true);
}

TEST_CASE("regenerated fixtures match the frozen goldens")
{
  for (const auto& [name, doc] : fixtures::build_all()) {
    CAPTURE(name);
    Json golden = read_json_file(std::string(PCOVER_FIXTURE_DIR) + "/" + name + ".json");
    CHECK(dump(golden) == dump(doc));
  }
}
