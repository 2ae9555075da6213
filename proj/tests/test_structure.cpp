#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcover/cover.hpp"
#include "pcover/io.hpp"
#include "pcover/structure.hpp"

using namespace pcover;

namespace {

Json fixture(const std::string& name) { return read_json_file(std::string(PCOVER_FIXTURE_DIR) + "/" + name + ".json"); }

PlaneEmbedding fixture_h(const std::string& name) { return embedding_from_json(fixture(name)["embedding"]); }

PlaneEmbedding relabel(const PlaneEmbedding& e, const std::vector<int>& perm)
{
  LabeledGraph g = permute_vertices(e.graph(), perm);
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int v = 0; v < e.graph().num_vertices(); ++v) rot[perm[v]] = e.rotation()[v];
  PlaneEmbedding out(g, rot, 0);
  out.set_outer_face(out.face_of_dart(e.face(e.outer_face()).darts[0]));
  return out;
}

// Random graph on K1222 labels where no vertex sees a label twice.
LabeledGraph random_injective(std::mt19937_64& rng, int n, int tries)
{
  std::uniform_int_distribution<int> lab(-3, 3), pick(0, n - 1);
  std::vector<Label> labels(n);
  for (auto& l : labels) l = lab(rng);
  LabeledGraph g(labels, true);
  std::vector<std::array<char, 7>> seen(n, std::array<char, 7>{});
  for (int t = 0; t < tries; ++t) {
    int u = pick(rng), v = pick(rng);
    Label a = labels[u], b = labels[v];
    if (u == v || a == b || a == -b || g.adjacent(u, v)) continue;
    if (seen[u][b + 3] || seen[v][a + 3]) continue;
    seen[u][b + 3] = seen[v][a + 3] = 1;
    g.add_edge(u, v);
  }
  return g;
}

} // namespace

TEST_CASE("face label patterns")
{
  auto p = face_label_pattern(std::vector<Label>{0, -1, -2, 0, -1, -3});
  CHECK(p.kind == FacePattern::Pattern);
  CHECK(p.m == 2);
  CHECK(p.pairs == std::vector<std::pair<Label, Label>>{{-1, -2}, {-1, -3}});

  // Rotations of the same cyclic sequence give the same pairs.
  auto q = face_label_pattern(std::vector<Label>{-1, -3, 0, -1, -2, 0});
  CHECK(q.kind == FacePattern::Pattern);
  CHECK(q.m == 2);

  CHECK(face_label_pattern(std::vector<Label>{-1, -2, -3}).kind == FacePattern::Triangle);
  auto bad = face_label_pattern(std::vector<Label>{0, -1, 0, -2, -3, -1});
  CHECK(bad.kind == FacePattern::Mismatch);
  CHECK(bad.mismatch_position >= 0);
  CHECK_THROWS_AS(face_label_pattern(std::vector<Label>{0, 1, -2}), PreconditionError);
}

TEST_CASE("beads and strings on the necklace")
{
  PlaneEmbedding h = fixture_h("necklace4_h");
  auto beads = detect_beads(h);
  CHECK(beads.size() == 4);
  CHECK(static_cast<int>(beads.size()) == oracle::count_beads(h.graph()));
  for (const auto& b : beads) CHECK(b.type == -3);
  auto strings = detect_strings(h);
  REQUIRE(strings.size() == 1);
  CHECK(strings[0].cyclic);
  CHECK(strings[0].beads.size() == 4);
  CHECK(is_necklace(h));
}

TEST_CASE("K4 has no beads, strings or trapezia")
{
  const LabeledGraph& k4 = base_graph(BaseKind::K4neg).graph;
  CHECK(detect_beads(k4).empty());
  CHECK(detect_strings(k4, {}).empty());
  CHECK_FALSE(is_necklace(k4));
}

TEST_CASE("three strings join 0' to the triangle")
{
  PlaneEmbedding h = fixture_h("fig4_h");
  auto beads = detect_beads(h);
  CHECK(static_cast<int>(beads.size()) == oracle::count_beads(h.graph()));
  auto strings = detect_strings(h);
  REQUIRE(strings.size() == 3);
  std::set<Label> types;
  int bottom = strings[0].bottom;
  for (const auto& s : strings) {
    CHECK_FALSE(s.cyclic);
    CHECK(s.maximal);
    CHECK(s.bottom == bottom);
    CHECK(h.graph().label(s.top) == s.type);
    types.insert(s.type);
  }
  CHECK(types == std::set<Label>{-1, -2, -3});
  CHECK_FALSE(is_necklace(h));
}

TEST_CASE("bead counts agree with the brute-force oracle on every H fixture")
{
  for (const char* name : {"necklace4_h", "fig4_h", "fig8_h6", "fig8_h_shared_bead", "cube_h_hexagons", "fig5_h"}) {
    CAPTURE(name);
    PlaneEmbedding h = fixture_h(name);
    CHECK(static_cast<int>(detect_beads(h).size()) == oracle::count_beads(h.graph()));
  }
  CHECK(detect_beads(fixture_h("fig5_h")).size() == 2);
}

TEST_CASE("inner bead vertices lie on two different non-triangular faces")
{
  for (const char* name : {"fig4_h", "fig8_h6", "fig8_h_shared_bead", "fig5_h", "necklace4_h"}) {
    CAPTURE(name);
    PlaneEmbedding h = fixture_h(name);
    auto beads = detect_beads(h);
    REQUIRE_FALSE(beads.empty());
    for (const auto& b : beads) {
      std::array<std::set<int>, 2> on;
      for (const auto& f : h.faces()) {
        if (f.length() == 3) continue;
        int id = static_cast<int>(&f - h.faces().data());
        for (int v : f.vertices) {
          if (v == b.vi) on[0].insert(id);
          if (v == b.vj) on[1].insert(id);
        }
      }
      REQUIRE(on[0].size() == 1);
      REQUIRE(on[1].size() == 1);
      CHECK(*on[0].begin() != *on[1].begin());
    }
  }
}

TEST_CASE("bead and string detection is invariant under relabeling")
{
  std::mt19937_64 rng(7);
  for (const char* name : {"fig4_h", "fig8_h6", "fig5_h", "necklace4_h"}) {
    CAPTURE(name);
    PlaneEmbedding h = fixture_h(name);
    auto base_beads = detect_beads(h);
    auto base_strings = detect_strings(h);
    std::multiset<std::size_t> base_lengths;
    for (const auto& s : base_strings) base_lengths.insert(s.beads.size());
    for (int round = 0; round < 5; ++round) {
      std::vector<int> perm(h.graph().num_vertices());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      PlaneEmbedding p = relabel(h, perm);
      auto beads = detect_beads(p);
      REQUIRE(beads.size() == base_beads.size());
      std::set<std::array<int, 4>> want, got;
      for (const auto& b : base_beads) {
        std::array<int, 2> inner{perm[b.vi], perm[b.vj]};
        std::sort(inner.begin(), inner.end());
        want.insert({perm[b.v0], inner[0], inner[1], perm[b.vk]});
      }
      for (const auto& b : beads) {
        std::array<int, 2> inner{b.vi, b.vj};
        std::sort(inner.begin(), inner.end());
        got.insert({b.v0, inner[0], inner[1], b.vk});
      }
      CHECK(want == got);
      std::multiset<std::size_t> lengths;
      for (const auto& s : detect_strings(p)) lengths.insert(s.beads.size());
      CHECK(lengths == base_lengths);
      CHECK(is_necklace(p) == is_necklace(h));
    }
  }
}

TEST_CASE("trapezia on the filled F2 fixture")
{
  SemiCover sc = semicover_from_json(fixture("fig3_semicover"));
  REQUIRE(verify_semicover(sc).ok);
  auto traps = detect_trapezia(sc);
  CHECK(static_cast<int>(traps.size()) == oracle::count_trapezia(sc.embedding.graph()));
  int type2 = 0;
  for (const auto& t : traps) {
    type2 += t.type == 2;
    const auto& g = sc.embedding.graph();
    CHECK(g.label(t.vj) == t.type);
    CHECK(g.label(t.neg_k) == -g.label(t.vk));
    CHECK(g.label(t.neg_i) == -g.label(t.vi));
  }
  CHECK(type2 == 1);
}

TEST_CASE("trapezia: bare triangle, two disjoint copies, random injective graphs")
{
  LabeledGraph tri({1, 2, 3}, true);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(detect_trapezia(tri).empty());

  // Triangle 1,2,3 with -3 on 1,2 and -1 on 2,3: a type-2 trapezium, twice.
  LabeledGraph two({1, 2, 3, -3, -1, 1, 2, 3, -3, -1}, true);
  for (int o : {0, 5}) {
    two.add_edge(o, o + 1);
    two.add_edge(o + 1, o + 2);
    two.add_edge(o, o + 2);
    two.add_edge(o + 3, o);
    two.add_edge(o + 3, o + 1);
    two.add_edge(o + 4, o + 1);
    two.add_edge(o + 4, o + 2);
  }
  auto traps = detect_trapezia(two);
  REQUIRE(traps.size() == 2);
  for (const auto& t : traps) CHECK(t.type == 2);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    LabeledGraph g = random_injective(rng, 12, 120);
    CHECK(static_cast<int>(detect_trapezia(g).size()) == oracle::count_trapezia(g));
  }
}

TEST_CASE("the type-2 trapezium triangle is supported with bottom label 0")
{
  SemiCover sc = semicover_from_json(fixture("fig3_semicover"));
  StructureReport r = check_lemma_Hfaces(sc);
  HInSemiCover loc = locate_H(sc, r.to_parent);
  auto traps = detect_trapezia(sc);
  auto two = std::find_if(traps.begin(), traps.end(), [](const Trapezium& t) { return t.type == 2; });
  REQUIRE(two != traps.end());
  int face = loc.face_of_vertex[two->vj];
  REQUIRE(face >= 0);
  bool found = false;
  for (const auto& s : r.strings) {
    if (s.cyclic) continue;
    SupportForest f;
    try {
      f = triangles_supported_on_string(sc, loc, s, r.beads, face);
    } catch (const PreconditionError&) {
      continue;
    }
    for (const auto& t : f.triangles) {
      if (t.minimal && t.supported) CHECK((t.configuration >= 1 && t.configuration <= 3));
      if (t.supported) {
        // Attachments on the string run from a 0 at the bottom to -k at the top.
        CHECK(t.bottom_label == 0);
        CHECK(t.top_label == s.type);
        CHECK(t.bottom < t.top);
      }
      if (std::find(t.vertices.begin(), t.vertices.end(), two->vj) != t.vertices.end() && t.supported)
        found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("a face without triangles holds an empty support forest")
{
  SemiCover sc = semicover_from_json(fixture("fig3_semicover"));
  StructureReport r = check_lemma_Hfaces(sc);
  HInSemiCover loc = locate_H(sc, r.to_parent);
  // Only F2 was filled; the outer face of H is bounded by both strings.
  int outer = loc.h.embedding.outer_face();
  int checked = 0;
  for (const auto& s : r.strings) {
    auto forest = triangles_supported_on_string(sc, loc, s, r.beads, outer);
    CHECK(forest.triangles.empty());
    CHECK_FALSE(forest.any_supported);
    ++checked;
  }
  CHECK(checked == 2);
  CHECK_THROWS_AS(triangles_supported_on_string(sc, loc, r.strings[0], r.beads, loc.h.embedding.num_faces()),
                  PreconditionError);
}

TEST_CASE("bare-H clauses on the fig8 inflation")
{
  StructureReport r = analyze_bare_H(fixture_h("fig8_h6"));
  CHECK(r.bare);
  CHECK(r.clauses.at('a').verdict == Verdict::Pass);
  for (char c : {'e', 'g', 'h', 'i'}) {
    CAPTURE(c);
    CHECK(r.clauses.at(c).verdict == Verdict::Pass);
  }
  for (char c : {'b', 'c', 'd', 'f', 'j'}) CHECK(r.clauses.at(c).verdict == Verdict::NotEvaluated);
  CHECK(r.beads.size() == 4);
  CHECK_FALSE(r.necklace);
  // Every face of a clause-(g) H is a simple cycle.
  for (const auto& f : r.h.faces()) CHECK(f.is_simple_cycle());
}

TEST_CASE("K4 fails clause (e) and hexagons fail clause (i)")
{
  const auto& base = base_graph(BaseKind::K4neg);
  std::optional<PlaneEmbedding> k4;
  for_each_plane_embedding(base.graph, {}, [&](const PlaneEmbedding& e) {
    k4 = e;
    return false;
  });
  REQUIRE(k4);
  CHECK(analyze_bare_H(*k4).clauses.at('e').verdict == Verdict::Fail);
  CHECK(analyze_bare_H(fixture_h("cube_h_hexagons")).clauses.at('i').verdict == Verdict::Fail);
}

TEST_CASE("H face length is 3 times the quotient face size plus beads")
{
  for (const char* name : {"fig4_h", "fig8_h6", "fig8_h_shared_bead", "fig5_h", "cube_h_hexagons"}) {
    CAPTURE(name);
    StructureReport r = analyze_bare_H(fixture_h(name));
    for (const auto& f : r.faces) {
      if (f.length == 3) continue;
      CHECK(f.length % 3 == 0);
      CHECK(f.pattern.kind == FacePattern::Pattern);
      CHECK(f.pattern.m * 3 == f.length);
    }
  }
}

TEST_CASE("Lemma clauses on the filled semi-cover")
{
  SemiCover sc = semicover_from_json(fixture("fig3_semicover"));
  StructureReport r = check_lemma_Hfaces(sc);
  CHECK_FALSE(r.bare);
  // The type -1 string was removed, so H is not a full K4 cover.
  CHECK(r.clauses.at('a').verdict == Verdict::Fail);
  CHECK(r.clauses.at('b').verdict == Verdict::Pass);
  CHECK(r.clauses.at('f').verdict == Verdict::Pass);
  CHECK(r.trapezia.size() == detect_trapezia(sc).size());
  CHECK_FALSE(r.all_clauses_pass());
}

TEST_CASE("bead-sharing predicate")
{
  int m = 0;
  CHECK(bead_sharing_fires(9, 9, 1, &m));
  CHECK(m == 3);
  CHECK_FALSE(bead_sharing_fires(9, 9, 0));
  CHECK(bead_sharing_fires(12, 12, 2, &m));
  CHECK(m == 4);
  CHECK_FALSE(bead_sharing_fires(12, 12, 1));
  CHECK(bead_sharing_fires(12, 9, 2));
  CHECK_FALSE(bead_sharing_fires(6, 6, 2));
}

TEST_CASE("exclusion verdicts on the structural fixtures")
{
  auto ex = [](const char* name) { return check_exclusions(analyze_bare_H(fixture_h(name))); };
  auto neck = ex("necklace4_h");
  CHECK(neck.necklace);
  CHECK(neck.excluded());
  auto two = ex("fig4_h");
  CHECK(two.two_faces);
  CHECK_FALSE(two.necklace);
  auto shared = ex("fig8_h_shared_bead");
  REQUIRE_FALSE(shared.bead_sharing.empty());
  CHECK(shared.bead_sharing[0].m == 3);
  CHECK(shared.bead_sharing[0].shared >= 1);
  auto sharem = ex("fig5_h");
  CHECK_FALSE(sharem.bead_sharing.empty());
  auto h6 = ex("fig8_h6");
  CHECK_FALSE(h6.excluded());
}

TEST_CASE("report JSON carries every clause")
{
  StructureReport r = analyze_bare_H(fixture_h("fig8_h6"));
  Json j = report_to_json(r);
  for (char c = 'a'; c <= 'j'; ++c) CHECK(j["clauses"].contains(std::string(1, c)));
  Json x = exclusions_to_json(check_exclusions(r));
  CHECK(x.contains("excluded"));
}
