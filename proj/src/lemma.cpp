#include <algorithm>
#include <set>

#include "pcover/structure.hpp"

namespace pcover {

namespace {

ClauseResult verdict(bool ok, std::string detail = {})
{
  return {ok ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

ClauseResult skipped(std::string why) { return {Verdict::NotEvaluated, std::move(why)}; }

bool genuine_k4_cover(const LabeledGraph& h)
{
  if (!is_connected(h)) return false;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (!is_k4_label(h.label(v))) return false;
  try {
    return verify_cover(h, base_graph(BaseKind::K4neg), map_by_label(h, BaseKind::K4neg)).ok;
  } catch (const PreconditionError&) {
    return false;
  }
}

// H-level part shared by both modes.
void fill_common(StructureReport& r, const StructureOptions& opt)
{
  const PlaneEmbedding& h = r.h;
  const LabeledGraph& g = h.graph();
  r.beads = detect_beads(g);
  r.strings = detect_strings(g, r.beads);
  r.necklace = is_necklace(g);
  for (int f = 0; f < h.num_faces(); ++f) {
    const FaceWalk& w = h.face(f);
    FaceInfo fi;
    fi.id = f;
    fi.outer = f == h.outer_face();
    fi.length = w.length();
    for (int v : w.vertices) fi.vertices.push_back(r.to_parent[v]);
    fi.labels = w.labels;
    fi.pattern = face_label_pattern(w.labels);
    r.faces.push_back(std::move(fi));
    if (f != h.outer_face() && w.length() != 3) r.internal_nontriangular.push_back(f);
  }
  for (int b = 0; b < static_cast<int>(r.beads.size()); ++b) {
    std::set<int> fs;
    for (int f = 0; f < h.num_faces(); ++f) {
      if (h.face(f).length() == 3) continue;
      const auto& vs = h.face(f).vertices;
      if (std::count(vs.begin(), vs.end(), r.beads[b].vi) || std::count(vs.begin(), vs.end(), r.beads[b].vj))
        fs.insert(f);
    }
    for (int f : fs) r.faces[f].beads.push_back(b);
  }
  const auto& in = r.internal_nontriangular;
  for (std::size_t a = 0; a < in.size(); ++a)
    for (std::size_t b = a + 1; b < in.size(); ++b) {
      const auto& x = r.faces[in[a]].beads;
      const auto& y = r.faces[in[b]].beads;
      int shared = 0;
      for (int bead : x) shared += static_cast<int>(std::count(y.begin(), y.end(), bead));
      if (shared > 0) r.shared_beads.push_back({in[a], in[b], shared});
    }

  r.clauses['e'] = verdict(g.num_vertices() != 4, g.num_vertices() == 4 ? "H is K4" : "");
  int k = connectivity(g);
  r.clauses['g'] = verdict(k >= 2, "connectivity " + std::to_string(k));
  std::string bad;
  for (const auto& fi : r.faces) {
    if (fi.pattern.kind != FacePattern::Mismatch || fi.length == 3) continue;
    if (fi.outer && opt.pattern_internal_only) continue;
    bad += (bad.empty() ? "" : "; ") + std::string("face ") + std::to_string(fi.id) + " mismatch at " +
           std::to_string(fi.pattern.mismatch_position);
  }
  r.clauses['h'] = verdict(bad.empty(), bad);
  std::string hex;
  for (int f : in)
    if (r.faces[f].length == 6) hex += (hex.empty() ? "face " : ", ") + std::to_string(f);
  r.clauses['i'] = verdict(hex.empty(), hex);
}

std::string join_faces(const std::vector<int>& v)
{
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

} // namespace

StructureReport analyze_bare_H(const PlaneEmbedding& h, const StructureOptions& opt)
{
  StructureReport r;
  r.bare = true;
  r.h = h;
  r.to_parent.resize(h.graph().num_vertices());
  for (int v = 0; v < h.graph().num_vertices(); ++v) r.to_parent[v] = v;
  fill_common(r, opt);
  bool cover = genuine_k4_cover(h.graph());
  bool outer_cycle = h.face(h.outer_face()).is_simple_cycle();
  r.clauses['a'] = verdict(cover && outer_cycle, cover ? (outer_cycle ? "" : "outer face not a cycle") : "not a connected K4 cover");
  for (char c : {'b', 'c', 'd', 'f', 'j'}) r.clauses[c] = skipped("needs the interior of the semi-cover");
  return r;
}

StructureReport check_lemma_Hfaces(const SemiCover& sc, const std::vector<int>& h_vertices, const StructureOptions& opt)
{
  if (sc.base != BaseKind::K1222) throw PreconditionError("semi-cover must be over K1222");
  CoverCheck cc = verify_semicover(sc);
  if (!cc.ok) {
    std::string why = cc.violation ? cc.violation->reason + " at vertex " + std::to_string(cc.violation->vertex) : "";
    throw PreconditionError("invalid semi-cover: " + why);
  }
  const PlaneEmbedding& E = sc.embedding;
  const LabeledGraph& g = E.graph();
  auto comps = k4_lift_components(g);
  std::vector<int> hv = h_vertices;
  std::sort(hv.begin(), hv.end());
  if (std::find(comps.begin(), comps.end(), hv) == comps.end())
    throw PreconditionError("h is not a connected component of the lift of {0,-1,-2,-3}");

  HInSemiCover loc = locate_H(sc, hv);
  StructureReport r;
  r.bare = false;
  r.h = loc.h.embedding;
  r.to_parent = loc.h.sub.to_parent;
  fill_common(r, opt);
  r.trapezia = detect_trapezia(g);

  // (a)
  bool cover = genuine_k4_cover(loc.h.sub.graph);
  const FaceWalk& outer = E.face(E.outer_face());
  bool outer_in_h = outer.is_simple_cycle();
  for (int v : outer.vertices)
    if (loc.h.sub.from_parent[v] == -1) outer_in_h = false;
  std::string a_detail;
  if (comps.size() != 1) a_detail = "lift of K4 has " + std::to_string(comps.size()) + " components";
  else if (!cover) a_detail = "H is not a K4 cover";
  else if (!outer_in_h) a_detail = "outer boundary is not a cycle of H";
  r.clauses['a'] = verdict(a_detail.empty(), a_detail);

  // (b)
  std::set<std::array<int, 3>> facial;
  for (const auto& f : E.faces())
    if (f.length() == 3) {
      std::array<int, 3> t{f.vertices[0], f.vertices[1], f.vertices[2]};
      std::sort(t.begin(), t.end());
      facial.insert(t);
    }
  int nonfacial = 0;
  for (auto t : triangles(g))
    if (!facial.count(t)) ++nonfacial;
  r.clauses['b'] = verdict(nonfacial == 0, nonfacial ? std::to_string(nonfacial) + " non-facial 3-cycles" : "");

  // (c), (d)
  auto outer_mask = E.outer_vertex_mask();
  std::string c_bad, d_bad;
  for (int s1 : {1, -1})
    for (int s2 : {2, -2})
      for (int s3 : {3, -3}) {
        std::array<Label, 3> tri{s1, s2, s3};
        bool all_triangles = (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
        std::string name = "(" + label_name(s1) + "," + label_name(s2) + "," + label_name(s3) + ")";
        for (const auto& comp : find_cycles_covering(g, tri)) {
          if (comp.kind == LiftComponent::Cycle) {
            std::array<int, 3> t{};
            bool ok = comp.length() == 3;
            if (ok) {
              std::copy_n(comp.vertices.begin(), 3, t.begin());
              std::sort(t.begin(), t.end());
              ok = facial.count(t) > 0;
            }
            if (!ok) c_bad += name + " cycle of length " + std::to_string(comp.length()) + "; ";
            continue;
          }
          bool ok = !all_triangles && comp.kind == LiftComponent::Path && outer_mask[comp.vertices.front()] &&
                    outer_mask[comp.vertices.back()];
          if (!ok) d_bad += name + " non-cycle component; ";
        }
      }
  r.clauses['c'] = verdict(c_bad.empty(), c_bad);
  r.clauses['d'] = verdict(d_bad.empty(), d_bad);

  // (f), (j)
  std::vector<int> t_in(r.h.num_faces(), 0);
  int t123 = 0;
  for (auto t : triangles(g)) {
    std::set<Label> ls{g.label(t[0]), g.label(t[1]), g.label(t[2])};
    if (ls != std::set<Label>{1, 2, 3}) continue;
    ++t123;
    int f = loc.face_of_vertex[t[0]];
    if (f >= 0) ++t_in[f];
  }
  r.clauses['f'] = verdict(t123 >= 1, std::to_string(t123) + " triangles (1,2,3)");
  std::vector<int> over;
  for (auto& fi : r.faces) {
    fi.t = t_in[fi.id];
    if (!fi.outer && fi.length != 3 && 3 * fi.t >= 2 * (fi.length / 3)) over.push_back(fi.id);
  }
  r.clauses['j'] = verdict(over.empty(), over.empty() ? "" : "t >= 2m/3 in faces " + join_faces(over));
  return r;
}

StructureReport check_lemma_Hfaces(const SemiCover& sc, const StructureOptions& opt)
{
  const LabeledGraph& g = sc.embedding.graph();
  auto outer = sc.embedding.outer_vertex_mask();
  for (const auto& c : k4_lift_components(g))
    for (int v : c)
      if (outer[v]) return check_lemma_Hfaces(sc, c, opt);
  throw PreconditionError("no lift of {0,-1,-2,-3} meets the outer face");
}

Json exclusions_to_json(const ExclusionVerdict& x)
{
  Json j;
  j["excluded"] = x.excluded();
  j["no_internal_nontriangular_face"] = x.no_room;
  j["necklace"] = x.necklace;
  j["two_internal_nontriangular_faces"] = x.two_faces;
  Json hits = Json::array();
  for (const auto& h : x.bead_sharing) hits.push_back({{"faces", {h.f1, h.f2}}, {"m", h.m}, {"shared_beads", h.shared}});
  j["shared_bead_pairs"] = hits;
  return j;
}

Json report_to_json(const StructureReport& r)
{
  Json j;
  j["format_version"] = 1;
  j["mode"] = r.bare ? "bare-H" : "semi-cover";
  j["h_vertices"] = r.to_parent;
  j["outer_face"] = r.h.outer_face();
  Json faces = Json::array();
  for (const auto& f : r.faces) {
    Json fj{{"id", f.id}, {"outer", f.outer}, {"length", f.length}, {"vertices", f.vertices}, {"labels", f.labels}};
    if (f.pattern.kind == FacePattern::Triangle) fj["pattern"] = "triangle";
    else if (f.pattern.kind == FacePattern::Pattern) {
      fj["pattern"] = "valid";
      fj["m"] = f.pattern.m;
      Json pairs = Json::array();
      for (auto [a, b] : f.pattern.pairs) pairs.push_back({a, b});
      fj["pairs"] = pairs;
    } else {
      fj["pattern"] = "mismatch";
      fj["mismatch_position"] = f.pattern.mismatch_position;
    }
    if (f.t >= 0) fj["t"] = f.t;
    fj["beads"] = f.beads;
    faces.push_back(fj);
  }
  j["faces"] = faces;
  Json beads = Json::array();
  for (const auto& b : r.beads)
    beads.push_back({{"v0", r.to_parent[b.v0]}, {"vi", r.to_parent[b.vi]}, {"vj", r.to_parent[b.vj]},
                     {"vk", r.to_parent[b.vk]}, {"type", b.type}});
  j["beads"] = beads;
  Json strings = Json::array();
  for (const auto& s : r.strings) {
    Json sj{{"beads", s.beads}, {"type", s.type}, {"cyclic", s.cyclic}, {"maximal", s.maximal}};
    if (!s.cyclic) {
      sj["bottom"] = r.to_parent[s.bottom];
      sj["top"] = r.to_parent[s.top];
    }
    strings.push_back(sj);
  }
  j["strings"] = strings;
  j["necklace"] = r.necklace;
  Json traps = Json::array();
  for (const auto& t : r.trapezia)
    traps.push_back({{"type", t.type}, {"triangle", {t.vi, t.vj, t.vk}}, {"neg_k", t.neg_k}, {"neg_i", t.neg_i}});
  if (!r.bare) j["trapezia"] = traps;
  j["internal_nontriangular_faces"] = r.internal_nontriangular;
  Json shared = Json::array();
  for (const auto& s : r.shared_beads) shared.push_back({{"faces", {s.f1, s.f2}}, {"shared_beads", s.shared}});
  j["shared_beads"] = shared;
  Json clauses;
  for (const auto& [c, v] : r.clauses) clauses[std::string(1, c)] = {{"verdict", to_string(v.verdict)}, {"detail", v.detail}};
  j["clauses"] = clauses;
  j["exclusions"] = exclusions_to_json(check_exclusions(r));
  return j;
}

Json support_to_json(const SupportForest& s)
{
  Json j;
  j["face"] = s.face;
  j["string_path"] = s.string_path;
  Json ts = Json::array();
  for (const auto& t : s.triangles) {
    Json att = Json::array();
    for (const auto& a : t.attachments)
      att.push_back({{"from", a.triangle_vertex}, {"to", a.vertex}, {"label", a.label}, {"position", a.position}});
    Json tj{{"vertices", t.vertices}, {"attachments", att}, {"supported", t.supported}};
    if (t.supported) {
      tj["bottom"] = t.bottom;
      tj["top"] = t.top;
      tj["bottom_label"] = t.bottom_label;
      tj["top_label"] = t.top_label;
      tj["below"] = t.below;
      tj["minimal"] = t.minimal;
      tj["configuration"] = t.configuration;
    }
    ts.push_back(tj);
  }
  j["triangles"] = ts;
  if (s.any_supported) {
    j["bottom_label"] = s.set_bottom_label;
    j["top_label"] = s.set_top_label;
  }
  Json tr = Json::array();
  for (const auto& t : s.trapezia)
    tr.push_back({{"trapezium", t.trapezium}, {"neg_k_position", t.neg_k_position}, {"neg_i_position", t.neg_i_position}});
  j["trapezia"] = tr;
  return j;
}

} // namespace pcover
