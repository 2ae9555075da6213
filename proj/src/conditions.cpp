#include "pcover/conditions.hpp"

#include <algorithm>
#include <set>

namespace pcover {

std::vector<std::array<Label, 3>> base_triangles(BaseKind base)
{
  const LabeledGraph& g = base_graph(base).graph;
  std::vector<std::array<Label, 3>> out;
  for (auto t : triangles(g)) {
    std::array<Label, 3> l{g.label(t[0]), g.label(t[1]), g.label(t[2])};
    std::sort(l.begin(), l.end());
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConditionsABCD check_conditions_ABCD(const PlaneEmbedding& e, const CoverProjection& proj)
{
  const LabeledGraph& g = e.graph();
  if (g.num_vertices() != proj.source.num_vertices() || g.num_edges() != proj.source.num_edges())
    throw PreconditionError("embedding and projection describe different graphs");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.label(v) != proj.source.label(v)) throw PreconditionError("embedding and projection labels differ");
  auto chk = verify_cover(proj);
  if (!chk.ok) throw PreconditionError("projection is not a cover: " + chk.violation->reason);
  ConditionsABCD r;
  r.fold = chk.fold;
  std::set<std::vector<int>> facial;
  for (const auto& f : e.faces()) {
    if (f.length() == 3) {
      ++r.triangular_faces;
      std::vector<int> s = f.vertices;
      std::sort(s.begin(), s.end());
      facial.insert(s);
    }
  }
  auto tris = base_triangles(proj.base);
  for (const auto& t : tris)
    for (const auto& comp : find_cycles_covering(g, t))
      if (comp.kind == LiftComponent::Cycle && comp.length() == 3) {
        std::vector<int> s = comp.vertices;
        std::sort(s.begin(), s.end());
        if (!facial.count(s)) {
          r.c_short_lifts_facial = false;
          r.c_failures.push_back(s);
        }
      }
  for (int fi = 0; fi < e.num_faces(); ++fi) {
    const auto& f = e.face(fi);
    if (f.length() <= 3 || f.length() % 3 != 0 || !f.is_simple_cycle()) continue;
    std::set<Label> ls(f.labels.begin(), f.labels.end());
    if (ls.size() != 3) continue;
    std::array<Label, 3> t;
    std::copy(ls.begin(), ls.end(), t.begin());
    if (std::find(tris.begin(), tris.end(), t) == tris.end()) continue;
    // The walk must repeat the triangle's labels with period 3.
    bool periodic = true;
    for (int i = 0; i + 3 < f.length(); ++i) periodic = periodic && f.labels[i] == f.labels[i + 3];
    if (!periodic) continue;
    r.d_no_long_facial_lift = false;
    r.d_failures.push_back(fi);
  }
  return r;
}

} // namespace pcover
