#include "pcover/io.hpp"

#include <fstream>
#include <sstream>

namespace pcover {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* what)
{
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string(what) + ": field '" + key + "': " + ex.what());
  }
}

} // namespace

Json graph_to_json(const LabeledGraph& g)
{
  Json j;
  j["vertices"] = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back({{"id", v}, {"label", g.label(v)}});
  j["edges"] = Json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

LabeledGraph graph_from_json(const Json& j)
{
  auto verts = get_field<Json>(j, "vertices", "graph");
  auto edges = get_field<Json>(j, "edges", "graph");
  if (!verts.is_array() || !edges.is_array()) throw InputError("graph: vertices and edges must be arrays");
  int n = static_cast<int>(verts.size());
  std::vector<Label> labels(n, 0);
  std::vector<char> seen(n, 0);
  for (size_t i = 0; i < verts.size(); ++i) {
    int id = get_field<int>(verts[i], "id", "graph vertex");
    int l = get_field<int>(verts[i], "label", "graph vertex");
    if (id < 0 || id >= n || seen[id]) throw InputError("graph: vertex ids must be a permutation of 0..n-1 (at index " + std::to_string(i) + ")");
    if (!valid_label(l)) throw InputError("graph: invalid label " + std::to_string(l) + " at vertex " + std::to_string(id));
    seen[id] = 1;
    labels[id] = l;
  }
  LabeledGraph g(labels);
  for (size_t i = 0; i < edges.size(); ++i) {
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("graph: edge " + std::to_string(i) + " must be a pair of vertex ids");
    try {
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    } catch (const PreconditionError& ex) {
      throw InputError("graph: edge " + std::to_string(i) + ": " + ex.what());
    }
  }
  return g;
}

Json face_to_json(const PlaneEmbedding& e, int f)
{
  const FaceWalk& w = e.face(f);
  return Json{{"id", f}, {"length", w.length()}, {"vertices", w.vertices}, {"labels", w.labels}};
}

Json embedding_to_json(const PlaneEmbedding& e, bool with_faces)
{
  Json j;
  j["graph"] = graph_to_json(e.graph());
  j["rotation"] = e.rotation();
  j["outer_face"] = e.outer_face();
  if (with_faces) {
    j["faces"] = Json::array();
    for (int f = 0; f < e.num_faces(); ++f) j["faces"].push_back(face_to_json(e, f));
  }
  return j;
}

PlaneEmbedding embedding_from_json(const Json& j)
{
  LabeledGraph g = graph_from_json(get_field<Json>(j, "graph", "embedding"));
  auto rot = get_field<std::vector<std::vector<int>>>(j, "rotation", "embedding");
  int outer = j.contains("outer_face") ? get_field<int>(j, "outer_face", "embedding") : 0;
  try {
    return PlaneEmbedding(std::move(g), std::move(rot), outer);
  } catch (const PreconditionError& ex) {
    throw InputError(std::string("embedding: ") + ex.what());
  }
}

Json voltage_to_json(const VoltageAssignment& v)
{
  const LabeledGraph& b = base_graph(v.base).graph;
  Json j;
  j["base"] = to_string(v.base);
  j["n"] = v.n;
  j["edges"] = Json::array();
  for (int e = 0; e < b.num_edges(); ++e)
    j["edges"].push_back({{"from", b.edge(e).u}, {"to", b.edge(e).v}, {"perm", v.perm[e]}});
  return j;
}

VoltageAssignment voltage_from_json(const Json& j)
{
  VoltageAssignment v;
  try {
    v.base = j.contains("base") ? base_kind_from_string(get_field<std::string>(j, "base", "voltage")) : BaseKind::K4neg;
  } catch (const PreconditionError& ex) {
    throw InputError(std::string("voltage: ") + ex.what());
  }
  v.n = get_field<int>(j, "n", "voltage");
  if (v.n < 1) throw InputError("voltage: n must be positive");
  const LabeledGraph& b = base_graph(v.base).graph;
  std::vector<int> id(v.n);
  for (int i = 0; i < v.n; ++i) id[i] = i;
  v.perm.assign(b.num_edges(), id);
  std::vector<char> given(b.num_edges(), 0);
  auto edges = get_field<Json>(j, "edges", "voltage");
  for (size_t i = 0; i < edges.size(); ++i) {
    int from = get_field<int>(edges[i], "from", "voltage edge");
    int to = get_field<int>(edges[i], "to", "voltage edge");
    auto perm = get_field<std::vector<int>>(edges[i], "perm", "voltage edge");
    int e = -1;
    for (int x = 0; x < b.num_edges(); ++x)
      if ((b.edge(x).u == from && b.edge(x).v == to) || (b.edge(x).u == to && b.edge(x).v == from)) e = x;
    if (e < 0) throw InputError("voltage: edge " + std::to_string(i) + " is not a base edge");
    if (given[e]) throw InputError("voltage: base edge given twice at index " + std::to_string(i));
    given[e] = 1;
    if (static_cast<int>(perm.size()) != v.n) throw InputError("voltage: edge " + std::to_string(i) + " permutation has wrong size");
    v.perm[e] = b.edge(e).u == from ? perm : inverse(perm);
  }
  try {
    validate(v);
  } catch (const PreconditionError& ex) {
    throw InputError(std::string("voltage: ") + ex.what());
  }
  return v;
}

std::vector<int> vertex_map_from_json(const Json& j)
{
  const Json& a = j.is_object() && j.contains("map") ? j.at("map") : j;
  try {
    return a.get<std::vector<int>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("vertex map: ") + ex.what());
  }
}

Json semicover_to_json(const SemiCover& sc)
{
  Json j;
  j["base"] = to_string(sc.base);
  j["embedding"] = embedding_to_json(sc.embedding);
  j["map"] = sc.vertex_map;
  return j;
}

SemiCover semicover_from_json(const Json& j)
{
  SemiCover sc;
  try {
    sc.base = base_kind_from_string(get_field<std::string>(j, "base", "semi-cover"));
  } catch (const PreconditionError& ex) {
    throw InputError(std::string("semi-cover: ") + ex.what());
  }
  sc.embedding = embedding_from_json(get_field<Json>(j, "embedding", "semi-cover"));
  if (j.contains("map")) {
    sc.vertex_map = vertex_map_from_json(j.at("map"));
  } else {
    try {
      sc.vertex_map = map_by_label(sc.embedding.graph(), sc.base);
    } catch (const PreconditionError& ex) {
      throw InputError(std::string("semi-cover: ") + ex.what());
    }
  }
  return sc;
}

Json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const LabeledGraph& g, const std::string& name)
{
  static const char* colour[7] = {"#1f77b4", "#aec7e8", "#2ca02c", "#dddddd", "#98df8a", "#d62728", "#ff9896"};
  // Index by label + 3: -3..3.
  std::ostringstream s;
  s << "graph " << name << " {\n  node [style=filled];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    s << "  v" << v << " [label=\"" << label_name(g.label(v)) << "\", fillcolor=\"" << colour[g.label(v) + 3] << "\"];\n";
  for (const Edge& e : g.edges()) s << "  v" << e.u << " -- v" << e.v << ";\n";
  s << "}\n";
  return s.str();
}

} // namespace pcover
