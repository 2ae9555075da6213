// Command-line driver. Exit codes: 0 success, 1 predicate failure,
// 2 budget refusal, 3 input error.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pcover/bounds.hpp"
#include "pcover/canonical.hpp"
#include "pcover/io.hpp"
#include "pcover/planarity.hpp"
#include "pcover/quotient.hpp"
#include "pcover/search.hpp"
#include "pcover/structure.hpp"

using namespace pcover;

namespace {

constexpr int kOk = 0, kPredicate = 1, kBudget = 2, kInput = 3;

struct Common {
  std::string input;
  std::string fixture;
  std::string out;
  double budget = 1e9;
  int workers = 1;
  std::vector<std::string> filters;
};

std::string fixture_path(const std::string& name)
{
  return std::string(PCOVER_FIXTURE_DIR) + "/" + name + ".json";
}

// Positional file, or --fixture <name> from the bundled corpus.
Json load_input(const Common& c)
{
  if (!c.fixture.empty()) return read_json_file(fixture_path(c.fixture));
  if (c.input.empty()) throw InputError("no input file given (pass a path or --fixture <name>)");
  return read_json_file(c.input);
}

// Fails early so a long run never ends on an unwritable path.
void check_writable(const std::string& path)
{
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::app);
  if (!probe) throw InputError("cannot write " + path);
}

void emit(const Common& c, const Json& j)
{
  if (c.out.empty()) std::cout << dump(j) << "\n";
  else write_text_file(c.out, dump(j) + "\n");
}

LabeledGraph graph_of(const Json& j)
{
  if (j.contains("vertices")) return graph_from_json(j);
  if (j.contains("graph")) return graph_of(j["graph"]);
  if (j.contains("embedding")) return embedding_from_json(j["embedding"]).graph();
  throw InputError("no graph found in input");
}

void print_violation(const CoverCheck& r)
{
  const auto& v = *r.violation;
  std::cout << "violation at vertex " << v.vertex << " (over base vertex " << v.base_vertex << "): " << v.reason << "\n";
}

int cmd_verify(const Common& c, const std::string& base_name, const std::string& map_path)
{
  LabeledGraph g = graph_of(load_input(c));
  BaseKind base = base_kind_from_string(base_name);
  std::vector<int> map = map_path.empty() ? map_by_label(g, base) : vertex_map_from_json(read_json_file(map_path));
  CoverCheck r;
  try {
    r = verify_cover(g, base_graph(base), map);
  } catch (const PreconditionError& e) {
    std::cout << "not a cover: " << e.what() << "\n";
    return kPredicate;
  }
  Json j{{"ok", r.ok}, {"fold", r.fold}, {"component_folds", r.component_folds}};
  if (r.violation) j["violation"] = {{"vertex", r.violation->vertex}, {"reason", r.violation->reason}};
  if (!c.out.empty()) emit(c, j);
  if (!r.ok) {
    print_violation(r);
    return kPredicate;
  }
  std::cout << "cover of " << base_name << ", fold " << r.fold << "\n";
  return kOk;
}

int cmd_derive(const Common& c)
{
  VoltageAssignment v = voltage_from_json(load_input(c));
  DerivedCover d = derive(v);
  CoverCheck r = verify_cover(d.projection);
  Json j{{"graph", graph_to_json(d.graph)}, {"map", d.projection.vertex_map}, {"fold", r.fold},
         {"connected", is_connected(d.graph)}, {"canonical_form", canonical_form(d.graph)}};
  emit(c, j);
  return kOk;
}

std::array<Label, 3> parse_cycle(const std::string& s)
{
  std::array<Label, 3> out{};
  std::stringstream in(s);
  std::string tok;
  int k = 0;
  while (std::getline(in, tok, ',')) {
    if (k == 3) throw InputError("--cycle takes exactly three labels");
    try {
      out[k++] = static_cast<Label>(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad label '" + tok + "' in --cycle");
    }
  }
  if (k != 3) throw InputError("--cycle takes exactly three labels");
  return out;
}

int cmd_lift(const Common& c, const std::string& cycle)
{
  LabeledGraph g = graph_of(load_input(c));
  auto labels = parse_cycle(cycle);
  Json comps = Json::array();
  long total = 0;
  for (const auto& comp : find_cycles_covering(g, labels)) {
    const char* kind = comp.kind == LiftComponent::Cycle ? "cycle" : comp.kind == LiftComponent::Path ? "path" : "other";
    comps.push_back({{"kind", kind}, {"length", comp.length()}, {"vertices", comp.vertices}});
    total += comp.length();
  }
  emit(c, {{"cycle", labels}, {"components", comps}, {"total_length", total}});
  return kOk;
}

int cmd_embed(const Common& c)
{
  LabeledGraph g = graph_of(load_input(c));
  PlanarityResult r = planarity(g);
  Json j{{"planar", r.planar}};
  if (r.embedding) j["embedding"] = embedding_to_json(*r.embedding);
  if (!r.planar)
    j["kuratowski"] = {{"kind", to_string(r.witness.kind)},
                       {"edges", r.witness.edges},
                       {"branch_vertices", r.witness.branch_vertices}};
  emit(c, j);
  if (!c.out.empty()) std::cout << (r.planar ? "planar" : "not planar") << "\n";
  return r.planar ? kOk : kPredicate;
}

int cmd_analyze(const Common& c, bool internal_only)
{
  Json in = load_input(c);
  StructureOptions opt;
  opt.pattern_internal_only = internal_only;
  StructureReport rep;
  if (in.value("kind", "") == "semicover" || in.contains("map")) {
    SemiCover sc = semicover_from_json(in);
    CoverCheck chk = verify_semicover(sc);
    if (!chk.ok) {
      std::cout << "invalid semi-cover: ";
      print_violation(chk);
      return kPredicate;
    }
    rep = check_lemma_Hfaces(sc, opt);
  } else {
    rep = analyze_bare_H(embedding_from_json(in.at("embedding")), opt);
  }
  ExclusionVerdict x = check_exclusions(rep);
  Json j = report_to_json(rep);
  j["exclusions"] = exclusions_to_json(x);
  emit(c, j);

  std::ostream& os = c.out.empty() ? std::cerr : std::cout;
  for (const auto& [name, cl] : rep.clauses) os << "clause (" << name << "): " << to_string(cl.verdict) << "\n";
  os << "beads " << rep.beads.size() << ", trapezia " << rep.trapezia.size() << "\n";
  if (x.necklace) os << "excluded: necklace\n";
  if (x.two_faces) os << "excluded: two internal non-triangular faces\n";
  if (x.no_room) os << "excluded: no internal non-triangular face\n";
  for (const auto& p : x.bead_sharing) os << "excluded: faces " << p.f1 << " and " << p.f2 << " share " << p.shared << " beads (m=" << p.m << ")\n";
  if (!x.excluded()) os << "not excluded\n";
  return kOk;
}

int cmd_quotient(const Common& c, int enumerate, bool allow_theta)
{
  if (enumerate > 0) {
    HppOptions opt;
    opt.exclude_theta = !allow_theta;
    Json list = Json::array();
    for (const auto& q : enumerate_Hpp(enumerate, opt)) {
      Json j = quotient_to_json(q);
      j["min_beads"] = min_beads_to_json(min_beads(q));
      list.push_back(j);
    }
    emit(c, {{"a_max", enumerate}, {"quotients", list}});
    return kOk;
  }
  Json in = load_input(c);
  QuotientGraph q = in.value("kind", "") == "quotient" ? quotient_from_json(in) : quotient_Hpp(embedding_from_json(in.at("embedding")));
  MinBeadsResult mb = min_beads(q);
  Json j = quotient_to_json(q);
  j["min_beads"] = min_beads_to_json(mb);
  emit(c, j);
  if (mb.feasible) std::cerr << "a=" << q.a << ", minimum beads " << mb.beads << "\n";
  return kOk;
}

Json load_spec(const Common& c)
{
  const std::string& s = c.input;
  if (!c.fixture.empty()) return load_input(c);
  for (const char* name : {"k1222-n2", "k4-n2", "k4-h-le-5"})
    if (s == name) {
      std::string file = "spec_" + s;
      std::replace(file.begin(), file.end(), '-', '_');
      return read_json_file(fixture_path(file));
    }
  return load_input(c);
}

void write_timing(const Common& c, const Json& t)
{
  if (!c.out.empty()) write_text_file(c.out + ".timing.json", dump(t) + "\n");
}

int cmd_search(const Common& c)
{
  Json spec = load_spec(c);
  check_writable(c.out);
  if (spec.value("mode", "") == "h-candidates") {
    int h_max = spec.at("h_max").get<int>();
    std::cerr << "searching K4 covers for H candidates, h <= " << h_max << "\n";
    HSearchResult r = search_H_candidates(h_max, {c.workers, c.budget});
    emit(c, h_search_to_json(r));
    Json t = Json::array();
    for (const auto& cert : r.per_fold) t.push_back(timing_to_json(cert));
    write_timing(c, {{"folds", t}});
    std::cout << "survivors " << r.survivors() << "\n";
    return kOk;
  }
  SearchSpec s = spec_from_json(spec);
  s.budget = c.budget;
  s.workers = c.workers;
  if (!c.filters.empty()) {
    s.filters.clear();
    for (const auto& f : c.filters) s.filters.push_back(filter_from_string(f));
  }
  std::cerr << "searching " << to_string(s.base) << " at n=" << s.n << ", estimate " << search_estimate(s) << "\n";
  Certificate cert = enumerate_covers(s);
  emit(c, certificate_to_json(cert));
  write_timing(c, timing_to_json(cert));
  std::cout << "visited " << cert.visited << ", survivors " << cert.survivors().size() << "\n";
  return kOk;
}

int cmd_bounds(const Common& c, long n)
{
  PipelineVerdict v = theorem_pipeline(n);
  emit(c, verdict_to_json(v));
  std::ostream& os = c.out.empty() ? std::cerr : std::cout;
  for (const auto& step : v.trace) os << "  " << step.name << ": " << step.instantiated << (step.holds ? "" : " (fails)") << "\n";
  os << "n=" << n << ": " << (v.contradiction ? "contradiction" : "no contradiction") << "\n";
  return kOk;
}

int cmd_export_dot(const Common& c)
{
  Json in = load_input(c);
  std::string text;
  if (in.contains("candidates")) {
    for (const auto& cand : in["candidates"]) {
      if (!cand.value("survives", true)) continue;
      DerivedCover d = derive(voltage_from_json(cand.at("voltage")));
      text += to_dot(d.graph, "survivor_" + std::to_string(cand.at("index").get<long>()));
    }
  } else if (in.contains("base") && in.contains("edges") && in.contains("n")) {
    text = to_dot(derive(voltage_from_json(in)).graph);
  } else {
    text = to_dot(graph_of(in));
  }
  if (c.out.empty()) std::cout << text;
  else write_text_file(c.out, text);
  return kOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Planar cover toolkit"};
  app.require_subcommand(1);
  Common c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", c.input, "input JSON file");
    sub->add_option("--fixture", c.fixture, "bundled fixture name instead of a file");
    sub->add_option("--out", c.out, "output file (default: standard output)");
  };

  std::string base = "K1222", map_path, cycle = "-1,-2,-3";
  bool internal_only = false, allow_theta = false;
  int enumerate = 0;
  long n = 0;

  auto* verify = app.add_subcommand("verify", "check a covering projection");
  common(verify);
  verify->add_option("--base", base, "base graph: K1222 or K4neg");
  verify->add_option("--map", map_path, "vertex map JSON (default: by label)");

  auto* derive_cmd = app.add_subcommand("derive", "derive a cover from a voltage assignment");
  common(derive_cmd);

  auto* lift = app.add_subcommand("lift", "components of the lift of a base 3-cycle");
  common(lift);
  lift->add_option("--cycle", cycle, "three labels, e.g. -1,-2,-3");

  auto* embed = app.add_subcommand("embed", "planarity test with embedding or Kuratowski witness");
  common(embed);

  auto* analyze = app.add_subcommand("analyze", "structure report for a semi-cover or a bare H");
  common(analyze);
  analyze->add_flag("--internal-only", internal_only, "check face patterns on internal faces only");

  auto* quotient = app.add_subcommand("quotient", "H'' quotient and minimum bead placement");
  common(quotient);
  quotient->add_option("--enumerate", enumerate, "list every H'' with a <= N instead");
  quotient->add_flag("--allow-theta", allow_theta, "keep the two-vertex triple edge");

  auto* search = app.add_subcommand("search", "exhaustive cover search");
  common(search);
  search->add_option("--budget", c.budget, "node limit");
  search->add_option("--workers", c.workers, "worker threads");
  search->add_option("--filters", c.filters, "comma-separated filters")->delimiter(',');

  auto* bounds = app.add_subcommand("bounds", "counting pipeline for fold n");
  bounds->add_option("n", n, "fold number")->required();
  bounds->add_option("--out", c.out, "output file (default: standard output)");

  auto* dot = app.add_subcommand("export-dot", "DOT for a graph, voltage assignment or certificate survivors");
  common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*verify) return cmd_verify(c, base, map_path);
    if (*derive_cmd) return cmd_derive(c);
    if (*lift) return cmd_lift(c, cycle);
    if (*embed) return cmd_embed(c);
    if (*analyze) return cmd_analyze(c, internal_only);
    if (*quotient) return cmd_quotient(c, enumerate, allow_theta);
    if (*search) return cmd_search(c);
    if (*bounds) return cmd_bounds(c, n);
    if (*dot) return cmd_export_dot(c);
  } catch (const BudgetError& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPredicate;
  }
  return kOk;
}
