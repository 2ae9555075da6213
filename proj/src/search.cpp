#include "pcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pcover/bounds.hpp"
#include "pcover/canonical.hpp"
#include "pcover/embedding.hpp"
#include "pcover/planarity.hpp"
#include "pcover/quotient.hpp"
#include "pcover/structure.hpp"

namespace pcover {

std::string to_string(Filter f)
{
  switch (f) {
  case Filter::Connected: return "connected";
  case Filter::Planar: return "planar";
  case Filter::Lemma41: return "lemma41";
  case Filter::Exclusions: return "exclusions";
  }
  return "?";
}

Filter filter_from_string(const std::string& s)
{
  for (Filter f : {Filter::Connected, Filter::Planar, Filter::Lemma41, Filter::Exclusions})
    if (to_string(f) == s) return f;
  throw InputError("unknown filter '" + s + "'");
}

std::string to_string(Pruning p)
{
  switch (p) {
  case Pruning::Full: return "full";
  case Pruning::Normalized: return "normalized";
  case Pruning::Conjugacy: return "conjugacy";
  }
  return "?";
}

Pruning pruning_from_string(const std::string& s)
{
  for (Pruning p : {Pruning::Full, Pruning::Normalized, Pruning::Conjugacy})
    if (to_string(p) == s) return p;
  throw InputError("unknown pruning '" + s + "'");
}

Json spec_to_json(const SearchSpec& s)
{
  Json j;
  j["base"] = to_string(s.base);
  j["n"] = s.n;
  Json fs = Json::array();
  for (Filter f : s.filters) fs.push_back(to_string(f));
  j["filters"] = fs;
  j["dedup"] = s.dedup;
  j["budget"] = s.budget;
  j["pruning"] = to_string(s.pruning);
  return j;
}

SearchSpec spec_from_json(const Json& j)
{
  SearchSpec s;
  try {
    s.base = base_kind_from_string(j.at("base").get<std::string>());
    s.n = j.at("n").get<int>();
    if (j.contains("filters")) {
      s.filters.clear();
      for (const auto& f : j["filters"]) s.filters.push_back(filter_from_string(f.get<std::string>()));
    }
    if (j.contains("dedup")) s.dedup = j["dedup"].get<bool>();
    if (j.contains("budget")) s.budget = j["budget"].get<double>();
    if (j.contains("pruning")) s.pruning = pruning_from_string(j["pruning"].get<std::string>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("search spec: ") + e.what());
  }
  return s;
}

void validate(const SearchSpec& s)
{
  if (s.n < 1 || s.n > 8) throw PreconditionError("fold must lie in 1..8");
  auto has = [&](Filter f) { return std::find(s.filters.begin(), s.filters.end(), f) != s.filters.end(); };
  for (Filter f : s.filters)
    if (std::count(s.filters.begin(), s.filters.end(), f) != 1) throw PreconditionError("repeated filter " + to_string(f));
  if (has(Filter::Lemma41) || has(Filter::Exclusions)) {
    if (s.base != BaseKind::K4neg) throw PreconditionError("H-only filters apply to covers of K4");
    if (!has(Filter::Connected) || !has(Filter::Planar)) throw PreconditionError("H-only filters need connected and planar");
  }
  if (has(Filter::Exclusions) && !has(Filter::Lemma41)) throw PreconditionError("exclusions run after lemma41");
  if (s.workers < 1) throw PreconditionError("workers must be positive");
}

namespace {

int varying_edge_count(const SearchSpec& s)
{
  const auto& b = base_graph(s.base);
  return s.pruning == Pruning::Full ? b.graph.num_edges() : static_cast<int>(cotree_edges(b).size());
}

std::vector<std::vector<int>> all_perms(int n)
{
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// One permutation per cycle type: cycles on consecutive blocks, longest first.
std::vector<std::vector<int>> class_representatives(int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      std::vector<int> p(n);
      int s = 0;
      for (int k : parts) {
        for (int i = 0; i < k; ++i) p[s + i] = s + (i + 1) % k;
        s += k;
      }
      out.push_back(p);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      parts.push_back(k);
      rec(left - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

struct Space {
  std::vector<int> edges;  // varying base edges, most significant first
  std::vector<long> radix;
  std::vector<std::vector<int>> perms, reps;
  long total = 1;
  BaseKind base;
  int n;
  bool normalized;

  VoltageAssignment decode(long index) const
  {
    VoltageAssignment v = identity_voltage(base, n);
    v.normalized = normalized;
    for (int i = static_cast<int>(edges.size()) - 1; i >= 0; --i) {
      long d = index % radix[i];
      index /= radix[i];
      v.perm[edges[i]] = (i == 0 && !reps.empty()) ? reps[d] : perms[d];
    }
    return v;
  }
};

Space make_space(const SearchSpec& s)
{
  Space sp;
  sp.base = s.base;
  sp.n = s.n;
  sp.normalized = s.pruning != Pruning::Full;
  const auto& b = base_graph(s.base);
  if (s.pruning == Pruning::Full)
    for (int e = 0; e < b.graph.num_edges(); ++e) sp.edges.push_back(e);
  else
    sp.edges = cotree_edges(b);
  sp.perms = all_perms(s.n);
  if (s.pruning == Pruning::Conjugacy && !sp.edges.empty()) sp.reps = class_representatives(s.n);
  for (std::size_t i = 0; i < sp.edges.size(); ++i) {
    long r = (i == 0 && !sp.reps.empty()) ? static_cast<long>(sp.reps.size()) : static_cast<long>(sp.perms.size());
    sp.radix.push_back(r);
    sp.total *= r;
  }
  return sp;
}

struct Hit {
  long index;
  std::string form;
};

struct ChunkResult {
  long visited = 0, connected = 0, planar = 0;
  std::vector<Hit> hits;
};

template <class Fn>
void run_parallel(int workers, long jobs, Fn&& fn)
{
  std::atomic<long> next{0};
  auto body = [&] {
    for (long j; (j = next++) < jobs;) fn(j);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

} // namespace

double search_estimate(const SearchSpec& s)
{
  double fact = std::tgamma(s.n + 1.0);
  return std::pow(fact, varying_edge_count(s));
}

std::vector<const Candidate*> Certificate::survivors() const
{
  std::vector<const Candidate*> out;
  for (const auto& c : candidates)
    if (c.survives) out.push_back(&c);
  return out;
}

Certificate enumerate_covers(const SearchSpec& spec_in)
{
  auto start = std::chrono::steady_clock::now();
  SearchSpec spec = spec_in;
  validate(spec);
  std::sort(spec.filters.begin(), spec.filters.end());
  Certificate cert;
  cert.spec = spec;
  cert.estimate = search_estimate(spec);
  if (cert.estimate > spec.budget) {
    std::ostringstream msg;
    msg << to_string(spec.base) << " at n=" << spec.n << ": " << cert.estimate << " assignments exceed the budget of "
        << spec.budget;
    throw BudgetError(msg.str(), cert.estimate);
  }
  auto has = [&](Filter f) { return std::find(spec.filters.begin(), spec.filters.end(), f) != spec.filters.end(); };
  Space sp = make_space(spec);

  long chunks = std::min<long>(sp.total, 64L * spec.workers);
  long per = (sp.total + chunks - 1) / chunks;
  chunks = (sp.total + per - 1) / per;
  std::vector<ChunkResult> res(chunks);
  run_parallel(spec.workers, chunks, [&](long c) {
    ChunkResult& r = res[c];
    for (long i = c * per; i < std::min(sp.total, (c + 1) * per); ++i) {
      ++r.visited;
      DerivedCover d = derive(sp.decode(i));
      if (has(Filter::Connected) && !is_connected(d.graph)) continue;
      ++r.connected;
      if (has(Filter::Planar) && !is_planar(d.graph)) continue;
      ++r.planar;
      r.hits.push_back({i, canonical_form(d.graph)});
    }
  });

  long connected = 0, planar = 0;
  std::map<std::string, std::size_t> seen;
  for (const auto& r : res) {
    cert.visited += r.visited;
    connected += r.connected;
    planar += r.planar;
    for (const auto& h : r.hits) {
      if (spec.dedup) {
        auto it = seen.find(h.form);
        if (it != seen.end()) {
          ++cert.candidates[it->second].multiplicity;
          continue;
        }
        seen.emplace(h.form, cert.candidates.size());
      }
      Candidate c;
      c.form = h.form;
      c.index = h.index;
      c.witness = sp.decode(h.index);
      cert.candidates.push_back(std::move(c));
    }
  }
  if (has(Filter::Connected)) cert.passed.push_back({Filter::Connected, connected});
  if (has(Filter::Planar)) cert.passed.push_back({Filter::Planar, planar});

  if (has(Filter::Lemma41)) {
    std::vector<HAnalysis> an(cert.candidates.size());
    run_parallel(spec.workers, static_cast<long>(an.size()),
                 [&](long i) { an[i] = analyze_H_candidate(derive(cert.candidates[i].witness).graph); });
    long l41 = 0, exc = 0;
    for (std::size_t i = 0; i < an.size(); ++i) {
      Candidate& c = cert.candidates[i];
      c.verdicts.push_back({Filter::Lemma41, an[i].lemma41});
      l41 += an[i].lemma41;
      c.survives = an[i].lemma41;
      if (has(Filter::Exclusions)) {
        c.verdicts.push_back({Filter::Exclusions, an[i].exclusions});
        exc += an[i].exclusions;
        c.survives = an[i].exclusions;
      }
      c.detail = h_analysis_to_json(an[i], spec.n);
    }
    cert.passed.push_back({Filter::Lemma41, l41});
    if (has(Filter::Exclusions)) cert.passed.push_back({Filter::Exclusions, exc});
  }
  cert.parity_alarm = spec.base == BaseKind::K1222 && spec.n % 2 == 1 && !cert.survivors().empty();
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

bool replay(const Certificate& c, std::string* failure)
{
  for (const auto& cand : c.candidates) {
    DerivedCover d = derive(cand.witness);
    std::string why;
    if (canonical_form(d.graph) != cand.form) why = "canonical form differs";
    else if (!verify_cover(d.projection).ok) why = "witness does not derive a cover";
    else if (verify_cover(d.projection).fold != c.spec.n) why = "fold differs";
    if (!why.empty()) {
      if (failure) *failure = "candidate at index " + std::to_string(cand.index) + ": " + why;
      return false;
    }
  }
  return true;
}

Json certificate_to_json(const Certificate& c)
{
  Json j;
  j["format_version"] = 1;
  j["kind"] = "search_certificate";
  j["spec"] = spec_to_json(c.spec);
  j["estimate"] = c.estimate;
  j["visited"] = c.visited;
  Json fs = Json::array();
  for (auto [f, k] : c.passed) fs.push_back({{"filter", to_string(f)}, {"passed", k}});
  j["filters"] = fs;
  j["distinct"] = c.candidates.size();
  j["survivors"] = c.survivors().size();
  j["parity_alarm"] = c.parity_alarm;
  Json cs = Json::array();
  for (const auto& cand : c.candidates) {
    Json x;
    x["canonical_form"] = cand.form;
    x["index"] = cand.index;
    x["multiplicity"] = cand.multiplicity;
    x["voltage"] = voltage_to_json(cand.witness);
    Json v = Json::object();
    for (auto [f, ok] : cand.verdicts) v[to_string(f)] = ok;
    x["verdicts"] = v;
    x["survives"] = cand.survives;
    if (!cand.detail.is_null()) x["analysis"] = cand.detail;
    cs.push_back(x);
  }
  j["candidates"] = cs;
  return j;
}

Json timing_to_json(const Certificate& c)
{
  return {{"seconds", c.seconds}, {"workers", c.spec.workers}};
}

HAnalysis analyze_H_candidate(const LabeledGraph& h)
{
  static const std::vector<std::string> stage_names{
      "K4 (clause e)",
      "not 2-connected (clause g)",
      "(-1,-2,-3) lift not made of triangles",
      "no embedding with facial triangles",
      "face pattern or outer cycle (clauses a, h)",
      "internal hexagonal face (clause i)",
      "necklace or no internal non-triangular face",
      "two internal non-triangular faces",
      "shared beads",
      "bead demand",
      "pass",
  };
  HAnalysis a;
  int best = 0;
  auto reach = [&](int s) { best = std::max(best, s); };
  auto done = [&] {
    a.stage = stage_names[best];
    return a;
  };
  a.necklace = is_necklace(h);
  if (h.num_vertices() == 4) return done();
  reach(1);
  if (connectivity(h) < 2) return done();
  reach(2);
  for (const auto& c : find_cycles_covering(h, {-1, -2, -3}))
    if (c.kind != LiftComponent::Cycle || c.length() != 3) return done();
  reach(3);
  EnumerateOptions eo;
  eo.require_facial_triangles = true;
  for_each_plane_embedding(h, eo, [&](const PlaneEmbedding& e) {
    ++a.embeddings;
    reach(4);
    for (int f = 0; f < e.num_faces(); ++f) {
      if (e.face(f).length() == 3) continue;
      ++a.outer_choices;
      PlaneEmbedding emb = reembed_with_outer(e, f);
      StructureReport r = analyze_bare_H(emb);
      if (r.clauses.at('a').verdict != Verdict::Pass || r.clauses.at('h').verdict != Verdict::Pass) continue;
      reach(5);
      if (r.clauses.at('i').verdict != Verdict::Pass) continue;
      reach(6);
      a.lemma41 = true;
      ExclusionVerdict x = check_exclusions(r);
      if (x.no_room || x.necklace) continue;
      reach(7);
      if (x.two_faces) continue;
      reach(8);
      if (!x.bead_sharing.empty()) continue;
      reach(9);
      bool demand_ok = true;
      try {
        QuotientGraph q = quotient_Hpp(emb);
        for (const auto& d : bead_demands(q))
          if (q.face_beads(d.face) < d.demand) demand_ok = false;
      } catch (const PreconditionError&) {
        demand_ok = false;
      }
      if (!demand_ok) continue;
      reach(10);
      a.exclusions = true;
      a.witness = emb;
      a.m = emb.face(emb.outer_face()).length() / 3;
      return false;
    }
    return true;
  });
  return done();
}

Json h_analysis_to_json(const HAnalysis& a, long h)
{
  Json j;
  j["stage"] = a.stage;
  j["lemma41"] = a.lemma41;
  j["exclusions"] = a.exclusions;
  j["necklace"] = a.necklace;
  j["embeddings"] = a.embeddings;
  j["outer_choices"] = a.outer_choices;
  if (a.witness) {
    j["m"] = a.m;
    if (2 * a.m <= 3 * h) {
      auto b = interior_triangle_lower_bound(h, a.m);
      j["interior_triangle_bound"] = b.triangles;
    }
    j["witness"] = embedding_to_json(*a.witness);
  }
  return j;
}

long HSearchResult::survivors() const
{
  long s = 0;
  for (const auto& c : per_fold) s += static_cast<long>(c.survivors().size());
  return s;
}

int HSearchResult::min_surviving_fold() const
{
  for (std::size_t h = 0; h < per_fold.size(); ++h)
    if (!per_fold[h].survivors().empty()) return static_cast<int>(h) + 1;
  return -1;
}

HSearchResult search_H_candidates(int h_max, const HSearchOptions& opt)
{
  if (h_max < 1 || h_max > 6) throw PreconditionError("h_max must lie in 1..6");
  HSearchResult r;
  r.h_max = h_max;
  for (int h = 1; h <= h_max; ++h) {
    SearchSpec s;
    s.base = BaseKind::K4neg;
    s.n = h;
    s.filters = {Filter::Connected, Filter::Planar, Filter::Lemma41, Filter::Exclusions};
    s.budget = opt.budget;
    s.workers = opt.workers;
    r.per_fold.push_back(enumerate_covers(s));
  }
  return r;
}

Json h_search_to_json(const HSearchResult& r)
{
  Json j;
  j["format_version"] = 1;
  j["kind"] = "h_search_certificate";
  j["h_max"] = r.h_max;
  Json folds = Json::array();
  for (const auto& c : r.per_fold) folds.push_back(certificate_to_json(c));
  j["folds"] = folds;
  j["survivors"] = r.survivors();
  j["min_surviving_fold"] = r.min_surviving_fold();
  return j;
}

} // namespace pcover
