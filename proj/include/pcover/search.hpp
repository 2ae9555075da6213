#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcover/cover.hpp"
#include "pcover/io.hpp"

namespace pcover {

// Applied in this order: connected and planar per assignment, then canonical
// dedup, then the H-only conditions per distinct graph.
enum class Filter { Connected, Planar, Lemma41, Exclusions };
std::string to_string(Filter f);
Filter filter_from_string(const std::string& s);

enum class Pruning {
  Full,        // every edge ranges over S_n
  Normalized,  // tree edges fixed to the identity
  Conjugacy,   // and the first cotree edge to a conjugacy class representative
};
std::string to_string(Pruning p);
Pruning pruning_from_string(const std::string& s);

struct SearchSpec {
  BaseKind base = BaseKind::K4neg;
  int n = 1;
  std::vector<Filter> filters{Filter::Connected, Filter::Planar};
  bool dedup = true;
  double budget = 1e9;
  Pruning pruning = Pruning::Conjugacy;
  int workers = 1;  // does not affect the certificate
};

Json spec_to_json(const SearchSpec& s);
SearchSpec spec_from_json(const Json& j);
// Throws PreconditionError on an inconsistent spec.
void validate(const SearchSpec& s);

// (n!)^k where k counts the edges that range over S_n.
double search_estimate(const SearchSpec& s);

struct Candidate {
  std::string form;  // canonical form of the derived graph
  VoltageAssignment witness;
  long index = 0;         // first position in enumeration order
  long multiplicity = 1;  // assignments with this form
  std::vector<std::pair<Filter, bool>> verdicts;  // post-dedup filters
  bool survives = true;
  Json detail;  // H analysis when Lemma41/Exclusions ran
};

struct Certificate {
  SearchSpec spec;
  double estimate = 0;
  long visited = 0;
  std::vector<std::pair<Filter, long>> passed;  // assignments or graphs passing each filter
  std::vector<Candidate> candidates;            // after connected/planar and dedup
  bool parity_alarm = false;                    // a planar K1222 cover of odd fold
  // Sidecar data, excluded from certificate comparison.
  double seconds = 0;

  std::vector<const Candidate*> survivors() const;
};

// Throws BudgetError when the estimate exceeds spec.budget.
Certificate enumerate_covers(const SearchSpec& spec);

// Re-derives every candidate witness and compares canonical forms.
bool replay(const Certificate& c, std::string* failure = nullptr);

Json certificate_to_json(const Certificate& c);
Json timing_to_json(const Certificate& c);

// Result of the H-only necessary conditions on one K4 cover, over all its
// embeddings with facial triangles and every non-triangular outer face.
struct HAnalysis {
  // Furthest stage reached; "pass" when some embedding clears everything.
  std::string stage;
  bool lemma41 = false;     // some embedding clears the clause checks
  bool exclusions = false;  // and also every exclusion and the bead demand
  bool necklace = false;
  long embeddings = 0;
  long outer_choices = 0;
  std::optional<PlaneEmbedding> witness;  // the first fully passing embedding
  int m = -1;                             // its outer face length / 3
};

HAnalysis analyze_H_candidate(const LabeledGraph& h);
Json h_analysis_to_json(const HAnalysis& a, long h);

struct HSearchOptions {
  int workers = 1;
  double budget = 1e9;
};

struct HSearchResult {
  int h_max = 0;
  std::vector<Certificate> per_fold;  // index h-1

  long survivors() const;
  int min_surviving_fold() const;  // -1 without survivors
};

// Folds 1..h_max (at most 6) with filters connected, planar, lemma41, exclusions.
HSearchResult search_H_candidates(int h_max, const HSearchOptions& opt = {});
Json h_search_to_json(const HSearchResult& r);

} // namespace pcover
