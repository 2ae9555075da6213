#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcover/cover.hpp"
#include "pcover/embedding.hpp"
#include "pcover/io.hpp"

namespace pcover {

struct FacePattern {
  enum Kind { Triangle, Pattern, Mismatch } kind = Mismatch;
  int m = 0;                                // length / 3
  std::vector<std::pair<Label, Label>> pairs;  // (a_i, b_i) after each 0
  int mismatch_position = -1;               // index into the given sequence
};

// Cyclic label sequence of a face of an embedded K4 cover. Throws on labels
// outside {0,-1,-2,-3}.
FacePattern face_label_pattern(const std::vector<Label>& cyclic_labels);
FacePattern face_label_pattern(const FaceWalk& f);

// K4 minus the (0,-k) edge; vi and vj are the inner (degree-3) vertices.
struct Bead {
  int v0, vi, vj, vk;
  Label type;  // label of vk
};

std::vector<Bead> detect_beads(const LabeledGraph& h);
std::vector<Bead> detect_beads(const PlaneEmbedding& h);

// Beads listed bottom-up: the bottom endpoint (a 0) is joined to beads[0].vk,
// beads[t].v0 to beads[t+1].vk, and the last v0 to the top endpoint (a -k).
struct StringDesc {
  std::vector<int> beads;  // indices into the bead list
  Label type;
  int bottom = -1, top = -1;  // endpoints; -1 for a cyclic string
  bool cyclic = false;
  bool maximal = true;
};

std::vector<StringDesc> detect_strings(const LabeledGraph& h, const std::vector<Bead>& beads);
std::vector<StringDesc> detect_strings(const PlaneEmbedding& h);
bool is_necklace(const LabeledGraph& h);
bool is_necklace(const PlaneEmbedding& h);

// Triangle (vi,vj,vk) labelled (i,j,k) with outer vertices neg_k (label -k,
// adjacent to vi and vj) and neg_i (label -i, adjacent to vj and vk).
struct Trapezium {
  int vi, vj, vk, neg_k, neg_i;
  Label type;  // j
};

std::vector<Trapezium> detect_trapezia(const LabeledGraph& g);
std::vector<Trapezium> detect_trapezia(const SemiCover& sc);

// H inside a semi-cover: the restricted embedding with the H face holding
// every other vertex.
struct HInSemiCover {
  SubEmbedding h;
  std::vector<int> face_of_vertex;  // G' vertex -> H face, -1 for H vertices
};

// Lift of K4 on {0,-1,-2,-3} inside a semi-cover, as connected components.
std::vector<std::vector<int>> k4_lift_components(const LabeledGraph& g);
HInSemiCover locate_H(const SemiCover& sc, const std::vector<int>& h_vertices);

struct Attachment {
  int triangle_vertex;  // G' id
  int vertex;           // G' id of the H vertex
  Label label;
  int position;  // along the string on the face side, -1 if not on it
};

struct SupportedTriangle {
  std::array<int, 3> vertices;  // labelled 1,2,3
  std::vector<Attachment> attachments;
  bool supported = false;
  int bottom = -1, top = -1;  // positions
  Label bottom_label = 0, top_label = 0;
  std::vector<int> below;  // triangles preceding this one in the order
  bool minimal = false;
  int configuration = 0;  // 1..3 for a matched minimal triangle, else 0
};

struct TrapeziumOnString {
  int trapezium;  // index into the semi-cover's trapezium list
  int neg_k_position, neg_i_position;
};

struct SupportForest {
  int face;
  std::vector<int> string_path;  // G' ids by position
  std::vector<SupportedTriangle> triangles;
  Label set_bottom_label = 0, set_top_label = 0;  // over all supported triangles
  bool any_supported = false;
  std::vector<TrapeziumOnString> trapezia;
};

// String s and H face ids refer to loc.h.embedding.
SupportForest triangles_supported_on_string(const SemiCover& sc, const HInSemiCover& loc, const StringDesc& s,
                                            const std::vector<Bead>& beads, int face);

enum class Verdict { Pass, Fail, NotEvaluated };
std::string to_string(Verdict v);

struct ClauseResult {
  Verdict verdict = Verdict::NotEvaluated;
  std::string detail;
};

struct FaceInfo {
  int id;
  bool outer;
  int length;
  std::vector<int> vertices;  // parent ids
  std::vector<Label> labels;
  FacePattern pattern;
  int t = -1;  // (1,2,3) triangles inside; -1 when unknown
  std::vector<int> beads;  // beads with an inner vertex on this face
};

struct BeadShare {
  int f1, f2;
  int shared;
};

struct StructureOptions {
  bool pattern_internal_only = false;
};

struct StructureReport {
  bool bare = true;
  PlaneEmbedding h;
  std::vector<int> to_parent;  // H vertex -> reported id
  std::vector<FaceInfo> faces;
  std::vector<Bead> beads;  // H vertex ids
  std::vector<StringDesc> strings;
  bool necklace = false;
  std::vector<Trapezium> trapezia;  // G' ids
  std::map<char, ClauseResult> clauses;
  std::vector<int> internal_nontriangular;
  std::vector<BeadShare> shared_beads;

  bool all_clauses_pass() const;
};

// Full suite for a semi-cover over K1222 and the vertex set of H.
StructureReport check_lemma_Hfaces(const SemiCover& sc, const std::vector<int>& h_vertices,
                                   const StructureOptions& opt = {});
// H is the K4-lift component meeting the outer face.
StructureReport check_lemma_Hfaces(const SemiCover& sc, const StructureOptions& opt = {});
// Clauses needing G' interior data are NotEvaluated.
StructureReport analyze_bare_H(const PlaneEmbedding& h, const StructureOptions& opt = {});

struct SharedBeadHit {
  int f1, f2, m, shared;
};

struct ExclusionVerdict {
  bool no_room = false;    // no internal non-triangular face
  bool necklace = false;   // exactly one
  bool two_faces = false;  // exactly two
  std::vector<SharedBeadHit> bead_sharing;
  bool excluded() const { return no_room || necklace || two_faces || !bead_sharing.empty(); }
};

// Pair test on faces of lengths 3*l1, 3*l2: m = max(l1,l2) >= 3, shared >= m-2.
bool bead_sharing_fires(int len1, int len2, int shared, int* m_out = nullptr);

ExclusionVerdict check_exclusions(const StructureReport& r);

Json report_to_json(const StructureReport& r);
Json exclusions_to_json(const ExclusionVerdict& x);
Json support_to_json(const SupportForest& s);

} // namespace pcover
