#pragma once

#include <functional>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

struct FaceWalk {
  std::vector<int> darts;     // cyclic; darts[0] is the least dart of the face
  std::vector<int> vertices;  // tail of each dart
  std::vector<Label> labels;
  int length() const { return static_cast<int>(darts.size()); }
  bool is_simple_cycle() const;
};

// Rotation system of a connected graph on the sphere. rotation[v] lists the
// edges at v in cyclic order; the face after arriving at v by dart d continues
// with the successor of rev(d) in v's rotation.
class PlaneEmbedding {
public:
  PlaneEmbedding() = default;
  // Throws PreconditionError on a malformed rotation or a non-spherical one.
  PlaneEmbedding(LabeledGraph g, std::vector<std::vector<int>> rotation, int outer_face = 0);

  const LabeledGraph& graph() const { return g_; }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  int outer_face() const { return outer_; }
  const std::vector<FaceWalk>& faces() const { return faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const FaceWalk& face(int f) const { return faces_.at(f); }
  int face_of_dart(int d) const { return face_of_.at(d); }
  // Next dart leaving tail(d) in rotation order.
  int succ(int d) const { return succ_.at(d); }
  int pred(int d) const { return pred_.at(d); }
  int next_in_face(int d) const { return succ_[LabeledGraph::rev(d)]; }
  // Vertices on the designated outer face.
  std::vector<char> outer_vertex_mask() const;

  void set_outer_face(int f);

private:
  LabeledGraph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> succ_, pred_, face_of_;
  std::vector<FaceWalk> faces_;
  int outer_ = 0;
};

const std::vector<FaceWalk>& faces(const PlaneEmbedding& e);

PlaneEmbedding reembed_with_outer(const PlaneEmbedding& e, int face_id);

// Mirror image: every rotation reversed. Face walks are reversed too.
PlaneEmbedding mirror(const PlaneEmbedding& e);

// The sub-embedding induced on a vertex subset (rotations restricted).
// The outer face is the face containing the first dart (in order) of the
// parent's outer face that survives, or face 0 if none does.
struct SubEmbedding {
  PlaneEmbedding embedding;
  Subgraph sub;
};
SubEmbedding restrict_embedding(const PlaneEmbedding& e, const std::vector<int>& vertices);

struct EnumerateOptions {
  // Only rotation systems in which every triangle of the graph is a face.
  bool require_facial_triangles = false;
  // Skip mirror images by fixing the orientation at the first vertex of degree >= 3.
  bool skip_mirrors = true;
};

// Every spherical rotation system (up to mirror image, if requested). The
// callback returns false to stop. Returns the number of embeddings visited.
long for_each_plane_embedding(const LabeledGraph& g, const EnumerateOptions& opt,
                              const std::function<bool(const PlaneEmbedding&)>& fn);

// c is a cycle given by its vertex sequence.
bool is_peripheral(const LabeledGraph& g, const std::vector<int>& c);

struct EulerFold {
  long n, vertices, edges, faces, triangular_faces;
};
// One 3m-gonal face and all other faces triangular in a cover of K1222.
EulerFold euler_fold_from_one_long_face(long m);

} // namespace pcover
