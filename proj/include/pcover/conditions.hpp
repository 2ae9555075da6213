#pragma once

#include <array>
#include <vector>

#include "pcover/cover.hpp"
#include "pcover/embedding.hpp"

namespace pcover {

struct ConditionsABCD {
  int fold = 0;                // (A) raw statistic
  int triangular_faces = 0;    // (B) raw statistic
  bool c_short_lifts_facial = true;
  bool d_no_long_facial_lift = true;
  std::vector<std::vector<int>> c_failures;  // non-facial short lifts (vertex triples)
  std::vector<int> d_failures;               // faces that are long lifted cycles
};

// Label triples forming triangles of the base, sorted.
std::vector<std::array<Label, 3>> base_triangles(BaseKind base);

// Throws PreconditionError unless proj is a cover embedded by e.
ConditionsABCD check_conditions_ABCD(const PlaneEmbedding& e, const CoverProjection& proj);

} // namespace pcover
