#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcover/io.hpp"

namespace pcover {

// Face length -> number of faces of that length.
using FaceCensus = std::map<int, long>;

// 2f2 + f4 - sum_{i>=8} ((i-6)/2) f_i; the identity says this equals 6.
long eq_beads_lhs(const FaceCensus& c);
bool check_eq_beads(const FaceCensus& c);

struct InteriorTriangleBound {
  long internal_octahedral;  // 3h - 2m
  long triangles;            // ceil(h - 2m/3)
};
InteriorTriangleBound interior_triangle_lower_bound(long h, long m);

struct LongCycleBound {
  long per_pair;  // 3(2n - 2h - 2t)
  long total;     // 12(2n - 2h - 2t)
  long lower;     // strictly more than 6n, i.e. 6n + 1
  bool contradiction() const { return total < lower; }
};
LongCycleBound longcycle_upper_bound(long n, long h, long t);

struct PipelineStep {
  std::string name;
  std::string statement;
  std::string instantiated;
  bool holds;
};

struct PipelineVerdict {
  long n, h, t;
  bool contradiction;
  std::vector<PipelineStep> trace;
};

// h = 6 from the H search; t from interior_triangle_lower_bound over m < h.
PipelineVerdict theorem_pipeline(long n, long h = 6);

// t = min over outer parameters 1 <= m < h of the interior triangle bound.
long forced_interior_triangles(long h);

Json verdict_to_json(const PipelineVerdict& v);

} // namespace pcover
