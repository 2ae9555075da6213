#include "pcover/bounds.hpp"

#include <algorithm>
#include <limits>

namespace pcover {

namespace {

std::string str(long x) { return std::to_string(x); }

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

} // namespace

long eq_beads_lhs(const FaceCensus& c)
{
  long s = 0;
  for (auto [len, count] : c) {
    if (len <= 0 || len % 2 != 0) throw PreconditionError("face length " + str(len) + " in a bipartite quotient census");
    if (count < 0) throw PreconditionError("negative face count");
    if (len == 2) s += 2 * count;
    else if (len == 4) s += count;
    else if (len >= 8) s -= (len - 6) / 2 * count;
  }
  return s;
}

bool check_eq_beads(const FaceCensus& c) { return eq_beads_lhs(c) == 6; }

InteriorTriangleBound interior_triangle_lower_bound(long h, long m)
{
  if (h < 0 || m < 0) throw PreconditionError("negative input");
  if (2 * m > 3 * h) throw PreconditionError("2m exceeds 3h");
  long inner = 3 * h - 2 * m;
  // Each inner octahedral vertex needs two triangle neighbours; each triangle
  // vertex takes two octahedral neighbours: ceil(2(3h-2m) / 6).
  return {inner, ceil_div(2 * inner, 6)};
}

LongCycleBound longcycle_upper_bound(long n, long h, long t)
{
  if (n < 0 || h < 0 || t < 0) throw PreconditionError("negative input");
  if (n < h + t) throw PreconditionError("n must be at least h + t");
  long rest = 2 * n - 2 * h - 2 * t;
  return {3 * rest, 12 * rest, 6 * n + 1};
}

long forced_interior_triangles(long h)
{
  long t = std::numeric_limits<long>::max();
  for (long m = 1; m < h; ++m) t = std::min(t, interior_triangle_lower_bound(h, m).triangles);
  return t == std::numeric_limits<long>::max() ? 0 : t;
}

PipelineVerdict theorem_pipeline(long n, long h)
{
  if (n % 2 != 0) throw PreconditionError("fold number must be even");
  if (n < 4) throw PreconditionError("fold number must be at least 4");
  PipelineVerdict v{n, h, forced_interior_triangles(h), false, {}};
  long t = v.t;
  v.trace.push_back({"parity", "a planar cover of a non-planar base has even fold", "n = " + str(n) + " is even", true});
  v.trace.push_back({"interior_triangles", "t = min over 1 <= m < h of ceil(h - 2m/3); m = h is the necklace",
                     "h = " + str(h) + ", t = " + str(t), true});
  bool domains = n >= 2 * h;
  v.trace.push_back({"two_domains", "two disjoint semi-covers each hold an H of fold >= h, so n >= 2h",
                     str(n) + " >= " + str(2 * h), domains});
  long rest = 2 * n - 2 * h - 2 * t;
  bool budget = rest >= 0;
  v.trace.push_back({"label_budget", "labels +-1 outside the two subcovers: 2n - 2h - 2t >= 0",
                     "2*" + str(n) + " - 2*" + str(h) + " - 2*" + str(t) + " = " + str(rest) + " >= 0", budget});
  bool longcycle = true;
  if (budget) {
    auto b = longcycle_upper_bound(n, h, t);
    longcycle = !b.contradiction();
    v.trace.push_back({"long_cycles", "total long octahedral 3-cycle length: 12(2n - 2h - 2t) >= 6n + 1",
                       "12*" + str(rest) + " = " + str(b.total) + " >= " + str(b.lower), longcycle});
  }
  v.contradiction = !(domains && budget && longcycle);
  return v;
}

Json verdict_to_json(const PipelineVerdict& v)
{
  Json j;
  j["format_version"] = 1;
  j["n"] = v.n;
  j["h"] = v.h;
  j["t"] = v.t;
  j["trace"] = Json::array();
  for (const auto& s : v.trace)
    j["trace"].push_back({{"step", s.name}, {"statement", s.statement}, {"instantiated", s.instantiated}, {"holds", s.holds}});
  j["verdict"] = v.contradiction ? "contradiction" : "no contradiction";
  return j;
}

} // namespace pcover
