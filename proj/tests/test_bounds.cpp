#include <doctest.h>

#include "pcover/bounds.hpp"

using namespace pcover;

TEST_CASE("bead equation")
{
  CHECK(check_eq_beads({{4, 6}}));
  CHECK(check_eq_beads({{2, 2}, {4, 2}}));
  CHECK_FALSE(check_eq_beads({{2, 1}, {4, 3}}));
  CHECK(check_eq_beads({{2, 3}, {6, 1}}));
  CHECK(check_eq_beads({{4, 7}, {8, 1}}));
  CHECK(check_eq_beads({{4, 9}, {12, 1}}));
  CHECK_THROWS_AS(check_eq_beads({{3, 1}}), PreconditionError);
}

TEST_CASE("interior triangle bound")
{
  CHECK(interior_triangle_lower_bound(6, 5).triangles == 3);
  CHECK(interior_triangle_lower_bound(6, 5).internal_octahedral == 8);
  CHECK(interior_triangle_lower_bound(6, 6).triangles == 2);
  CHECK(interior_triangle_lower_bound(3, 3).triangles == 1);
  CHECK_THROWS_AS(interior_triangle_lower_bound(2, 4), PreconditionError);
  // Independent form: smallest integer T with 3T >= 3h - 2m.
  for (long h = 1; h <= 20; ++h)
    for (long m = 0; 2 * m <= 3 * h; ++m) {
      long T = 0;
      while (3 * T < 3 * h - 2 * m) ++T;
      CHECK(interior_triangle_lower_bound(h, m).triangles == T);
    }
  CHECK(forced_interior_triangles(6) == 3);
}

TEST_CASE("long cycle bound")
{
  auto b = longcycle_upper_bound(12, 6, 3);
  CHECK(b.total == 72);
  CHECK(b.per_pair == 18);
  CHECK(b.lower == 73);
  CHECK(b.contradiction());
  auto c = longcycle_upper_bound(14, 6, 3);
  CHECK(c.total == 120);
  CHECK(c.lower == 85);
  CHECK_FALSE(c.contradiction());
  CHECK(longcycle_upper_bound(9, 6, 3).total == 0);
  CHECK_THROWS_AS(longcycle_upper_bound(8, 6, 3), PreconditionError);
  CHECK_THROWS_AS(longcycle_upper_bound(-1, 0, 0), PreconditionError);
}

TEST_CASE("theorem pipeline")
{
  for (long n : {4, 6, 8, 10, 12}) CHECK(theorem_pipeline(n).contradiction);
  for (long n = 14; n <= 60; n += 2) CHECK_FALSE(theorem_pipeline(n).contradiction);
  auto v12 = theorem_pipeline(12);
  auto j = verdict_to_json(v12);
  CHECK(j["verdict"] == "contradiction");
  CHECK(j["trace"].back()["instantiated"] == "12*6 = 72 >= 73");
  auto v10 = theorem_pipeline(10);
  CHECK(verdict_to_json(v10)["trace"].back()["instantiated"] == "12*2 = 24 >= 61");
  CHECK(verdict_to_json(theorem_pipeline(14))["verdict"] == "no contradiction");
  // Monotone: a contradiction at n persists for smaller even n.
  for (long n = 4; n <= 40; n += 2)
    if (theorem_pipeline(n).contradiction)
      for (long k = 4; k < n; k += 2) CHECK(theorem_pipeline(k).contradiction);
  CHECK_THROWS_AS(theorem_pipeline(13), PreconditionError);
  CHECK_THROWS_AS(theorem_pipeline(2), PreconditionError);
}
