// test_invariants.cpp

#include <doctest.h>

#include "antican/errors.hpp"
#include "antican/invariants.hpp"
#include "testutil.hpp"

using namespace antican;
using namespace antican::testing;

TEST_CASE("class group of the quadric is Z") {
  Grading g = grading(quadric());
  ClassGroup cl = class_group(g);
  CHECK(cl.free_rank == 1);
  CHECK(cl.torsion.empty());
}

TEST_CASE("antican_cube closed form on table-style weight data") {
  // weights (1,1,1,1,1), mu = 2: 2 * 3^3 / 1 = 54
  DefiningData dd = quadric();
  Grading g = grading(dd);
  CHECK(antican_cube(dd, g) == Rat(54));
}

TEST_CASE("gorenstein index of the quadric is 1") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  CHECK(gorenstein_index(dd, g) == 1);
}

TEST_CASE("antican_cube requires free rank one") {
  Rng rng(51);
  for (;;) {
    DefiningData dd = random_instance(rng);
    if (!validate(dd).valid()) continue;
    Grading g = grading(dd);
    if (g.cl.free_rank < 2) continue;
    CHECK_THROWS_AS(antican_cube(dd, g), NotRankOne);
    break;
  }
}

TEST_CASE("distinctness keys separate different relation exponents") {
  // same weights and class group, different exponents (rows 23/24 pattern)
  DefiningData a;
  a.r = 2;
  a.s = 2;
  a.m = 1;
  a.n = {2, 1, 1};
  a.L = {{1, 1}, {3}, {2}};
  a.d = {{0, 1, 1, 1}, {0, 0, 1, 0}};
  a.dprime = {{0}, {1}};
  DefiningData b = a;
  b.L = {{1, 1}, {4}, {2}};
  Grading ga = grading(a), gb = grading(b);
  CHECK(distinctness_key(a, ga) != distinctness_key(b, gb));
}

TEST_CASE("distinctness key is invariant under admissible operations") {
  Rng rng(53);
  int done = 0;
  while (done < 40) {
    DefiningData dd = random_instance(rng);
    if (!validate(dd).valid()) continue;
    Grading g = grading(dd);
    if (g.cl.free_rank != 1 || g.cl.torsion.size() > 1) continue;
    if (!is_fano(dd, g)) continue;
    std::string key = distinctness_key(dd, g);
    DefiningData cur = dd;
    for (int t = 0; t < 5; ++t) cur = apply_op(cur, random_op(rng, cur));
    CHECK(distinctness_key(cur, grading(cur)) == key);
    ++done;
  }
}
