// test_tropfan.cpp

#include <doctest.h>

#include <set>

#include "antican/tropfan.hpp"
#include "testutil.hpp"

using namespace antican;
using namespace antican::testing;

TEST_CASE("ell_sigma closed forms") {
  auto ell = [](std::vector<long long> v) {
    std::vector<Int> l(v.begin(), v.end());
    return ell_sigma(l);
  };
  CHECK(ell({5, 3, 2}) == 1);
  CHECK(ell({4, 3, 2}) == 2);
  CHECK(ell({3, 3, 2}) == 3);
  CHECK(ell({7, 2, 2}) == 4);
  CHECK(ell({6, 4, 1}) == 10);   // (l0,l1,1) -> l0+l1
  CHECK(ell({3, 3, 3}) == 0);    // not log terminal
  CHECK(ell({1, 1, 2, 2}) == 4); // r = 3, padded (a,2,2)
}

TEST_CASE("platonic tuples") {
  auto plat = [](std::vector<long long> v) {
    std::vector<Int> l(v.begin(), v.end());
    return is_platonic_tuple(l);
  };
  CHECK(plat({9, 4, 1}));
  CHECK(plat({8, 2, 2}));
  CHECK(plat({3, 3, 2}));
  CHECK(plat({4, 3, 2}));
  CHECK(plat({5, 3, 2}));
  CHECK(!plat({6, 3, 2}));
  CHECK(!plat({3, 3, 3}));
  CHECK(!plat({4, 4, 2}));
  CHECK(plat({2, 5, 1, 2, 1}));   // sorted (5,2,2,1,1)
  CHECK(!plat({2, 5, 2, 2, 1}));  // fourth entry exceeds 1
}

TEST_CASE("ell_sigma positive exactly on platonic tuples (exhaustive, max 30)") {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 1; b <= a; ++b)
      for (long long c = 1; c <= b; ++c) {
        std::vector<Int> l{Int(a), Int(b), Int(c)};
        CHECK((ell_sigma(l) > 0) == is_platonic_tuple(l));
      }
}

TEST_CASE("cone_in_sigma on the quadric") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  // elementary tuple (v01, v11, v21)
  CHECK(cone_in_sigma(dd, g, {0, 2, 4}));
  // all columns: gamma0 = {0}, kappa not in relint
  CHECK(!cone_in_sigma(dd, g, {0, 1, 2, 3, 4}));
  // leaf cone spanned by the two block-0 columns
  CHECK(cone_in_sigma(dd, g, {0, 1}));
}

TEST_CASE("elementary big cones of the quadric") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  auto cones = elementary_big_cones(dd, g);
  REQUIRE(cones.size() == 4);
  for (const ElemBigCone& ec : cones) {
    CHECK(ec.ell == 3);
    CHECK(ec.c == 1);
    REQUIRE(ec.v_prime.has_value());
    // v_sigma lies in the lineality space
    CHECK(ec.v_sigma[0] == 0);
    CHECK(ec.v_sigma[1] == 0);
  }
  // sigma = (v01, v11, v21): v_sigma = (0,0,-1,2)
  CHECK(cones[0].cols == std::vector<int>{0, 2, 4});
  CHECK(cones[0].v_sigma == VecI{0, 0, -1, 1});
}

TEST_CASE("elementary big cones of the E6 cubic") {
  DefiningData dd = e6_cubic();
  Grading g = grading(dd);
  auto cones = elementary_big_cones(dd, g);
  REQUIRE(cones.size() == 2);
  // (v01, v11, v21): l = (1,3,2), ell = 5, v_sigma = (0,0,-1)
  CHECK(cones[0].lvals == std::vector<Int>{1, 3, 2});
  CHECK(cones[0].ell == 5);
  CHECK(cones[0].v_sigma == VecI{0, 0, -1});
  // (v02, v11, v21): l = (3,3,2), ell = 3, v_sigma = (0,0,3)
  CHECK(cones[1].lvals == std::vector<Int>{3, 3, 2});
  CHECK(cones[1].ell == 3);
  CHECK(cones[1].v_sigma == VecI{0, 0, 3});
}

TEST_CASE("sigma cap lambda is the ray through v_sigma") {
  // Proposition-style invariant, checked by exact cone intersection
  DefiningData dd = quadric();
  Grading g = grading(dd);
  IntMat p = assemble_P(dd);
  TropStructure ts = trop_structure(dd);
  ConeV lambda{{}, {}};
  for (int k = 0; k < dd.s; ++k) {
    VecI l(dd.ambient_dim(), Int(0));
    l[dd.r + k] = 1;
    lambda.lin.push_back(std::move(l));
  }
  for (const ElemBigCone& ec : elementary_big_cones(dd, g)) {
    ConeV sig;
    for (int j : ec.cols) sig.rays.push_back(p.col(j));
    ConeV inter = cone_intersection(sig, lambda, dd.ambient_dim());
    REQUIRE(inter.rays.size() == 1);
    CHECK(inter.lin.empty());
    CHECK(inter.rays[0] == primitive_part(ec.v_sigma));
  }
  (void)ts;
}

TEST_CASE("rays of Sigma meet trop: columns plus the v_sigma rays") {
  // On the quadric, the maximal Sigma-cones intersected with trop(X)
  // produce exactly the column rays and the four rho_sigma rays.
  DefiningData dd = quadric();
  Grading g = grading(dd);
  IntMat p = assemble_P(dd);
  TropStructure ts = trop_structure(dd);
  std::set<VecI> rays;
  for (const auto& cols : maximal_sigma_cones(dd, g)) {
    ConeV sig;
    for (int j : cols) sig.rays.push_back(p.col(j));
    for (int i = 0; i <= dd.r; ++i) {
      ConeV inter = cone_intersection(sig, ts.leaf_cone(i), dd.ambient_dim());
      for (const VecI& r : inter.rays) rays.insert(r);
    }
  }
  std::set<VecI> expect;
  for (int j = 0; j < p.cols; ++j) expect.insert(p.col(j));
  for (const ElemBigCone& ec : elementary_big_cones(dd, g))
    expect.insert(primitive_part(ec.v_sigma));
  CHECK(rays == expect);
}

TEST_CASE("log terminality") {
  DefiningData dd = quadric();
  CHECK(is_log_terminal(dd, grading(dd)));

  // an instance carrying a (3,3,3) elementary cone: ell = 0, not log terminal
  DefiningData bad;
  bad.r = 2;
  bad.s = 2;
  bad.m = 0;
  bad.n = {2, 2, 1};
  bad.L = {{3, 1}, {3, 1}, {3}};
  bad.d = {{1, 0, 1, 0, -1}, {1, 1, 0, 0, -2}};
  bad.dprime = {{}, {}};
  REQUIRE(validate(bad).valid(true));
  Grading g = grading(bad);
  CHECK(is_fano(bad, g));
  CHECK(!is_log_terminal(bad, g));
}

TEST_CASE("relation count bound") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  CHECK(check_relation_bound(dd, g));  // r = 2: 1 <= 3 + 1
  // r = 7, s = 2, free rank 1 would violate 6 <= 4; checked on the raw inequality
  DefiningData fake = dd;
  fake.r = 7;
  CHECK(!(fake.r - 1 <= (fake.s + 1) + g.cl.free_rank));
}

TEST_CASE("q-factoriality of the quadric") {
  DefiningData dd = quadric();
  CHECK(is_qfactorial(dd, grading(dd)));
}
