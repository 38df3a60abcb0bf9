// test_rap.cpp

#include <doctest.h>

#include "antican/errors.hpp"
#include "antican/rap.hpp"
#include "testutil.hpp"

using namespace antican;
using namespace antican::testing;



TEST_CASE("assemble_P of the quadric instance") {
  IntMat p = assemble_P(quadric());
  REQUIRE(p.rows == 4);
  REQUIRE(p.cols == 5);
  CHECK(p.col(0) == VecI{-1, -1, 0, 0});
  CHECK(p.col(1) == VecI{-1, -1, 1, 0});
  CHECK(p.col(2) == VecI{1, 0, 0, 1});
  CHECK(p.col(3) == VecI{1, 0, 0, 0});
  CHECK(p.col(4) == VecI{0, 2, -1, -1});
  // weight vector: kernel is spanned by (1,1,1,1,1)
  auto ker = kernel_basis(p);
  REQUIRE(ker.size() == 1);
  VecI w = ker[0];
  if (w[0] < 0)
    for (Int& x : w) x = -x;
  CHECK(w == VecI{1, 1, 1, 1, 1});
}

TEST_CASE("assemble_P of the E6 cubic") {
  IntMat p = assemble_P(e6_cubic());
  REQUIRE(p.rows == 3);
  REQUIRE(p.cols == 4);
  CHECK(p.row(0) == VecI{-1, -3, 3, 0});
  CHECK(p.row(1) == VecI{-1, -3, 0, 2});
}

TEST_CASE("validation catches repeated and imprimitive columns") {
  DefiningData dd = quadric();
  CHECK(validate(dd).valid(true));
  dd.d[0][3] = 0;
  dd.d[1][3] = 1;  // column 3 now equals column 2
  CHECK(!validate(dd).valid());
  DefiningData dp = quadric();
  dp.L[2][0] = 4;
  dp.d[0][4] = -2;
  dp.d[1][4] = 0;  // column (0,4,-2,0) has content 2
  CHECK(!validate(dp).valid());
}

TEST_CASE("grading of the quadric: K = Z, degrees all one, kappa = 3") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  CHECK(g.cl.free_rank == 1);
  CHECK(g.cl.torsion.empty());
  for (const KClass& w : g.deg) CHECK(w.free_part == VecI{1});
  CHECK(g.kappa.free_part == VecI{3});
  CHECK(g.mu.free_part == VecI{2});
  // defining property: every row of P maps to the zero class
  IntMat p = assemble_P(dd);
  for (int i = 0; i < p.rows; ++i) {
    KClass c = g.class_of(p.row(i));
    for (const Int& x : c.free_part) CHECK(x == 0);
    for (const Int& x : c.tors) CHECK(x == 0);
  }
}

TEST_CASE("grading of the E6 cubic: degrees (3,1,2,3)") {
  Grading g = grading(e6_cubic());
  CHECK(g.cl.free_rank == 1);
  CHECK(g.cl.torsion.empty());
  CHECK(g.deg[0].free_part == VecI{3});
  CHECK(g.deg[1].free_part == VecI{1});
  CHECK(g.deg[2].free_part == VecI{2});
  CHECK(g.deg[3].free_part == VecI{3});
}

TEST_CASE("dimension identity n + m - (r-1) - free_rank = s + 1") {
  Rng rng(5);
  int done = 0;
  while (done < 50) {
    DefiningData dd = random_instance(rng);
    if (!validate(dd).valid()) continue;
    Grading g = grading(dd);
    CHECK(dd.total_cols() - (dd.r - 1) - g.cl.free_rank == dd.s + 1);
    ++done;
  }
}

TEST_CASE("is_fano") {
  DefiningData q = quadric();
  Grading g = grading(q);
  CHECK(is_fano(q, g));

  // weights (1,5,2,4,3) instance of row 2
  DefiningData r2 = quadric();
  r2.d = {{2, 0, -1, 0, 0}, {3, 0, 0, 0, -1}};
  {
    IntMat p = assemble_P(r2);
    auto ker = kernel_basis(p);
    REQUIRE(ker.size() == 1);
    VecI w = ker[0];
    if (w[0] < 0)
      for (Int& x : w) x = -x;
    CHECK(w == VecI{1, 5, 2, 4, 3});
    CHECK(is_fano(r2, grading(r2)));
  }

  // a rank-one instance (shape-valid only) with one degree of opposite sign
  // and kappa outside the relative interior of the moving cone
  DefiningData bad;
  bad.r = 2;
  bad.s = 2;
  bad.m = 1;
  bad.n = {2, 1, 1};
  bad.L = {{1, 1}, {2}, {2}};
  bad.d = {{3, -1, -1, -1}, {3, 0, 0, 0}};
  bad.dprime = {{0}, {1}};
  {
    Grading gb = grading(bad);
    int negatives = 0;
    for (const KClass& w : gb.deg)
      if (w.free_part[0] < 0) ++negatives;
    REQUIRE(negatives == 1);
    REQUIRE(gb.kappa.free_part[0] < 0);
    CHECK(!is_fano(bad, gb));
  }
}

TEST_CASE("cox_presentation") {
  CHECK(cox_presentation(quadric()).text() == "T1*T2+T3*T4+T5^2");
  CHECK(cox_presentation(e6_cubic()).text() == "T1*T2^3+T3^3+T4^2");
}

TEST_CASE("admissible operations") {
  DefiningData dd = quadric();
  SUBCASE("column swap inside block 0") {
    AdmissibleOp op;
    op.kind = AdmissibleOp::Kind::swap_in_block;
    op.i = 0;
    op.j = 0;
    op.k = 1;
    IntMat p = assemble_P(apply_op(dd, op));
    CHECK(p.col(0) == VecI{-1, -1, 1, 0});
    CHECK(p.col(1) == VecI{-1, -1, 0, 0});
  }
  SUBCASE("adding a top row to a bottom row shifts only the d part") {
    AdmissibleOp op;
    op.kind = AdmissibleOp::Kind::add_top_to_bottom;
    op.i = 0;
    op.j = 0;
    op.c = 1;
    IntMat before = assemble_P(dd);
    IntMat after = assemble_P(apply_op(dd, op));
    for (int c = 0; c < 5; ++c) {
      CHECK(after.at(0, c) == before.at(0, c));
      CHECK(after.at(1, c) == before.at(1, c));
      CHECK(after.at(2, c) == before.at(2, c) + before.at(0, c));
      CHECK(after.at(3, c) == before.at(3, c));
    }
  }
  SUBCASE("non-unimodular bottom transform is rejected") {
    AdmissibleOp op;
    op.kind = AdmissibleOp::Kind::bottom_unimodular;
    op.V = {{2, 0}, {0, 1}};
    CHECK_THROWS_AS(apply_op(dd, op), InvalidOp);
  }
  SUBCASE("block swap preserves the grading") {
    AdmissibleOp op;
    op.kind = AdmissibleOp::Kind::swap_blocks;
    op.i = 0;
    op.j = 1;
    DefiningData sw = apply_op(dd, op);
    CHECK(validate(sw).valid());
    Grading g = grading(sw);
    CHECK(g.cl.free_rank == 1);
    CHECK(g.kappa.free_part == VecI{3});
  }
}

TEST_CASE("normalize is idempotent") {
  Rng rng(9);
  int done = 0;
  while (done < 100) {
    DefiningData dd = random_instance(rng);
    if (!validate(dd).valid()) continue;
    DefiningData n1 = normalize(dd);
    CHECK(normalize(n1) == n1);
    ++done;
  }
}

TEST_CASE("normalize is constant on admissible-operation orbits") {
  Rng rng(13);
  int done = 0;
  while (done < 60) {
    DefiningData dd = random_instance(rng);
    if (!validate(dd).valid()) continue;
    DefiningData base = normalize(dd);
    DefiningData cur = dd;
    for (int t = 0; t < 6; ++t) cur = apply_op(cur, random_op(rng, cur));
    CHECK(normalize(cur) == base);
    ++done;
  }
}

TEST_CASE("normalize maps a block swap of the quadric to the same form") {
  DefiningData dd = quadric();
  AdmissibleOp op;
  op.kind = AdmissibleOp::Kind::swap_blocks;
  op.i = 0;
  op.j = 1;
  CHECK(normalize(apply_op(dd, op)) == normalize(dd));
}

TEST_CASE("defining data JSON round trip is byte stable") {
  DefiningData dd = normalize(quadric());
  std::string s1 = serialize_defining_data(dd);
  DefiningData back = parse_defining_data(s1);
  CHECK(back == dd);
  CHECK(serialize_defining_data(back) == s1);
  CHECK_THROWS_AS(parse_defining_data("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_defining_data("{\"r\":2}"), ParseError);
}
