// test_acomplex.cpp

#include <doctest.h>

#include <set>

#include "antican/acomplex.hpp"
#include "antican/errors.hpp"
#include "testutil.hpp"

using namespace antican;
using namespace antican::testing;

namespace {

std::set<std::vector<std::string>> vert_strings(const Polytope& p) {
  std::set<std::vector<std::string>> out;
  for (const VecQ& v : p.verts()) {
    std::vector<std::string> s;
    for (const Rat& q : v) s.push_back(rat_str(q));
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("complex of the quadric") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  ACComplex ac = build_complex(dd, g);
  // lineality: hull of the four v'_sigma
  REQUIRE(ac.vprime_points.size() == 4);
  std::set<VecQ> vp(ac.vprime_points.begin(), ac.vprime_points.end());
  CHECK(vp.count(VecQ{Rat(-1, 3), Rat(1, 3)}));
  CHECK(vp.count(VecQ{Rat(1, 3), Rat(1, 3)}));
  CHECK(ac.lineality.verts().size() == 4);
  // origin strictly inside the lineality part and every leaf x=0 slice
  CHECK(ac.lineality.relint_contains(VecQ{Rat(0), Rat(0)}));
  for (int i = 0; i <= dd.r; ++i) {
    CHECK(ac.leaves[i].contains(VecQ{Rat(0), Rat(0), Rat(0)}));
    CHECK(polytope_dim(ac.leaves[i]) == 3);
  }
}

TEST_CASE("verdicts of the quadric: terminal, hence canonical and log terminal") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  SingularityVerdict v = classify(dd, g);
  CHECK(v.log_terminal);
  CHECK(v.canonical);
  CHECK(v.terminal);
  CHECK(!v.witness_point.has_value());
}

TEST_CASE("eps sweep on the quadric") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  for (int num : {1, 2, 3}) {
    SingularityVerdict v = classify(dd, g, Rat(num, 4));
    CHECK(v.eps_log_terminal == true);
  }
  // at eps = 1 the columns themselves are captured
  SingularityVerdict v1 = classify(dd, g, Rat(1));
  CHECK(v1.eps_log_terminal == false);
  // antitone in eps
  bool prev = true;
  for (int num = 1; num <= 8; ++num) {
    SingularityVerdict v = classify(dd, g, Rat(num, 4));
    if (!prev) CHECK(!*v.eps_log_terminal);
    prev = *v.eps_log_terminal;
  }
}

TEST_CASE("anticanonical polyhedron of the E6 cubic matches the published vertices") {
  DefiningData dd = e6_cubic();
  Grading g = grading(dd);
  Polytope ax = anticanonical_polyhedron(dd, g);
  std::set<std::vector<std::string>> expect = {
      {"-3", "-3", "-2"}, {"-1", "-1", "-1"}, {"3", "0", "1"},
      {"0", "2", "1"},    {"0", "0", "1"},    {"0", "0", "-1/5"}};
  CHECK(vert_strings(ax) == expect);
}

TEST_CASE("E6 complex lives two-dimensionally on the three tropical cones") {
  DefiningData dd = e6_cubic();
  Grading g = grading(dd);
  ACComplex ac = build_complex(dd, g);
  REQUIRE(ac.leaves.size() == 3);
  for (const Polytope& leaf : ac.leaves) CHECK(polytope_dim(leaf) == 2);
  // verdicts: the E6 cubic is canonical but not terminal
  SingularityVerdict v = classify(dd, g);
  CHECK(v.log_terminal);
  CHECK(v.canonical);
  CHECK(!v.terminal);
  REQUIRE(v.witness_point.has_value());
}

TEST_CASE("oracle equivalence on the quadric and the E6 cubic") {
  for (const DefiningData& dd : {quadric(), e6_cubic()}) {
    Grading g = grading(dd);
    ACComplex fast = build_complex(dd, g);
    LeafSupports slow = leaf_supports_dual(dd, g);
    CHECK(fast.lineality.verts() == slow.lineality.verts());
    REQUIRE(fast.leaves.size() == slow.leaves.size());
    for (size_t i = 0; i < fast.leaves.size(); ++i)
      CHECK(fast.leaves[i].verts() == slow.leaves[i].verts());
  }
}

TEST_CASE("all columns of P are vertices of the anticanonical polyhedron") {
  for (const DefiningData& dd : {quadric(), e6_cubic()}) {
    Grading g = grading(dd);
    Polytope ax = anticanonical_polyhedron(dd, g);
    IntMat p = assemble_P(dd);
    std::set<VecQ> verts(ax.verts().begin(), ax.verts().end());
    for (int j = 0; j < p.cols; ++j) CHECK(verts.count(vec_to_rat(p.col(j))));
  }
}

TEST_CASE("build_complex gates") {
  DefiningData bad;
  bad.r = 2;
  bad.s = 2;
  bad.m = 0;
  bad.n = {2, 2, 1};
  bad.L = {{3, 1}, {3, 1}, {3}};
  bad.d = {{1, 0, 1, 0, -1}, {1, 1, 0, 0, -2}};
  bad.dprime = {{}, {}};
  Grading g = grading(bad);
  CHECK_THROWS_AS(build_complex(bad, g), NotLogTerminal);
}

TEST_CASE("quadric discrepancies") {
  DefiningData dd = quadric();
  Grading g = grading(dd);
  // rho_sigma of the cone (v01, v11, v21): formula -1 + ell/c = 2, and the
  // boundary-crossing computation must agree
  CHECK(discrepancy_ray(dd, g, VecI{0, 0, -1, 1}) == Rat(2));
  // a column ray has discrepancy 0
  CHECK(discrepancy_ray(dd, g, VecI{-1, -1, 0, 0}) == Rat(0));
  CHECK(discrepancy_ray(dd, g, VecI{0, 2, -1, -1}) == Rat(0));
  // off-tropical rays are rejected
  CHECK_THROWS_AS(discrepancy_ray(dd, g, VecI{1, -1, 0, 0}), RayNotOnTrop);
}

TEST_CASE("discrepancy formula -1 + ell/c on all elementary big cones") {
  for (const DefiningData& dd : {quadric(), e6_cubic()}) {
    Grading g = grading(dd);
    for (const ElemBigCone& ec : elementary_big_cones(dd, g)) {
      Rat formula = Rat(ec.ell, ec.c) - 1;
      CHECK(discrepancy_ray(dd, g, primitive_part(ec.v_sigma)) == formula);
    }
  }
}

TEST_CASE("lineality trapezoid against the generic construction") {
  Rng rng(101);
  int done = 0;
  while (done < 200) {
    // random case-(i) instances in the normalized shape
    DefiningData dd;
    dd.r = 2;
    dd.s = 2;
    dd.m = 0;
    dd.n = {2, 2, 1};
    std::int64_t l11 = rand_int(rng, 1, 4), l12 = rand_int(rng, 1, l11);
    std::int64_t l21 = rand_int(rng, 2, 5);
    dd.L = {{1, 1}, {l11, l12}, {l21}};
    dd.d = {{0, 1, rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5)},
            {0, 0, rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5)}};
    dd.dprime = {{}, {}};
    if (!validate(dd).valid(true)) continue;
    Grading g = grading(dd);
    if (!is_fano(dd, g) || !is_log_terminal(dd, g)) continue;
    TrapezoidData t = lineality_trapezoid(dd);
    ACComplex ac = build_complex(dd, g);
    CHECK(t.poly.verts() == ac.lineality.verts());
    // segment data: |g1| for l11 = 1, l21 = 2 is 2/3, etc.
    CHECK(t.g1_len == Rat(l11 * l21, l11 + l21));
    CHECK(t.g2_len == Rat(l12 * l21, l12 + l21));
    ++done;
  }
}

TEST_CASE("trapezoid closed forms") {
  DefiningData dd = quadric();
  TrapezoidData t = lineality_trapezoid(dd);
  CHECK(t.g1_len == Rat(2, 3));  // l11 = 1, l21 = 2
  CHECK(t.g2_len == Rat(2, 3));
  CHECK(t.g1_h - t.g2_h == Rat(2, 3));  // w12/3 + w11/3 with w11 = w12 = 1
  DefiningData off = quadric();
  off.n = {3, 1, 1};
  off.L = {{1, 1, 1}, {2}, {2}};
  off.d = {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}};
  CHECK_THROWS_AS(lineality_trapezoid(off), WrongShape);
}
