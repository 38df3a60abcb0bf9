// test_polyhedra.cpp

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "antican/polyhedra.hpp"

using namespace antican;

namespace {

VecQ qpt(std::vector<Rat> v) { return v; }

std::vector<VecQ> rand_points(std::mt19937_64& rng, int dim, int count, int span) {
  std::uniform_int_distribution<long long> num(-span, span);
  std::uniform_int_distribution<long long> den(1, 4);
  std::vector<VecQ> pts;
  for (int i = 0; i < count; ++i) {
    VecQ p(dim);
    for (int j = 0; j < dim; ++j) p[j] = Rat(num(rng), den(rng));
    pts.push_back(std::move(p));
  }
  return pts;
}

// independent full-box enumeration, no slicing, different iteration order
std::set<VecI> brute_lattice_points(const Polytope& p) {
  std::set<VecI> out;
  if (p.verts().empty()) return out;
  const int dim = p.ambient_dim();
  VecI lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    Rat mn = p.verts()[0][j], mx = mn;
    for (const VecQ& v : p.verts()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
  }
  VecI cur = hi;  // iterate downwards, reversed order w.r.t. the library
  for (;;) {
    VecQ q(dim);
    for (int j = 0; j < dim; ++j) q[j] = Rat(cur[j]);
    if (p.contains(q)) out.insert(cur);
    int j = 0;
    while (j < dim) {
      if (cur[j] > lo[j]) {
        --cur[j];
        break;
      }
      cur[j] = hi[j];
      ++j;
    }
    if (j >= dim) break;
  }
  return out;
}

}  // namespace

TEST_CASE("hull drops interior points") {
  Polytope p = hull({qpt({Rat(0), Rat(0)}), qpt({Rat(1), Rat(0)}), qpt({Rat(0), Rat(1)}),
                     qpt({Rat(1, 4), Rat(1, 4)})});
  CHECK(p.verts().size() == 3);
  CHECK(polytope_dim(p) == 2);
}

TEST_CASE("hull of a single point") {
  Polytope p = hull({qpt({Rat(2), Rat(-1)})});
  CHECK(p.verts().size() == 1);
  CHECK(polytope_dim(p) == 0);
  CHECK(p.contains(qpt({Rat(2), Rat(-1)})));
  CHECK(!p.contains(qpt({Rat(2), Rat(0)})));
}

TEST_CASE("every reported hull vertex is outside the hull of the others") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    auto pts = rand_points(rng, 3, 8, 5);
    Polytope p = hull(pts);
    for (size_t i = 0; i < p.verts().size(); ++i) {
      if (p.verts().size() == 1) break;
      std::vector<VecQ> others;
      for (size_t j = 0; j < p.verts().size(); ++j)
        if (j != i) others.push_back(p.verts()[j]);
      CHECK(!hull(others).contains(p.verts()[i]));
    }
    // V- and H-representations describe the same set
    for (const VecQ& q : pts) CHECK(p.contains(q));
  }
}

TEST_CASE("facets are tight at enough vertices") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 10; ++t) {
    auto pts = rand_points(rng, 3, 7, 4);
    Polytope p = hull(pts);
    int d = polytope_dim(p);
    for (const AffineIneq& f : p.hrep().ineq) {
      int tight = 0;
      for (const VecQ& v : p.verts())
        if (dot_qi(v, f.a) == Rat(f.b)) ++tight;
      CHECK(tight >= d);
    }
  }
}

TEST_CASE("dual of the square is the cross square") {
  Polytope sq = hull({qpt({Rat(1), Rat(1)}), qpt({Rat(1), Rat(-1)}), qpt({Rat(-1), Rat(1)}),
                      qpt({Rat(-1), Rat(-1)})});
  Polytope d = dual_polytope(sq);
  std::vector<VecQ> expect = {qpt({Rat(-1), Rat(0)}), qpt({Rat(0), Rat(-1)}),
                              qpt({Rat(0), Rat(1)}), qpt({Rat(1), Rat(0)})};
  std::sort(expect.begin(), expect.end());
  CHECK(d.verts() == expect);
}

TEST_CASE("dual_polytope is an involution when the origin is interior") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 20) {
    auto pts = rand_points(rng, 3, 8, 4);
    Polytope p = hull(pts);
    if (!p.relint_contains(qpt({Rat(0), Rat(0), Rat(0)})) || polytope_dim(p) != 3) continue;
    Polytope dd = dual_polytope(dual_polytope(p));
    CHECK(dd.verts() == p.verts());
    ++done;
  }
}

TEST_CASE("dual_polytope rejects polytopes without the origin interior") {
  Polytope p = hull({qpt({Rat(1), Rat(0)}), qpt({Rat(2), Rat(0)}), qpt({Rat(1), Rat(1)})});
  CHECK_THROWS_AS(dual_polytope(p), OriginNotInterior);
}

TEST_CASE("lattice points on pinned examples") {
  SUBCASE("triangle with 6 points") {
    Polytope p = hull({qpt({Rat(0), Rat(0)}), qpt({Rat(2), Rat(0)}), qpt({Rat(0), Rat(2)})});
    CHECK(lattice_points(p).size() == 6);
  }
  SUBCASE("tiny square only contains the origin") {
    Polytope p = hull({qpt({Rat(1, 3), Rat(1, 3)}), qpt({Rat(1, 3), Rat(-1, 3)}),
                       qpt({Rat(-1, 3), Rat(1, 3)}), qpt({Rat(-1, 3), Rat(-1, 3)})});
    auto pts = lattice_points(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == VecI{0, 0});
  }
  SUBCASE("triangle with 4 points") {
    Polytope p = hull({qpt({Rat(-1), Rat(-1)}), qpt({Rat(1), Rat(0)}), qpt({Rat(0), Rat(1)})});
    auto pts = lattice_points(p);
    std::set<VecI> got(pts.begin(), pts.end());
    std::set<VecI> expect = {{-1, -1}, {0, 0}, {1, 0}, {0, 1}};
    CHECK(got == expect);
  }
}

TEST_CASE("lattice_points agrees with a second, independent enumeration") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    int dim = 2 + static_cast<int>(t % 3);
    auto pts = rand_points(rng, dim, dim + 3, 4);
    Polytope p = hull(pts);
    auto fast = lattice_points(p);
    std::set<VecI> got(fast.begin(), fast.end());
    CHECK(got.size() == fast.size());
    CHECK(got == brute_lattice_points(p));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("relative interior lattice points") {
  SUBCASE("segment in the plane") {
    Polytope p = hull({qpt({Rat(-1), Rat(0)}), qpt({Rat(1), Rat(0)})});
    auto pts = relative_interior_lattice_points(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == VecI{0, 0});
  }
  SUBCASE("unit triangle has empty interior") {
    Polytope p = hull({qpt({Rat(0), Rat(0)}), qpt({Rat(1), Rat(0)}), qpt({Rat(0), Rat(1)})});
    CHECK(relative_interior_lattice_points(p).empty());
  }
  SUBCASE("scaled triangle has one interior point") {
    Polytope p = hull({qpt({Rat(0), Rat(0)}), qpt({Rat(3), Rat(0)}), qpt({Rat(0), Rat(3)})});
    auto pts = relative_interior_lattice_points(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == VecI{1, 1});
  }
}

TEST_CASE("scale") {
  Polytope sq = hull({qpt({Rat(1), Rat(1)}), qpt({Rat(1), Rat(-1)}), qpt({Rat(-1), Rat(1)}),
                      qpt({Rat(-1), Rat(-1)})});
  CHECK(scale(sq, Rat(1)).verts() == sq.verts());
  Polytope half = scale(sq, Rat(1, 2));
  CHECK(half.verts()[0] == qpt({Rat(-1, 2), Rat(-1, 2)}));

  // monotonicity of lattice point sets under scaling
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 15) {
    auto pts = rand_points(rng, 2, 6, 5);
    Polytope p = hull(pts);
    if (!p.contains(qpt({Rat(0), Rat(0)}))) continue;
    auto small = lattice_points(scale(p, Rat(1, 2)));
    auto big = lattice_points(p);
    std::set<VecI> bigset(big.begin(), big.end());
    for (const VecI& q : small) CHECK(bigset.count(q));
    ++done;
  }
}

TEST_CASE("polytope_from_hrep rejects unbounded sets") {
  HRep hr;
  hr.ineq.push_back({{Int(1), Int(0)}, Int(0)});  // x >= 0
  hr.ineq.push_back({{Int(0), Int(1)}, Int(0)});  // y >= 0
  CHECK_THROWS_AS(polytope_from_hrep(hr, 2), Unbounded);
}

TEST_CASE("cone facets and relative interior membership") {
  // the first quadrant in Q^2
  ConeV c{{VecI{1, 0}, VecI{0, 1}}, {}};
  ConeH h = cone_facets(c, 2);
  CHECK(h.eq.empty());
  CHECK(h.ineq.size() == 2);
  CHECK(cone_contains(h, VecI{0, 0}));
  CHECK(cone_contains(h, VecI{1, 0}));
  CHECK(!cone_relint_contains(h, VecI{1, 0}));
  CHECK(cone_relint_contains(h, VecI{1, 1}));
  // a ray in Q^2: one equation, one inequality
  ConeH hr = cone_facets(ConeV{{VecI{2, 3}}, {}}, 2);
  CHECK(hr.eq.size() == 1);
  CHECK(cone_relint_contains(hr, VecI{2, 3}));
  CHECK(!cone_relint_contains(hr, VecI{0, 0}));
  // full plane
  ConeH hf = cone_facets(ConeV{{}, {VecI{1, 0}, VecI{0, 1}}}, 2);
  CHECK(hf.eq.empty());
  CHECK(hf.ineq.empty());
}

TEST_CASE("cone_intersection") {
  ConeV a{{VecI{1, 0}, VecI{1, 1}}, {}};
  ConeV b{{VecI{1, 1}, VecI{0, 1}}, {}};
  ConeV c = cone_intersection(a, b, 2);
  REQUIRE(c.rays.size() == 1);
  CHECK(c.rays[0] == VecI{1, 1});
  CHECK(c.lin.empty());
}
