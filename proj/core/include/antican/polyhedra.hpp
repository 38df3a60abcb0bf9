// polyhedra.hpp
// Exact rational convex geometry in low dimension: cones by double
// description, polytope hulls, polar duals, face tests and lattice-point
// enumeration. Dimensions in this project stay <= 8, so robustness wins
// over asymptotics everywhere.

#pragma once

#include <memory>
#include <vector>

#include "antican/errors.hpp"
#include "antican/exact.hpp"

namespace antican {

// V-description of a rational cone: lin(lin) + cone(rays); rays and lineality
// generators are primitive integer vectors.
struct ConeV {
  std::vector<VecI> rays;
  std::vector<VecI> lin;
};

// H-description: { x : <a,x> >= 0 for a in ineq, <a,x> = 0 for a in eq }.
struct ConeH {
  std::vector<VecI> ineq;
  std::vector<VecI> eq;
};

// Double-description core: extreme rays and lineality of
// { x in Q^dim : <a,x> >= 0 (a in ineq), <a,x> = 0 (a in eq) }.
// Output is canonical: primitive generators, lex-sorted.
ConeV dual_cone(const std::vector<VecI>& ineq, const std::vector<VecI>& eq, int dim);

// Facet normals and span equations of lin(c.lin) + cone(c.rays).
// The ineq list is irredundant (facets only), so relative-interior tests are
// "all eq exact, all ineq strict".
ConeH cone_facets(const ConeV& c, int dim);

// Canonical minimal V-description (drops redundant generators).
ConeV canonical_cone(const ConeV& c, int dim);

ConeV cone_intersection(const ConeV& a, const ConeV& b, int dim);

bool cone_contains(const ConeH& h, const VecI& x);
bool cone_relint_contains(const ConeH& h, const VecI& x);

// One inequality/equation  <a,x> >= b  resp.  <a,x> = b  with integer data.
struct AffineIneq {
  VecI a;
  Int b;
};

struct HRep {
  std::vector<AffineIneq> ineq;
  std::vector<AffineIneq> eq;
};

// A bounded rational polytope, stored by its irredundant, lex-sorted vertex
// list. The facet description is computed on first use and cached; it is
// canonical (facets irredundant, affine-hull equations separate).
class Polytope {
 public:
  Polytope() = default;
  Polytope(int ambient_dim, std::vector<VecQ> vertices);

  int ambient_dim() const { return dim_; }
  const std::vector<VecQ>& verts() const { return verts_; }
  const HRep& hrep() const;

  bool contains(const VecQ& p) const;
  // strict on every inequality, exact on every equation
  bool relint_contains(const VecQ& p) const;

 private:
  int dim_ = 0;
  std::vector<VecQ> verts_;
  mutable std::shared_ptr<const HRep> hrep_;
};

// Irredundant convex hull of a nonempty point set.
Polytope hull(const std::vector<VecQ>& points);

// Vertex enumeration of { x : hr }; throws Unbounded when the set has a
// recession direction, ParseError-free otherwise.
Polytope polytope_from_hrep(const HRep& hr, int dim);

// { y : <y,x> >= -1 for all x in P }. Requires the origin in the interior.
Polytope dual_polytope(const Polytope& p);

// Affine dimension of the polytope.
int polytope_dim(const Polytope& p);

// All integer points of P, lex-sorted: smallest integer bounding box,
// filtered by the facet description.
std::vector<VecI> lattice_points(const Polytope& p);

// Integer points strictly inside P relative to its affine hull.
std::vector<VecI> relative_interior_lattice_points(const Polytope& p);

// Vertex-wise scaling by eps > 0.
Polytope scale(const Polytope& p, const Rat& eps);

}  // namespace antican
