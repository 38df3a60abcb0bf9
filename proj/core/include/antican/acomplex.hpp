// acomplex.hpp
// The anticanonical complex of X(A,P): the fast vertex description
// (columns and the points v'_sigma of the elementary big cones), the
// independent dual-polytope construction, the lattice-point singularity
// verdicts and exact discrepancies.
//
// Leaf charts. A point of tau_i is x*e_i + (0,w) with x >= 0 and w in Q^s;
// the pair (x, w) in Q^{1+s} is the chart. Chart integrality equals ambient
// integrality because every e_i (including e_0 = -e_1-...-e_r) is primitive.

#pragma once

#include <optional>
#include <vector>

#include "antican/polyhedra.hpp"
#include "antican/rap.hpp"
#include "antican/tropfan.hpp"

namespace antican {

struct ACComplex {
  int r = 0, s = 0;
  Polytope lineality;                          // in Q^s (lambda coordinates)
  std::vector<Polytope> leaves;                // r+1 polytopes in Q^{1+s}
  std::vector<ElemBigCone> big_cones;
  std::vector<VecQ> vprime_points;             // lambda coordinates of the v'_sigma
  std::vector<std::vector<VecI>> leaf_columns; // per leaf: chart points of its columns
                                               // (block columns at x>0, lambda columns at x=0)
};

// chart <-> ambient conversions for leaf i
VecI chart_to_ambient(int r, int s, int leaf, const VecI& chart);
VecQ chart_to_ambient_q(int r, int s, int leaf, const VecQ& chart);

// Corollary-style vertex description; requires Fano and log terminal.
// Throws NotFano / NotLogTerminal (the latter carries the offending cone's
// column indices in its message).
ACComplex build_complex(const DefiningData& dd, const Grading& g);

// Same construction from an already-determined elementary-cone list (all
// with positive ell); no Fano or fan-membership gates.
ACComplex build_complex_from_cones(const DefiningData& dd, std::vector<ElemBigCone> cones);

// First lattice point of the complex that is neither the origin nor a column
// of P, as (leaf index, chart point); nullopt means terminal.
std::optional<std::pair<int, VecI>> terminal_witness(const ACComplex& ac);

struct SingularityVerdict {
  bool log_terminal = false;
  bool canonical = false;
  bool terminal = false;
  std::optional<Rat> eps;                      // query value, when supplied
  std::optional<bool> eps_log_terminal;
  std::optional<VecI> witness_point;           // ambient lattice point breaking the
                                               // strongest failed criterion
  std::optional<std::vector<int>> witness_cone;  // columns of a cone with ell <= 0
};

SingularityVerdict classify(const DefiningData& dd, const Grading& g,
                            const std::optional<Rat>& eps = std::nullopt);

// B_X = (P^*)^{-1}(B(-K) + B - e_Sigma), computed from the degree fiber
// polytope and the relation Newton polytopes. Ambient Q^{r+s}.
Polytope bx_polytope(const DefiningData& dd, const Grading& g);

// The polar dual of B_X by its vertices. Requires the dual to be bounded
// (origin interior to B_X); throws OriginNotInterior otherwise, NotFano when
// the data is not Fano.
Polytope anticanonical_polyhedron(const DefiningData& dd, const Grading& g);

// Independent route to the complex supports: restrict the halfspace
// description dual to B_X to each leaf chart. Serves as the oracle for
// build_complex. Throws Unbounded when a support is unbounded.
struct LeafSupports {
  Polytope lineality;
  std::vector<Polytope> leaves;
};

LeafSupports leaf_supports_dual(const DefiningData& dd, const Grading& g);

// Exact discrepancy along a primitive ray on trop(X): the boundary-crossing
// ratio |v| / |v'| - 1. Throws RayNotOnTrop / UnboundedDirection.
Rat discrepancy_ray(const DefiningData& dd, const Grading& g, const VecI& ray);

// Closed-form lineality part for the shape r=2, s=2, m=0, n=(2,2,1),
// l01=l02=1, d-block 0 normalized to ((0,1),(0,0)). Throws WrongShape.
struct TrapezoidData {
  Polytope poly;     // in Q^2
  Rat g1_len, g1_h;  // upper segment: length and height
  Rat g2_len, g2_h;  // lower segment
};

TrapezoidData lineality_trapezoid(const DefiningData& dd);

}  // namespace antican
