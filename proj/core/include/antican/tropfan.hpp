// tropfan.hpp
// The tropical structure of X(A,P), membership of cones in the fan Sigma,
// and elementary big cones with their attached integer data.
//
// trop(X) = tau_0 u ... u tau_r in Q^{r+s}, tau_i = cone(e_i) + lambda with
// e_0 = -e_1-...-e_r and lambda = 0 x Q^s the lineality space. A cone of
// Sigma is spanned by columns of P; membership is the semistability of the
// complementary coordinate face together with the cone meeting trop(X) in
// its relative interior.
//
// Semistability with torsion (a documented decision, the statement in the
// source framework does not unpack torsion): kappa's free part must be
// interior to the rational cone of the face's free-part degrees AND kappa's
// torsion part must lie in the subgroup generated by the face degrees'
// torsion parts.

#pragma once

#include <optional>
#include <vector>

#include "antican/polyhedra.hpp"
#include "antican/rap.hpp"

namespace antican {

struct TropStructure {
  int r = 0, s = 0;
  // tau_i as a cone in Q^{r+s}
  ConeV leaf_cone(int i) const;
  // leaf index of a vector on trop(X): 0..r, or s-many possibilities for
  // lambda vectors (returns the lambda marker -1); nullopt if off trop.
  std::optional<int> leaf_of(const VecI& v) const;
};

TropStructure trop_structure(const DefiningData& dd);

struct ElemBigCone {
  std::vector<int> cols;            // one global column index per leaf 0..r
  std::vector<Int> lvals;           // l_rho per chosen ray
  std::vector<Int> ell_rho;         // prod(l)/l_rho per ray
  Int ell = 0;                      // sum ell_rho - (r-1) prod l
  VecI v_sigma;                     // sum ell_rho * v_rho, lies in lambda
  Int c = 0;                        // gcd of the entries of v_sigma
  std::optional<VecQ> v_prime;      // v_sigma / ell, present iff ell > 0
};

// sum of prod/l_i over the r+1 entries minus (r-1) * prod
Int ell_sigma(const std::vector<Int>& lvals);

// l-tuple of a log-terminal elementary cone: after sorting descending, all
// but the first three entries are 1 and the head is one of
// (a,b,1), (a,2,2), (3,3,2), (4,3,2), (5,3,2).
bool is_platonic_tuple(std::vector<Int> lvals);

// kappa in relint(Q(gamma_0)) for the complementary face, and relint of the
// spanned cone meets trop(X).
bool cone_in_sigma(const DefiningData& dd, const Grading& g, const std::vector<int>& cols);

std::vector<ElemBigCone> elementary_big_cones(const DefiningData& dd, const Grading& g);

// All one-column-per-leaf tuples with their l-data, without the fan
// membership test. For free rank one with positive weights every tuple is an
// elementary big cone, so the classifier consumes this directly.
std::vector<ElemBigCone> elementary_tuples_unchecked(const DefiningData& dd);

// every elementary big cone has ell > 0 (equivalently, a platonic l-tuple)
bool is_log_terminal(const DefiningData& dd, const Grading& g);

// r - 1 <= dim X + rk Pic(X), with rk Pic = free rank in the Q-factorial case
bool check_relation_bound(const DefiningData& dd, const Grading& g);

// inclusion-maximal column subsets spanning cones of Sigma
std::vector<std::vector<int>> maximal_sigma_cones(const DefiningData& dd, const Grading& g);

// all maximal cones of Sigma simplicial
bool is_qfactorial(const DefiningData& dd, const Grading& g);

}  // namespace antican
