// invariants.hpp
// Numerical invariants of X(A,P): class group, anticanonical
// self-intersection, Gorenstein index, and the canonical distinctness key
// used to pair classification output with the reference table.

#pragma once

#include <string>
#include <vector>

#include "antican/rap.hpp"

namespace antican {

struct InvariantSet {
  ClassGroup cl;
  std::vector<KClass> degrees;          // canonical column order (sorted)
  Rat antican_cube;                     // 0 when not defined (free rank != 1 or dim != 3)
  bool antican_cube_defined = false;
  Int gorenstein_index;
  std::vector<std::vector<Int>> rel_exponents;  // sorted tuples, sorted
  int generators = 0;
  int lambda_count = 0;
  std::string key;
};

ClassGroup class_group(const Grading& g);

// (prod of relation degrees) * kappa^3 / (prod of generator degrees * torsion
// order), all in the free part; requires free rank one and dim X = 3.
// Validated row-by-row against the reference table by the acceptance suite.
Rat antican_cube(const DefiningData& dd, const Grading& g);  // throws NotRankOne

// lcm over the maximal cones of Sigma of the order of kappa in the local
// class group K / Q(lin(gamma_0) cap Z^{n+m}).
Int gorenstein_index(const DefiningData& dd, const Grading& g);

// Canonical tuple (class group, sorted degree columns, sorted relation
// exponent multisets, (-K)^3, Gorenstein index) rendered as a stable string.
// Degree columns are canonicalized under the automorphisms of Z (+) T for
// free rank one with cyclic torsion; for higher free rank the columns are
// sorted without GL_f minimization.
std::string distinctness_key(const DefiningData& dd, const Grading& g);

// Shared key construction; also used for reference-table rows.
std::string make_distinctness_key(const ClassGroup& cl, const std::vector<KClass>& degrees,
                                  const std::vector<std::vector<Int>>& sorted_rel_exponents,
                                  int m, int lambda_count, const std::optional<Rat>& kcube,
                                  const std::optional<Int>& iota);

InvariantSet compute_invariants(const DefiningData& dd, const Grading& g);

}  // namespace antican
