// exact.hpp
// Exact integer/rational arithmetic and integer-lattice linear algebra.
// Everything downstream (polytopes, gradings, verdicts) is built on these
// types; no floating point is used anywhere in the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antican {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecI = std::vector<Int>;
using VecQ = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// n/d with the sign moved to the numerator (the underlying rational type
// rejects negative denominators). Throws std::invalid_argument on d = 0.
inline Rat make_rat(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(std::move(n), std::move(d));
}

// Largest integer <= q and smallest integer >= q.
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Serialization used across all machine-readable output: "p" or "p/q".
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

// gcd of absolute values; 0 for the zero vector (by convention).
Int gcd_vector(const VecI& v);

bool is_zero(const VecI& v);
bool is_primitive(const VecI& v);

// v divided by gcd_vector(v); the zero vector is returned unchanged.
// Direction is preserved (no sign normalization).
VecI primitive_part(VecI v);

VecI vec_add(const VecI& a, const VecI& b);
VecI vec_sub(const VecI& a, const VecI& b);
VecI vec_scale(const VecI& a, const Int& c);
Int dot(const VecI& a, const VecI& b);
Rat dot_qi(const VecQ& a, const VecI& b);
Rat dot_qq(const VecQ& a, const VecQ& b);
VecQ vec_to_rat(const VecI& v);

// Clears denominators and divides by the content: the unique primitive
// integer vector on the same ray (zero stays zero).
VecI primitive_of_rat(const VecQ& v);

// Dense row-major integer matrix.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  IntMat transpose() const;
  IntMat mul(const IntMat& o) const;
  VecI col(int j) const;
  VecI row(int i) const;
  bool operator==(const IntMat& o) const = default;
};

// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
// Pivot rule is pinned (smallest absolute value, then leftmost, then topmost)
// so the output is deterministic for a fixed input.
struct SmithForm {
  IntMat U, D, V;
};

SmithForm smith_normal_form(const IntMat& M);

Int det(const IntMat& M);  // Bareiss elimination; M square
int rank_mat(const IntMat& M);

// Lattice basis of ker(M) ∩ Z^cols. The returned basis generates the full
// kernel lattice (saturated); columns of the Smith V beyond the rank.
std::vector<VecI> kernel_basis(const IntMat& M);

// Row-style Hermite normal form: U*M = H with U unimodular, H in row echelon
// form, pivots positive, entries above a pivot reduced into [0, pivot).
struct RowHnf {
  IntMat H, U;
  std::vector<int> pivot_cols;  // one per nonzero row of H
};

RowHnf row_hnf(const IntMat& M);

// Solve A x = b over the integers; nullopt if no integral solution.
std::optional<VecI> solve_integer(const IntMat& A, const VecI& b);

// Solve A x = b over the rationals; nullopt if inconsistent. When the
// solution space is positive-dimensional an arbitrary but deterministic
// solution is returned.
std::optional<VecQ> solve_rational(const IntMat& A, const VecQ& b);

}  // namespace antican
