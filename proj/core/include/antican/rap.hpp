// rap.hpp
// The defining data (A, P): assembly and validation of the block matrix P,
// the divisor class group grading, the Fano criterion, the Cox-ring
// presentation, admissible operations and the canonical (orbit) normal form.
//
// Conventions. Blocks are numbered 0..r; block i has n[i] columns with
// exponents L[i][j] >= 1. The assembled P is (r+s) x (n+m): the top r rows
// carry the exponent blocks (block 0 negated and repeated in every row), the
// bottom s rows are d (n columns) and dprime (m columns). The matrix A of
// coefficient columns is kept only as moduli: nothing for r = 2, one opaque
// tag per extra relation for r >= 3 (all polyhedral data depends on P only).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antican/exact.hpp"

namespace antican {

struct DefiningData {
  int r = 0, s = 0, m = 0;
  std::vector<int> n;                           // r+1 block sizes
  std::vector<std::vector<std::int64_t>> L;     // r+1 exponent tuples
  std::vector<std::vector<std::int64_t>> d;     // s rows of sum(n) entries
  std::vector<std::vector<std::int64_t>> dprime;  // s rows of m entries
  std::vector<std::string> lambda;              // r-2 coefficient tags

  int ncols() const;              // sum of block sizes
  int total_cols() const { return ncols() + m; }
  int ambient_dim() const { return r + s; }
  // first global column index of block i; lambda columns start at ncols()
  int block_start(int i) const;

  bool operator==(const DefiningData& o) const = default;
};

IntMat assemble_P(const DefiningData& dd);

struct ValidationReport {
  bool shape_ok = false;       // block bookkeeping consistent, exponents >= 1
  bool columns_ok = false;     // columns primitive and pairwise distinct
  bool cone_ok = false;        // columns generate Q^{r+s} as a cone
  bool irredundant = false;    // every block has exponent sum >= 2
  std::string detail;

  bool valid(bool require_irredundant = false) const {
    return shape_ok && columns_ok && cone_ok && (!require_irredundant || irredundant);
  }
};

ValidationReport validate(const DefiningData& dd);
// throws ShapeMismatch when shape/columns/cone checks fail
void require_valid(const DefiningData& dd);

struct ClassGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order
  bool operator==(const ClassGroup& o) const = default;
};

// An element of K = Z^{free_rank} (+) sum Z/torsion[i].
struct KClass {
  VecI free_part;
  VecI tors;  // residues, tors[i] in [0, torsion[i])
  bool operator==(const KClass& o) const = default;
};

struct Grading {
  ClassGroup cl;
  std::vector<KClass> deg;  // one class per column of P
  KClass kappa;             // anticanonical class
  KClass mu;                // common class of the relations

  KClass class_of(const VecI& v) const;  // image of v in K
 private:
  friend Grading grading(const DefiningData&);
  IntMat u_;                 // Smith transform of P^T
  std::vector<int> tors_rows_, free_rows_;
  std::vector<Int> tors_mods_;
};

Grading grading(const DefiningData& dd);

// kappa in relint(Mov), Mov the intersection over columns of the cones
// generated by the remaining degrees (free parts; torsion plays no role in
// the cone condition).
bool is_fano(const DefiningData& dd, const Grading& g);

struct Trinomial {
  int first_block = 0;                // uses blocks first_block .. first_block+2
  std::array<std::string, 3> coeff;   // "1" or a lambda tag
};

struct CoxPresentation {
  std::vector<std::string> generators;  // flat names T1..Tn, S1..Sm
  std::vector<KClass> degrees;
  std::vector<std::string> monomials;   // one block monomial per block
  std::vector<Trinomial> relations;
  std::string text() const;  // e.g. "T1*T2+T3*T4+T5^2"
};

CoxPresentation cox_presentation(const DefiningData& dd);

struct AdmissibleOp {
  enum class Kind {
    swap_in_block,         // (i)  block i, columns j, k
    swap_blocks,           // (ii) blocks i, j
    add_top_to_bottom,     // (iii) bottom row i += c * top row j
    bottom_unimodular,     // (iv) bottom rows <- V * bottom rows, |det V| = 1
    swap_dprime            // (v)  dprime columns j, k
  };
  Kind kind{};
  int i = 0, j = 0, k = 0;
  std::int64_t c = 0;
  std::vector<std::vector<std::int64_t>> V;
};

// throws InvalidOp on bad indices or a non-unimodular V
DefiningData apply_op(const DefiningData& dd, const AdmissibleOp& op);

// Canonical representative of the admissible-operation orbit: blocks sorted
// by (n_i, l_i) descending, columns within blocks sorted by exponent, the
// bottom s rows reduced to a Hermite-like normal form modulo the top rows,
// remaining ties resolved by taking the lexicographic minimum. Idempotent.
DefiningData normalize(const DefiningData& dd);

// JSON schema: { r, s, m, n, L, d, dprime, lambda } - see README.
DefiningData parse_defining_data(const std::string& json_text);  // throws ParseError
std::string serialize_defining_data(const DefiningData& dd);

}  // namespace antican
