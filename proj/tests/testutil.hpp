// testutil.hpp
// Shared fixtures and generators for the unit and acceptance suites.

#pragma once

#include <random>
#include <vector>

#include "antican/rap.hpp"

namespace antican::testing {

// The smooth quadric instance (classification row 1): relation
// T1*T2+T3*T4+T5^2, class group Z, weights (1,1,1,1,1). The d rows are
// chosen so the maximal minors of P are coprime (torsion-free quotient).
inline DefiningData quadric() {
  DefiningData dd;
  dd.r = 2;
  dd.s = 2;
  dd.m = 0;
  dd.n = {2, 2, 1};
  dd.L = {{1, 1}, {1, 1}, {2}};
  dd.d = {{0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}};
  dd.dprime = {{}, {}};
  return dd;
}

// The E6-singular cubic surface: relation T1*T2^3+T3^3+T4^2 with degrees
// (3,1,2,3); the d row is chosen so the assembled columns are
// (-1,-1,-1), (-3,-3,-2), (3,0,1), (0,2,1).
inline DefiningData e6_cubic() {
  DefiningData dd;
  dd.r = 2;
  dd.s = 1;
  dd.m = 0;
  dd.n = {2, 1, 1};
  dd.L = {{1, 3}, {3}, {2}};
  dd.d = {{-1, -2, 1, 1}};
  dd.dprime = {{}};
  return dd;
}

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// A random structurally well-formed instance (not necessarily Fano or even
// a valid cone configuration); callers filter.
inline DefiningData random_instance(Rng& rng, int max_entry = 6) {
  DefiningData dd;
  dd.r = static_cast<int>(rand_int(rng, 2, 3));
  dd.s = 2;
  dd.m = static_cast<int>(rand_int(rng, 0, 1));
  for (int i = 0; i <= dd.r; ++i) dd.n.push_back(static_cast<int>(rand_int(rng, 1, 2)));
  for (int i = 0; i <= dd.r; ++i) {
    std::vector<std::int64_t> l;
    for (int j = 0; j < dd.n[i]; ++j) l.push_back(rand_int(rng, 1, 4));
    // irredundancy
    if (dd.n[i] == 1 && l[0] == 1) l[0] = rand_int(rng, 2, 4);
    dd.L.push_back(std::move(l));
  }
  for (int i = 0; i < dd.s; ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < dd.ncols(); ++j) row.push_back(rand_int(rng, -max_entry, max_entry));
    dd.d.push_back(std::move(row));
    std::vector<std::int64_t> rowp;
    for (int j = 0; j < dd.m; ++j) rowp.push_back(rand_int(rng, -max_entry, max_entry));
    dd.dprime.push_back(std::move(rowp));
  }
  for (int i = 0; i + 2 < dd.r; ++i) dd.lambda.push_back("lambda" + std::to_string(i + 1));
  return dd;
}

// A random admissible operation valid for dd.
inline AdmissibleOp random_op(Rng& rng, const DefiningData& dd) {
  for (;;) {
    AdmissibleOp op;
    switch (rand_int(rng, 0, 4)) {
      case 0: {
        op.kind = AdmissibleOp::Kind::swap_in_block;
        op.i = static_cast<int>(rand_int(rng, 0, dd.r));
        if (dd.n[op.i] < 2) continue;
        op.j = static_cast<int>(rand_int(rng, 0, dd.n[op.i] - 1));
        op.k = static_cast<int>(rand_int(rng, 0, dd.n[op.i] - 1));
        return op;
      }
      case 1: {
        op.kind = AdmissibleOp::Kind::swap_blocks;
        op.i = static_cast<int>(rand_int(rng, 0, dd.r));
        op.j = static_cast<int>(rand_int(rng, 0, dd.r));
        return op;
      }
      case 2: {
        op.kind = AdmissibleOp::Kind::add_top_to_bottom;
        op.i = static_cast<int>(rand_int(rng, 0, dd.s - 1));
        op.j = static_cast<int>(rand_int(rng, 0, dd.r - 1));
        op.c = rand_int(rng, -3, 3);
        return op;
      }
      case 3: {
        // random unimodular V: product of elementary shears and swaps
        op.kind = AdmissibleOp::Kind::bottom_unimodular;
        std::vector<std::vector<std::int64_t>> v(dd.s, std::vector<std::int64_t>(dd.s, 0));
        for (int i = 0; i < dd.s; ++i) v[i][i] = 1;
        for (int t = 0; t < 3; ++t) {
          int a = static_cast<int>(rand_int(rng, 0, dd.s - 1));
          int b = static_cast<int>(rand_int(rng, 0, dd.s - 1));
          if (a == b) continue;
          std::int64_t c = rand_int(rng, -2, 2);
          for (int k = 0; k < dd.s; ++k) v[a][k] += c * v[b][k];
        }
        if (rand_int(rng, 0, 1) && dd.s >= 2) std::swap(v[0], v[1]);
        op.V = std::move(v);
        return op;
      }
      default: {
        if (dd.m < 2) continue;
        op.kind = AdmissibleOp::Kind::swap_dprime;
        op.j = static_cast<int>(rand_int(rng, 0, dd.m - 1));
        op.k = static_cast<int>(rand_int(rng, 0, dd.m - 1));
        return op;
      }
    }
  }
}

}  // namespace antican::testing
