// rap.cpp

#include "antican/rap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "antican/errors.hpp"
#include "antican/polyhedra.hpp"

namespace antican {

int DefiningData::ncols() const {
  int t = 0;
  for (int x : n) t += x;
  return t;
}

int DefiningData::block_start(int i) const {
  int t = 0;
  for (int b = 0; b < i; ++b) t += n[b];
  return t;
}

IntMat assemble_P(const DefiningData& dd) {
  const int r = dd.r, s = dd.s;
  if (static_cast<int>(dd.n.size()) != r + 1 || static_cast<int>(dd.L.size()) != r + 1)
    throw ShapeMismatch("assemble_P: expected r+1 blocks");
  for (int i = 0; i <= r; ++i)
    if (static_cast<int>(dd.L[i].size()) != dd.n[i])
      throw ShapeMismatch("assemble_P: exponent tuple size mismatch in block " + std::to_string(i));
  const int nc = dd.ncols(), N = nc + dd.m;
  if (static_cast<int>(dd.d.size()) != s || static_cast<int>(dd.dprime.size()) != s)
    throw ShapeMismatch("assemble_P: expected s rows in d and dprime");
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(dd.d[i].size()) != nc) throw ShapeMismatch("assemble_P: d row size mismatch");
    if (static_cast<int>(dd.dprime[i].size()) != dd.m)
      throw ShapeMismatch("assemble_P: dprime row size mismatch");
  }

  IntMat p(r + s, N);
  int col = 0;
  for (int j = 0; j < dd.n[0]; ++j, ++col)
    for (int row = 0; row < r; ++row) p.at(row, col) = -Int(dd.L[0][j]);
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < dd.n[i]; ++j, ++col) p.at(i - 1, col) = Int(dd.L[i][j]);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < nc; ++j) p.at(r + i, j) = Int(dd.d[i][j]);
    for (int j = 0; j < dd.m; ++j) p.at(r + i, nc + j) = Int(dd.dprime[i][j]);
  }
  return p;
}

ValidationReport validate(const DefiningData& dd) {
  ValidationReport rep;
  if (dd.r < 1 || dd.s < 1 || dd.m < 0) {
    rep.detail = "need r >= 1, s >= 1, m >= 0";
    return rep;
  }
  if (static_cast<int>(dd.n.size()) != dd.r + 1 || static_cast<int>(dd.L.size()) != dd.r + 1) {
    rep.detail = "expected r+1 blocks";
    return rep;
  }
  for (int i = 0; i <= dd.r; ++i) {
    if (dd.n[i] < 1 || static_cast<int>(dd.L[i].size()) != dd.n[i]) {
      rep.detail = "block size mismatch";
      return rep;
    }
    for (auto l : dd.L[i])
      if (l < 1) {
        rep.detail = "exponents must be >= 1";
        return rep;
      }
  }
  const int nc = dd.ncols(), N = nc + dd.m, R = dd.r + dd.s;
  if (dd.s >= N - dd.r) {
    rep.detail = "need s < n + m - r";
    return rep;
  }
  if (static_cast<int>(dd.d.size()) != dd.s || static_cast<int>(dd.dprime.size()) != dd.s) {
    rep.detail = "d/dprime rows";
    return rep;
  }
  for (int i = 0; i < dd.s; ++i)
    if (static_cast<int>(dd.d[i].size()) != nc || static_cast<int>(dd.dprime[i].size()) != dd.m) {
      rep.detail = "d/dprime row length";
      return rep;
    }
  if (static_cast<int>(dd.lambda.size()) != std::max(0, dd.r - 2)) {
    rep.detail = "expected r-2 lambda tags";
    return rep;
  }
  rep.shape_ok = true;

  IntMat p = assemble_P(dd);
  std::set<VecI> cols;
  rep.columns_ok = true;
  for (int j = 0; j < N; ++j) {
    VecI c = p.col(j);
    if (!is_primitive(c)) {
      rep.columns_ok = false;
      rep.detail = "column " + std::to_string(j) + " not primitive";
      break;
    }
    if (!cols.insert(c).second) {
      rep.columns_ok = false;
      rep.detail = "column " + std::to_string(j) + " repeated";
      break;
    }
  }
  if (rep.columns_ok) {
    // cone(columns) = Q^{r+s} iff the dual cone is {0}
    std::vector<VecI> gens;
    for (int j = 0; j < N; ++j) gens.push_back(p.col(j));
    ConeH f = cone_facets(ConeV{gens, {}}, R);
    rep.cone_ok = f.ineq.empty() && f.eq.empty();
    if (!rep.cone_ok) rep.detail = "columns do not generate the ambient space as a cone";
  }
  rep.irredundant = true;
  for (int i = 0; i <= dd.r; ++i) {
    std::int64_t sum = 0;
    for (auto l : dd.L[i]) sum += l;
    if (sum < 2) rep.irredundant = false;
  }
  return rep;
}

void require_valid(const DefiningData& dd) {
  ValidationReport rep = validate(dd);
  if (!rep.valid()) throw ShapeMismatch("invalid defining data: " + rep.detail);
}

KClass Grading::class_of(const VecI& v) const {
  KClass c;
  for (size_t t = 0; t < tors_rows_.size(); ++t) {
    Int x = dot(u_.row(tors_rows_[t]), v) % tors_mods_[t];
    if (x < 0) x += tors_mods_[t];
    c.tors.push_back(x);
  }
  for (int fr : free_rows_) c.free_part.push_back(dot(u_.row(fr), v));
  return c;
}

Grading grading(const DefiningData& dd) {
  IntMat p = assemble_P(dd);
  IntMat pt = p.transpose();  // N x R
  const int N = pt.rows, R = pt.cols;
  SmithForm f = smith_normal_form(pt);

  Grading g;
  g.u_ = f.U;
  for (int k = 0; k < R; ++k) {
    const Int& dk = f.D.at(k, k);
    if (dk == 0) throw ShapeMismatch("grading: P does not have full rank");
    if (dk > 1) {
      g.tors_rows_.push_back(k);
      g.tors_mods_.push_back(dk);
    }
  }
  for (int k = R; k < N; ++k) g.free_rows_.push_back(k);

  // orient each free coordinate: first nonzero degree entry positive
  for (int fr : g.free_rows_) {
    for (int j = 0; j < N; ++j) {
      VecI ej(N, Int(0));
      ej[j] = 1;
      Int v = dot(g.u_.row(fr), ej);
      if (v != 0) {
        if (v < 0)
          for (int c = 0; c < N; ++c) g.u_.at(fr, c) = -g.u_.at(fr, c);
        break;
      }
    }
  }

  g.cl.free_rank = N - R;
  g.cl.torsion = g.tors_mods_;
  for (int j = 0; j < N; ++j) {
    VecI ej(N, Int(0));
    ej[j] = 1;
    g.deg.push_back(g.class_of(ej));
  }
  // kappa = sum of all degrees - (r-1) * mu, mu the block-0 monomial degree
  VecI vkappa(N, Int(1));
  VecI vmu(N, Int(0));
  for (int j = 0; j < dd.n[0]; ++j) vmu[j] = Int(dd.L[0][j]);
  for (int j = 0; j < dd.n[0]; ++j) vkappa[j] -= Int(dd.r - 1) * vmu[j];
  g.kappa = g.class_of(vkappa);
  g.mu = g.class_of(vmu);
  return g;
}

bool is_fano(const DefiningData& dd, const Grading& g) {
  const int f = g.cl.free_rank;
  if (f == 0) return false;
  const int N = dd.total_cols();

  if (f == 1) {
    // Mov = intersection of cones in Q^1
    bool lo_closed = false, hi_closed = false;  // bounded below by 0 / above by 0
    for (int j = 0; j < N; ++j) {
      bool pos = false, neg = false;
      for (int k = 0; k < N; ++k) {
        if (k == j) continue;
        if (g.deg[k].free_part[0] > 0) pos = true;
        if (g.deg[k].free_part[0] < 0) neg = true;
      }
      if (pos && !neg) lo_closed = true;   // this factor is [0, inf)
      if (neg && !pos) hi_closed = true;   // this factor is (-inf, 0]
      if (!pos && !neg) return false;      // factor {0}
    }
    const Int& k0 = g.kappa.free_part[0];
    if (lo_closed && hi_closed) return false;
    if (lo_closed) return k0 > 0;
    if (hi_closed) return k0 < 0;
    return true;  // Mov is the whole line
  }

  std::vector<VecI> ineq, eq;
  for (int j = 0; j < N; ++j) {
    std::vector<VecI> others;
    for (int k = 0; k < N; ++k)
      if (k != j) others.push_back(g.deg[k].free_part);
    ConeH fc = cone_facets(ConeV{others, {}}, f);
    ineq.insert(ineq.end(), fc.ineq.begin(), fc.ineq.end());
    eq.insert(eq.end(), fc.eq.begin(), fc.eq.end());
  }
  ConeV mov = dual_cone(ineq, eq, f);
  ConeH movh = cone_facets(mov, f);
  return cone_relint_contains(movh, g.kappa.free_part);
}

std::string CoxPresentation::text() const {
  std::ostringstream os;
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) os << ", ";
    const Trinomial& t = relations[i];
    for (int b = 0; b < 3; ++b) {
      if (b) os << "+";
      if (t.coeff[b] != "1") os << t.coeff[b] << "*";
      os << monomials[t.first_block + b];
    }
  }
  return os.str();
}

CoxPresentation cox_presentation(const DefiningData& dd) {
  CoxPresentation cp;
  const int nc = dd.ncols();
  for (int j = 0; j < nc; ++j) cp.generators.push_back("T" + std::to_string(j + 1));
  for (int k = 0; k < dd.m; ++k) cp.generators.push_back("S" + std::to_string(k + 1));
  Grading g = grading(dd);
  cp.degrees = g.deg;
  // block monomials rendered with flat generator names
  for (int i = 0; i <= dd.r; ++i) {
    std::ostringstream os;
    int start = dd.block_start(i);
    for (int j = 0; j < dd.n[i]; ++j) {
      if (j) os << "*";
      os << cp.generators[start + j];
      if (dd.L[i][j] > 1) os << "^" << dd.L[i][j];
    }
    cp.monomials.push_back(os.str());
  }
  for (int i = 0; i + 2 <= dd.r; ++i) {
    Trinomial t;
    t.first_block = i;
    t.coeff = {i == 0 ? "1" : dd.lambda[i - 1], "1", "1"};
    cp.relations.push_back(t);
  }
  return cp;
}

DefiningData apply_op(const DefiningData& dd, const AdmissibleOp& op) {
  using K = AdmissibleOp::Kind;
  DefiningData out = dd;
  const int nc = dd.ncols();
  auto col_swap_d = [&](int a, int b) {
    for (int i = 0; i < dd.s; ++i) std::swap(out.d[i][a], out.d[i][b]);
  };
  switch (op.kind) {
    case K::swap_in_block: {
      if (op.i < 0 || op.i > dd.r || op.j < 0 || op.k < 0 || op.j >= dd.n[op.i] || op.k >= dd.n[op.i])
        throw InvalidOp("swap_in_block: bad indices");
      std::swap(out.L[op.i][op.j], out.L[op.i][op.k]);
      col_swap_d(dd.block_start(op.i) + op.j, dd.block_start(op.i) + op.k);
      return out;
    }
    case K::swap_blocks: {
      if (op.i < 0 || op.j < 0 || op.i > dd.r || op.j > dd.r) throw InvalidOp("swap_blocks: bad indices");
      if (op.i == op.j) return out;
      // rebuild with blocks i and j exchanged; d columns travel with their block
      std::vector<int> order(dd.r + 1);
      std::iota(order.begin(), order.end(), 0);
      std::swap(order[op.i], order[op.j]);
      DefiningData res = dd;
      res.n.clear();
      res.L.clear();
      for (int b = 0; b <= dd.r; ++b) {
        res.n.push_back(dd.n[order[b]]);
        res.L.push_back(dd.L[order[b]]);
      }
      for (int i = 0; i < dd.s; ++i) {
        std::vector<std::int64_t> row;
        for (int b = 0; b <= dd.r; ++b) {
          int st = dd.block_start(order[b]);
          for (int j = 0; j < dd.n[order[b]]; ++j) row.push_back(dd.d[i][st + j]);
        }
        res.d[i] = std::move(row);
      }
      return res;
    }
    case K::add_top_to_bottom: {
      if (op.i < 0 || op.i >= dd.s || op.j < 0 || op.j >= dd.r) throw InvalidOp("add_top_to_bottom: bad indices");
      // top row j of the assembled P: -l0 on block 0, l_{j+1} on block j+1
      for (int c = 0; c < dd.n[0]; ++c) out.d[op.i][c] -= op.c * dd.L[0][c];
      int st = dd.block_start(op.j + 1);
      for (int c = 0; c < dd.n[op.j + 1]; ++c) out.d[op.i][st + c] += op.c * dd.L[op.j + 1][c];
      return out;
    }
    case K::bottom_unimodular: {
      if (static_cast<int>(op.V.size()) != dd.s) throw InvalidOp("bottom_unimodular: V must be s x s");
      IntMat v(dd.s, dd.s);
      for (int i = 0; i < dd.s; ++i) {
        if (static_cast<int>(op.V[i].size()) != dd.s) throw InvalidOp("bottom_unimodular: V must be s x s");
        for (int j = 0; j < dd.s; ++j) v.at(i, j) = Int(op.V[i][j]);
      }
      Int dv = det(v);
      if (dv != 1 && dv != -1) throw InvalidOp("bottom_unimodular: V is not unimodular");
      for (int i = 0; i < dd.s; ++i) {
        for (int c = 0; c < nc; ++c) {
          Int acc = 0;
          for (int k = 0; k < dd.s; ++k) acc += v.at(i, k) * Int(dd.d[k][c]);
          out.d[i][c] = static_cast<std::int64_t>(acc);
        }
        for (int c = 0; c < dd.m; ++c) {
          Int acc = 0;
          for (int k = 0; k < dd.s; ++k) acc += v.at(i, k) * Int(dd.dprime[k][c]);
          out.dprime[i][c] = static_cast<std::int64_t>(acc);
        }
      }
      return out;
    }
    case K::swap_dprime: {
      if (op.j < 0 || op.k < 0 || op.j >= dd.m || op.k >= dd.m) throw InvalidOp("swap_dprime: bad indices");
      for (int i = 0; i < dd.s; ++i) std::swap(out.dprime[i][op.j], out.dprime[i][op.k]);
      return out;
    }
  }
  throw InvalidOp("unknown operation");
}

namespace {

// signature used to sort blocks: (n_i, l_i sorted descending), compared descending
struct BlockSig {
  int n;
  std::vector<std::int64_t> l;
  bool operator<(const BlockSig& o) const {
    if (n != o.n) return n > o.n;
    return l > o.l;
  }
  bool operator==(const BlockSig& o) const = default;
};

BlockSig block_sig(const DefiningData& dd, int b) {
  std::vector<std::int64_t> l = dd.L[b];
  std::sort(l.rbegin(), l.rend());
  return BlockSig{dd.n[b], std::move(l)};
}

// all permutations of `idx` compatible with groupwise ties in `keys`
template <typename Key>
std::vector<std::vector<int>> tie_permutations(const std::vector<int>& idx,
                                               const std::vector<Key>& keys) {
  // idx is already sorted by key; enumerate permutations within equal-key runs
  std::vector<std::vector<int>> out{{}};
  size_t i = 0;
  while (i < idx.size()) {
    size_t j = i;
    while (j < idx.size() && keys[idx[j]] == keys[idx[i]]) ++j;
    std::vector<int> run(idx.begin() + i, idx.begin() + j);
    std::sort(run.begin(), run.end());
    std::vector<std::vector<int>> next;
    do {
      for (const auto& pre : out) {
        std::vector<int> e = pre;
        e.insert(e.end(), run.begin(), run.end());
        next.push_back(std::move(e));
      }
    } while (std::next_permutation(run.begin(), run.end()));
    out = std::move(next);
    i = j;
  }
  return out;
}

// integer inverse of a unimodular matrix
IntMat unimodular_inverse(const IntMat& v) {
  const int n = v.rows;
  IntMat inv(n, n);
  for (int j = 0; j < n; ++j) {
    VecQ b(n, Rat(0));
    b[j] = 1;
    auto x = solve_rational(v, b);
    if (!x) throw Error("unimodular_inverse: singular matrix");
    for (int i = 0; i < n; ++i) {
      if (den((*x)[i]) != 1) throw Error("unimodular_inverse: matrix not unimodular");
      inv.at(i, j) = num((*x)[i]);
    }
  }
  return inv;
}

// Canonical bottom block modulo adding top rows and GL_s(Z): quotient
// coordinates w.r.t. the exponent part via its Smith form, then the unique
// GL_s transform putting the free columns into row Hermite form, then
// residue reduction.
std::vector<std::vector<Int>> canonical_bottom(const IntMat& top, const IntMat& bottom) {
  const int N = top.cols, s = bottom.rows, r = top.rows;
  SmithForm f = smith_normal_form(top);
  // columns transform: C = B * V ; torsion columns are the first r with mods d_k
  IntMat c = bottom.mul(f.V);
  std::vector<Int> mods(r);
  for (int k = 0; k < r; ++k) {
    mods[k] = f.D.at(k, k);
    if (mods[k] == 0) throw Error("canonical_bottom: exponent part rank-deficient");
  }
  IntMat cfree(s, N - r);
  for (int i = 0; i < s; ++i)
    for (int j = r; j < N; ++j) cfree.at(i, j - r) = c.at(i, j);
  RowHnf h = row_hnf(cfree);
  if (static_cast<int>(h.pivot_cols.size()) != s)
    throw Error("canonical_bottom: bottom rows dependent modulo the exponent part");
  IntMat cc = h.U.mul(c);
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < r; ++k) {
      Int v = cc.at(i, k) % mods[k];
      if (v < 0) v += mods[k];
      cc.at(i, k) = v;
    }
  IntMat vinv = unimodular_inverse(f.V);
  IntMat b = cc.mul(vinv);
  std::vector<std::vector<Int>> out(s, std::vector<Int>(N));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < N; ++j) out[i][j] = b.at(i, j);
  return out;
}

}  // namespace

DefiningData normalize(const DefiningData& dd) {
  // candidate block orders: sorted by signature, ties enumerated
  std::vector<BlockSig> sigs;
  for (int b = 0; b <= dd.r; ++b) sigs.push_back(block_sig(dd, b));
  std::vector<int> order(dd.r + 1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
  std::vector<std::vector<int>> block_orders = tie_permutations(order, sigs);

  std::optional<DefiningData> best;
  std::optional<std::vector<Int>> best_key;

  for (const auto& blocks : block_orders) {
    // within-block column orders: exponents descending, ties enumerated
    std::vector<std::vector<std::vector<int>>> col_orders(dd.r + 1);
    for (int bi = 0; bi <= dd.r; ++bi) {
      int b = blocks[bi];
      std::vector<int> cidx(dd.n[b]);
      std::iota(cidx.begin(), cidx.end(), 0);
      std::stable_sort(cidx.begin(), cidx.end(),
                       [&](int a, int c) { return dd.L[b][a] > dd.L[b][c]; });
      std::vector<std::int64_t> keys = dd.L[b];
      col_orders[bi] = tie_permutations(cidx, keys);
    }
    std::vector<int> didx(dd.m);
    std::iota(didx.begin(), didx.end(), 0);
    std::vector<int> dkeys(dd.m, 0);  // all dprime columns interchangeable
    std::vector<std::vector<int>> dprime_orders = tie_permutations(didx, dkeys);

    // odometer over the per-block choices and the dprime choice
    std::vector<size_t> pick(dd.r + 2, 0);
    for (;;) {
      DefiningData cand;
      cand.r = dd.r;
      cand.s = dd.s;
      cand.m = dd.m;
      cand.lambda = dd.lambda;
      std::vector<int> colmap;  // global source column per target column
      for (int bi = 0; bi <= dd.r; ++bi) {
        int b = blocks[bi];
        const auto& co = col_orders[bi][pick[bi]];
        cand.n.push_back(dd.n[b]);
        std::vector<std::int64_t> l;
        for (int j : co) {
          l.push_back(dd.L[b][j]);
          colmap.push_back(dd.block_start(b) + j);
        }
        cand.L.push_back(std::move(l));
      }
      const auto& dord = dprime_orders[pick[dd.r + 1]];
      const int nc = dd.ncols();
      IntMat bottom(dd.s, nc + dd.m);
      for (int i = 0; i < dd.s; ++i)
        for (int j = 0; j < nc; ++j) bottom.at(i, j) = Int(dd.d[i][colmap[j]]);
      for (int i = 0; i < dd.s; ++i)
        for (int j = 0; j < dd.m; ++j) bottom.at(i, nc + j) = Int(dd.dprime[i][dord[j]]);
      cand.d.assign(dd.s, {});
      cand.dprime.assign(dd.s, {});

      IntMat top(dd.r, nc + dd.m);
      {
        int col = 0;
        for (int j = 0; j < cand.n[0]; ++j, ++col)
          for (int row = 0; row < dd.r; ++row) top.at(row, col) = -Int(cand.L[0][j]);
        for (int i = 1; i <= dd.r; ++i)
          for (int j = 0; j < cand.n[i]; ++j, ++col) top.at(i - 1, col) = Int(cand.L[i][j]);
      }
      auto canon = canonical_bottom(top, bottom);
      for (int i = 0; i < dd.s; ++i) {
        for (int j = 0; j < nc; ++j) cand.d[i].push_back(static_cast<std::int64_t>(canon[i][j]));
        for (int j = 0; j < dd.m; ++j)
          cand.dprime[i].push_back(static_cast<std::int64_t>(canon[i][nc + j]));
      }

      // flat comparison key: exponent layout then bottom rows
      std::vector<Int> key;
      for (int i = 0; i <= dd.r; ++i) {
        key.push_back(cand.n[i]);
        for (auto l : cand.L[i]) key.push_back(l);
      }
      for (int i = 0; i < dd.s; ++i)
        for (const Int& x : canon[i]) key.push_back(x);
      if (!best_key || key < *best_key) {
        best_key = std::move(key);
        best = std::move(cand);
      }

      int pos = dd.r + 1;
      for (;;) {
        size_t lim = pos == dd.r + 1 ? dprime_orders.size() : col_orders[pos].size();
        if (++pick[pos] < lim) break;
        pick[pos] = 0;
        if (--pos < 0) break;
      }
      if (pos < 0) break;
    }
  }
  return *best;
}

namespace {

using nlohmann::ordered_json;

std::vector<std::vector<std::int64_t>> rows_from_json(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

DefiningData parse_defining_data(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("defining data: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("defining data: expected an object");
  DefiningData dd;
  try {
    dd.r = j.at("r").get<int>();
    dd.s = j.at("s").get<int>();
    dd.m = j.at("m").get<int>();
    for (const auto& x : j.at("n")) dd.n.push_back(x.get<int>());
    dd.L = rows_from_json(j.at("L"), "L");
    dd.d = rows_from_json(j.at("d"), "d");
    if (j.contains("dprime"))
      dd.dprime = rows_from_json(j.at("dprime"), "dprime");
    else
      dd.dprime.assign(dd.s, {});
    if (j.contains("lambda"))
      for (const auto& x : j.at("lambda")) dd.lambda.push_back(x.get<std::string>());
    if (dd.lambda.empty() && dd.r >= 3)
      for (int i = 0; i + 2 < dd.r; ++i) dd.lambda.push_back("lambda" + std::to_string(i + 1));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("defining data: ") + e.what());
  }
  ValidationReport rep = validate(dd);
  if (!rep.shape_ok) throw ParseError("defining data: " + rep.detail);
  return dd;
}

std::string serialize_defining_data(const DefiningData& dd) {
  ordered_json j;
  j["r"] = dd.r;
  j["s"] = dd.s;
  j["m"] = dd.m;
  j["n"] = dd.n;
  j["L"] = dd.L;
  j["d"] = dd.d;
  j["dprime"] = dd.dprime;
  j["lambda"] = dd.lambda;
  return j.dump();
}

}  // namespace antican
