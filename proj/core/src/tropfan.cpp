// tropfan.cpp

#include "antican/tropfan.hpp"

#include <algorithm>

#include "antican/errors.hpp"

namespace antican {

ConeV TropStructure::leaf_cone(int i) const {
  const int dim = r + s;
  ConeV c;
  VecI e(dim, Int(0));
  if (i == 0)
    for (int k = 0; k < r; ++k) e[k] = -1;
  else
    e[i - 1] = 1;
  c.rays.push_back(std::move(e));
  for (int k = 0; k < s; ++k) {
    VecI l(dim, Int(0));
    l[r + k] = 1;
    c.lin.push_back(std::move(l));
  }
  return c;
}

std::optional<int> TropStructure::leaf_of(const VecI& v) const {
  bool all_zero = true;
  for (int k = 0; k < r; ++k)
    if (v[k] != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return -1;  // lambda
  bool all_equal_neg = v[0] < 0;
  for (int k = 1; k < r && all_equal_neg; ++k)
    if (v[k] != v[0]) all_equal_neg = false;
  if (all_equal_neg) return 0;
  int cnt = 0, at = -1;
  for (int k = 0; k < r; ++k)
    if (v[k] != 0) {
      ++cnt;
      at = k;
    }
  if (cnt == 1 && v[at] > 0) return at + 1;
  return std::nullopt;
}

TropStructure trop_structure(const DefiningData& dd) { return TropStructure{dd.r, dd.s}; }

Int ell_sigma(const std::vector<Int>& lvals) {
  const int r = static_cast<int>(lvals.size()) - 1;
  Int prod = 1;
  for (const Int& l : lvals) prod *= l;
  Int s = 0;
  for (const Int& l : lvals) s += prod / l;
  return s - Int(r - 1) * prod;
}

bool is_platonic_tuple(std::vector<Int> l) {
  std::sort(l.rbegin(), l.rend());
  for (size_t i = 3; i < l.size(); ++i)
    if (l[i] != 1) return false;
  while (l.size() < 3) l.push_back(1);
  const Int &a = l[0], &b = l[1], &c = l[2];
  if (c == 1) return true;
  if (b == 2 && c == 2) return true;
  if (c == 2 && b == 3 && (a == 3 || a == 4 || a == 5)) return true;
  return false;
}

namespace {

// kappa in relint Q(gamma0) for the coordinate face spanned by `face`.
// The condition lives in K_Q: kappa's free part interior to the rational
// cone of the face degrees' free parts. The torsion side is automatic: the
// free part lying in the span already makes some positive multiple of kappa
// a lattice combination of the face degrees in K, which is the semistability
// requirement.
bool semistable_face(const Grading& g, const std::vector<int>& face) {
  const int f = g.cl.free_rank;
  if (f == 1) {
    bool pos = false, neg = false;
    for (int j : face) {
      if (g.deg[j].free_part[0] > 0) pos = true;
      if (g.deg[j].free_part[0] < 0) neg = true;
    }
    const Int& k0 = g.kappa.free_part[0];
    if (pos && neg) return true;  // cone is the whole line
    if (pos) return k0 > 0;
    if (neg) return k0 < 0;
    return k0 == 0;
  }
  std::vector<VecI> gens;
  for (int j : face) gens.push_back(g.deg[j].free_part);
  ConeH h = cone_facets(ConeV{gens, {}}, f);
  return cone_relint_contains(h, g.kappa.free_part);
}

// relint(cone(cols)) meets trop(X): for some leaf, the generic point of
// cone(cols) n tau_i lies in relint(cone(cols)).
bool meets_trop(const DefiningData& dd, const IntMat& p, const std::vector<int>& cols) {
  const int dim = dd.ambient_dim();
  ConeV sigma;
  for (int j : cols) sigma.rays.push_back(p.col(j));
  ConeH sh = cone_facets(sigma, dim);
  TropStructure ts{dd.r, dd.s};
  for (int i = 0; i <= dd.r; ++i) {
    ConeV inter = cone_intersection(sigma, ts.leaf_cone(i), dim);
    if (inter.rays.empty() && inter.lin.empty()) continue;
    VecI z(dim, Int(0));
    for (const VecI& ray : inter.rays) z = vec_add(z, ray);
    bool inside = true;
    for (const VecI& e : sh.eq)
      if (dot(e, z) != 0) {
        inside = false;
        break;
      }
    if (inside)
      for (const VecI& a : sh.ineq)
        if (dot(a, z) <= 0) {
          inside = false;
          break;
        }
    if (inside) return true;
  }
  return false;
}

}  // namespace

bool cone_in_sigma(const DefiningData& dd, const Grading& g, const std::vector<int>& cols) {
  const int N = dd.total_cols();
  std::vector<bool> in(N, false);
  for (int j : cols) {
    if (j < 0 || j >= N) throw Error("cone_in_sigma: column index out of range");
    in[j] = true;
  }
  std::vector<int> face;
  for (int j = 0; j < N; ++j)
    if (!in[j]) face.push_back(j);
  if (!semistable_face(g, face)) return false;
  IntMat p = assemble_P(dd);
  return meets_trop(dd, p, cols);
}

namespace {

// An elementary tuple (one column per leaf) with linearly independent
// columns always meets trop(X) in its relative interior: the combination
// with coefficients 1/l_rho lands in the lineality space.
bool elementary_meets_trop(const DefiningData& dd, const IntMat& p, const std::vector<int>& cols) {
  IntMat m(static_cast<int>(cols.size()), dd.ambient_dim());
  for (size_t i = 0; i < cols.size(); ++i) {
    VecI c = p.col(cols[i]);
    for (int k = 0; k < dd.ambient_dim(); ++k) m.at(static_cast<int>(i), k) = c[k];
  }
  if (rank_mat(m) == static_cast<int>(cols.size())) return true;
  return meets_trop(dd, p, cols);
}

bool semistable_complement(const DefiningData& dd, const Grading& g, const std::vector<int>& cols) {
  const int N = dd.total_cols();
  std::vector<bool> in(N, false);
  for (int j : cols) in[j] = true;
  std::vector<int> face;
  for (int j = 0; j < N; ++j)
    if (!in[j]) face.push_back(j);
  return semistable_face(g, face);
}

}  // namespace

std::vector<ElemBigCone> elementary_tuples_unchecked(const DefiningData& dd) {
  IntMat p = assemble_P(dd);
  std::vector<ElemBigCone> out;
  std::vector<int> choice(dd.r + 1, 0);
  for (;;) {
    ElemBigCone ec;
    for (int b = 0; b <= dd.r; ++b) {
      ec.cols.push_back(dd.block_start(b) + choice[b]);
      ec.lvals.push_back(Int(dd.L[b][choice[b]]));
    }
    Int prod = 1;
    for (const Int& l : ec.lvals) prod *= l;
    VecI v(dd.ambient_dim(), Int(0));
    for (int b = 0; b <= dd.r; ++b) {
      Int lr = prod / ec.lvals[b];
      ec.ell_rho.push_back(lr);
      v = vec_add(v, vec_scale(p.col(ec.cols[b]), lr));
    }
    ec.ell = ell_sigma(ec.lvals);
    ec.v_sigma = std::move(v);
    ec.c = gcd_vector(ec.v_sigma);
    if (ec.ell > 0) {
      VecQ vp(dd.ambient_dim());
      for (int k = 0; k < dd.ambient_dim(); ++k) vp[k] = Rat(ec.v_sigma[k], ec.ell);
      ec.v_prime = std::move(vp);
    }
    out.push_back(std::move(ec));
    int b = dd.r;
    while (b >= 0) {
      if (++choice[b] < dd.n[b]) break;
      choice[b] = 0;
      --b;
    }
    if (b < 0) break;
  }
  return out;
}

std::vector<ElemBigCone> elementary_big_cones(const DefiningData& dd, const Grading& g) {
  IntMat p = assemble_P(dd);
  std::vector<ElemBigCone> out;
  for (ElemBigCone& ec : elementary_tuples_unchecked(dd))
    if (semistable_complement(dd, g, ec.cols) && elementary_meets_trop(dd, p, ec.cols))
      out.push_back(std::move(ec));
  return out;
}

bool is_log_terminal(const DefiningData& dd, const Grading& g) {
  for (const ElemBigCone& ec : elementary_big_cones(dd, g))
    if (ec.ell <= 0) return false;
  return true;
}

bool check_relation_bound(const DefiningData& dd, const Grading& g) {
  return dd.r - 1 <= (dd.s + 1) + g.cl.free_rank;
}

std::vector<std::vector<int>> maximal_sigma_cones(const DefiningData& dd, const Grading& g) {
  const int N = dd.total_cols();
  if (N > 20) throw Error("maximal_sigma_cones: too many columns");
  std::vector<std::vector<int>> maximal;
  // subsets in decreasing size; skip anything under an accepted maximal cone
  std::vector<std::vector<int>> by_size(N + 1);
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    int sz = __builtin_popcount(mask);
    by_size[sz].push_back(static_cast<int>(mask));
  }
  std::vector<unsigned> accepted;
  for (int sz = N; sz >= 1; --sz)
    for (int mask : by_size[sz]) {
      unsigned m = static_cast<unsigned>(mask);
      bool dominated = false;
      for (unsigned a : accepted)
        if ((m & a) == m) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      std::vector<int> cols;
      for (int j = 0; j < N; ++j)
        if (m & (1u << j)) cols.push_back(j);
      if (cone_in_sigma(dd, g, cols)) {
        accepted.push_back(m);
        maximal.push_back(cols);
      }
    }
  return maximal;
}

bool is_qfactorial(const DefiningData& dd, const Grading& g) {
  IntMat p = assemble_P(dd);
  for (const auto& cols : maximal_sigma_cones(dd, g)) {
    ConeV c;
    for (int j : cols) c.rays.push_back(p.col(j));
    ConeV canon = canonical_cone(c, dd.ambient_dim());
    if (!canon.lin.empty()) return false;
    IntMat m(static_cast<int>(cols.size()), dd.ambient_dim());
    for (size_t i = 0; i < cols.size(); ++i) {
      VecI col = p.col(cols[i]);
      for (int k = 0; k < dd.ambient_dim(); ++k) m.at(static_cast<int>(i), k) = col[k];
    }
    if (static_cast<int>(canon.rays.size()) != rank_mat(m)) return false;
  }
  return true;
}

}  // namespace antican
