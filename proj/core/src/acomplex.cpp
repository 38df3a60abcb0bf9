// acomplex.cpp

#include "antican/acomplex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "antican/errors.hpp"

namespace antican {

VecI chart_to_ambient(int r, int s, int leaf, const VecI& chart) {
  VecI v(r + s, Int(0));
  if (leaf == 0)
    for (int k = 0; k < r; ++k) v[k] = -chart[0];
  else
    v[leaf - 1] = chart[0];
  for (int k = 0; k < s; ++k) v[r + k] = chart[1 + k];
  return v;
}

VecQ chart_to_ambient_q(int r, int s, int leaf, const VecQ& chart) {
  VecQ v(r + s, Rat(0));
  if (leaf == 0)
    for (int k = 0; k < r; ++k) v[k] = -chart[0];
  else
    v[leaf - 1] = chart[0];
  for (int k = 0; k < s; ++k) v[r + k] = chart[1 + k];
  return v;
}

ACComplex build_complex_from_cones(const DefiningData& dd, std::vector<ElemBigCone> cones) {
  ACComplex ac;
  ac.r = dd.r;
  ac.s = dd.s;
  ac.big_cones = std::move(cones);
  for (const ElemBigCone& ec : ac.big_cones) {
    VecQ w(dd.s);
    for (int k = 0; k < dd.s; ++k) w[k] = (*ec.v_prime)[dd.r + k];
    ac.vprime_points.push_back(std::move(w));
  }

  // lineality: the v'_sigma and the lambda columns, in lambda coordinates
  std::vector<VecQ> lin_pts = ac.vprime_points;
  for (int k = 0; k < dd.m; ++k) {
    VecQ w(dd.s);
    for (int i = 0; i < dd.s; ++i) w[i] = Rat(dd.dprime[i][k]);
    lin_pts.push_back(std::move(w));
  }
  if (lin_pts.empty()) lin_pts.push_back(VecQ(dd.s, Rat(0)));
  ac.lineality = hull(lin_pts);

  ac.leaf_columns.assign(dd.r + 1, {});
  for (int i = 0; i <= dd.r; ++i) {
    std::vector<VecQ> pts;
    for (const VecQ& w : ac.vprime_points) {
      VecQ c(1 + dd.s, Rat(0));
      for (int k = 0; k < dd.s; ++k) c[1 + k] = w[k];
      pts.push_back(std::move(c));
    }
    for (int j = 0; j < dd.n[i]; ++j) {
      VecI c(1 + dd.s);
      c[0] = Int(dd.L[i][j]);
      for (int k = 0; k < dd.s; ++k) c[1 + k] = Int(dd.d[k][dd.block_start(i) + j]);
      pts.push_back(vec_to_rat(c));
      ac.leaf_columns[i].push_back(std::move(c));
    }
    for (int k = 0; k < dd.m; ++k) {
      VecI c(1 + dd.s, Int(0));
      for (int t = 0; t < dd.s; ++t) c[1 + t] = Int(dd.dprime[t][k]);
      pts.push_back(vec_to_rat(c));
      ac.leaf_columns[i].push_back(std::move(c));
    }
    ac.leaves.push_back(hull(pts));
  }
  return ac;
}

ACComplex build_complex(const DefiningData& dd, const Grading& g) {
  if (!is_fano(dd, g)) throw NotFano();
  std::vector<ElemBigCone> cones = elementary_big_cones(dd, g);
  for (const ElemBigCone& ec : cones)
    if (ec.ell <= 0) {
      std::ostringstream os;
      os << "elementary big cone with nonpositive ell: columns";
      for (int c : ec.cols) os << " " << c;
      throw NotLogTerminal(os.str());
    }
  return build_complex_from_cones(dd, std::move(cones));
}

namespace {

bool is_x_nonneg_facet(const AffineIneq& f) {
  if (f.b != 0) return false;
  if (f.a[0] <= 0) return false;
  for (size_t k = 1; k < f.a.size(); ++k)
    if (f.a[k] != 0) return false;
  return true;
}

// relative interior of the complex, for a lattice point in leaf chart coords
bool complex_relint_contains(const ACComplex& ac, int leaf, const VecI& pt) {
  VecQ q = vec_to_rat(pt);
  if (pt[0] > 0) {
    if (polytope_dim(ac.leaves[leaf]) < 1 + ac.s) return false;
    return ac.leaves[leaf].relint_contains(q);
  }
  // lambda point: must be interior towards every leaf, the x >= 0 facet exempt
  for (int i = 0; i <= ac.r; ++i) {
    const Polytope& lf = ac.leaves[i];
    if (polytope_dim(lf) < 1 + ac.s) return false;
    const HRep& h = lf.hrep();
    if (!h.eq.empty()) return false;
    for (const AffineIneq& f : h.ineq) {
      Rat v = dot_qi(q, f.a);
      if (v < Rat(f.b)) return false;
      if (v == Rat(f.b) && !is_x_nonneg_facet(f)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::pair<int, VecI>> terminal_witness(const ACComplex& ac) {
  for (int i = 0; i <= ac.r; ++i) {
    std::set<VecI> expected(ac.leaf_columns[i].begin(), ac.leaf_columns[i].end());
    expected.insert(VecI(1 + ac.s, Int(0)));
    for (const VecI& pt : lattice_points(ac.leaves[i]))
      if (!expected.count(pt)) return std::make_pair(i, pt);
  }
  return std::nullopt;
}

SingularityVerdict classify(const DefiningData& dd, const Grading& g,
                            const std::optional<Rat>& eps) {
  if (!is_fano(dd, g)) throw NotFano();
  SingularityVerdict v;
  v.eps = eps;
  auto cones = elementary_big_cones(dd, g);
  for (const ElemBigCone& ec : cones)
    if (ec.ell <= 0) {
      v.log_terminal = false;
      v.canonical = v.terminal = false;
      if (eps) v.eps_log_terminal = false;
      v.witness_cone = ec.cols;
      return v;
    }
  v.log_terminal = true;

  ACComplex ac = build_complex(dd, g);

  // terminal: lattice points of every leaf are the origin and the columns
  auto extra = terminal_witness(ac);
  v.terminal = !extra.has_value();
  if (extra) v.witness_point = chart_to_ambient(dd.r, dd.s, extra->first, extra->second);

  // canonical: the origin is the only lattice point in the relative interior
  v.canonical = true;
  for (int i = 0; i <= dd.r && v.canonical; ++i)
    for (const VecI& pt : lattice_points(ac.leaves[i])) {
      if (std::all_of(pt.begin(), pt.end(), [](const Int& x) { return x == 0; })) continue;
      if (pt[0] == 0 && i > 0) continue;  // lambda points tested once, from leaf 0
      if (complex_relint_contains(ac, i, pt)) {
        v.canonical = false;
        if (!v.witness_point) v.witness_point = chart_to_ambient(dd.r, dd.s, i, pt);
        break;
      }
    }

  if (eps) {
    if (*eps <= 0) throw Error("classify: eps must be positive");
    bool ok = true;
    for (int i = 0; i <= dd.r && ok; ++i)
      for (const VecI& pt : lattice_points(scale(ac.leaves[i], *eps)))
        if (!std::all_of(pt.begin(), pt.end(), [](const Int& x) { return x == 0; })) {
          ok = false;
          if (!v.witness_point) v.witness_point = chart_to_ambient(dd.r, dd.s, i, pt);
          break;
        }
    v.eps_log_terminal = ok;
  }
  return v;
}

namespace {

// Exponent vectors (in Z^N) of the block monomials T_i^{l_i}.
std::vector<VecI> block_monomials(const DefiningData& dd) {
  const int N = dd.total_cols();
  std::vector<VecI> mu(dd.r + 1, VecI(N, Int(0)));
  for (int i = 0; i <= dd.r; ++i)
    for (int j = 0; j < dd.n[i]; ++j) mu[i][dd.block_start(i) + j] = Int(dd.L[i][j]);
  return mu;
}

}  // namespace

Polytope bx_polytope(const DefiningData& dd, const Grading& g) {
  if (!is_fano(dd, g)) throw NotFano();
  IntMat p = assemble_P(dd);
  IntMat pt = p.transpose();  // N x R
  const int N = dd.total_cols(), R = dd.ambient_dim(), f = g.cl.free_rank;

  // one rational point of the degree fiber { x : Q_free x = kappa_free }
  IntMat wf(f, N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < f; ++i) wf.at(i, j) = g.deg[j].free_part[i];
  VecQ kf(f);
  for (int i = 0; i < f; ++i) kf[i] = Rat(g.kappa.free_part[i]);
  auto x0 = solve_rational(wf, kf);
  if (!x0) throw Error("bx_polytope: degree fiber empty");

  // B(-K) in the chart x = x0 + P^T y:  P^T y >= -x0
  HRep hr;
  for (int j = 0; j < N; ++j) {
    VecQ row(R + 1);
    for (int k = 0; k < R; ++k) row[k] = Rat(pt.at(j, k));
    row[R] = -(*x0)[j];
    // clear denominators
    Int l = 1;
    for (const Rat& q : row) l = boost::multiprecision::lcm(l, den(q));
    AffineIneq ineq;
    ineq.a.resize(R);
    for (int k = 0; k < R; ++k) ineq.a[k] = num(row[k]) * (l / den(row[k]));
    ineq.b = num(row[R]) * (l / den(row[R]));
    hr.ineq.push_back(std::move(ineq));
  }
  Polytope bk = polytope_from_hrep(hr, R);

  // Minkowski sum with the relation Newton polytopes, shifted by -e_Sigma,
  // pulled back through P^T. Offsets solve P^T z = x0 + b - 1.
  std::vector<VecI> mu = block_monomials(dd);
  std::vector<VecQ> offsets;
  std::vector<int> pickb(std::max(0, dd.r - 1), 0);
  for (;;) {
    VecQ rhs(N);
    for (int j = 0; j < N; ++j) rhs[j] = (*x0)[j] - 1;
    for (int i = 0; i + 2 <= dd.r; ++i) {
      const VecI& b = mu[i + pickb[i]];
      for (int j = 0; j < N; ++j) rhs[j] += Rat(b[j]);
    }
    auto z = solve_rational(pt, rhs);
    if (!z) throw Error("bx_polytope: Newton vertex off the degree-zero fiber");
    offsets.push_back(*z);
    int i = static_cast<int>(pickb.size()) - 1;
    while (i >= 0) {
      if (++pickb[i] < 3) break;
      pickb[i] = 0;
      --i;
    }
    if (i < 0) break;
  }

  std::vector<VecQ> pts;
  for (const VecQ& v : bk.verts())
    for (const VecQ& z : offsets) {
      VecQ u(R);
      for (int k = 0; k < R; ++k) u[k] = v[k] + z[k];
      pts.push_back(std::move(u));
    }
  return hull(pts);
}

Polytope anticanonical_polyhedron(const DefiningData& dd, const Grading& g) {
  return dual_polytope(bx_polytope(dd, g));
}

LeafSupports leaf_supports_dual(const DefiningData& dd, const Grading& g) {
  Polytope bx = bx_polytope(dd, g);
  const int R = dd.ambient_dim();
  LeafSupports out;

  // lineality: substitute upper coordinates 0 into <u, x> >= -1
  {
    HRep hr;
    for (const VecQ& u : bx.verts()) {
      VecQ row(dd.s + 1);
      for (int k = 0; k < dd.s; ++k) row[k] = u[dd.r + k];
      row[dd.s] = Rat(-1);
      Int l = 1;
      for (const Rat& q : row) l = boost::multiprecision::lcm(l, den(q));
      AffineIneq f;
      f.a.resize(dd.s);
      for (int k = 0; k < dd.s; ++k) f.a[k] = num(row[k]) * (l / den(row[k]));
      f.b = num(row[dd.s]) * (l / den(row[dd.s]));
      hr.ineq.push_back(std::move(f));
    }
    out.lineality = polytope_from_hrep(hr, dd.s);
  }

  for (int i = 0; i <= dd.r; ++i) {
    HRep hr;
    for (const VecQ& u : bx.verts()) {
      // <u, chart(x,w)> = x * <u, e_i> + sum w_k u_{r+k}
      VecQ row(1 + dd.s + 1);
      if (i == 0) {
        Rat acc = 0;
        for (int k = 0; k < dd.r; ++k) acc -= u[k];
        row[0] = acc;
      } else {
        row[0] = u[i - 1];
      }
      for (int k = 0; k < dd.s; ++k) row[1 + k] = u[dd.r + k];
      row[1 + dd.s] = Rat(-1);
      Int l = 1;
      for (const Rat& q : row) l = boost::multiprecision::lcm(l, den(q));
      AffineIneq f;
      f.a.resize(1 + dd.s);
      for (int k = 0; k < 1 + dd.s; ++k) f.a[k] = num(row[k]) * (l / den(row[k]));
      f.b = num(row[1 + dd.s]) * (l / den(row[1 + dd.s]));
      hr.ineq.push_back(std::move(f));
    }
    AffineIneq xpos;
    xpos.a.assign(1 + dd.s, Int(0));
    xpos.a[0] = 1;
    xpos.b = 0;
    hr.ineq.push_back(std::move(xpos));
    out.leaves.push_back(polytope_from_hrep(hr, 1 + dd.s));
  }
  (void)R;
  return out;
}

Rat discrepancy_ray(const DefiningData& dd, const Grading& g, const VecI& ray) {
  TropStructure ts = trop_structure(dd);
  auto leaf = ts.leaf_of(ray);
  if (!leaf) throw RayNotOnTrop();
  if (!is_log_terminal(dd, g)) throw UnboundedDirection("complex not bounded (not log terminal)");
  ACComplex ac = build_complex(dd, g);

  int i = *leaf >= 0 ? *leaf : 0;  // lambda rays live in every leaf; use leaf 0
  VecQ chart(1 + dd.s, Rat(0));
  if (*leaf == 0)
    chart[0] = Rat(-ray[0]);
  else if (*leaf > 0)
    chart[0] = Rat(ray[*leaf - 1]);
  for (int k = 0; k < dd.s; ++k) chart[1 + k] = Rat(ray[dd.r + k]);

  // largest t with t * chart inside the leaf polytope
  const HRep& h = ac.leaves[i].hrep();
  std::optional<Rat> tmax;
  for (const AffineIneq& f : h.ineq) {
    Rat av = dot_qi(chart, f.a);
    if (av < 0) {
      Rat bound = Rat(f.b) / av;
      if (!tmax || bound < *tmax) tmax = bound;
    } else if (av == 0 && f.b > 0) {
      throw RayNotOnTrop("ray misses the complex");
    }
  }
  for (const AffineIneq& e : h.eq)
    if (dot_qi(chart, e.a) != 0 || e.b != 0)
      throw RayNotOnTrop("ray misses the affine hull of the leaf");
  if (!tmax) throw UnboundedDirection();
  return Rat(1) / *tmax - 1;
}

TrapezoidData lineality_trapezoid(const DefiningData& dd) {
  if (dd.r != 2 || dd.s != 2 || dd.m != 0 || dd.n != std::vector<int>{2, 2, 1})
    throw WrongShape("lineality_trapezoid: need r=2, s=2, m=0, n=(2,2,1)");
  if (dd.L[0][0] != 1 || dd.L[0][1] != 1)
    throw WrongShape("lineality_trapezoid: need l01 = l02 = 1");
  if (dd.d[0][0] != 0 || dd.d[0][1] != 1 || dd.d[1][0] != 0 || dd.d[1][1] != 0)
    throw WrongShape("lineality_trapezoid: block-0 rows must be normalized to ((0,1),(0,0))");
  const Int l11(dd.L[1][0]), l12(dd.L[1][1]), l21(dd.L[2][0]);
  const Int d111(dd.d[0][2]), d112(dd.d[0][3]), d121(dd.d[0][4]);
  const Int d211(dd.d[1][2]), d212(dd.d[1][3]), d221(dd.d[1][4]);

  auto pt = [](Rat x, Rat y) { return VecQ{std::move(x), std::move(y)}; };
  Rat u1x = Rat(l21 * d111 + l11 * d121, l21 + l11);
  Rat u1y = Rat(l21 * d211 + l11 * d221, l21 + l11);
  Rat u3x = Rat(l21 * d112 + l12 * d121, l21 + l12);
  Rat u3y = Rat(l21 * d212 + l12 * d221, l21 + l12);
  Rat g1 = Rat(l11 * l21, l11 + l21);
  Rat g2 = Rat(l12 * l21, l12 + l21);

  TrapezoidData t;
  t.g1_len = g1;
  t.g2_len = g2;
  t.g1_h = Rat(l21 * d211 + l11 * d221, l11 + l21);
  t.g2_h = Rat(l21 * d212 + l12 * d221, l12 + l21);
  t.poly = hull({pt(u1x, u1y), pt(u1x + g1, u1y), pt(u3x, u3y), pt(u3x + g2, u3y)});
  return t;
}

}  // namespace antican
