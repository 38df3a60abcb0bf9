// polyhedra.cpp
// Double-description method over exact integers, and polytope operations
// built on two DD passes (generators -> facets -> generators).

#include "antican/polyhedra.hpp"

#include <algorithm>
#include <set>

namespace antican {

namespace {

// Working state of the double-description computation. Invariant: the
// current cone is lin(lin) + cone(rays), rays are extreme modulo lin, and
// `tight[i]` is exactly the set of processed constraint indices vanishing
// on rays[i].
struct DDState {
  int dim;
  std::vector<VecI> lin;
  std::vector<VecI> rays;
  std::vector<std::vector<int>> tight;
  std::vector<VecI> processed;

  explicit DDState(int d) : dim(d) {
    for (int i = 0; i < d; ++i) {
      VecI e(d, Int(0));
      e[i] = 1;
      lin.push_back(std::move(e));
    }
  }

  std::vector<int> recompute_tight(const VecI& v) const {
    std::vector<int> z;
    for (size_t i = 0; i < processed.size(); ++i)
      if (dot(processed[i], v) == 0) z.push_back(static_cast<int>(i));
    return z;
  }

  bool adjacent(size_t p, size_t m) const {
    std::vector<int> z;
    std::set_intersection(tight[p].begin(), tight[p].end(), tight[m].begin(), tight[m].end(),
                          std::back_inserter(z));
    for (size_t r = 0; r < rays.size(); ++r) {
      if (r == p || r == m) continue;
      if (std::includes(tight[r].begin(), tight[r].end(), z.begin(), z.end())) return false;
    }
    return true;
  }

  void add_constraint(const VecI& h) {
    if (is_zero(h)) return;
    const int k = static_cast<int>(processed.size());

    int il = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(h, lin[i]) != 0) {
        il = static_cast<int>(i);
        break;
      }
    if (il >= 0) {
      VecI l0 = lin[il];
      Int d0 = dot(h, l0);
      if (d0 < 0) {
        for (Int& x : l0) x = -x;
        d0 = -d0;
      }
      std::vector<VecI> newlin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == il) continue;
        Int di = dot(h, lin[i]);
        newlin.push_back(primitive_part(vec_sub(vec_scale(lin[i], d0), vec_scale(l0, di))));
      }
      for (size_t i = 0; i < rays.size(); ++i) {
        Int dr = dot(h, rays[i]);
        rays[i] = primitive_part(vec_sub(vec_scale(rays[i], d0), vec_scale(l0, dr)));
        tight[i].push_back(k);
      }
      lin = std::move(newlin);
      std::vector<int> z(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) z[i] = i;
      rays.push_back(std::move(l0));
      tight.push_back(std::move(z));
      processed.push_back(h);
      return;
    }

    std::vector<Int> s(rays.size());
    std::vector<size_t> pos, zer, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(h, rays[i]);
      if (s[i] > 0)
        pos.push_back(i);
      else if (s[i] == 0)
        zer.push_back(i);
      else
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (size_t i : zer) tight[i].push_back(k);
      processed.push_back(h);
      return;
    }

    std::vector<VecI> newrays;
    if (!pos.empty()) {
      std::set<VecI> seen;
      for (size_t p : pos)
        for (size_t m : neg) {
          if (!adjacent(p, m)) continue;
          VecI v = primitive_part(
              vec_sub(vec_scale(rays[m], s[p]), vec_scale(rays[p], s[m])));
          if (is_zero(v)) continue;
          if (seen.insert(v).second) newrays.push_back(std::move(v));
        }
    }
    processed.push_back(h);

    std::vector<VecI> keep;
    std::vector<std::vector<int>> keeptight;
    for (size_t i : pos) {
      keep.push_back(std::move(rays[i]));
      keeptight.push_back(std::move(tight[i]));
    }
    for (size_t i : zer) {
      tight[i].push_back(k);
      keep.push_back(std::move(rays[i]));
      keeptight.push_back(std::move(tight[i]));
    }
    for (VecI& v : newrays) {
      keeptight.push_back(recompute_tight(v));
      keep.push_back(std::move(v));
    }
    rays = std::move(keep);
    tight = std::move(keeptight);
  }
};

// Unique basis of the lineality space: row HNF, rows lex-sorted.
std::vector<VecI> canonical_lineality(const std::vector<VecI>& lin, int dim) {
  if (lin.empty()) return {};
  IntMat m(static_cast<int>(lin.size()), dim);
  for (size_t i = 0; i < lin.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = lin[i][j];
  RowHnf h = row_hnf(m);
  std::vector<VecI> out;
  for (int i = 0; i < h.H.rows; ++i) {
    VecI r = h.H.row(i);
    if (!is_zero(r)) out.push_back(primitive_part(std::move(r)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConeV dual_cone(const std::vector<VecI>& ineq, const std::vector<VecI>& eq, int dim) {
  DDState st(dim);
  for (const VecI& e : eq) {
    st.add_constraint(e);
    VecI n(e.size());
    for (size_t i = 0; i < e.size(); ++i) n[i] = -e[i];
    st.add_constraint(n);
  }
  for (const VecI& h : ineq) st.add_constraint(h);
  ConeV out;
  out.rays = st.rays;
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  out.lin = canonical_lineality(st.lin, dim);
  return out;
}

ConeH cone_facets(const ConeV& c, int dim) {
  ConeV d = dual_cone(c.rays, c.lin, dim);
  return ConeH{d.rays, d.lin};
}

ConeV canonical_cone(const ConeV& c, int dim) {
  ConeH h = cone_facets(c, dim);
  return dual_cone(h.ineq, h.eq, dim);
}

ConeV cone_intersection(const ConeV& a, const ConeV& b, int dim) {
  ConeH fa = cone_facets(a, dim);
  ConeH fb = cone_facets(b, dim);
  std::vector<VecI> ineq = fa.ineq;
  ineq.insert(ineq.end(), fb.ineq.begin(), fb.ineq.end());
  std::vector<VecI> eq = fa.eq;
  eq.insert(eq.end(), fb.eq.begin(), fb.eq.end());
  return dual_cone(ineq, eq, dim);
}

bool cone_contains(const ConeH& h, const VecI& x) {
  for (const VecI& e : h.eq)
    if (dot(e, x) != 0) return false;
  for (const VecI& a : h.ineq)
    if (dot(a, x) < 0) return false;
  return true;
}

bool cone_relint_contains(const ConeH& h, const VecI& x) {
  for (const VecI& e : h.eq)
    if (dot(e, x) != 0) return false;
  for (const VecI& a : h.ineq)
    if (dot(a, x) <= 0) return false;
  return true;
}

namespace {

// (lcm of denominators, lifted integer vector (t, t*p)) for a point p.
VecI homogenize_point(const VecQ& p) {
  Int l = 1;
  for (const Rat& q : p) l = boost::multiprecision::lcm(l, den(q));
  VecI g(p.size() + 1);
  g[0] = l;
  for (size_t i = 0; i < p.size(); ++i) g[i + 1] = num(p[i]) * (l / den(p[i]));
  return g;
}

HRep hrep_from_dual(const ConeV& d) {
  HRep hr;
  for (const VecI& r : d.rays) {
    AffineIneq f;
    f.b = -r[0];
    f.a.assign(r.begin() + 1, r.end());
    hr.ineq.push_back(std::move(f));
  }
  for (const VecI& l : d.lin) {
    AffineIneq f;
    f.b = -l[0];
    f.a.assign(l.begin() + 1, l.end());
    hr.eq.push_back(std::move(f));
  }
  return hr;
}

}  // namespace

Polytope::Polytope(int ambient_dim, std::vector<VecQ> vertices)
    : dim_(ambient_dim), verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

const HRep& Polytope::hrep() const {
  if (!hrep_) {
    std::vector<VecI> gens;
    gens.reserve(verts_.size());
    for (const VecQ& v : verts_) gens.push_back(homogenize_point(v));
    ConeV d = dual_cone(gens, {}, dim_ + 1);
    hrep_ = std::make_shared<const HRep>(hrep_from_dual(d));
  }
  return *hrep_;
}

bool Polytope::contains(const VecQ& p) const {
  const HRep& h = hrep();
  for (const AffineIneq& e : h.eq)
    if (dot_qi(p, e.a) != Rat(e.b)) return false;
  for (const AffineIneq& f : h.ineq)
    if (dot_qi(p, f.a) < Rat(f.b)) return false;
  return true;
}

bool Polytope::relint_contains(const VecQ& p) const {
  const HRep& h = hrep();
  for (const AffineIneq& e : h.eq)
    if (dot_qi(p, e.a) != Rat(e.b)) return false;
  for (const AffineIneq& f : h.ineq)
    if (dot_qi(p, f.a) <= Rat(f.b)) return false;
  return true;
}

Polytope hull(const std::vector<VecQ>& points) {
  if (points.empty()) throw Error("hull: empty point set");
  const int dim = static_cast<int>(points[0].size());
  std::vector<VecI> gens;
  gens.reserve(points.size());
  for (const VecQ& p : points) gens.push_back(homogenize_point(p));
  ConeV d = dual_cone(gens, {}, dim + 1);
  ConeV prim = dual_cone(d.rays, d.lin, dim + 1);
  std::vector<VecQ> verts;
  for (const VecI& r : prim.rays) {
    if (r[0] <= 0) throw Error("hull: homogenization produced a non-vertex ray");
    VecQ v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Rat(r[i + 1], r[0]);
    verts.push_back(std::move(v));
  }
  return Polytope(dim, std::move(verts));
}

Polytope polytope_from_hrep(const HRep& hr, int dim) {
  std::vector<VecI> ineq, eq;
  VecI t(dim + 1, Int(0));
  t[0] = 1;
  ineq.push_back(std::move(t));
  for (const AffineIneq& f : hr.ineq) {
    VecI h(dim + 1);
    h[0] = -f.b;
    for (int i = 0; i < dim; ++i) h[i + 1] = f.a[i];
    ineq.push_back(std::move(h));
  }
  for (const AffineIneq& f : hr.eq) {
    VecI h(dim + 1);
    h[0] = -f.b;
    for (int i = 0; i < dim; ++i) h[i + 1] = f.a[i];
    eq.push_back(std::move(h));
  }
  ConeV v = dual_cone(ineq, eq, dim + 1);
  if (!v.lin.empty()) throw Unbounded("polytope_from_hrep: lineality present");
  std::vector<VecQ> verts;
  for (const VecI& r : v.rays) {
    if (r[0] == 0) throw Unbounded("polytope_from_hrep: recession ray present");
    VecQ p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Rat(r[i + 1], r[0]);
    verts.push_back(std::move(p));
  }
  return Polytope(dim, std::move(verts));
}

Polytope dual_polytope(const Polytope& p) {
  const HRep& h = p.hrep();
  if (!h.eq.empty()) throw OriginNotInterior("dual_polytope: polytope not full-dimensional");
  std::vector<VecQ> verts;
  for (const AffineIneq& f : h.ineq) {
    if (f.b >= 0) throw OriginNotInterior();
    VecQ v(p.ambient_dim());
    for (int i = 0; i < p.ambient_dim(); ++i) v[i] = Rat(f.a[i], -f.b);
    verts.push_back(std::move(v));
  }
  return Polytope(p.ambient_dim(), std::move(verts));
}

int polytope_dim(const Polytope& p) {
  const auto& vs = p.verts();
  if (vs.empty()) return -1;
  if (vs.size() == 1) return 0;
  IntMat m(static_cast<int>(vs.size()) - 1, p.ambient_dim());
  for (size_t i = 1; i < vs.size(); ++i) {
    VecQ d(p.ambient_dim());
    for (int j = 0; j < p.ambient_dim(); ++j) d[j] = vs[i][j] - vs[0][j];
    VecI z = primitive_of_rat(d);
    if (z.empty()) z.assign(p.ambient_dim(), Int(0));
    for (int j = 0; j < p.ambient_dim(); ++j) m.at(static_cast<int>(i) - 1, j) = z[j];
  }
  return rank_mat(m);
}

namespace {

// floor/ceil of a/b for b > 0
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}
Int cdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Iterates the integer bounding box lexicographically; the innermost
// coordinate is solved as an exact interval from the constraints instead of
// scanned, which keeps thin long polytopes cheap. Output identical to the
// plain box filter.
void enumerate_box(const Polytope& p, bool relint_only, std::vector<VecI>& out) {
  if (p.verts().empty()) return;
  const int dim = p.ambient_dim();
  if (dim == 0) {
    out.push_back({});
    return;
  }
  VecI lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    Rat mn = p.verts()[0][j], mx = mn;
    for (const VecQ& v : p.verts()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
    if (lo[j] > hi[j]) return;
  }
  const HRep& h = p.hrep();
  const int last = dim - 1;
  std::vector<Int> cur(lo.begin(), lo.end() - 1);
  for (;;) {
    Int zlo = lo[last], zhi = hi[last];
    bool empty = false;
    auto tighten = [&](const VecI& a, const Int& b, bool is_eq, bool strict) {
      Int rest = b;
      for (int j = 0; j < last; ++j) rest -= a[j] * cur[j];
      const Int& az = a[last];
      if (az == 0) {
        if (is_eq ? rest != 0 : (strict ? rest >= 0 : rest > 0)) empty = true;
        return;
      }
      if (is_eq) {
        if (rest % az != 0) {
          empty = true;
          return;
        }
        Int z = rest / az;
        zlo = std::max(zlo, z);
        zhi = std::min(zhi, z);
        return;
      }
      if (az > 0)
        zlo = std::max(zlo, strict ? fdiv(rest, az) + 1 : cdiv(rest, az));
      else
        zhi = std::min(zhi, strict ? cdiv(-rest, -az) - 1 : fdiv(-rest, -az));
    };
    for (const AffineIneq& e : h.eq) {
      tighten(e.a, e.b, true, false);
      if (empty) break;
    }
    if (!empty)
      for (const AffineIneq& f : h.ineq) {
        tighten(f.a, f.b, false, relint_only);
        if (empty) break;
      }
    if (!empty)
      for (Int z = zlo; z <= zhi; ++z) {
        VecI pt(cur.begin(), cur.end());
        pt.push_back(z);
        out.push_back(std::move(pt));
      }
    int j = last - 1;
    while (j >= 0) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
}

}  // namespace

std::vector<VecI> lattice_points(const Polytope& p) {
  std::vector<VecI> out;
  enumerate_box(p, false, out);
  return out;
}

std::vector<VecI> relative_interior_lattice_points(const Polytope& p) {
  std::vector<VecI> out;
  enumerate_box(p, true, out);
  return out;
}

Polytope scale(const Polytope& p, const Rat& eps) {
  if (eps <= 0) throw Error("scale: factor must be positive");
  std::vector<VecQ> vs = p.verts();
  for (VecQ& v : vs)
    for (Rat& c : v) c *= eps;
  return Polytope(p.ambient_dim(), std::move(vs));
}

}  // namespace antican
