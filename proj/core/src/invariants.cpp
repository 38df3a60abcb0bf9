// invariants.cpp

#include "antican/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "antican/errors.hpp"
#include "antican/tropfan.hpp"

namespace antican {

ClassGroup class_group(const Grading& g) { return g.cl; }

Rat antican_cube(const DefiningData& dd, const Grading& g) {
  if (g.cl.free_rank != 1) throw NotRankOne();
  if (dd.s != 2) throw Error("antican_cube: defined for threefolds (s = 2) only");
  Int t = 1;
  for (const Int& d : g.cl.torsion) t *= d;
  Int wprod = 1;
  for (const KClass& w : g.deg) wprod *= w.free_part[0];
  const Int& mu = g.mu.free_part[0];
  const Int& kappa = g.kappa.free_part[0];
  Int numr = kappa * kappa * kappa;
  for (int i = 0; i + 2 <= dd.r; ++i) numr *= mu;
  return make_rat(numr, wprod * t);
}

namespace {

// order of kappa in Z^N / (span{e_j : j in face} + im(P^T))
Int local_order(const DefiningData& dd, const IntMat& pt, const VecI& vkappa,
                const std::vector<int>& face) {
  const int N = dd.total_cols(), R = dd.ambient_dim();
  IntMat b(N, static_cast<int>(face.size()) + R);
  for (size_t c = 0; c < face.size(); ++c) b.at(face[c], static_cast<int>(c)) = 1;
  for (int c = 0; c < R; ++c)
    for (int i = 0; i < N; ++i) b.at(i, static_cast<int>(face.size()) + c) = pt.at(i, c);
  SmithForm f = smith_normal_form(b);
  VecI y(N);
  for (int i = 0; i < N; ++i) y[i] = dot(f.U.row(i), vkappa);
  const int rk = std::min(N, b.cols);
  Int t = 1;
  for (int i = 0; i < N; ++i) {
    Int d = i < rk ? f.D.at(i, i) : Int(0);
    if (d == 0) {
      if (y[i] != 0) throw Error("local_order: class has infinite order in a local group");
      continue;
    }
    Int gq = boost::multiprecision::gcd(d, y[i] % d);
    if (gq == 0) gq = d;
    t = boost::multiprecision::lcm(t, d / gq);
  }
  return t;
}

}  // namespace

Int gorenstein_index(const DefiningData& dd, const Grading& g) {
  IntMat p = assemble_P(dd);
  IntMat pt = p.transpose();
  const int N = dd.total_cols();
  VecI vkappa(N, Int(1));
  for (int j = 0; j < dd.n[0]; ++j) vkappa[j] -= Int(dd.r - 1) * Int(dd.L[0][j]);

  Int iota = 1;
  for (const auto& cols : maximal_sigma_cones(dd, g)) {
    std::vector<bool> in(N, false);
    for (int j : cols) in[j] = true;
    std::vector<int> face;
    for (int j = 0; j < N; ++j)
      if (!in[j]) face.push_back(j);
    iota = boost::multiprecision::lcm(iota, local_order(dd, pt, vkappa, face));
  }
  return iota;
}

namespace {

std::string kclass_str(const VecI& free_part, const VecI& tors) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < free_part.size(); ++i) os << (i ? "," : "") << free_part[i];
  if (!tors.empty()) {
    os << ";";
    for (size_t i = 0; i < tors.size(); ++i) os << (i ? "," : "") << tors[i];
  }
  os << ")";
  return os.str();
}

// canonical degree columns: minimize over Aut(Z (+) Z/d) when applicable
std::vector<std::string> canonical_degree_strings(const ClassGroup& cl,
                                                  const std::vector<KClass>& deg) {
  const size_t nt = cl.torsion.size();
  std::vector<std::string> best;
  if (cl.free_rank == 1 && nt <= 1) {
    Int d = nt == 1 ? cl.torsion[0] : Int(1);
    bool first = true;
    Int u = 1;
    do {
      if (nt == 1 && boost::multiprecision::gcd(u, d) != 1) {
        ++u;
        continue;
      }
      for (Int c = 0; c < (nt == 1 ? d : Int(1)); ++c) {
        std::vector<std::string> cand;
        for (const KClass& w : deg) {
          VecI tors;
          if (nt == 1) {
            Int tv = (u * w.tors[0] + c * w.free_part[0]) % d;
            if (tv < 0) tv += d;
            tors.push_back(tv);
          }
          cand.push_back(kclass_str(w.free_part, tors));
        }
        std::sort(cand.begin(), cand.end());
        if (first || cand < best) {
          best = std::move(cand);
          first = false;
        }
      }
      ++u;
    } while (nt == 1 && u < d);
    return best;
  }
  for (const KClass& w : deg) best.push_back(kclass_str(w.free_part, w.tors));
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

std::string make_distinctness_key(const ClassGroup& cl, const std::vector<KClass>& degrees,
                                  const std::vector<std::vector<Int>>& sorted_rel_exponents,
                                  int m, int lambda_count, const std::optional<Rat>& kcube,
                                  const std::optional<Int>& iota) {
  std::ostringstream os;
  os << "cl=" << cl.free_rank;
  for (const Int& d : cl.torsion) os << "/" << d;
  os << "|deg=";
  for (const std::string& s : canonical_degree_strings(cl, degrees)) os << s;
  os << "|rel=";
  for (const auto& t : sorted_rel_exponents) {
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
  }
  os << "|m=" << m << "|lam=" << lambda_count;
  if (kcube) os << "|k3=" << rat_str(*kcube);
  if (iota) os << "|iota=" << *iota;
  return os.str();
}

namespace {

std::vector<std::vector<Int>> sorted_exponents(const DefiningData& dd) {
  std::vector<std::vector<Int>> ex;
  for (int i = 0; i <= dd.r; ++i) {
    std::vector<Int> t;
    for (auto l : dd.L[i]) t.push_back(Int(l));
    std::sort(t.rbegin(), t.rend());
    ex.push_back(std::move(t));
  }
  std::sort(ex.begin(), ex.end());
  return ex;
}

}  // namespace

std::string distinctness_key(const DefiningData& dd, const Grading& g) {
  std::optional<Rat> kcube;
  std::optional<Int> iota;
  if (g.cl.free_rank == 1 && dd.s == 2) {
    kcube = antican_cube(dd, g);
    iota = gorenstein_index(dd, g);
  }
  return make_distinctness_key(g.cl, g.deg, sorted_exponents(dd), dd.m,
                               static_cast<int>(dd.lambda.size()), kcube, iota);
}

InvariantSet compute_invariants(const DefiningData& dd, const Grading& g) {
  InvariantSet inv;
  inv.cl = g.cl;
  inv.degrees = g.deg;
  if (g.cl.free_rank == 1 && dd.s == 2) {
    inv.antican_cube = antican_cube(dd, g);
    inv.antican_cube_defined = true;
    inv.gorenstein_index = gorenstein_index(dd, g);
  } else {
    inv.gorenstein_index = 0;
  }
  inv.rel_exponents = sorted_exponents(dd);
  inv.generators = dd.total_cols();
  inv.lambda_count = static_cast<int>(dd.lambda.size());
  inv.key = distinctness_key(dd, g);
  return inv;
}

}  // namespace antican
