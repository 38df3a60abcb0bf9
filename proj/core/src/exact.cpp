// exact.cpp

#include "antican/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace antican {

Int floor_rat(const Rat& q) {
  Int n = num(q), d = den(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

Int ceil_rat(const Rat& q) {
  Int n = num(q), d = den(q);
  Int t = n / d;
  if (n > 0 && t * d != n) ++t;
  return t;
}

std::string rat_str(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rat rat_parse(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, pos));
  Int d(s.substr(pos + 1));
  if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  return make_rat(std::move(n), std::move(d));
}

Int gcd_vector(const VecI& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

bool is_zero(const VecI& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_primitive(const VecI& v) { return gcd_vector(v) == 1; }

VecI primitive_part(VecI v) {
  Int g = gcd_vector(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

VecI vec_add(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecI vec_sub(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecI vec_scale(const VecI& a, const Int& c) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Int dot(const VecI& a, const VecI& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_qi(const VecQ& a, const VecI& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Rat dot_qq(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecQ vec_to_rat(const VecI& v) {
  VecQ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

VecI primitive_of_rat(const VecQ& v) {
  Int l = 1;
  for (const Rat& q : v) l = boost::multiprecision::lcm(l, den(q));
  VecI w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
  return primitive_part(std::move(w));
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMat::mul: shape mismatch");
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

VecI IntMat::col(int j) const {
  VecI v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

VecI IntMat::row(int i) const {
  VecI v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[i] += c * row[j]
void add_row(IntMat& m, int i, int j, const Int& c) {
  for (int k = 0; k < m.cols; ++k) m.at(i, k) += c * m.at(j, k);
}

// col[i] += c * col[j]
void add_col(IntMat& m, int i, int j, const Int& c) {
  for (int k = 0; k < m.rows; ++k) m.at(k, i) += c * m.at(k, j);
}

void negate_row(IntMat& m, int i) {
  for (int k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& M) {
  SmithForm f;
  f.D = M;
  f.U = IntMat::identity(M.rows);
  f.V = IntMat::identity(M.cols);
  IntMat& D = f.D;
  const int n = std::min(M.rows, M.cols);

  for (int t = 0; t < n; ++t) {
    // pivot: smallest nonzero absolute value in D[t.., t..], leftmost then topmost
    int pi = -1, pj = -1;
    Int best = 0;
    for (int j = t; j < D.cols; ++j)
      for (int i = t; i < D.rows; ++i) {
        const Int v = boost::multiprecision::abs(D.at(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    swap_rows(D, t, pi);
    swap_rows(f.U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(f.V, t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        add_row(D, i, t, -q);
        add_row(f.U, i, t, -q);
        if (D.at(i, t) != 0) {
          swap_rows(D, t, i);
          swap_rows(f.U, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        add_col(D, j, t, -q);
        add_col(f.V, j, t, -q);
        if (D.at(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(f.V, t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(f.U, t);
    }
  }

  // enforce the divisibility chain d1 | d2 | ...
  for (;;) {
    bool fixed = true;
    for (int t = 0; t + 1 < n; ++t) {
      const Int &a = D.at(t, t), &b = D.at(t + 1, t + 1);
      if (a == 0 && b != 0) {
        // move the nonzero entry forward
        swap_rows(D, t, t + 1);
        swap_rows(f.U, t, t + 1);
        swap_cols(D, t, t + 1);
        swap_cols(f.V, t, t + 1);
        fixed = false;
        continue;
      }
      if (a != 0 && b % a != 0) {
        // standard 2x2 gcd step: col t += col t+1, then re-eliminate
        add_col(D, t, t + 1, 1);
        add_col(f.V, t, t + 1, 1);
        // now D[t+1][t] = b; eliminate the 2x2 block
        Int x = D.at(t, t), y = D.at(t + 1, t);
        // euclidean loop on rows t, t+1 in column t
        while (D.at(t + 1, t) != 0) {
          Int q = D.at(t, t) / D.at(t + 1, t);
          add_row(D, t, t + 1, -q);
          add_row(f.U, t, t + 1, -q);
          swap_rows(D, t, t + 1);
          swap_rows(f.U, t, t + 1);
        }
        // clear fill-in in row t / rows below within the two columns
        Int q = D.at(t, t + 1) / D.at(t, t);
        add_col(D, t + 1, t, -q);
        add_col(f.V, t + 1, t, -q);
        if (D.at(t, t + 1) != 0 || D.at(t + 1, t) != 0)
          throw std::logic_error("smith_normal_form: 2x2 step left residue");
        if (D.at(t, t) < 0) {
          negate_row(D, t);
          negate_row(f.U, t);
        }
        if (D.at(t + 1, t + 1) < 0) {
          negate_row(D, t + 1);
          negate_row(f.U, t + 1);
        }
        fixed = false;
      }
    }
    if (fixed) break;
  }
  return f;
}

Int det(const IntMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("det: matrix not square");
  const int n = M.rows;
  if (n == 0) return 1;
  IntMat m = M;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

int rank_mat(const IntMat& M) {
  SmithForm f = smith_normal_form(M);
  int r = 0;
  for (int i = 0; i < std::min(M.rows, M.cols); ++i)
    if (f.D.at(i, i) != 0) ++r;
  return r;
}

std::vector<VecI> kernel_basis(const IntMat& M) {
  SmithForm f = smith_normal_form(M);
  int r = 0;
  for (int i = 0; i < std::min(M.rows, M.cols); ++i)
    if (f.D.at(i, i) != 0) ++r;
  std::vector<VecI> ker;
  for (int j = r; j < M.cols; ++j) ker.push_back(f.V.col(j));
  return ker;
}

RowHnf row_hnf(const IntMat& M) {
  RowHnf h;
  h.H = M;
  h.U = IntMat::identity(M.rows);
  IntMat& H = h.H;
  int t = 0;
  for (int j = 0; j < M.cols && t < M.rows; ++j) {
    // euclidean elimination within column j, rows >= t
    for (;;) {
      int p = -1;
      Int best = 0;
      for (int i = t; i < M.rows; ++i) {
        Int v = boost::multiprecision::abs(H.at(i, j));
        if (v != 0 && (p < 0 || v < best)) {
          best = v;
          p = i;
        }
      }
      if (p < 0) break;
      swap_rows(H, t, p);
      swap_rows(h.U, t, p);
      bool done = true;
      for (int i = t + 1; i < M.rows; ++i) {
        if (H.at(i, j) == 0) continue;
        Int q = H.at(i, j) / H.at(t, j);
        add_row(H, i, t, -q);
        add_row(h.U, i, t, -q);
        if (H.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H.at(t, j) == 0) continue;
    if (H.at(t, j) < 0) {
      negate_row(H, t);
      negate_row(h.U, t);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < t; ++i) {
      Int q = H.at(i, j) / H.at(t, j);
      if (H.at(i, j) - q * H.at(t, j) < 0) q -= 1;
      if (q != 0) {
        add_row(H, i, t, -q);
        add_row(h.U, i, t, -q);
      }
    }
    h.pivot_cols.push_back(j);
    ++t;
  }
  return h;
}

std::optional<VecI> solve_integer(const IntMat& A, const VecI& b) {
  SmithForm f = smith_normal_form(A);
  // A x = b  <=>  D (V^-1 x) = U b
  VecI ub(A.rows);
  for (int i = 0; i < A.rows; ++i) ub[i] = dot(f.U.row(i), b);
  VecI y(A.cols, Int(0));
  const int n = std::min(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i) {
    Int d = i < n ? f.D.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  VecI x(A.cols, Int(0));
  for (int i = 0; i < A.cols; ++i) x[i] = dot(f.V.row(i), y);
  return x;
}

std::optional<VecQ> solve_rational(const IntMat& A, const VecQ& b) {
  const int m = A.rows, n = A.cols;
  std::vector<VecQ> t(m, VecQ(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = Rat(A.at(i, j));
    t[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int j = 0; j < n && row < m; ++j) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (t[i][j] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(t[row], t[p]);
    Rat inv = Rat(1) / t[row][j];
    for (int k = j; k <= n; ++k) t[row][k] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][j] == 0) continue;
      Rat c = t[i][j];
      for (int k = j; k <= n; ++k) t[i][k] -= c * t[row][k];
    }
    pivot_col.push_back(j);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (t[i][n] != 0) return std::nullopt;
  VecQ x(n, Rat(0));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = t[i][n];
  return x;
}

}  // namespace antican
