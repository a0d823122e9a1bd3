#include "torelli/lattice.hpp"

#include <algorithm>

namespace torelli {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_cols(int rows, const std::vector<IntVec>& cs) {
  IntMat m(rows, static_cast<int>(cs.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cs[j].size()) != rows)
      throw std::invalid_argument("from_cols: column dimension mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cs[j][i];
  }
  return m;
}

IntVec IntMat::col(int j) const {
  IntVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

bool IntMat::is_zero() const {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntVec mul(const IntMat& x, const IntVec& v) {
  if (x.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("mul: vector dimension mismatch");
  IntVec z(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z[i] += x.at(i, j) * v[j];
  return z;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMat hstack(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
  IntMat z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

IntVec vec_add(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_add: dim");
  IntVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

IntVec vec_sub(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_sub: dim");
  IntVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

IntVec vec_neg(const IntVec& x) {
  IntVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return z;
}

IntVec vec_scaled(const IntVec& x, const Int& c) {
  IntVec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
  return z;
}

bool vec_is_zero(const IntVec& x) {
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

Int l1_norm(const IntVec& x) {
  Int s = 0;
  for (const Int& v : x) s += abs(v);
  return s;
}

Int content(const IntVec& x) {
  Int g = 0;
  for (const Int& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

namespace {

// Right-multiply columns c1, c2 of m by the 2x2 unimodular matrix
// [[s, -b/g], [t, a/g]] where g = s*a + t*b = gcd(a, b).
void col_gcd_op(IntMat& m, int c1, int c2, const Int& s, const Int& t,
                const Int& ag, const Int& bg) {
  for (int i = 0; i < m.rows; ++i) {
    Int x = m.at(i, c1), y = m.at(i, c2);
    m.at(i, c1) = s * x + t * y;
    m.at(i, c2) = ag * y - bg * x;
  }
}

void col_addmul(IntMat& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

void col_negate(IntMat& m, int c) {
  for (int i = 0; i < m.rows; ++i) m.at(i, c) = -m.at(i, c);
}

void row_gcd_op(IntMat& m, int r1, int r2, const Int& s, const Int& t,
                const Int& ag, const Int& bg) {
  for (int j = 0; j < m.cols; ++j) {
    Int x = m.at(r1, j), y = m.at(r2, j);
    m.at(r1, j) = s * x + t * y;
    m.at(r2, j) = ag * y - bg * x;
  }
}

void row_addmul(IntMat& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
}

void row_negate(IntMat& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

void swap_cols(IntMat& m, int c1, int c2) {
  if (c1 == c2) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

void swap_rows(IntMat& m, int r1, int r2) {
  if (r1 == r2) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  HnfResult r{m, IntMat::identity(m.cols)};
  IntMat& h = r.h;
  IntMat& u = r.u;
  int c = 0;
  Int g, s, t, ag, bg, q;
  for (int row = 0; row < m.rows && c < m.cols; ++row) {
    // bring a nonzero into (row, c), clearing the rest of the row to its right
    int piv = -1;
    for (int j = c; j < m.cols; ++j)
      if (h.at(row, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    swap_cols(h, c, piv);
    swap_cols(u, c, piv);
    for (int j = c + 1; j < m.cols; ++j) {
      if (h.at(row, j) == 0) continue;
      const Int &a = h.at(row, c), &b = h.at(row, j);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      ag = a / g;
      bg = b / g;
      col_gcd_op(h, c, j, s, t, ag, bg);
      col_gcd_op(u, c, j, s, t, ag, bg);
    }
    if (h.at(row, c) < 0) {
      col_negate(h, c);
      col_negate(u, c);
    }
    // reduce the entries left of the pivot into [0, pivot)
    for (int j = 0; j < c; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(),
                 h.at(row, c).get_mpz_t());
      if (q != 0) {
        col_addmul(h, j, c, -q);
        col_addmul(u, j, c, -q);
      }
    }
    ++c;
  }
  return r;
}

SnfResult snf(const IntMat& m) {
  SnfResult r{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
  IntMat& d = r.d;
  IntMat& u = r.u;
  IntMat& v = r.v;
  const int n = std::min(m.rows, m.cols);
  Int g, s, t, ag, bg;
  for (int k = 0; k < n; ++k) {
    // find a pivot
    int pi = -1, pj = -1;
    for (int i = k; i < m.rows && pi < 0; ++i)
      for (int j = k; j < m.cols; ++j)
        if (d.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    swap_rows(d, k, pi);
    swap_rows(u, k, pi);
    swap_cols(d, k, pj);
    swap_cols(v, k, pj);
    for (;;) {
      // clear column k below the pivot
      for (int i = k + 1; i < m.rows; ++i) {
        if (d.at(i, k) == 0) continue;
        const Int &a = d.at(k, k), &b = d.at(i, k);
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        ag = a / g;
        bg = b / g;
        row_gcd_op(d, k, i, s, t, ag, bg);
        row_gcd_op(u, k, i, s, t, ag, bg);
      }
      // clear row k right of the pivot
      bool row_dirty = false;
      for (int j = k + 1; j < m.cols; ++j) {
        if (d.at(k, j) == 0) continue;
        const Int &a = d.at(k, k), &b = d.at(k, j);
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        ag = a / g;
        bg = b / g;
        col_gcd_op(d, k, j, s, t, ag, bg);
        col_gcd_op(v, k, j, s, t, ag, bg);
        row_dirty = true;
      }
      if (row_dirty) continue;  // column ops may have refilled column k
      bool col_clean = true;
      for (int i = k + 1; i < m.rows; ++i)
        if (d.at(i, k) != 0) col_clean = false;
      if (!col_clean) continue;
      // enforce divisibility of everything below-right by the pivot
      int bi = -1, bj = -1;
      for (int i = k + 1; i < m.rows && bi < 0; ++i)
        for (int j = k + 1; j < m.cols; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      row_addmul(d, k, bi, 1);
      row_addmul(u, k, bi, 1);
    }
    if (d.at(k, k) < 0) {
      row_negate(d, k);
      row_negate(u, k);
    }
  }
  return r;
}

IntMat span_basis(const IntMat& m) {
  IntMat h = hnf(m).h;
  int nz = 0;
  for (int j = 0; j < h.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < h.rows; ++i)
      if (h.at(i, j) != 0) zero = false;
    if (!zero) nz = j + 1;
  }
  IntMat b(h.rows, nz);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < nz; ++j) b.at(i, j) = h.at(i, j);
  return b;
}

IntMat kernel_basis(const IntMat& m) {
  HnfResult r = hnf(m);
  std::vector<int> zcols;
  for (int j = 0; j < r.h.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < r.h.rows; ++i)
      if (r.h.at(i, j) != 0) zero = false;
    if (zero) zcols.push_back(j);
  }
  IntMat k(m.cols, static_cast<int>(zcols.size()));
  for (int j = 0; j < k.cols; ++j)
    for (int i = 0; i < m.cols; ++i) k.at(i, j) = r.u.at(i, zcols[j]);
  return k;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("solve_integer: dimension mismatch");
  SnfResult r = snf(a);
  IntVec c = mul(r.u, b);
  IntVec y(a.cols, Int(0));
  const int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    const Int& di = (i < n) ? r.d.at(i, i) : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  return mul(r.v, y);
}

IntMat lattice_intersection(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows)
    throw std::invalid_argument("lattice_intersection: row mismatch");
  if (a.cols == 0 || b.cols == 0) return IntMat(a.rows, 0);
  IntMat negb = b;
  for (Int& x : negb.a) x = -x;
  IntMat k = kernel_basis(hstack(a, negb));
  // the a-parts of kernel vectors give coefficient vectors of the intersection
  IntMat xpart(a.cols, k.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < k.cols; ++j) xpart.at(i, j) = k.at(i, j);
  return span_basis(mul(a, xpart));
}

int QuotientStructure::torsion_rank() const {
  int t = 0;
  for (const Int& d : invariant_factors)
    if (d > 1) ++t;
  return t;
}

IntVec QuotientStructure::reduce(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim)
    throw std::invalid_argument("QuotientStructure::reduce: dimension");
  IntVec y = mul(projection, v);
  IntVec out;
  out.reserve(torsion_rank() + free_rank());
  for (int i = 0; i < rank; ++i) {
    if (invariant_factors[i] > 1) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(),
                 invariant_factors[i].get_mpz_t());
      out.push_back(r);
    }
  }
  for (int i = rank; i < ambient_dim; ++i) out.push_back(y[i]);
  return out;
}

QuotientStructure quotient_structure(const IntMat& sub, int ambient_dim) {
  if (sub.rows != ambient_dim)
    throw std::invalid_argument("quotient_structure: ambient dimension");
  QuotientStructure q;
  q.ambient_dim = ambient_dim;
  q.sublattice_basis = sub;
  SnfResult r = snf(sub);
  q.projection = r.u;
  const int n = std::min(sub.rows, sub.cols);
  for (int i = 0; i < n; ++i) {
    if (r.d.at(i, i) == 0) break;
    q.invariant_factors.push_back(r.d.at(i, i));
  }
  q.rank = static_cast<int>(q.invariant_factors.size());
  return q;
}

namespace {

struct L1Search {
  const IntMat& basis;        // column echelon, nonzero columns
  std::vector<int> pivot_row;
  IntVec target;
  IntVec best;
  Int best_norm;
  IntVec coeff;

  explicit L1Search(const IntMat& b, const IntVec& t)
      : basis(b), target(t), best(t), best_norm(l1_norm(t)),
        coeff(b.cols, Int(0)) {
    pivot_row.resize(b.cols);
    for (int j = 0; j < b.cols; ++j) {
      int p = 0;
      while (b.at(p, j) == 0) ++p;
      pivot_row[j] = p;
    }
  }

  IntVec residual() const {
    IntVec v = target;
    for (int j = 0; j < basis.cols; ++j)
      if (coeff[j] != 0)
        for (int i = 0; i < basis.rows; ++i) v[i] -= coeff[j] * basis.at(i, j);
    return v;
  }

  void leaf() {
    IntVec v = residual();
    Int n = l1_norm(v);
    if (n < best_norm || (n == best_norm && v < best)) {
      best_norm = n;
      best = v;
    }
  }

  // dfs over coefficients; partial = sum of |residual| over settled pivot rows
  void dfs(int j, const Int& partial) {
    if (j == basis.cols) {
      leaf();
      return;
    }
    const int p = pivot_row[j];
    // residual at the pivot row depends only on coefficients 0..j
    Int t = target[p];
    for (int j2 = 0; j2 < j; ++j2) t -= coeff[j2] * basis.at(p, j2);
    const Int& piv = basis.at(p, j);
    Int slack = best_norm - partial;
    if (slack < 0) return;
    Int lo, hi, tmp;
    tmp = t - slack;
    mpz_cdiv_q(lo.get_mpz_t(), tmp.get_mpz_t(), piv.get_mpz_t());
    tmp = t + slack;
    mpz_fdiv_q(hi.get_mpz_t(), tmp.get_mpz_t(), piv.get_mpz_t());
    for (Int c = lo; c <= hi; ++c) {
      coeff[j] = c;
      Int res = abs(t - c * piv);
      if (partial + res <= best_norm) dfs(j + 1, partial + res);
    }
    coeff[j] = 0;
  }
};

}  // namespace

IntVec min_l1_coset_rep(const IntVec& target, const IntMat& sub,
                        const Int& radius_bound) {
  if (static_cast<int>(target.size()) != sub.rows && sub.cols > 0)
    throw std::invalid_argument("min_l1_coset_rep: dimension mismatch");
  if (l1_norm(target) > radius_bound)
    throw std::invalid_argument(
        "min_l1_coset_rep: radius_bound below l1(target)");
  IntMat b = span_basis(sub);
  if (b.cols == 0) return target;
  L1Search search(b, target);
  search.dfs(0, Int(0));
  return search.best;
}

}  // namespace torelli
