#include "torelli/exterior.hpp"

#include <algorithm>

#include "torelli/parallel.hpp"

namespace torelli {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

int subset_rank(int n, int k, const std::vector<int>& s) {
  // lexicographic rank of a sorted k-subset of {0..n-1}
  int rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

int merge_sign(const std::vector<int>& s, const std::vector<int>& t) {
  int inversions = 0;
  for (int x : s)
    for (int y : t) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return (inversions % 2 == 0) ? 1 : -1;
}

IntVec Space::basis_vec(int idx) const {
  IntVec v(dim(), Int(0));
  v[idx] = 1;
  return v;
}

std::string Space::basis_name(int idx) const {
  const int i = idx / 2 + 1;
  return (idx % 2 == 0 ? "a" : "b") + std::to_string(i);
}

IntMat Space::form() const {
  IntMat j(dim(), dim());
  for (int i = 1; i <= g; ++i) {
    j.at(a_index(i), b_index(i)) = 1;
    j.at(b_index(i), a_index(i)) = -1;
  }
  return j;
}

Int Space::pairing(const IntVec& x, const IntVec& y) const {
  if (static_cast<int>(x.size()) != dim() ||
      static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("pairing: dimension mismatch");
  Int s = 0;
  for (int i = 1; i <= g; ++i)
    s += x[a_index(i)] * y[b_index(i)] - x[b_index(i)] * y[a_index(i)];
  return s;
}

Wedge wedge_from_vec(int g, const IntVec& v) {
  if (static_cast<int>(v.size()) != 2 * g)
    throw std::invalid_argument("wedge_from_vec: dimension mismatch");
  Wedge w(g, 1);
  w.c = v;
  return w;
}

Wedge wedge_monomial(int g, std::vector<int> idxs) {
  const int k = static_cast<int>(idxs.size());
  Wedge w(g, k);
  int sign = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (idxs[i] == idxs[j]) return w;  // repeated factor: zero
      if (idxs[i] > idxs[j]) sign = -sign;
    }
  std::sort(idxs.begin(), idxs.end());
  w.c[subset_rank(2 * g, k, idxs)] = sign;
  return w;
}

static void check_same_space(const Wedge& u, const Wedge& v) {
  if (u.genus != v.genus || u.degree != v.degree)
    throw std::invalid_argument("wedge arithmetic: mismatched spaces");
}

Wedge wedge_add(const Wedge& u, const Wedge& v) {
  check_same_space(u, v);
  Wedge w = u;
  for (size_t i = 0; i < w.c.size(); ++i) w.c[i] += v.c[i];
  return w;
}

Wedge wedge_sub(const Wedge& u, const Wedge& v) {
  check_same_space(u, v);
  Wedge w = u;
  for (size_t i = 0; i < w.c.size(); ++i) w.c[i] -= v.c[i];
  return w;
}

Wedge wedge_neg(const Wedge& u) {
  Wedge w = u;
  for (Int& x : w.c) x = -x;
  return w;
}

Wedge wedge_scaled(const Wedge& u, const Int& s) {
  Wedge w = u;
  for (Int& x : w.c) x *= s;
  return w;
}

Wedge wedge(const Wedge& u, const Wedge& v) {
  if (u.genus != v.genus)
    throw std::invalid_argument("wedge: mismatched genus");
  const int n = 2 * u.genus;
  const int k = u.degree + v.degree;
  if (k > 4) throw std::invalid_argument("wedge: degree overflow");
  Wedge w(u.genus, k);
  const auto su = k_subsets(n, u.degree);
  const auto sv = k_subsets(n, v.degree);
  for (size_t i = 0; i < su.size(); ++i) {
    if (u.c[i] == 0) continue;
    for (size_t j = 0; j < sv.size(); ++j) {
      if (v.c[j] == 0) continue;
      const int sign = merge_sign(su[i], sv[j]);
      if (sign == 0) continue;
      std::vector<int> m;
      m.reserve(k);
      std::merge(su[i].begin(), su[i].end(), sv[j].begin(), sv[j].end(),
                 std::back_inserter(m));
      w.c[subset_rank(n, k, m)] += sign * u.c[i] * v.c[j];
    }
  }
  return w;
}

Wedge canonical_element(int g) {
  Wedge w(g, 2);
  Space sp(g);
  for (int i = 1; i <= g; ++i)
    w = wedge_add(w, wedge_monomial(g, {sp.a_index(i), sp.b_index(i)}));
  return w;
}

Wedge standard_embedding(const Wedge& h) {
  if (h.degree != 1)
    throw std::invalid_argument("standard_embedding: degree-1 input required");
  return wedge(h, canonical_element(h.genus));
}

IntMat embedding_matrix(int g) {
  const int n = 2 * g;
  IntMat e(binom(n, 3), n);
  Space sp(g);
  for (int j = 0; j < n; ++j) {
    Wedge w = standard_embedding(wedge_from_vec(g, sp.basis_vec(j)));
    for (int i = 0; i < e.rows; ++i) e.at(i, j) = w.c[i];
  }
  return e;
}

IntMat induced_wedge_map(const IntMat& m, int k) {
  if (m.rows != m.cols) throw std::invalid_argument("induced_wedge_map: square");
  const int n = m.rows;
  if (n % 2 != 0) throw std::invalid_argument("induced_wedge_map: even size");
  const int g = n / 2;
  const auto subsets = k_subsets(n, k);
  const int dim = static_cast<int>(subsets.size());
  IntMat out(dim, dim);
  parallel_for(dim, [&](int j) {
    bool first = true;
    Wedge acc(g, 1);
    for (int idx : subsets[j]) {
      Wedge f = wedge_from_vec(g, m.col(idx));
      acc = first ? f : wedge(acc, f);
      first = false;
    }
    for (int i = 0; i < dim; ++i) out.at(i, j) = acc.c[i];
  });
  return out;
}

IntMat wedge_power_of_span(int g, const IntMat& basis, int k) {
  if (basis.rows != 2 * g)
    throw std::invalid_argument("wedge_power_of_span: dimension mismatch");
  const auto subsets = k_subsets(basis.cols, k);
  IntMat out(binom(2 * g, k), static_cast<int>(subsets.size()));
  for (size_t j = 0; j < subsets.size(); ++j) {
    bool first = true;
    Wedge acc(g, 1);
    for (int idx : subsets[j]) {
      Wedge f = wedge_from_vec(g, basis.col(idx));
      acc = first ? f : wedge(acc, f);
      first = false;
    }
    for (int i = 0; i < out.rows; ++i) out.at(i, static_cast<int>(j)) = acc.c[i];
  }
  return out;
}

IntMat ortho_complement(const Space& sp, const std::vector<IntVec>& vecs) {
  IntMat constraints(static_cast<int>(vecs.size()), sp.dim());
  IntMat j = sp.form();
  for (size_t r = 0; r < vecs.size(); ++r) {
    IntVec jv = mul(j, vecs[r]);
    for (int c = 0; c < sp.dim(); ++c) constraints.at(static_cast<int>(r), c) = jv[c];
  }
  return kernel_basis(constraints);
}

IntMat lemma31_part1(const Space& sp, const IntVec& x) {
  if (content(x) != 1)
    throw std::invalid_argument("lemma31_part1: x must be primitive");
  IntMat comp = ortho_complement(sp, {x});
  IntMat cube = wedge_power_of_span(sp.g, comp, 3);
  IntMat inter = lattice_intersection(cube, embedding_matrix(sp.g));
  // the asserted conclusion: the intersection is exactly span{i(x)}
  Wedge ix = standard_embedding(wedge_from_vec(sp.g, x));
  IntMat expected = span_basis(IntMat::from_cols(inter.rows, {ix.c}));
  if (span_basis(inter) != expected)
    throw std::logic_error("lemma31_part1: intersection != span{i(x)}");
  return inter;
}

IntMat lemma31_part2(const Space& sp, const IntVec& x, const IntVec& y) {
  if (content(x) != 1 || content(y) != 1)
    throw std::invalid_argument("lemma31_part2: vectors must be primitive");
  Int p = sp.pairing(x, y);
  if (p < 0 || p > 1)
    throw std::invalid_argument("lemma31_part2: need 0 <= i_alg(x,y) <= 1");
  SnfResult s = snf(IntMat::from_cols(sp.dim(), {x, y}));
  if (s.d.at(0, 0) != 1 || s.d.at(1, 1) != 1)
    throw std::invalid_argument("lemma31_part2: {x,y} must span a summand");
  IntMat comp = ortho_complement(sp, {x, y});
  IntMat cube = wedge_power_of_span(sp.g, comp, 3);
  IntMat inter = lattice_intersection(cube, embedding_matrix(sp.g));
  if (inter.cols != 0)
    throw std::logic_error("lemma31_part2: intersection is nonzero");
  return inter;
}

bool lemma32_injectivity(int g_small, int g_big) {
  if (g_small < 1 || g_small >= g_big)
    throw std::invalid_argument("lemma32_injectivity: need 1 <= g' < g");
  const int n_small = 2 * g_small, n_big = 2 * g_big;
  const int dim_small = binom(n_small, 3);
  if (dim_small == 0) return true;  // wedge^3 of a rank-2 lattice is 0
  const auto sub_small = k_subsets(n_small, 3);
  IntMat incl(binom(n_big, 3), dim_small);
  for (int j = 0; j < dim_small; ++j)
    incl.at(subset_rank(n_big, 3, sub_small[j]), j) = 1;
  IntMat e = embedding_matrix(g_big);
  for (Int& v : e.a) v = -v;
  IntMat k = kernel_basis(hstack(incl, e));
  IntMat xpart(dim_small, k.cols);
  for (int i = 0; i < dim_small; ++i)
    for (int j = 0; j < k.cols; ++j) xpart.at(i, j) = k.at(i, j);
  return span_basis(xpart).cols == 0;
}

QuotientStructure quotient_w3(int g) {
  return quotient_structure(embedding_matrix(g), binom(2 * g, 3));
}

}  // namespace torelli
