#pragma once

#include <string>
#include <vector>

#include "torelli/lattice.hpp"

// The symplectic homology lattice H of a genus-g surface and its wedge
// powers, in exact integer coordinates.  Basis order is a1, b1, ..., ag, bg;
// the basis of wedge^k H is the k-subsets of that list in lexicographic
// order.

namespace torelli {

int binom(int n, int k);
std::vector<std::vector<int>> k_subsets(int n, int k);
int subset_rank(int n, int k, const std::vector<int>& s);
// sign of merging two disjoint sorted index lists into sorted order
int merge_sign(const std::vector<int>& s, const std::vector<int>& t);

struct Space {
  int g = 0;

  explicit Space(int genus) : g(genus) {
    if (genus < 1) throw std::invalid_argument("Space: genus must be >= 1");
  }
  int dim() const { return 2 * g; }
  int a_index(int i) const { return 2 * (i - 1); }  // a_i, i in 1..g
  int b_index(int i) const { return 2 * i - 1; }    // b_i, i in 1..g
  IntVec basis_vec(int idx) const;
  std::string basis_name(int idx) const;  // "a1", "b1", ...

  IntMat form() const;  // skew form with i_alg(a_i, b_i) = 1
  Int pairing(const IntVec& x, const IntVec& y) const;
};

struct Wedge {
  int genus = 1;
  int degree = 1;
  IntVec c;

  Wedge() = default;
  Wedge(int g, int k) : genus(g), degree(k), c(binom(2 * g, k), Int(0)) {}

  bool is_zero() const { return vec_is_zero(c); }
  bool operator==(const Wedge&) const = default;
};

Wedge wedge_from_vec(int g, const IntVec& v);  // degree 1
// basis monomial e_{i1} ^ ... ^ e_{ik} for arbitrary index order (signed)
Wedge wedge_monomial(int g, std::vector<int> idxs);
Wedge wedge_add(const Wedge& u, const Wedge& v);
Wedge wedge_sub(const Wedge& u, const Wedge& v);
Wedge wedge_neg(const Wedge& u);
Wedge wedge_scaled(const Wedge& u, const Int& s);
Wedge wedge(const Wedge& u, const Wedge& v);

// omega = a1^b1 + ... + ag^bg
Wedge canonical_element(int g);
// h -> h ^ omega
Wedge standard_embedding(const Wedge& h);
// matrix of the standard embedding H -> wedge^3 H
IntMat embedding_matrix(int g);

// matrix of wedge^k m on the lexicographic basis (functorial in m)
IntMat induced_wedge_map(const IntMat& m, int k);

// columns: wedges of all k-subsets of the columns of basis
IntMat wedge_power_of_span(int g, const IntMat& basis, int k);

// saturated basis of {x : i_alg(x, v) = 0 for all given v}
IntMat ortho_complement(const Space& sp, const std::vector<IntVec>& vecs);

// (wedge^3 of x-perp) ∩ i(H); asserts the result equals span{i(x)}
IntMat lemma31_part1(const Space& sp, const IntVec& x);
// (wedge^3 of {x,y}-perp) ∩ i(H); asserts rank 0
IntMat lemma31_part2(const Space& sp, const IntVec& x, const IntVec& y);
// wedge^3 H' -> (wedge^3 H)/H is injective for g_small < g_big
bool lemma32_injectivity(int g_small, int g_big);

// the quotient (wedge^3 H)/H
QuotientStructure quotient_w3(int g);

}  // namespace torelli
