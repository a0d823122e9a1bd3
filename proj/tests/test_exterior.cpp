#include "torelli/exterior.hpp"

#include <random>

#include "torelli/mcg.hpp"
#include "torelli/parallel.hpp"
#include "doctest.h"

using namespace torelli;

namespace {

Wedge mono(int g, std::vector<int> idx) { return wedge_monomial(g, std::move(idx)); }

IntMat random_symplectic(std::mt19937_64& rng, int g, int nfactors) {
  // product of transvections along random primitive vectors
  Space sp(g);
  std::uniform_int_distribution<int> d(-2, 2);
  IntMat m = IntMat::identity(2 * g);
  for (int t = 0; t < nfactors; ++t) {
    IntVec c(2 * g);
    Int cont = 0;
    do {
      for (Int& v : c) v = d(rng);
      cont = content(c);
    } while (cont != 1);
    m = mul(m, transvection(sp, c));
  }
  return m;
}

IntVec random_primitive(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVec c(n);
  for (;;) {
    for (Int& v : c) v = d(rng);
    if (content(c) == 1) return c;
  }
}

}  // namespace

TEST_CASE("subset ranking is the lexicographic order") {
  auto subs = k_subsets(6, 3);
  CHECK(subs.size() == 20);
  for (size_t i = 0; i < subs.size(); ++i)
    CHECK(subset_rank(6, 3, subs[i]) == static_cast<int>(i));
}

TEST_CASE("intersection form pairing") {
  Space sp(2);
  CHECK(sp.pairing(sp.basis_vec(0), sp.basis_vec(1)) == 1);  // i(a1, b1) = 1
  CHECK(sp.pairing(sp.basis_vec(1), sp.basis_vec(0)) == -1);
  CHECK(sp.pairing(sp.basis_vec(0), sp.basis_vec(2)) == 0);
  CHECK(sp.pairing(sp.basis_vec(0), sp.basis_vec(3)) == 0);
  // skew-symmetric and unimodular
  IntMat j = sp.form();
  CHECK(transpose(j) == mul(mul(j, j), j));  // J^T = -J = J^3 for this block form
  SnfResult s = snf(j);
  for (int i = 0; i < 4; ++i) CHECK(s.d.at(i, i) == 1);
}

TEST_CASE("wedge alternation and antisymmetry") {
  int g = 2;
  Wedge a1 = mono(g, {0});
  Wedge b1 = mono(g, {1});
  CHECK(wedge(a1, a1).is_zero());
  CHECK(wedge(a1, b1) == wedge_neg(wedge(b1, a1)));
  // (a1 + b2) ^ a2 ^ b2 = a1 ^ a2 ^ b2
  Wedge sum = wedge_add(mono(g, {0}), mono(g, {3}));
  Wedge prod = wedge(wedge(sum, mono(g, {2})), mono(g, {3}));
  CHECK(prod == mono(g, {0, 2, 3}));
}

TEST_CASE("wedge is bilinear, graded-anticommutative, associative") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int g : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto rnd = [&](int k) {
        Wedge w(g, k);
        for (Int& v : w.c) v = d(rng);
        return w;
      };
      Wedge u = rnd(1), v = rnd(1), w = rnd(2);
      // bilinear
      CHECK(wedge(wedge_add(u, v), w) == wedge_add(wedge(u, w), wedge(v, w)));
      // graded anticommutativity: deg1 x deg2 commute, deg1 x deg1 anticommute
      CHECK(wedge(u, w) == wedge(w, u));
      CHECK(wedge(u, v) == wedge_neg(wedge(v, u)));
      // associativity
      Wedge x = rnd(1), y = rnd(1), z = rnd(1);
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
  }
}

TEST_CASE("canonical element") {
  CHECK(canonical_element(1) == mono(1, {0, 1}));
  CHECK(canonical_element(2) == wedge_add(mono(2, {0, 1}), mono(2, {2, 3})));
}

TEST_CASE("canonical element is symplectically invariant") {
  std::mt19937_64 rng(31337);
  for (int g : {2, 3}) {
    Wedge omega = canonical_element(g);
    for (int trial = 0; trial < 10; ++trial) {
      IntMat m = random_symplectic(rng, g, 4);
      IntMat w2 = induced_wedge_map(m, 2);
      Wedge moved(g, 2);
      moved.c = mul(w2, omega.c);
      CHECK(moved == omega);
    }
  }
}

TEST_CASE("standard embedding") {
  // g=2, h=a1 -> a1 ^ a2 ^ b2
  Wedge h = mono(2, {0});
  CHECK(standard_embedding(h) == mono(2, {0, 2, 3}));
  // h = 0 -> 0
  Wedge zero(2, 1);
  CHECK(standard_embedding(zero).is_zero());
  // g=1: a1 ^ a1 ^ b1 = 0
  CHECK(standard_embedding(mono(1, {0})).is_zero());
}

TEST_CASE("standard embedding matrix has full rank 2g and is primitive for g >= 3") {
  for (int g : {2, 3, 4}) {
    IntMat e = embedding_matrix(g);
    SnfResult s = snf(e);
    int rank = 0;
    for (int i = 0; i < std::min(e.rows, e.cols); ++i)
      if (s.d.at(i, i) != 0) ++rank;
    CHECK(rank == 2 * g);
    if (g >= 3)
      for (int i = 0; i < 2 * g; ++i) CHECK(s.d.at(i, i) == 1);
  }
}

TEST_CASE("induced_wedge_map identity and functoriality") {
  CHECK(induced_wedge_map(IntMat::identity(4), 3) == IntMat::identity(4));
  CHECK(induced_wedge_map(IntMat::identity(6), 3) == IntMat::identity(20));

  // swap of the two handle pairs acts as a permutation with signs
  int g = 2;
  IntMat swap(4, 4);
  swap.at(0, 2) = 1;
  swap.at(1, 3) = 1;
  swap.at(2, 0) = 1;
  swap.at(3, 1) = 1;
  IntMat w3 = induced_wedge_map(swap, 3);
  for (int j = 0; j < 4; ++j) {
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
      if (w3.at(i, j) != 0) {
        ++nonzero;
        CHECK(abs(w3.at(i, j)) == 1);
      }
    CHECK(nonzero == 1);
  }

  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m1 = random_symplectic(rng, 2, 3);
    IntMat m2 = random_symplectic(rng, 2, 3);
    CHECK(induced_wedge_map(mul(m1, m2), 3) ==
          mul(induced_wedge_map(m1, 3), induced_wedge_map(m2, 3)));
  }
}

TEST_CASE("parallel and serial induced maps agree") {
  std::mt19937_64 rng(11);
  IntMat m = random_symplectic(rng, 3, 5);
  IntMat par = induced_wedge_map(m, 3);
  SerialGuard guard;
  CHECK(induced_wedge_map(m, 3) == par);
}

TEST_CASE("ortho_complement") {
  Space sp1(1);
  IntMat c = ortho_complement(sp1, {sp1.basis_vec(0)});
  CHECK(span_basis(c) == span_basis(IntMat::from_cols(2, {sp1.basis_vec(0)})));

  Space sp2(2);
  CHECK(ortho_complement(sp2, {}) == IntMat::identity(4));

  IntMat c2 = ortho_complement(sp2, {sp2.basis_vec(0), sp2.basis_vec(1)});
  CHECK(span_basis(c2) ==
        span_basis(IntMat::from_cols(4, {sp2.basis_vec(2), sp2.basis_vec(3)})));
}

TEST_CASE("ortho_complement is saturated") {
  std::mt19937_64 rng(604);
  for (int g : {2, 3}) {
    Space sp(g);
    for (int trial = 0; trial < 15; ++trial) {
      IntVec x = random_primitive(rng, 2 * g);
      IntMat c = ortho_complement(sp, {x});
      SnfResult s = snf(c);
      for (int i = 0; i < c.cols; ++i) CHECK(s.d.at(i, i) == 1);
    }
  }
}

TEST_CASE("lemma 3.1 part 1: basis vectors and random primitives") {
  std::mt19937_64 rng(20250811);
  for (int g : {2, 3}) {
    Space sp(g);
    for (int idx = 0; idx < 2 * g; ++idx) {
      IntVec x = sp.basis_vec(idx);
      IntMat inter = lemma31_part1(sp, x);  // throws unless = span{i(x)}
      CHECK(inter.cols == 1);
    }
    for (int trial = 0; trial < 25; ++trial) {
      IntVec x = random_primitive(rng, 2 * g);
      CHECK_NOTHROW(lemma31_part1(sp, x));
    }
  }
  // non-primitive input
  Space sp(2);
  IntVec x2 = vec_scaled(sp.basis_vec(0), Int(2));
  CHECK_THROWS_AS(lemma31_part1(sp, x2), std::invalid_argument);
}

TEST_CASE("lemma 3.1 part 2: summand pairs give intersection 0") {
  Space sp2(2), sp3(3);
  CHECK(lemma31_part2(sp2, sp2.basis_vec(0), sp2.basis_vec(2)).cols == 0);
  CHECK(lemma31_part2(sp3, sp3.basis_vec(0), sp3.basis_vec(1)).cols == 0);
  // y = 2*a2 does not span a summand with a1
  CHECK_THROWS_AS(
      lemma31_part2(sp2, sp2.basis_vec(0), vec_scaled(sp2.basis_vec(2), Int(2))),
      std::invalid_argument);
}

TEST_CASE("lemma 3.2 injectivity") {
  CHECK(lemma32_injectivity(2, 3));
  CHECK(lemma32_injectivity(1, 2));
  CHECK(lemma32_injectivity(3, 4));
  CHECK_THROWS_AS(lemma32_injectivity(3, 3), std::invalid_argument);
}

TEST_CASE("quotient of wedge^3 H by i(H)") {
  QuotientStructure q3 = quotient_w3(3);
  CHECK(q3.free_rank() == 14);
  CHECK(q3.torsion_rank() == 0);

  QuotientStructure q2 = quotient_w3(2);
  CHECK(q2.free_rank() == 0);
  CHECK(q2.torsion_rank() == 0);  // the g=2 embedding is onto: no torsion

  QuotientStructure q1 = quotient_w3(1);
  CHECK(q1.ambient_dim == 0);
}
