#include "torelli/lattice.hpp"

#include <cstdlib>
#include <functional>
#include <random>

#include "doctest.h"

using namespace torelli;

namespace {

IntMat make(int r, int c, std::vector<long> vals) {
  IntMat m(r, c);
  for (int i = 0; i < r * c; ++i) m.a[i] = vals[i];
  return m;
}

Int det(const IntMat& m) {
  REQUIRE(m.rows == m.cols);
  const int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int s = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        sub.at(i - 1, cc++) = m.at(i, k);
      }
    }
    Int term = m.at(0, j) * det(sub);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

IntMat random_mat(std::mt19937_64& rng, int r, int c, int lim = 5) {
  std::uniform_int_distribution<int> d(-lim, lim);
  IntMat m(r, c);
  for (Int& x : m.a) x = d(rng);
  return m;
}

bool in_span(const IntMat& basis, const IntVec& v) {
  return solve_integer(basis, v).has_value();
}

// all vectors of the given dimension with l1 norm <= bound
void enumerate_l1_ball(int dim, long bound, IntVec& cur, int pos,
                       const std::function<void(const IntVec&)>& fn) {
  if (pos == dim) {
    fn(cur);
    return;
  }
  for (long v = -bound; v <= bound; ++v) {
    cur[pos] = v;
    enumerate_l1_ball(dim, bound - std::labs(v), cur, pos + 1, fn);
  }
  cur[pos] = 0;
}

}  // namespace

TEST_CASE("hnf examples") {
  IntMat id3 = IntMat::identity(3);
  HnfResult r = hnf(id3);
  CHECK(r.h == id3);
  CHECK(r.u == id3);

  IntMat m = make(2, 2, {2, 4, 0, 2});
  r = hnf(m);
  CHECK(mul(m, r.u) == r.h);
  CHECK(r.h.at(0, 0) == 2);
  CHECK(r.h.at(1, 1) == 2);
  CHECK(r.h.at(0, 1) == 0);
  CHECK(abs(det(r.u)) == 1);

  IntMat z = make(1, 1, {0});
  r = hnf(z);
  CHECK(r.h == z);

  IntMat empty(3, 0);
  r = hnf(empty);
  CHECK(r.h.cols == 0);
}

TEST_CASE("hnf identities on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 5, cols = 1 + (trial * 7) % 5;
    IntMat m = random_mat(rng, rows, cols);
    HnfResult r = hnf(m);
    CHECK(mul(m, r.u) == r.h);
    CHECK(abs(det(r.u)) == 1);
    // column echelon: pivot rows strictly increase
    int last_pivot = -1;
    for (int j = 0; j < r.h.cols; ++j) {
      int p = -1;
      for (int i = 0; i < r.h.rows; ++i)
        if (r.h.at(i, j) != 0) {
          p = i;
          break;
        }
      if (p >= 0) {
        CHECK(p > last_pivot);
        last_pivot = p;
        CHECK(r.h.at(p, j) > 0);
      }
    }
  }
}

TEST_CASE("snf examples") {
  IntMat m = make(2, 2, {2, 0, 0, 3});
  SnfResult r = snf(m);
  CHECK(r.d.at(0, 0) == 1);
  CHECK(r.d.at(1, 1) == 6);
  CHECK(mul(mul(r.u, m), r.v) == r.d);

  IntMat id = IntMat::identity(4);
  CHECK(snf(id).d == id);

  IntMat z(2, 3);
  CHECK(snf(z).d == z);
}

TEST_CASE("snf identities on random matrices") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 5, cols = 1 + (trial * 3) % 5;
    IntMat m = random_mat(rng, rows, cols);
    SnfResult r = snf(m);
    CHECK(mul(mul(r.u, m), r.v) == r.d);
    CHECK(abs(det(r.u)) == 1);
    CHECK(abs(det(r.v)) == 1);
    Int prev = 0;
    for (int k = 0; k < std::min(rows, cols); ++k) {
      const Int& dk = r.d.at(k, k);
      CHECK(dk >= 0);
      if (prev != 0 && dk != 0) CHECK(dk % prev == 0);
      if (prev == 0 && k > 0) CHECK(dk == 0);  // zeros come last
      prev = dk;
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) CHECK(r.d.at(i, j) == 0);
  }
}

TEST_CASE("solve_integer examples") {
  IntMat id = IntMat::identity(2);
  auto x = solve_integer(id, {Int(5), Int(-2)});
  REQUIRE(x.has_value());
  CHECK(*x == IntVec{Int(5), Int(-2)});

  IntMat two = make(1, 1, {2});
  CHECK(!solve_integer(two, {Int(3)}).has_value());

  IntMat a = make(2, 2, {1, 1, 0, 2});
  x = solve_integer(a, {Int(3), Int(4)});
  REQUIRE(x.has_value());
  CHECK(*x == IntVec{Int(1), Int(2)});

  CHECK_THROWS_AS(solve_integer(a, {Int(1)}), std::invalid_argument);
}

TEST_CASE("solve_integer on random solvable and unsolvable systems") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial * 5) % 4;
    IntMat a = random_mat(rng, rows, cols);
    IntVec x0(cols);
    std::uniform_int_distribution<int> d(-4, 4);
    for (Int& v : x0) v = d(rng);
    IntVec b = mul(a, x0);
    auto x = solve_integer(a, b);
    REQUIRE(x.has_value());
    CHECK(mul(a, *x) == b);
  }
  // parity obstruction in two dimensions
  IntMat a = make(2, 2, {2, 0, 0, 2});
  CHECK(!solve_integer(a, {Int(1), Int(2)}).has_value());
}

TEST_CASE("lattice_intersection examples") {
  IntMat e1 = make(2, 1, {1, 0});
  IntMat b = make(2, 2, {1, 0, 2, 1});  // columns e1+2e2, e2
  IntMat r = lattice_intersection(e1, b);
  CHECK(span_basis(r) == span_basis(e1));

  IntMat id = IntMat::identity(3);
  CHECK(span_basis(lattice_intersection(id, id)) == id);

  IntMat e2 = make(2, 1, {0, 1});
  CHECK(lattice_intersection(e1, e2).cols == 0);

  CHECK_THROWS_AS(lattice_intersection(e1, IntMat::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("lattice_intersection containment properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    IntMat a = random_mat(rng, n, 1 + trial % n);
    IntMat b = random_mat(rng, n, 1 + (trial + 1) % n);
    IntMat inter = lattice_intersection(a, b);
    for (int j = 0; j < inter.cols; ++j) {
      CHECK(in_span(a, inter.col(j)));
      CHECK(in_span(b, inter.col(j)));
    }
    // a random element built inside both spans must lie in the intersection
    std::uniform_int_distribution<int> d(-3, 3);
    IntVec pa(a.cols);
    for (Int& v : pa) v = d(rng);
    IntVec z = mul(a, pa);
    if (in_span(b, z)) CHECK(in_span(inter, z));
  }
}

TEST_CASE("quotient_structure examples") {
  IntMat two_id = make(2, 2, {2, 0, 0, 2});
  QuotientStructure q = quotient_structure(two_id, 2);
  REQUIRE(q.invariant_factors.size() == 2);
  CHECK(q.invariant_factors[0] == 2);
  CHECK(q.invariant_factors[1] == 2);
  CHECK(q.free_rank() == 0);
  CHECK(q.torsion_rank() == 2);
  // (1,1) and (3,3) are the same coset, (1,0) is not
  CHECK(q.reduce({Int(1), Int(1)}) == q.reduce({Int(3), Int(3)}));
  CHECK(q.reduce({Int(1), Int(1)}) != q.reduce({Int(1), Int(0)}));

  QuotientStructure q0 = quotient_structure(IntMat(3, 0), 3);
  CHECK(q0.free_rank() == 3);
  CHECK(q0.projection == IntMat::identity(3));

  IntMat e1 = make(2, 1, {1, 0});
  QuotientStructure q1 = quotient_structure(e1, 2);
  CHECK(q1.free_rank() == 1);
  CHECK(q1.torsion_rank() == 0);
  CHECK(q1.reduce({Int(7), Int(3)}) == q1.reduce({Int(0), Int(3)}));
}

TEST_CASE("min_l1_coset_rep examples") {
  IntVec target{Int(3), Int(0)};
  CHECK(min_l1_coset_rep(target, IntMat(2, 0), Int(10)) == target);

  IntMat sub = make(2, 1, {1, 1});
  IntVec rep = min_l1_coset_rep(target, sub, Int(10));
  CHECK(l1_norm(rep) <= 3);
  // target - sub*c for c in -3..3: best is c=1 or 2 with l1 = 3? enumerate
  Int best = l1_norm(target);
  for (long c = -5; c <= 5; ++c) {
    IntVec v = vec_sub(target, vec_scaled(sub.col(0), Int(c)));
    if (l1_norm(v) < best) best = l1_norm(v);
  }
  CHECK(l1_norm(rep) == best);

  IntVec member = mul(sub, IntVec{Int(4)});
  CHECK(vec_is_zero(min_l1_coset_rep(member, sub, Int(10))));

  CHECK_THROWS_AS(min_l1_coset_rep(target, sub, Int(1)), std::invalid_argument);
}

TEST_CASE("min_l1_coset_rep matches exhaustive enumeration") {
  std::mt19937_64 rng(2025);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + trial % 5;             // up to 6
    int k = 1 + trial % 2;
    IntMat sub = random_mat(rng, dim, k, 2);
    IntVec target(dim);
    for (Int& v : target) v = d(rng);
    if (l1_norm(target) > 4) continue;
    IntVec rep = min_l1_coset_rep(target, sub, Int(16));
    // oracle: scan the whole l1 ball of radius l1(rep) for better/tied reps
    long radius = l1_norm(rep).get_si();
    IntVec cur(dim, Int(0));
    IntVec best = rep;
    enumerate_l1_ball(dim, radius, cur, 0, [&](const IntVec& v) {
      if (solve_integer(sub, vec_sub(target, v)).has_value()) {
        if (l1_norm(v) < l1_norm(best) ||
            (l1_norm(v) == l1_norm(best) && v < best))
          best = v;
      }
    });
    CHECK(best == rep);
    CHECK(solve_integer(sub, vec_sub(target, rep)).has_value());
  }
}
