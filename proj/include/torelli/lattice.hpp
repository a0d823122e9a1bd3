#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

// Exact integer lattice arithmetic.  All lattices are column spans of
// integer matrices; all arithmetic is arbitrary precision.

namespace torelli {

using Int = mpz_class;
using IntVec = std::vector<Int>;

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static IntMat identity(int n);
  static IntMat from_cols(int rows, const std::vector<IntVec>& cs);

  IntVec col(int j) const;
  bool is_zero() const;
  bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntVec mul(const IntMat& x, const IntVec& v);
IntMat transpose(const IntMat& m);
IntMat hstack(const IntMat& x, const IntMat& y);

IntVec vec_add(const IntVec& x, const IntVec& y);
IntVec vec_sub(const IntVec& x, const IntVec& y);
IntVec vec_neg(const IntVec& x);
IntVec vec_scaled(const IntVec& x, const Int& c);
bool vec_is_zero(const IntVec& x);
Int l1_norm(const IntVec& x);
Int content(const IntVec& x);  // gcd of the entries, 0 for the zero vector

// Column-style Hermite normal form: m*u = h with u unimodular, h in column
// echelon (pivot rows strictly increasing, pivots positive, entries left of
// each pivot reduced into [0, pivot)), zero columns collected at the right.
struct HnfResult {
  IntMat h;
  IntMat u;
};
HnfResult hnf(const IntMat& m);

// Smith normal form: u*m*v = d diagonal with d1 | d2 | ..., u and v unimodular.
struct SnfResult {
  IntMat d;
  IntMat u;
  IntMat v;
};
SnfResult snf(const IntMat& m);

// Basis of the column span (HNF with zero columns dropped).
IntMat span_basis(const IntMat& m);

// Basis of the integer kernel {x : m*x = 0}, as columns.
IntMat kernel_basis(const IntMat& m);

// One integer solution of a*x = b, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Basis of (column span of a) ∩ (column span of b).
IntMat lattice_intersection(const IntMat& a, const IntMat& b);

// Z^ambient / (column span of sub), with normalized coset coordinates.
struct QuotientStructure {
  int ambient_dim = 0;
  IntMat sublattice_basis;
  std::vector<Int> invariant_factors;  // positive SNF diagonal, d1 | d2 | ...
  IntMat projection;                   // SNF row transform, ambient x ambient
  int rank = 0;                        // rank of the sublattice

  int free_rank() const { return ambient_dim - rank; }
  int torsion_rank() const;  // number of invariant factors > 1

  // Normalized coset coordinates: torsion entries reduced into [0, d_i),
  // followed by the free entries.  Equal cosets give equal vectors.
  IntVec reduce(const IntVec& v) const;
};
QuotientStructure quotient_structure(const IntMat& sub, int ambient_dim);

// The l1-minimal representative of target + span(sub), ties broken by the
// lexicographically smallest coordinate vector.  radius_bound must be at
// least l1(target); the search is a complete branch-and-bound over the
// sublattice coefficients, so the returned representative is certified.
IntVec min_l1_coset_rep(const IntVec& target, const IntMat& sub,
                        const Int& radius_bound);

}  // namespace torelli
