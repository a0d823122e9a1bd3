#pragma once

#include <vector>

#include "torelli/lattice.hpp"

// Free group words on 2g generators and the class-2 nilpotent quotient
// F/gamma_3(F) in collected normal form
//
//   (u, c)  =  x_1^{u_1} ... x_n^{u_n} * prod_{i<j} [x_i, x_j]^{c_ij},
//
// with commutator convention [p, q] = p^-1 q^-1 p q.  The group law is
// (u, c)(v, d) = (u+v, c+d+k(u,v)) with the collection cocycle
// k(u,v)_ij = -u_j v_i, which is validated against brute-force collection
// in the tests.

namespace torelli {

struct FreeWord {
  int rank = 0;
  std::vector<int> ls;  // letters +-(i+1) for generator index i in 0..rank-1

  FreeWord() = default;
  explicit FreeWord(int r) : rank(r) {}
  FreeWord(int r, std::vector<int> letters) : rank(r), ls(std::move(letters)) {}
  bool operator==(const FreeWord&) const = default;
};

FreeWord free_reduce(const FreeWord& w);
FreeWord word_inverse(const FreeWord& w);
FreeWord word_concat(const FreeWord& u, const FreeWord& v);  // reduced

// index of the eps_{ij} coordinate (0 <= i < j < rank, lexicographic)
int eps_index(int rank, int i, int j);

struct Nil {
  int rank = 0;
  IntVec ab;  // exponent sums, dim rank
  IntVec cm;  // commutator part, dim C(rank,2)

  Nil() = default;
  explicit Nil(int r)
      : rank(r), ab(r, Int(0)), cm(static_cast<size_t>(r) * (r - 1) / 2, Int(0)) {}
  bool is_identity() const { return vec_is_zero(ab) && vec_is_zero(cm); }
  bool operator==(const Nil&) const = default;
};

Nil nil_identity(int rank);
Nil nil_generator(int rank, int index, int sign);  // image of x_index^sign
Nil nil_mul(const Nil& a, const Nil& b);
Nil nil_inv(const Nil& a);
Nil nil_pow(const Nil& a, const Int& k);
Nil nil_comm(const Nil& a, const Nil& b);  // a^-1 b^-1 a b
Nil nil_project(const FreeWord& w);

// endomorphism of F/gamma_3 given by the images of the generators
struct NilEndo {
  int rank = 0;
  std::vector<Nil> images;

  static NilEndo identity(int rank);
  static NilEndo from_words(const std::vector<FreeWord>& imgs);
};

Nil apply_endo(const NilEndo& e, const Nil& x);
Nil apply_endo(const NilEndo& e, const FreeWord& w);
NilEndo compose(const NilEndo& f, const NilEndo& g);  // f after g

}  // namespace torelli
