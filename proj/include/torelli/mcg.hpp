#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torelli/exterior.hpp"
#include "torelli/nilpotent.hpp"

// Mapping classes of the genus-g surface with 0 or 1 boundary components,
// as words in the Lickorish twist generators.  Each generator carries a
// certified free-group automorphism of pi_1 of the bordered surface (free
// on x_1..x_2g with x_{2i-1} -> a_i, x_{2i} -> b_i on homology) fixing the
// boundary word zeta = [x1,x2][x3,x4]...  exactly.

namespace torelli {

struct TwistGenerator {
  std::string name;              // "a1".."ag", "b1".."bg", "d1".."d(g-1)"
  IntVec hclass;                 // homology class of the twisting curve
  std::vector<FreeWord> fwd;     // images of x_1..x_2g under the twist
  std::vector<FreeWord> inv;     // images under the inverse twist
};

struct GeneratorTable {
  int g = 0;
  std::vector<TwistGenerator> gens;  // a1..ag, b1..bg, d1..d(g-1)
  FreeWord zeta;

  int index_a(int i) const { return i - 1; }
  int index_b(int i) const { return g + i - 1; }
  int index_d(int j) const { return 2 * g + j - 1; }
  int find(const std::string& name) const;  // -1 when absent
};

// the 3g-1 Lickorish generators with certified automorphisms; g >= 2
GeneratorTable generator_table(int g);

// plain signed generator: (generator index, +-1)
using SignedGen = std::pair<int, int>;

// one letter of a mapping class word: conj * T_gen^sign * conj^-1
struct Letter {
  std::vector<SignedGen> conj;
  int gen = 0;
  int sign = 1;

  Letter() = default;
  Letter(int gn, int s) : gen(gn), sign(s) {}
};

struct McgWord {
  int g = 2;
  int boundary = 1;
  std::vector<Letter> letters;

  McgWord() = default;
  McgWord(int genus, int bdry) : g(genus), boundary(bdry) {}
  McgWord inverse() const;
};

McgWord word_concat(const McgWord& u, const McgWord& v);
McgWord word_conjugate(const McgWord& f, const McgWord& t);  // f t f^-1

// v -> v - i_alg(v, c) * c
IntMat transvection(const Space& sp, const IntVec& c, int sign = 1);

IntVec letter_class(const GeneratorTable& tab, const Letter& l);
IntMat symplectic_action(const GeneratorTable& tab, const McgWord& w);
bool is_torelli(const GeneratorTable& tab, const McgWord& w);

// free-level automorphism; boundary words only
std::vector<FreeWord> automorphism_of(const GeneratorTable& tab,
                                      const McgWord& w);
// nil-level action of the same automorphism (cheap for long words)
NilEndo nil_action(const GeneratorTable& tab, const McgWord& w);

// chain-relation word for a twist about a genus-k separating curve
McgWord separating_twist_word(int g, int k);
// the boundary-parallel twist word ((full 2g-chain)^(4g+2))
McgWord boundary_twist_word(int g);

Letter conjugate_twist(const GeneratorTable& tab,
                       const std::vector<SignedGen>& w, int gen, int sign);

struct RelationCheck {
  std::string id;
  bool pass = false;
};
// commutations, braids, and the 3-chain relation, as exact automorphism
// identities; plus the full-chain boundary relation against conjugation
// by zeta
std::vector<RelationCheck> verify_standard_relations(const GeneratorTable& tab);

struct BpCandidate {
  Letter first;
  Letter second;   // candidate word is first * second^-1
  IntVec x_class;  // shared (oriented) homology class of the first letter
};
McgWord bp_word(const GeneratorTable& tab, const BpCandidate& c);
std::vector<BpCandidate> bp_search(const GeneratorTable& tab, int max_len,
                                   int max_candidates = 200);

}  // namespace torelli
