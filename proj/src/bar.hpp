#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "complex.hpp"

namespace enlab {

// A depth-d nested bar word. Depth 0 is a single algebra basis letter;
// depth d >= 1 is a nonempty bracket of depth d-1 words. The internal degree
// is the number of suspensions strictly inside (each part contributes its
// own suspension plus its internal degree).
struct BarWord {
  int depth = 0;
  int letter = 0;
  std::vector<BarWord> parts;

  int degree() const;
  bool operator==(const BarWord& o) const;
  bool operator<(const BarWord& o) const;
};

std::string word_to_string(const BarWord& w, const std::vector<std::string>& alg_basis);

// All depth-d words with the given number of suspensions, letters drawn from
// an algebra of the given dimension. Deterministic order.
std::vector<BarWord> enumerate_words(int alg_dim, int depth, int suspensions);

// The nested word of a tree with the given leaf labels (left to right).
BarWord word_from_tree(const Tree& t, const std::vector<int>& leaves);
Tree tree_from_word(const BarWord& w);

// One summand of the boundary applied to a word: either a merge (letters
// multiplied out through the structure constants, coeff carries the sign and
// constants) or a leaf deletion (deleted_letter >= 0, coeff is the sign; the
// module action is applied by the caller).
struct BarEvent {
  Scalar coeff;
  int deleted_letter = -1;
  BarWord word;
};

// The full boundary of the (desuspended) n-fold bar word: adjacent parts of
// every bracket merge with sign (-1)^{p+e} -- p the reading-order position of
// the left part's suspension, e its internal degree -- times the shuffle
// inversion signs; when with_delta is set, the first and last letter of every
// innermost bracket of size >= 2 is deleted with sign (-1)^{p-1} resp. (-1)^p.
std::vector<BarEvent> boundary_events(const AlgebraData& A, const BarWord& w, bool with_delta);

// The layer twisting cochain as displayed for a single bar level: adjacent
// letters of the top bracket multiply with sign
// (-1)^{sum_{k<i}(|c_k|+1)} (-1)^{|c_i|} (so (-1)^{i-1} on degree-zero
// letters); lower-depth letters multiply by the shuffle product.
std::vector<std::pair<Scalar, BarWord>> bar_differential(const AlgebraData& A, const BarWord& w);

// Shuffle product of two words of equal depth >= 1: all interleavings of
// their parts, each decorated by (-1)^{(|u|+1)(|v|+1)} per inversion.
std::vector<std::pair<Scalar, BarWord>> shuffle_product(const AlgebraData& A, const BarWord& u,
                                                        const BarWord& v);

struct BarBasisElement {
  int module = 0;
  BarWord word;
};

// Bar-side complex; chain diff[m]: C_m -> C_{m-1} for 1..D, cochain
// diff[m]: C^m -> C^{m+1} for 0..D-1. Degree m holds the words with
// m + n suspensions.
struct BarComplex {
  Direction direction = Direction::Chain;
  int n = 1;
  int max_degree = 0;
  Field field = Field::rationals();
  std::vector<std::vector<BarBasisElement>> basis;
  std::vector<SparseMatrix> diff;

  int dim(int m) const { return static_cast<int>(basis[m].size()); }
};

std::vector<std::string> bar_labels(const BarComplex& c, const AlgebraData& A,
                                    const BimoduleData& M, int m);

// The n-fold bar complex of A (trivial coefficient slot, no twist).
BarComplex iterated_bar(const AlgebraData& A, int n, int max_degree);

// The twisted complex on A_+ ⊗ B^n(A).
BarComplex twist_complex(const AlgebraData& A, int n, int max_degree);

// Chain complex M ⊗ (B^n(A), twist) and its Hom(-, M) cochain counterpart.
struct CoefficientComplexes {
  BarComplex chain;
  BarComplex cochain;
};
CoefficientComplexes coefficient_complexes(const AlgebraData& A, const BimoduleData& M, int n,
                                           int max_degree);

// The standard Hochschild complex on M ⊗ A^{⊗ l+1}, straight from its
// displayed differential (independent of the assembled n=1 oracle).
BarComplex hochschild(const AlgebraData& A, const BimoduleData& M, int max_degree);

struct CompareReport {
  bool equal = true;
  std::string mismatch;  // first difference, with degree and both labels
};

// Entrywise comparison of the tree-category chain complex of the Loday
// functor with the bar-side chain complex, through the canonical basis
// bijection (tree, labels) <-> nested word.
CompareReport compare_with_tree_complex(const AlgebraData& A, const BimoduleData& M, int n,
                                        int max_degree);

// Entrywise comparison of two bar complexes whose bases match up as sets.
CompareReport compare_bar_complexes(const BarComplex& a, const BarComplex& b,
                                    const AlgebraData& A, const BimoduleData& M);

std::vector<int> homology_table(const BarComplex& c);

}  // namespace enlab
