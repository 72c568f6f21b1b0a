#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coeffsys.hpp"

namespace enlab {

enum class Direction { Chain, Cochain };

// One generator summand of a differential: a morphism with its sign.
struct DiffTerm {
  TreeMorphism h;
  int sign;        // +1 or -1
  int level;       // the j of the summand this term belongs to
  bool is_delta;   // true for the leaf-deleting terms
};

// The merge summands of the level-j differential out of t (top merges for
// j = n, shuffle merges below), with their signs.
std::vector<DiffTerm> merge_terms(const Tree& t, int j);
// The leaf-deleting summands (minimal and maximal leaf of each top fibre of
// size at least two).
std::vector<DiffTerm> delta_terms(const Tree& t);
// All summands of the total differential out of t.
std::vector<DiffTerm> all_terms(const Tree& t);

struct DegreeBasis {
  std::vector<Tree> trees;
  std::vector<int> offsets;  // block start per tree
  int total = 0;
};

// Total complex of the multicomplex, graded by homological degree, assembled
// up to degree D. Chain: diff[m] : C_m -> C_{m-1}, m = 1..D (diff[0] is the
// 0 x dim(C_0) map). Cochain: diff[m] : C^m -> C^{m+1}, m = 0..D-1.
struct GradedComplex {
  Direction direction = Direction::Chain;
  int n = 1;
  int max_degree = 0;
  Field field = Field::rationals();
  std::vector<DegreeBasis> basis;
  std::vector<SparseMatrix> diff;
  std::vector<std::vector<std::string>> labels;  // per degree, "tree | basis label"

  int dim(int m) const { return basis[m].total; }
};

GradedComplex build_chain(const SystemPtr& F, int n, int max_degree);
GradedComplex build_cochain(const SystemPtr& G, int n, int max_degree);

// First nonzero witness of d∘d over all assembled degrees, if any.
std::optional<std::string> d2_witness(const GradedComplex& c);

struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct MulticomplexReport {
  bool pass = true;
  std::vector<IdentityCheck> checks;
};

// Verifies, signature by signature up to total degree D: each partial
// differential squares to zero, distinct ones anticommute, the
// leaf-deletion part anticommutes with every level below the top, and its
// square cancels against the top-level merges.
MulticomplexReport check_multicomplex(const SystemPtr& F, int n, int max_degree);

// Betti numbers in degrees 0..D-1 (degree D is cut off by the truncation).
std::vector<int> homology_table(const GradedComplex& c);

struct HZero {
  int rank = 0;
  SparseMatrix presentation;  // the three-term map into the linear tree
};

// Degree-zero homology as the cokernel of the three-term map out of the
// unique degree-one tree.
HZero h_zero(const SystemPtr& F, int n);

}  // namespace enlab
