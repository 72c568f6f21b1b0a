#pragma once

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tree.hpp"

namespace enlab {

// Basepoint value in the top-level map (a deleted leaf).
inline constexpr int kPlus = -1;

// A morphism of Epi_n^+, stored as one full representative. Identity of
// morphisms is class identity: compare through canonical_key / equivalent.
// levels[i-1] is h_i; only the top level may contain kPlus.
struct TreeMorphism {
  Tree source;
  Tree target;
  std::vector<std::vector<int>> levels;

  int n() const { return source.n; }
  const std::vector<int>& top() const { return levels.back(); }
};

struct Validity {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Full validity per the category's definition: surjectivity below the top,
// order preservation on fibres, the alive-interval condition, and the
// commuting squares (everywhere below level n, on surviving leaves at level n).
Validity check_valid(const TreeMorphism& h);
bool is_valid(const TreeMorphism& h);

TreeMorphism identity(const Tree& t);

// Surviving vertices per level: S_n = leaves not sent to +, S_{j-1} = f_j(S_j).
std::vector<std::vector<int>> survivor_sets(const TreeMorphism& h);

// Class equality: equal +-preimage and equal values on surviving vertices.
// Throws on mismatched endpoints.
bool equivalent(const TreeMorphism& a, const TreeMorphism& b);

// Stable string key; equal keys iff equivalent.
std::string canonical_key(const TreeMorphism& h);

// The lexicographically smallest valid representative of h's class
// (concatenated level maps, bottom level first).
TreeMorphism canonicalize(const TreeMorphism& h);

// A uniformly perturbed valid representative of the same class.
TreeMorphism random_representative(const TreeMorphism& h, std::mt19937_64& rng);

// Componentwise composite sending + to +; g: q -> r, h: r -> s.
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& h);

// Generators. Each returns the target tree inside the morphism's `target`.
// d_i at the top level; requires leaves i, i+1 in the same fibre.
TreeMorphism top_merge(const Tree& t, int i);
// delta_i at the top level; requires leaf i extremal in a fibre of size >= 2.
TreeMorphism delete_leaf(const Tree& t, int i);

// An (a,b)-shuffle: perm[w] is the target position of source slot w, with
// slots 0..a-1 the left block and a..a+b-1 the right block, each kept in order.
struct Shuffle {
  int a = 0;
  int b = 0;
  std::vector<int> perm;
};

std::vector<Shuffle> enumerate_shuffles(int a, int b);

// Product over inversions (x left, y right, perm[x] > perm[y]) of
// (-1)^{(left_deg[x]+1)(right_deg[y]+1)}; returns +1 or -1.
int shuffle_sign(const Shuffle& s, const std::vector<int>& left_deg,
                 const std::vector<int>& right_deg);

// Merges level-j vertices i, i+1 (same fibre) and interleaves the subtrees
// above them by the shuffle; levels above j+1 are carried block by block.
TreeMorphism merge_shuffle(const Tree& t, int j, int i, const Shuffle& s);

// h^I: deletes the leaves outside I; requires I to meet each top fibre in an
// interval. Target is restrict_tree(t, I).
TreeMorphism restriction_morphism(const Tree& t, const std::vector<int>& leaves);

// One canonical representative per equivalence class in Epi_n^+(t, s),
// deterministic order. Empty when no morphism exists.
std::vector<TreeMorphism> enumerate_hom(const Tree& t, const Tree& s);

nlohmann::json morphism_to_json(const TreeMorphism& h);
TreeMorphism morphism_from_json(const nlohmann::json& j);
std::string morphism_to_string(const TreeMorphism& h);

}  // namespace enlab
