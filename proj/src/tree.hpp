#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "field.hpp"

namespace enlab {

// A planar fully grown n-level tree: a sequence of order-preserving
// surjections [r_n] -> ... -> [r_1]. Level j has r_j + 1 vertices; level-n
// vertices are the leaves. maps[j-2] holds f_j for j = 2..n (empty for n=1).
struct Tree {
  int n = 1;
  std::vector<int> r;                   // r[j-1] = r_j
  std::vector<std::vector<int>> maps;   // maps[j-2] = f_j as a value table

  int levels() const { return n; }
  int width(int j) const { return r[j - 1] + 1; }  // vertex count of level j
  // f_j(x) for 2 <= j <= n.
  int parent(int j, int x) const { return maps[j - 2][x]; }

  bool operator==(const Tree& o) const { return n == o.n && r == o.r && maps == o.maps; }
  bool operator!=(const Tree& o) const { return !(*this == o); }
  bool operator<(const Tree& o) const;  // signature, then lexicographic on maps
};

// Throws ValidationError naming the offending level if any f_j is not an
// order-preserving surjection or lengths disagree with r.
void validate_tree(const Tree& t);

Tree linear_tree(int n);
Tree corolla(int leaves);  // 1-level tree with the given number of leaves

int degree(const Tree& t);               // edge count = sum of (r_j + 1)
int homological_degree(const Tree& t);   // sum of r_j = degree - n

// Edge labels 1..degree(t), depth-first: the edge down to a vertex is
// labelled before the edges of the subtree above it, children left to right.
struct EdgeLabeling {
  // label[j-1][i] = label of the edge below vertex i of level j
  std::vector<std::vector<int>> label;
};
EdgeLabeling edge_labels(const Tree& t);

// (-1)-exponent bookkeeping of the differentials: for j = n the label of the
// i-th leaf's edge, for j < n the largest label inside the subtree t_{j,i}
// (the label of its rightmost leaf edge).
int sign_exponent(const Tree& t, int j, int i);
int sign_exponent(const Tree& t, const EdgeLabeling& labels, int j, int i);

// First vertex and size of the fibre f_j^{-1}(v), 2 <= j <= n.
int fibre_start(const Tree& t, int j, int v);
int fibre_size(const Tree& t, int j, int v);
// Descendants of vertex (j, i) at level l >= j as a half-open index range.
std::pair<int, int> descendant_block(const Tree& t, int j, int i, int l);

// The (n-j)-level subtree with root i at level j (1 <= j <= n-1).
Tree subtree(const Tree& t, int j, int i);

// Restriction t^I to a nonempty set of leaves I, vertices renumbered by the
// order-preserving bijections.
Tree restrict_tree(const Tree& t, const std::vector<int>& leaves);
// Surviving vertices per level: S_n = I, S_{j-1} = f_j(S_j); each sorted.
std::vector<std::vector<int>> surviving_vertices(const Tree& t, const std::vector<int>& leaves);

// All order-preserving surjections [a] -> [b], lexicographic on value tables.
std::vector<std::vector<int>> monotone_surjections(int a, int b);

// All trees with the given signature (r_1, ..., r_n), lexicographic on the
// concatenated maps; empty when some surjection cannot exist.
std::vector<Tree> enumerate_trees(int n, const std::vector<int>& signature);

// Signatures (r_1,...,r_n) with sum m admitting trees (weakly increasing),
// in lexicographic order.
std::vector<std::vector<int>> signatures_by_degree(int n, int m);

// All trees of homological degree m, grouped by signature.
std::vector<Tree> enumerate_by_degree(int n, int m);

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);
std::string tree_to_string(const Tree& t);  // compact "r=(..);f3=(..)" form

}  // namespace enlab
