#include <doctest.h>

#include "coeffsys.hpp"

using namespace enlab;

namespace {

Tree make_tree(std::vector<int> r, std::vector<std::vector<int>> maps) {
  Tree t;
  t.n = static_cast<int>(r.size());
  t.r = std::move(r);
  t.maps = std::move(maps);
  validate_tree(t);
  return t;
}

TreeMorphism make_morphism(Tree src, Tree tgt, std::vector<std::vector<int>> levels) {
  TreeMorphism h;
  h.source = std::move(src);
  h.target = std::move(tgt);
  h.levels = std::move(levels);
  REQUIRE(is_valid(h));
  return h;
}

Scalar entry(const SparseMatrix& m, int r, int c) {
  for (const auto& e : m.entries())
    if (e.row == r && e.col == c) return e.value;
  return Scalar(0);
}

}  // namespace

TEST_CASE("loday on generators of the two-leaf corolla") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  SystemPtr F = loday(A, M);
  Tree c2 = corolla(2);
  CHECK(F->dim(c2) == 8);
  CHECK(F->matrix(identity(c2)) == SparseMatrix::identity(8, A.field));

  // both leaves to 0: m ⊗ a0 ⊗ a1 -> m ⊗ (a0 a1); index = (b*2 + a0)*2 + a1
  SparseMatrix merge = F->matrix(top_merge(c2, 0));
  CHECK(merge.rows() == 4);
  CHECK(entry(merge, 1, 0) == Scalar(1));  // m=x: x⊗(x·x) = x⊗x2
  CHECK(entry(merge, 3, 4) == Scalar(1));  // m=x2 block
  CHECK(merge.nnz() == 2);                 // every other product vanishes

  // delete leaf 0: m ⊗ a0 ⊗ a1 -> (m·a0) ⊗ a1
  SparseMatrix del = F->matrix(delete_leaf(c2, 0));
  // (x · x) ⊗ a1 = x2 ⊗ a1: row (1*2 + a1), col (0*4 + 0*2 + a1)
  CHECK(entry(del, 2, 0) == Scalar(1));
  CHECK(entry(del, 3, 1) == Scalar(1));
  CHECK(del.nnz() == 2);
}

TEST_CASE("loday is constant on equivalence classes") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  SystemPtr F = loday(A, M);
  Tree t = make_tree({2, 2}, {{0, 1, 2}});
  Tree s = make_tree({1, 1}, {{0, 1}});
  TreeMorphism a = make_morphism(t, s, {{0, 0, 1}, {0, kPlus, 1}});
  TreeMorphism b = make_morphism(t, s, {{0, 1, 1}, {0, kPlus, 1}});
  CHECK(F->matrix(a) == F->matrix(b));
}

TEST_CASE("dual loday") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  SystemPtr G = dual_loday(A, M);
  CHECK(G->variance() == Variance::Contravariant);
  Tree c2 = corolla(2);
  CHECK(G->matrix(identity(c2)) == SparseMatrix::identity(8, A.field));
  // merge: precomposition with multiplication; rows = source basis
  SparseMatrix merge = G->matrix(top_merge(c2, 0));
  CHECK(merge.rows() == 8);
  CHECK(merge.cols() == 4);
  // phi(x2 -> m) pulls back to (x⊗x -> m): row (0*2+0)*2 + b, col 1*2 + b
  CHECK(entry(merge, 0, 2) == Scalar(1));
  CHECK(entry(merge, 1, 3) == Scalar(1));

  // with trivial coefficients the dual system is the entrywise transpose
  auto [A2, K] = builtin_algebra("trunc_poly:3", "trivial", Field::rationals());
  SystemPtr F = loday(A2, K);
  SystemPtr GK = dual_loday(A2, K);
  for (const auto& h : {top_merge(c2, 0), delete_leaf(c2, 0), delete_leaf(c2, 1)})
    CHECK(GK->matrix(h) == F->matrix(h).transpose());
}

TEST_CASE("representable bases") {
  Field q = Field::rationals();
  SystemPtr P = representable(corolla(2), q);
  CHECK(P->dim(corolla(2)) == static_cast<int>(enumerate_hom(corolla(2), corolla(2)).size()));
  CHECK(P->dim(corolla(1)) == 3);
  CHECK(P->dim(corolla(3)) == 0);
  SystemPtr L = representable(linear_tree(2), q);
  CHECK(L->dim(linear_tree(2)) == 1);
  // postcomposition with a merge is a one-per-column 0/1 matrix
  SparseMatrix m = P->matrix(top_merge(corolla(2), 0));
  CHECK(m.cols() == P->dim(corolla(2)));
  CHECK(m.rows() == 3);
  for (const auto& e : m.entries()) CHECK(e.value == Scalar(1));
}

TEST_CASE("leaves functor rules") {
  Field q = Field::rationals();
  SystemPtr B = leaves_functor(1, q);
  Tree c3 = corolla(3);
  CHECK(B->matrix(identity(c3)) == SparseMatrix::identity(3, q));
  // top merge at 1: alpha_1, alpha_2 -> alpha_1, alpha_0 fixed
  SparseMatrix merge = B->matrix(top_merge(c3, 1));
  CHECK(entry(merge, 0, 0) == Scalar(1));
  CHECK(entry(merge, 1, 1) == Scalar(1));
  CHECK(entry(merge, 1, 2) == Scalar(1));
  CHECK(merge.nnz() == 3);
  // delete leaf 0: alpha_0 -> 0, others shift down
  SparseMatrix del = B->matrix(delete_leaf(c3, 0));
  CHECK(entry(del, 0, 1) == Scalar(1));
  CHECK(entry(del, 1, 2) == Scalar(1));
  CHECK(del.nnz() == 2);
  // at most one entry per column, each equal to 1
  for (int n = 1; n <= 3; ++n) {
    SystemPtr Bn = leaves_functor(n, q);
    Tree t = linear_tree(n);
    t.r[n - 1] = 2;
    if (n >= 2) t.maps[n - 2] = {0, 0, 0};
    for (const auto& term : {delete_leaf(t, 0), top_merge(t, 1), delete_leaf(t, 2)}) {
      SparseMatrix m = Bn->matrix(term);
      std::vector<int> per_col(m.cols(), 0);
      for (const auto& e : m.entries()) {
        CHECK(e.value == Scalar(1));
        per_col[e.col] += 1;
      }
      for (int c : per_col) CHECK(c <= 1);
    }
  }
}

TEST_CASE("dual and extend_trivial wrappers") {
  Field q = Field::rationals();
  auto [A, M] = builtin_algebra("trunc_poly:3", "trivial", q);
  SystemPtr F = loday(A, M);
  SystemPtr FF = dual_system(dual_system(F));
  Tree c2 = corolla(2);
  for (const auto& h : {top_merge(c2, 0), delete_leaf(c2, 1)})
    CHECK(FF->matrix(h) == F->matrix(h));
  CHECK(dual_system(F)->variance() == Variance::Contravariant);

  // dual(loday(A, trivial)) coincides with dual_loday(A, trivial)
  SystemPtr D1 = dual_system(F);
  SystemPtr D2 = dual_loday(A, M);
  for (const auto& h : {top_merge(c2, 0), delete_leaf(c2, 0)})
    CHECK(D1->matrix(h) == D2->matrix(h));

  SystemPtr E = extend_trivial(F);
  CHECK(E->matrix(top_merge(c2, 0)) == F->matrix(top_merge(c2, 0)));
  CHECK(E->matrix(delete_leaf(c2, 0)).is_zero());
  CHECK_THROWS_AS(extend_trivial(dual_system(F)), ValidationError);
}

TEST_CASE("functoriality on a fixed composable pair") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  Tree c3 = corolla(3);
  TreeMorphism f = delete_leaf(c3, 0);
  TreeMorphism g = top_merge(f.target, 0);
  for (const SystemPtr& sys :
       {loday(A, M), dual_loday(A, M), leaves_functor(1, A.field),
        SystemPtr(extend_trivial(loday(A, M))), representable(corolla(2), A.field)}) {
    SparseMatrix lhs = sys->matrix(compose(f, g));
    SparseMatrix rhs = sys->variance() == Variance::Covariant
                           ? multiply(sys->matrix(g), sys->matrix(f), A.field)
                           : multiply(sys->matrix(f), sys->matrix(g), A.field);
    CHECK(lhs == rhs);
  }
}
