#include <doctest.h>

#include <random>

#include "sparse.hpp"

using namespace enlab;

TEST_CASE("rational field arithmetic") {
  Field q = Field::rationals();
  Scalar a = q.from_string("2/4");
  CHECK(q.str(a) == "1/2");
  CHECK(q.str(q.add(a, a)) == "1");
  CHECK(q.str(q.inv(a)) == "2");
  CHECK(q.is_zero(q.sub(a, a)));
  CHECK(q.str(q.from_string("-3")) == "-3");
  CHECK_THROWS_AS(q.from_string("x"), ValidationError);
  CHECK_THROWS_AS(q.inv(q.zero()), ValidationError);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.str(f5.from_long(7)) == "2");
  CHECK(f5.str(f5.neg(f5.one())) == "4");
  CHECK(f5.str(f5.inv(f5.from_long(2))) == "3");
  CHECK(f5.str(f5.from_string("1/2")) == "3");
  CHECK(f5.is_zero(f5.from_long(10)));
  CHECK_THROWS_AS(Field::prime(6), ValidationError);
  Field f2 = Field::parse("F:2");
  CHECK(f2.characteristic() == 2);
  CHECK(Field::parse("Q").kind() == Field::Kind::Rational);
  CHECK_THROWS_AS(Field::parse("R"), ValidationError);
  CHECK_THROWS_AS(f2.from_string("1/2"), ValidationError);
}

namespace {

SparseMatrix from_dense(const std::vector<std::vector<long>>& rows, const Field& f) {
  MatrixBuilder mb(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()), f);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) mb.add(static_cast<int>(r), static_cast<int>(c), f.from_long(rows[r][c]));
  return mb.build();
}

}  // namespace

TEST_CASE("rank examples") {
  Field q = Field::rationals();
  CHECK(rank(SparseMatrix(4, 7), q) == 0);
  CHECK(rank(SparseMatrix::identity(5, q), q) == 5);
  CHECK(rank(from_dense({{1, 2}, {2, 4}}, q), q) == 1);
}

TEST_CASE("rank transpose and mod-p comparison") {
  Field q = Field::rationals();
  Field f3 = Field::prime(3);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<long>> m(r, std::vector<long>(c, 0));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<long>(rng() % 7) - 3;
    SparseMatrix mq = from_dense(m, q);
    CHECK(rank(mq, q) == rank(mq.transpose(), q));
    // integer matrices can only lose rank upon reduction mod p
    CHECK(rank(mq, q) >= rank(from_dense(m, f3), f3));
  }
}

TEST_CASE("homology_rank examples") {
  Field q = Field::rationals();
  // both maps zero on a 4-dimensional space
  CHECK(homology_rank(SparseMatrix(4, 0), SparseMatrix(2, 4), q) == 4);
  // d_out the identity
  CHECK(homology_rank(SparseMatrix(3, 0), SparseMatrix::identity(3, q), q) == 0);
  // 1 -> 2 -> 1 with d_in = (1,1)^T, d_out = (1,-1)
  SparseMatrix din = from_dense({{1}, {1}}, q);
  SparseMatrix dout = from_dense({{1, -1}}, q);
  CHECK(homology_rank(din, dout, q) == 0);
  // non-complex pair reports a witness
  SparseMatrix bad = from_dense({{1, 1}}, q);
  CHECK_THROWS_AS(homology_rank(din, bad, q), NotAComplexError);
}

TEST_CASE("matrix product and builder accumulation") {
  Field q = Field::rationals();
  MatrixBuilder mb(2, 2, q);
  mb.add(0, 0, q.one());
  mb.add(0, 0, q.neg(q.one()));
  mb.add(1, 0, q.from_long(2));
  SparseMatrix m = mb.build();
  CHECK(m.nnz() == 1);
  SparseMatrix p = multiply(m, SparseMatrix::identity(2, q), q);
  CHECK(p == m);
}
