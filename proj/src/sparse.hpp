#pragma once

#include <map>
#include <utility>
#include <vector>

#include "field.hpp"

namespace enlab {

// Immutable sparse matrix in row-major coordinate form: entries sorted by
// (row, col), no explicit zeros, at most one entry per coordinate.
class SparseMatrix {
 public:
  struct Entry {
    int row;
    int col;
    Scalar value;
  };

  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(int n, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].row != o.entries_[i].row || entries_[i].col != o.entries_[i].col ||
          entries_[i].value != o.entries_[i].value)
        return false;
    return true;
  }

  SparseMatrix transpose() const;

 private:
  friend class MatrixBuilder;
  int rows_;
  int cols_;
  std::vector<Entry> entries_;
};

// Accumulating builder: repeated adds at a coordinate sum up; zeros drop out.
class MatrixBuilder {
 public:
  MatrixBuilder(int rows, int cols, const Field& f) : rows_(rows), cols_(cols), field_(f) {}

  void add(int row, int col, const Scalar& v);
  // Adds sign * block at the given offset.
  void add_block(int row_off, int col_off, const SparseMatrix& block, const Scalar& scale);
  SparseMatrix build() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  Field field_;
  std::map<std::pair<int, int>, Scalar> acc_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const Field& f);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Field& f);
SparseMatrix scale(const SparseMatrix& a, const Scalar& s, const Field& f);

// Rank over the field, by sparse Gaussian elimination with a Markowitz-style
// minimal-fill pivot choice.
int rank(const SparseMatrix& m, const Field& f);

// dim H at the middle of  C_in --d_in--> C --d_out--> C_out.
// Checks d_out∘d_in = 0 first and throws NotAComplexError with a witness
// entry otherwise.
int homology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out, const Field& f);

}  // namespace enlab
