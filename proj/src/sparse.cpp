#include "sparse.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace enlab {

SparseMatrix SparseMatrix::identity(int n, const Field& f) {
  SparseMatrix m(n, n);
  m.entries_.reserve(n);
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, f.one()});
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  t.entries_.reserve(entries_.size());
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  std::sort(t.entries_.begin(), t.entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return t;
}

void MatrixBuilder::add(int row, int col, const Scalar& v) {
  assert(row >= 0 && row < rows_ && col >= 0 && col < cols_);
  if (field_.is_zero(v)) return;
  auto it = acc_.find({row, col});
  if (it == acc_.end()) {
    acc_.emplace(std::make_pair(row, col), v);
  } else {
    it->second = field_.add(it->second, v);
    if (field_.is_zero(it->second)) acc_.erase(it);
  }
}

void MatrixBuilder::add_block(int row_off, int col_off, const SparseMatrix& block,
                              const Scalar& scale) {
  for (const auto& e : block.entries())
    add(row_off + e.row, col_off + e.col, field_.mul(scale, e.value));
}

SparseMatrix MatrixBuilder::build() const {
  SparseMatrix m(rows_, cols_);
  m.entries_.reserve(acc_.size());
  for (const auto& [rc, v] : acc_) m.entries_.push_back({rc.first, rc.second, v});
  return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const Field& f) {
  if (a.cols() != b.rows())
    throw ValidationError("matrix product dimension mismatch");
  // Group b's entries by row for the inner loop.
  std::vector<std::vector<std::pair<int, Scalar>>> brows(b.rows());
  for (const auto& e : b.entries()) brows[e.row].push_back({e.col, e.value});
  MatrixBuilder out(a.rows(), b.cols(), f);
  for (const auto& e : a.entries())
    for (const auto& [c, v] : brows[e.col]) out.add(e.row, c, f.mul(e.value, v));
  return out.build();
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Field& f) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix sum dimension mismatch");
  MatrixBuilder out(a.rows(), a.cols(), f);
  for (const auto& e : a.entries()) out.add(e.row, e.col, e.value);
  for (const auto& e : b.entries()) out.add(e.row, e.col, e.value);
  return out.build();
}

SparseMatrix scale(const SparseMatrix& a, const Scalar& s, const Field& f) {
  MatrixBuilder out(a.rows(), a.cols(), f);
  for (const auto& e : a.entries()) out.add(e.row, e.col, f.mul(s, e.value));
  return out.build();
}

int rank(const SparseMatrix& m, const Field& f) {
  // Row-wise workspace; colcount tracks occupancy among still-active rows.
  std::vector<std::map<int, Scalar>> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row][e.col] = e.value;
  std::vector<int> colcount(m.cols(), 0);
  std::vector<bool> active(m.rows(), false);
  for (int r = 0; r < m.rows(); ++r) {
    if (!rows[r].empty()) active[r] = true;
    for (const auto& [c, v] : rows[r]) ++colcount[c];
  }

  int rnk = 0;
  for (;;) {
    // Pivot: active row with fewest entries, then its column with fewest
    // occupants (cheap Markowitz surrogate).
    int prow = -1;
    size_t best = std::numeric_limits<size_t>::max();
    for (int r = 0; r < m.rows(); ++r)
      if (active[r] && rows[r].size() < best) {
        best = rows[r].size();
        prow = r;
      }
    if (prow < 0) break;
    int pcol = -1;
    int bestc = std::numeric_limits<int>::max();
    for (const auto& [c, v] : rows[prow])
      if (colcount[c] < bestc) {
        bestc = colcount[c];
        pcol = c;
      }

    ++rnk;
    active[prow] = false;
    for (const auto& [c, v] : rows[prow]) --colcount[c];
    Scalar pivinv = f.inv(rows[prow].at(pcol));

    for (int r = 0; r < m.rows(); ++r) {
      if (!active[r]) continue;
      auto it = rows[r].find(pcol);
      if (it == rows[r].end()) continue;
      Scalar factor = f.mul(it->second, pivinv);
      for (const auto& [c, v] : rows[prow]) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          Scalar nv = f.neg(f.mul(factor, v));
          if (!f.is_zero(nv)) {
            rows[r].emplace(c, nv);
            ++colcount[c];
          }
        } else {
          jt->second = f.sub(jt->second, f.mul(factor, v));
          if (f.is_zero(jt->second)) {
            rows[r].erase(jt);
            --colcount[c];
          }
        }
      }
      if (rows[r].empty()) active[r] = false;
    }
  }
  return rnk;
}

int homology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out, const Field& f) {
  if (d_in.rows() != d_out.cols())
    throw ValidationError("homology_rank: d_in lands in a space of dimension " +
                          std::to_string(d_in.rows()) + " but d_out starts from " +
                          std::to_string(d_out.cols()));
  SparseMatrix comp = multiply(d_out, d_in, f);
  if (!comp.is_zero()) {
    const auto& e = comp.entries().front();
    throw NotAComplexError("not a complex: d∘d has nonzero entry at (" +
                               std::to_string(e.row) + "," + std::to_string(e.col) + ") = " +
                               f.str(e.value),
                           e.row, e.col, f.str(e.value));
  }
  return d_out.cols() - rank(d_out, f) - rank(d_in, f);
}

}  // namespace enlab
