#include "bar.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace enlab {

int BarWord::degree() const {
  int d = 0;
  for (const auto& p : parts) d += p.degree() + 1;
  return d;
}

bool BarWord::operator==(const BarWord& o) const {
  return depth == o.depth && letter == o.letter && parts == o.parts;
}

bool BarWord::operator<(const BarWord& o) const {
  if (depth != o.depth) return depth < o.depth;
  if (depth == 0) return letter < o.letter;
  return parts < o.parts;
}

std::string word_to_string(const BarWord& w, const std::vector<std::string>& alg_basis) {
  if (w.depth == 0) return alg_basis[w.letter];
  std::string s = "[";
  for (size_t i = 0; i < w.parts.size(); ++i)
    s += (i ? "|" : "") + word_to_string(w.parts[i], alg_basis);
  return s + "]";
}

std::vector<BarWord> enumerate_words(int alg_dim, int depth, int suspensions) {
  assert(depth >= 1);
  std::vector<BarWord> out;
  if (suspensions < depth) return out;  // the smallest depth-d word has d suspensions
  if (depth == 1) {
    int len = suspensions;
    std::vector<int> letters(len, 0);
    for (;;) {
      BarWord w;
      w.depth = 1;
      for (int x : letters) {
        BarWord l;
        l.depth = 0;
        l.letter = x;
        w.parts.push_back(l);
      }
      out.push_back(std::move(w));
      int k = len - 1;
      while (k >= 0 && letters[k] == alg_dim - 1) letters[k--] = 0;
      if (k < 0) break;
      ++letters[k];
    }
    return out;
  }
  // choose the first part's share c (its suspension plus its inside), recurse
  auto rec = [&](auto&& self, std::vector<BarWord>& prefix, int left) -> void {
    if (left == 0) {
      if (!prefix.empty()) {
        BarWord w;
        w.depth = depth;
        w.parts = prefix;
        out.push_back(std::move(w));
      }
      return;
    }
    for (int c = depth - 1 + 1; c <= left; ++c) {
      for (auto& part : enumerate_words(alg_dim, depth - 1, c - 1)) {
        prefix.push_back(part);
        self(self, prefix, left - c);
        prefix.pop_back();
      }
    }
  };
  std::vector<BarWord> prefix;
  rec(rec, prefix, suspensions);
  return out;
}

BarWord word_from_tree(const Tree& t, const std::vector<int>& leaves) {
  assert(static_cast<int>(leaves.size()) == t.r[t.n - 1] + 1);
  auto rec = [&](auto&& self, int j, int i) -> BarWord {
    BarWord w;
    if (j == t.n) {
      w.depth = 0;
      w.letter = leaves[i];
      return w;
    }
    w.depth = t.n - j;
    int lo = fibre_start(t, j + 1, i);
    int sz = fibre_size(t, j + 1, i);
    for (int x = lo; x < lo + sz; ++x) w.parts.push_back(self(self, j + 1, x));
    return w;
  };
  BarWord root;
  root.depth = t.n;
  for (int i = 0; i <= t.r[0]; ++i) root.parts.push_back(rec(rec, 1, i));
  return root;
}

Tree tree_from_word(const BarWord& w) {
  Tree t;
  t.n = w.depth;
  t.r.assign(t.n, -1);
  t.maps.assign(t.n - 1, {});
  auto rec = [&](auto&& self, const BarWord& v, int level, int parent_index) -> void {
    // registers v's parts as vertices of `level`
    for (const auto& p : v.parts) {
      t.r[level - 1] += 1;
      int idx = t.r[level - 1];
      if (level >= 2) t.maps[level - 2].push_back(parent_index);
      if (p.depth > 0) self(self, p, level + 1, idx);
    }
  };
  // walk level by level left to right: recursion above is depth-first, which
  // breaks vertex numbering; instead peel one layer at a time.
  (void)rec;
  std::vector<const BarWord*> layer{&w};
  for (int level = 1; level <= t.n; ++level) {
    std::vector<const BarWord*> next;
    int parent = 0;
    for (const BarWord* v : layer) {
      for (const auto& p : v->parts) {
        t.r[level - 1] += 1;
        if (level >= 2) t.maps[level - 2].push_back(parent);
        next.push_back(&p);
      }
      ++parent;
    }
    layer = std::move(next);
  }
  validate_tree(t);
  return t;
}

namespace {

Scalar sign_of(long exponent, const Field& f) {
  return ((exponent % 2) + 2) % 2 == 0 ? f.one() : f.neg(f.one());
}

// Interleavings of the parts of u and v with the graded inversion signs.
void shuffle_terms(const AlgebraData& A, const BarWord& u, const BarWord& v,
                   std::vector<std::pair<Scalar, BarWord>>& out) {
  const Field& f = A.field;
  int a = static_cast<int>(u.parts.size());
  int b = static_cast<int>(v.parts.size());
  for (const auto& sh : enumerate_shuffles(a, b)) {
    long inv = 0;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (sh.perm[x] > sh.perm[a + y])
          inv += static_cast<long>(u.parts[x].degree() + 1) * (v.parts[y].degree() + 1);
    BarWord merged;
    merged.depth = u.depth;
    merged.parts.resize(a + b);
    for (int x = 0; x < a; ++x) merged.parts[sh.perm[x]] = u.parts[x];
    for (int y = 0; y < b; ++y) merged.parts[sh.perm[a + y]] = v.parts[y];
    out.emplace_back(sign_of(inv, f), std::move(merged));
  }
}

// Product of two adjacent parts: structure constants for letters, shuffle
// interleavings for brackets.
std::vector<std::pair<Scalar, BarWord>> part_product(const AlgebraData& A, const BarWord& u,
                                                     const BarWord& v) {
  std::vector<std::pair<Scalar, BarWord>> out;
  if (u.depth == 0) {
    for (const auto& [k, c] : A.product(u.letter, v.letter)) {
      BarWord w;
      w.depth = 0;
      w.letter = k;
      out.emplace_back(c, std::move(w));
    }
  } else {
    shuffle_terms(A, u, v, out);
  }
  return out;
}

}  // namespace

std::vector<BarEvent> boundary_events(const AlgebraData& A, const BarWord& w, bool with_delta) {
  const Field& f = A.field;
  std::vector<BarEvent> out;
  // own_pos = reading-order position of the subword's own suspension (0 for
  // the root, which has none).
  auto rec = [&](auto&& self, const BarWord& v, long own_pos,
                 const std::function<BarWord(const BarWord&)>& rebuild) -> void {
    long pos = own_pos + 1;
    // recurse into parts
    for (size_t i = 0; i < v.parts.size(); ++i) {
      const BarWord& part = v.parts[i];
      if (part.depth >= 1) {
        auto wrap = [&, i](const BarWord& sub) {
          BarWord nv = v;
          nv.parts[static_cast<size_t>(i)] = sub;
          return rebuild(nv);
        };
        self(self, part, pos, wrap);
      }
      pos += part.degree() + 1;
    }
    // merges of adjacent parts
    pos = own_pos + 1;
    for (size_t i = 0; i + 1 < v.parts.size(); ++i) {
      long exponent = pos + v.parts[i].degree();
      Scalar base = sign_of(exponent, f);
      for (auto& [c, merged] : part_product(A, v.parts[i], v.parts[i + 1])) {
        BarWord nv = v;
        nv.parts[i] = merged;
        nv.parts.erase(nv.parts.begin() + static_cast<long>(i) + 1);
        out.push_back({f.mul(base, c), -1, rebuild(nv)});
      }
      pos += v.parts[i].degree() + 1;
    }
    // deletions at innermost brackets
    if (with_delta && v.depth == 1 && v.parts.size() >= 2) {
      long first_pos = own_pos + 1;
      long last_pos = own_pos + static_cast<long>(v.parts.size());
      BarWord head = v;
      int first_letter = head.parts.front().letter;
      head.parts.erase(head.parts.begin());
      out.push_back({sign_of(first_pos - 1, f), first_letter, rebuild(head)});
      BarWord tail = v;
      int last_letter = tail.parts.back().letter;
      tail.parts.pop_back();
      out.push_back({sign_of(last_pos, f), last_letter, rebuild(tail)});
    }
  };
  rec(rec, w, 0, [](const BarWord& v) { return v; });
  return out;
}

std::vector<std::pair<Scalar, BarWord>> bar_differential(const AlgebraData& A, const BarWord& w) {
  const Field& f = A.field;
  if (w.depth < 1 || w.parts.empty())
    throw ValidationError("bar_differential: expected a nonempty bracket");
  std::vector<std::pair<Scalar, BarWord>> out;
  long prefix = 0;
  for (size_t i = 0; i + 1 < w.parts.size(); ++i) {
    long exponent = prefix + w.parts[i].degree();
    Scalar base = sign_of(exponent, f);
    for (auto& [c, merged] : part_product(A, w.parts[i], w.parts[i + 1])) {
      BarWord nv = w;
      nv.parts[i] = merged;
      nv.parts.erase(nv.parts.begin() + static_cast<long>(i) + 1);
      out.emplace_back(f.mul(base, c), std::move(nv));
    }
    prefix += w.parts[i].degree() + 1;
  }
  return out;
}

std::vector<std::pair<Scalar, BarWord>> shuffle_product(const AlgebraData& A, const BarWord& u,
                                                        const BarWord& v) {
  if (u.depth < 1 || v.depth < 1 || u.parts.empty() || v.parts.empty())
    throw ValidationError("shuffle_product: expected nonempty bracket words");
  if (u.depth != v.depth) throw ValidationError("shuffle_product: depth mismatch");
  std::vector<std::pair<Scalar, BarWord>> out;
  shuffle_terms(A, u, v, out);
  return out;
}

std::vector<std::string> bar_labels(const BarComplex& c, const AlgebraData& A,
                                    const BimoduleData& M, int m) {
  std::vector<std::string> out;
  for (const auto& e : c.basis[m])
    out.push_back(M.basis[e.module] + "⊗" + word_to_string(e.word, A.basis));
  return out;
}

namespace {

struct BarIndex {
  std::map<std::pair<int, BarWord>, int> pos;  // (module, word) -> index
};

BarComplex assemble_bar(const AlgebraData& A, const BimoduleData& M, int n, int D,
                        bool with_delta, Direction dir) {
  const Field& f = A.field;
  BarComplex c;
  c.direction = dir;
  c.n = n;
  c.max_degree = D;
  c.field = f;
  c.basis.resize(D + 1);
  std::vector<BarIndex> index(D + 1);
  for (int m = 0; m <= D; ++m) {
    for (auto& w : enumerate_words(A.dim(), n, m + n))
      for (int b = 0; b < M.dim(); ++b) c.basis[m].push_back({b, w});
    for (size_t i = 0; i < c.basis[m].size(); ++i)
      index[m].pos[{c.basis[m][i].module, c.basis[m][i].word}] = static_cast<int>(i);
  }
  c.diff.resize(D + 1);
  if (dir == Direction::Chain) {
    c.diff[0] = SparseMatrix(0, c.dim(0));
    for (int m = 1; m <= D; ++m) {
      MatrixBuilder mb(c.dim(m - 1), c.dim(m), f);
      for (size_t col = 0; col < c.basis[m].size(); ++col) {
        const auto& [b, w] = c.basis[m][col];
        for (const auto& ev : boundary_events(A, w, with_delta)) {
          if (ev.deleted_letter < 0) {
            mb.add(index[m - 1].pos.at({b, ev.word}), static_cast<int>(col), ev.coeff);
          } else {
            for (const auto& [b2, cc] : M.act({{b, f.one()}}, ev.deleted_letter, A))
              mb.add(index[m - 1].pos.at({b2, ev.word}), static_cast<int>(col),
                     f.mul(ev.coeff, cc));
          }
        }
      }
      c.diff[m] = mb.build();
    }
  } else {
    for (int m = 0; m < D; ++m) {
      MatrixBuilder mb(c.dim(m + 1), c.dim(m), f);
      for (size_t row = 0; row < c.basis[m + 1].size(); ++row) {
        const auto& [b2, w2] = c.basis[m + 1][row];
        for (const auto& ev : boundary_events(A, w2, with_delta)) {
          if (ev.deleted_letter < 0) {
            mb.add(static_cast<int>(row), index[m].pos.at({b2, ev.word}), ev.coeff);
          } else {
            // (d phi)(w2) picks up a_x . phi(w2 minus x): transposed action
            for (int b = 0; b < M.dim(); ++b) {
              const Scalar& r = M.rho(b, ev.deleted_letter, A.dim(), b2);
              if (!f.is_zero(r))
                mb.add(static_cast<int>(row), index[m].pos.at({b, ev.word}), f.mul(ev.coeff, r));
            }
          }
        }
      }
      c.diff[m] = mb.build();
    }
    c.diff[D] = SparseMatrix(0, 0);
  }
  return c;
}

BimoduleData one_dim_trivial(const AlgebraData& A) {
  BimoduleData m;
  m.basis = {"k"};
  m.action.assign(A.dim(), A.field.zero());
  return m;
}

}  // namespace

BarComplex iterated_bar(const AlgebraData& A, int n, int max_degree) {
  return assemble_bar(A, one_dim_trivial(A), n, max_degree, false, Direction::Chain);
}

BarComplex twist_complex(const AlgebraData& A, int n, int max_degree) {
  return assemble_bar(A, unital_module(A), n, max_degree, true, Direction::Chain);
}

CoefficientComplexes coefficient_complexes(const AlgebraData& A, const BimoduleData& M, int n,
                                           int max_degree) {
  CoefficientComplexes out;
  out.chain = assemble_bar(A, M, n, max_degree, true, Direction::Chain);
  out.cochain = assemble_bar(A, M, n, max_degree, true, Direction::Cochain);
  return out;
}

BarComplex hochschild(const AlgebraData& A, const BimoduleData& M, int max_degree) {
  const Field& f = A.field;
  BarComplex c;
  c.direction = Direction::Chain;
  c.n = 1;
  c.max_degree = max_degree;
  c.field = f;
  c.basis.resize(max_degree + 1);
  std::vector<BarIndex> index(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) {
    for (auto& w : enumerate_words(A.dim(), 1, m + 1))
      for (int b = 0; b < M.dim(); ++b) c.basis[m].push_back({b, w});
    for (size_t i = 0; i < c.basis[m].size(); ++i)
      index[m].pos[{c.basis[m][i].module, c.basis[m][i].word}] = static_cast<int>(i);
  }
  c.diff.resize(max_degree + 1);
  c.diff[0] = SparseMatrix(0, c.dim(0));
  for (int m = 1; m <= max_degree; ++m) {
    MatrixBuilder mb(c.dim(m - 1), c.dim(m), f);
    for (size_t col = 0; col < c.basis[m].size(); ++col) {
      const auto& [b, w] = c.basis[m][col];
      int l = m;  // w has l+1 letters
      // inner merges, sign (-1)^{i+1}
      for (int i = 0; i < l; ++i) {
        for (const auto& [k, cc] : A.product(w.parts[i].letter, w.parts[i + 1].letter)) {
          BarWord nw = w;
          nw.parts[i].letter = k;
          nw.parts.erase(nw.parts.begin() + i + 1);
          mb.add(index[m - 1].pos.at({b, nw}), static_cast<int>(col),
                 f.mul(sign_of(i + 1, f), cc));
        }
      }
      // m . a_0 with sign +1, m . a_l with sign (-1)^{l+1}
      {
        BarWord head = w;
        int a0 = head.parts.front().letter;
        head.parts.erase(head.parts.begin());
        for (const auto& [b2, cc] : M.act({{b, f.one()}}, a0, A))
          mb.add(index[m - 1].pos.at({b2, head}), static_cast<int>(col), cc);
        BarWord tail = w;
        int al = tail.parts.back().letter;
        tail.parts.pop_back();
        for (const auto& [b2, cc] : M.act({{b, f.one()}}, al, A))
          mb.add(index[m - 1].pos.at({b2, tail}), static_cast<int>(col),
                 f.mul(sign_of(l + 1, f), cc));
      }
    }
    c.diff[m] = mb.build();
  }
  return c;
}

namespace {

std::string entry_str(const Field& f, int row, int col, const Scalar& v) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ") = " + f.str(v);
}

}  // namespace

CompareReport compare_with_tree_complex(const AlgebraData& A, const BimoduleData& M, int n,
                                        int max_degree) {
  CompareReport rep;
  const Field& f = A.field;
  GradedComplex tree_side = build_chain(loday(A, M), n, max_degree);
  BarComplex bar_side = assemble_bar(A, M, n, max_degree, true, Direction::Chain);

  // tree-side index -> bar-side index, per degree
  std::vector<std::vector<int>> to_bar(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) {
    if (tree_side.dim(m) != bar_side.dim(m)) {
      rep.equal = false;
      rep.mismatch = "degree " + std::to_string(m) + ": dimensions differ (" +
                     std::to_string(tree_side.dim(m)) + " vs " + std::to_string(bar_side.dim(m)) +
                     ")";
      return rep;
    }
    std::map<std::pair<int, BarWord>, int> pos;
    for (size_t i = 0; i < bar_side.basis[m].size(); ++i)
      pos[{bar_side.basis[m][i].module, bar_side.basis[m][i].word}] = static_cast<int>(i);
    to_bar[m].resize(tree_side.dim(m));
    int idx = 0;
    for (const auto& t : tree_side.basis[m].trees) {
      int leaves = t.r[t.n - 1] + 1;
      std::vector<int> a(leaves, 0);
      for (int b = 0; b < M.dim(); ++b) {
        std::fill(a.begin(), a.end(), 0);
        for (;;) {
          to_bar[m][idx++] = pos.at({b, word_from_tree(t, a)});
          int k = leaves - 1;
          while (k >= 0 && a[k] == A.dim() - 1) a[k--] = 0;
          if (k < 0) break;
          ++a[k];
        }
      }
    }
  }

  for (int m = 1; m <= max_degree && rep.equal; ++m) {
    // push the tree-side matrix through the bijection and compare entry sets
    std::vector<SparseMatrix::Entry> lhs;
    for (const auto& e : tree_side.diff[m].entries())
      lhs.push_back({to_bar[m - 1][e.row], to_bar[m][e.col], e.value});
    std::sort(lhs.begin(), lhs.end(), [](const auto& x, const auto& y) {
      return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    const auto& rhs = bar_side.diff[m].entries();
    size_t i = 0, j = 0;
    while (i < lhs.size() || j < rhs.size()) {
      int cmp;
      if (i >= lhs.size())
        cmp = 1;
      else if (j >= rhs.size())
        cmp = -1;
      else if (lhs[i].row != rhs[j].row)
        cmp = lhs[i].row < rhs[j].row ? -1 : 1;
      else if (lhs[i].col != rhs[j].col)
        cmp = lhs[i].col < rhs[j].col ? -1 : 1;
      else
        cmp = 0;
      std::string where;
      if (cmp == 0) {
        if (lhs[i].value != rhs[j].value)
          where = "values differ at " + entry_str(f, lhs[i].row, lhs[i].col, lhs[i].value) +
                  " vs " + f.str(rhs[j].value);
        ++i;
        ++j;
      } else if (cmp < 0) {
        where = "tree-side-only entry " + entry_str(f, lhs[i].row, lhs[i].col, lhs[i].value);
        ++i;
      } else {
        where = "bar-side-only entry " + entry_str(f, rhs[j].row, rhs[j].col, rhs[j].value);
        ++j;
      }
      if (!where.empty()) {
        size_t br = cmp > 0 ? rhs[j - 1].row : lhs[i - 1].row;
        size_t bc = cmp > 0 ? rhs[j - 1].col : lhs[i - 1].col;
        rep.equal = false;
        rep.mismatch = "degree " + std::to_string(m) + ": " + where + " (" +
                       M.basis[bar_side.basis[m - 1][br].module] + "⊗" +
                       word_to_string(bar_side.basis[m - 1][br].word, A.basis) + " from " +
                       M.basis[bar_side.basis[m][bc].module] + "⊗" +
                       word_to_string(bar_side.basis[m][bc].word, A.basis) + ")";
        break;
      }
    }
  }
  return rep;
}

CompareReport compare_bar_complexes(const BarComplex& a, const BarComplex& b,
                                    const AlgebraData& A, const BimoduleData& M) {
  CompareReport rep;
  const Field& f = a.field;
  int D = std::min(a.max_degree, b.max_degree);
  for (int m = 0; m <= D; ++m) {
    if (a.dim(m) != b.dim(m)) {
      rep.equal = false;
      rep.mismatch = "degree " + std::to_string(m) + ": dimensions differ";
      return rep;
    }
  }
  std::vector<std::vector<int>> to_b(D + 1);
  for (int m = 0; m <= D; ++m) {
    std::map<std::pair<int, BarWord>, int> pos;
    for (size_t i = 0; i < b.basis[m].size(); ++i)
      pos[{b.basis[m][i].module, b.basis[m][i].word}] = static_cast<int>(i);
    to_b[m].resize(a.dim(m));
    for (size_t i = 0; i < a.basis[m].size(); ++i)
      to_b[m][i] = pos.at({a.basis[m][i].module, a.basis[m][i].word});
  }
  for (int m = 1; m <= D && rep.equal; ++m) {
    MatrixBuilder mb(b.dim(m - 1), b.dim(m), f);
    for (const auto& e : a.diff[m].entries())
      mb.add(to_b[m - 1][e.row], to_b[m][e.col], e.value);
    SparseMatrix lhs = mb.build();
    if (!(lhs == b.diff[m])) {
      rep.equal = false;
      SparseMatrix delta = add(lhs, scale(b.diff[m], f.neg(f.one()), f), f);
      const auto& e = delta.entries().front();
      rep.mismatch = "degree " + std::to_string(m) + ": difference at " +
                     entry_str(f, e.row, e.col, e.value) + " (" +
                     M.basis[b.basis[m - 1][e.row].module] + "⊗" +
                     word_to_string(b.basis[m - 1][e.row].word, A.basis) + " from " +
                     M.basis[b.basis[m][e.col].module] + "⊗" +
                     word_to_string(b.basis[m][e.col].word, A.basis) + ")";
    }
  }
  return rep;
}

std::vector<int> homology_table(const BarComplex& c) {
  int D = c.max_degree;
  std::vector<int> betti(D);
  for (int m = 0; m < D; ++m) {
    if (c.direction == Direction::Chain) {
      betti[m] = homology_rank(c.diff[m + 1], c.diff[m], c.field);
    } else {
      SparseMatrix din = m == 0 ? SparseMatrix(c.dim(0), 0) : c.diff[m - 1];
      betti[m] = homology_rank(din, c.diff[m], c.field);
    }
  }
  return betti;
}

}  // namespace enlab
