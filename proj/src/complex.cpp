#include "complex.hpp"

#include <cassert>
#include <map>

namespace enlab {

std::vector<DiffTerm> merge_terms(const Tree& t, int j) {
  std::vector<DiffTerm> out;
  int n = t.n;
  auto labels = edge_labels(t);
  auto same_fibre = [&](int lvl, int i) {
    return lvl == 1 || t.parent(lvl, i) == t.parent(lvl, i + 1);
  };
  if (j == n) {
    for (int i = 0; i + 1 <= t.r[n - 1]; ++i) {
      if (!same_fibre(n, i)) continue;
      int s = sign_exponent(t, labels, n, i);
      out.push_back({top_merge(t, i), s % 2 == 0 ? 1 : -1, n, false});
    }
    return out;
  }
  for (int i = 0; i + 1 <= t.r[j - 1]; ++i) {
    if (!same_fibre(j, i)) continue;
    int a = fibre_size(t, j + 1, i);
    int b = fibre_size(t, j + 1, i + 1);
    int pa = fibre_start(t, j + 1, i);
    int pb = fibre_start(t, j + 1, i + 1);
    std::vector<int> ldeg(a, 0), rdeg(b, 0);
    if (j + 1 < n) {
      for (int x = 0; x < a; ++x) ldeg[x] = degree(subtree(t, j + 1, pa + x));
      for (int y = 0; y < b; ++y) rdeg[y] = degree(subtree(t, j + 1, pb + y));
    }
    int s = sign_exponent(t, labels, j, i);
    int base = s % 2 == 0 ? 1 : -1;
    for (const auto& sh : enumerate_shuffles(a, b)) {
      int eps = shuffle_sign(sh, ldeg, rdeg);
      out.push_back({merge_shuffle(t, j, i, sh), base * eps, j, false});
    }
  }
  return out;
}

std::vector<DiffTerm> delta_terms(const Tree& t) {
  std::vector<DiffTerm> out;
  int n = t.n;
  auto labels = edge_labels(t);
  auto emit = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    int smin = sign_exponent(t, labels, n, lo);
    out.push_back({delete_leaf(t, lo), (smin - 1) % 2 == 0 ? 1 : -1, n, true});
    int smax = sign_exponent(t, labels, n, hi - 1);
    out.push_back({delete_leaf(t, hi - 1), smax % 2 == 0 ? 1 : -1, n, true});
  };
  if (n == 1) {
    emit(0, t.r[0] + 1);
  } else {
    for (int v = 0; v <= t.r[n - 2]; ++v) {
      int lo = fibre_start(t, n, v);
      emit(lo, lo + fibre_size(t, n, v));
    }
  }
  return out;
}

std::vector<DiffTerm> all_terms(const Tree& t) {
  std::vector<DiffTerm> out;
  for (int j = 1; j <= t.n; ++j) {
    auto m = merge_terms(t, j);
    out.insert(out.end(), m.begin(), m.end());
  }
  auto d = delta_terms(t);
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

namespace {

DegreeBasis make_basis(const SystemPtr& F, int n, int m) {
  DegreeBasis b;
  b.trees = enumerate_by_degree(n, m);
  b.offsets.resize(b.trees.size());
  for (size_t k = 0; k < b.trees.size(); ++k) {
    b.offsets[k] = b.total;
    b.total += F->dim(b.trees[k]);
  }
  return b;
}

std::vector<std::string> make_labels(const SystemPtr& F, const DegreeBasis& b) {
  std::vector<std::string> out;
  out.reserve(b.total);
  for (const auto& t : b.trees) {
    auto ls = F->labels(t);
    for (auto& l : ls) out.push_back(tree_to_string(t) + " | " + l);
  }
  return out;
}

std::map<std::string, int> tree_index(const DegreeBasis& b) {
  std::map<std::string, int> idx;
  for (size_t k = 0; k < b.trees.size(); ++k) idx[tree_to_string(b.trees[k])] = static_cast<int>(k);
  return idx;
}

GradedComplex build_total(const SystemPtr& F, int n, int D, Direction dir) {
  if ((dir == Direction::Chain) != (F->variance() == Variance::Covariant))
    throw ValidationError(dir == Direction::Chain
                              ? "build_chain expects a covariant system"
                              : "build_cochain expects a contravariant system");
  GradedComplex c;
  c.direction = dir;
  c.n = n;
  c.max_degree = D;
  c.field = F->field();
  c.basis.resize(D + 1);
  c.labels.resize(D + 1);
  for (int m = 0; m <= D; ++m) {
    c.basis[m] = make_basis(F, n, m);
    c.labels[m] = make_labels(F, c.basis[m]);
  }
  c.diff.resize(D + 1);
  if (dir == Direction::Chain) {
    c.diff[0] = SparseMatrix(0, c.basis[0].total);
    for (int m = 1; m <= D; ++m) {
      auto tgt_idx = tree_index(c.basis[m - 1]);
      MatrixBuilder mb(c.basis[m - 1].total, c.basis[m].total, c.field);
      for (size_t k = 0; k < c.basis[m].trees.size(); ++k) {
        const Tree& t = c.basis[m].trees[k];
        for (const auto& term : all_terms(t)) {
          int tk = tgt_idx.at(tree_to_string(term.h.target));
          mb.add_block(c.basis[m - 1].offsets[tk], c.basis[m].offsets[k], F->matrix(term.h),
                       c.field.from_long(term.sign));
        }
      }
      c.diff[m] = mb.build();
    }
  } else {
    for (int m = 0; m < D; ++m) {
      auto src_idx = tree_index(c.basis[m]);
      MatrixBuilder mb(c.basis[m + 1].total, c.basis[m].total, c.field);
      for (size_t k = 0; k < c.basis[m + 1].trees.size(); ++k) {
        const Tree& t = c.basis[m + 1].trees[k];
        for (const auto& term : all_terms(t)) {
          int sk = src_idx.at(tree_to_string(term.h.target));
          mb.add_block(c.basis[m + 1].offsets[k], c.basis[m].offsets[sk], F->matrix(term.h),
                       c.field.from_long(term.sign));
        }
      }
      c.diff[m] = mb.build();
    }
    c.diff[D] = SparseMatrix(0, 0);
  }
  return c;
}

}  // namespace

GradedComplex build_chain(const SystemPtr& F, int n, int max_degree) {
  return build_total(F, n, max_degree, Direction::Chain);
}

GradedComplex build_cochain(const SystemPtr& G, int n, int max_degree) {
  return build_total(G, n, max_degree, Direction::Cochain);
}

std::optional<std::string> d2_witness(const GradedComplex& c) {
  int D = c.max_degree;
  auto probe = [&](const SparseMatrix& later, const SparseMatrix& earlier,
                   int mid) -> std::optional<std::string> {
    SparseMatrix comp = multiply(later, earlier, c.field);
    if (comp.is_zero()) return std::nullopt;
    const auto& e = comp.entries().front();
    return "d∘d nonzero through degree " + std::to_string(mid) + " at (" + std::to_string(e.row) +
           "," + std::to_string(e.col) + ") = " + c.field.str(e.value);
  };
  if (c.direction == Direction::Chain) {
    for (int m = 1; m + 1 <= D; ++m)
      if (auto w = probe(c.diff[m], c.diff[m + 1], m)) return w;
  } else {
    for (int m = 0; m + 1 < D; ++m)
      if (auto w = probe(c.diff[m + 1], c.diff[m], m + 1)) return w;
  }
  return std::nullopt;
}

namespace {

// Trees of every signature with total degree <= D, with basis offsets.
struct SignatureIndex {
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> sigs;
  std::vector<std::vector<Tree>> trees;
  std::vector<std::vector<int>> offsets;
  std::vector<int> dims;
  std::vector<std::map<std::string, int>> pos;

  int dim_of(const std::vector<int>& sig) const {
    auto it = id.find(sig);
    return it == id.end() ? 0 : dims[it->second];
  }
};

SignatureIndex build_signature_index(const SystemPtr& F, int n, int D) {
  SignatureIndex si;
  for (int m = 0; m <= D; ++m)
    for (auto& sig : signatures_by_degree(n, m)) {
      int sid = static_cast<int>(si.sigs.size());
      si.id[sig] = sid;
      si.sigs.push_back(sig);
      si.trees.push_back(enumerate_trees(n, sig));
      si.offsets.emplace_back();
      si.pos.emplace_back();
      int total = 0;
      for (size_t k = 0; k < si.trees.back().size(); ++k) {
        si.offsets.back().push_back(total);
        si.pos.back()[tree_to_string(si.trees.back()[k])] = static_cast<int>(k);
        total += F->dim(si.trees.back()[k]);
      }
      si.dims.push_back(total);
    }
  return si;
}

// op 0..n-1: the merge part of level op+1; op n: the delta part.
SparseMatrix assemble_block(const SystemPtr& F, const SignatureIndex& si,
                            const std::vector<int>& sig, int op, const Field& field) {
  int n = static_cast<int>(sig.size());
  int j = op == n ? n : op + 1;
  std::vector<int> tgt = sig;
  tgt[j - 1] -= 1;
  int rows = tgt[j - 1] >= 0 ? si.dim_of(tgt) : 0;
  int cols = si.dim_of(sig);
  MatrixBuilder mb(rows, cols, field);
  if (rows > 0 && cols > 0) {
    int sid = si.id.at(sig);
    int tid = si.id.at(tgt);
    for (size_t k = 0; k < si.trees[sid].size(); ++k) {
      const Tree& t = si.trees[sid][k];
      auto terms = op == n ? delta_terms(t) : merge_terms(t, j);
      for (const auto& term : terms) {
        int tk = si.pos[tid].at(tree_to_string(term.h.target));
        mb.add_block(si.offsets[tid][tk], si.offsets[sid][k], F->matrix(term.h),
                     field.from_long(term.sign));
      }
    }
  }
  return mb.build();
}

std::string entry_witness(const SparseMatrix& m, const std::vector<int>& sig,
                          const Field& field) {
  const auto& e = m.entries().front();
  std::string s = "signature (";
  for (size_t i = 0; i < sig.size(); ++i) s += (i ? "," : "") + std::to_string(sig[i]);
  return s + "): entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
         ") = " + field.str(e.value);
}

}  // namespace

MulticomplexReport check_multicomplex(const SystemPtr& F0, int n, int max_degree) {
  SystemPtr F = F0;
  if (F->variance() == Variance::Contravariant) F = dual_system(F);
  const Field field = F->field();
  SignatureIndex si = build_signature_index(F, n, max_degree);

  std::map<std::pair<int, int>, SparseMatrix> cache;  // (sig id, op) -> block
  auto block = [&](const std::vector<int>& sig, int op) -> const SparseMatrix& {
    for (int v : sig)
      if (v < 0) {
        static const SparseMatrix empty(0, 0);
        return empty;
      }
    auto it = si.id.find(sig);
    if (it == si.id.end()) {
      static const SparseMatrix empty(0, 0);
      return empty;
    }
    auto key = std::make_pair(it->second, op);
    auto c = cache.find(key);
    if (c == cache.end()) c = cache.emplace(key, assemble_block(F, si, sig, op, field)).first;
    return c->second;
  };
  auto shifted = [&](std::vector<int> sig, int op) {
    int j = op == static_cast<int>(sig.size()) ? static_cast<int>(sig.size()) : op + 1;
    sig[j - 1] -= 1;
    return sig;
  };
  // A(op1) B(op2) evaluated at sig; always carries the true target dimension
  // even when the middle signature is empty.
  auto prod = [&](int op1, int op2, const std::vector<int>& sig) {
    std::vector<int> mid = shifted(sig, op2);
    int rows = si.dim_of(shifted(mid, op1));
    int cols = si.dim_of(sig);
    const SparseMatrix& b2 = block(sig, op2);
    const SparseMatrix& b1 = block(mid, op1);
    if (b1.nnz() == 0 || b2.nnz() == 0) return SparseMatrix(rows, cols);
    return multiply(b1, b2, field);
  };

  MulticomplexReport report;
  auto run_check = [&](const std::string& name, auto&& makes) {
    IdentityCheck chk;
    chk.name = name;
    for (const auto& sig : si.sigs) {
      SparseMatrix m = makes(sig);
      if (!m.is_zero()) {
        chk.ok = false;
        chk.witness = entry_witness(m, sig, field);
        break;
      }
    }
    report.pass = report.pass && chk.ok;
    report.checks.push_back(std::move(chk));
  };

  const int DELTA = n;
  for (int j = 1; j <= n; ++j)
    run_check("merge part of level " + std::to_string(j) + " squares to zero",
              [&](const std::vector<int>& sig) { return prod(j - 1, j - 1, sig); });
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      run_check("merge parts of levels " + std::to_string(i) + "," + std::to_string(j) +
                    " anticommute",
                [&](const std::vector<int>& sig) {
                  return add(prod(i - 1, j - 1, sig), prod(j - 1, i - 1, sig), field);
                });
  for (int j = 1; j < n; ++j)
    run_check("deletion part anticommutes with level " + std::to_string(j),
              [&](const std::vector<int>& sig) {
                return add(prod(DELTA, j - 1, sig), prod(j - 1, DELTA, sig), field);
              });
  run_check("deletion square cancels against top merges",
            [&](const std::vector<int>& sig) {
              return add(add(prod(DELTA, DELTA, sig), prod(n - 1, DELTA, sig), field),
                         prod(DELTA, n - 1, sig), field);
            });
  // Full partial differentials (deltas folded into the top level).
  auto full_block = [&](const std::vector<int>& sig, int j) {
    const SparseMatrix& b = block(sig, j - 1);
    if (j < n) return b;
    const SparseMatrix& d = block(sig, DELTA);
    if (b.rows() == 0 && d.rows() == 0) return b;
    return add(b, d, field);
  };
  auto full_prod = [&](int j1, int j2, const std::vector<int>& sig) {
    std::vector<int> mid = shifted(sig, j2 - 1);
    int rows = si.dim_of(shifted(mid, j1 - 1));
    int cols = si.dim_of(sig);
    SparseMatrix b2 = full_block(sig, j2);
    SparseMatrix b1 = full_block(mid, j1);
    if (b1.nnz() == 0 || b2.nnz() == 0) return SparseMatrix(rows, cols);
    return multiply(b1, b2, field);
  };
  for (int j = 1; j <= n; ++j)
    run_check("partial differential " + std::to_string(j) + " squares to zero",
              [&](const std::vector<int>& sig) { return full_prod(j, j, sig); });
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      run_check("partial differentials " + std::to_string(i) + "," + std::to_string(j) +
                    " anticommute",
                [&](const std::vector<int>& sig) {
                  return add(full_prod(i, j, sig), full_prod(j, i, sig), field);
                });
  return report;
}

std::vector<int> homology_table(const GradedComplex& c) {
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

HZero h_zero(const SystemPtr& F, int n) {
  if (F->variance() != Variance::Covariant)
    throw ValidationError("h_zero expects a covariant system");
  Tree t1 = linear_tree(n);
  t1.r[n - 1] = 1;
  if (n >= 2) t1.maps[n - 2] = {0, 0};
  const Field& f = F->field();
  Tree t0 = linear_tree(n);
  MatrixBuilder mb(F->dim(t0), F->dim(t1), f);
  int sgn0 = (n - 1) % 2 == 0 ? 1 : -1;
  mb.add_block(0, 0, F->matrix(delete_leaf(t1, 0)), f.from_long(sgn0));
  mb.add_block(0, 0, F->matrix(top_merge(t1, 0)), f.from_long(-sgn0));
  mb.add_block(0, 0, F->matrix(delete_leaf(t1, 1)), f.from_long(sgn0));
  HZero out;
  out.presentation = mb.build();
  out.rank = F->dim(t0) - rank(out.presentation, f);
  return out;
}

}  // namespace enlab
