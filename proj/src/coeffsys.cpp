#include "coeffsys.hpp"

#include <cassert>
#include <map>
#include <mutex>

namespace enlab {

namespace {

long int_pow(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Iterates tuples (a_0, ..., a_{len-1}) over [0, dim) in row-major order.
bool next_tuple(std::vector<int>& t, int dim) {
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
    if (++t[k] < dim) return true;
    t[k] = 0;
  }
  return false;
}

class LodaySystem : public CoefficientSystem {
 public:
  LodaySystem(AlgebraData A, BimoduleData M)
      : CoefficientSystem(A.field), A_(std::move(A)), M_(std::move(M)) {}

  Variance variance() const override { return Variance::Covariant; }

  int dim(const Tree& t) const override {
    return static_cast<int>(M_.dim() * int_pow(A_.dim(), t.r[t.n - 1] + 1));
  }

  std::vector<std::string> labels(const Tree& t) const override {
    std::vector<std::string> out;
    int leaves = t.r[t.n - 1] + 1;
    std::vector<int> a(leaves, 0);
    for (int b = 0; b < M_.dim(); ++b) {
      std::fill(a.begin(), a.end(), 0);
      do {
        std::string s = M_.basis[b];
        for (int x : a) s += "⊗" + A_.basis[x];
        out.push_back(std::move(s));
      } while (next_tuple(a, A_.dim()));
    }
    return out;
  }

  SparseMatrix matrix(const TreeMorphism& h) const override {
    int n = h.n();
    int src_leaves = h.source.r[n - 1] + 1;
    int tgt_leaves = h.target.r[n - 1] + 1;
    MatrixBuilder out(dim(h.target), dim(h.source), field_);
    const auto& top = h.top();
    std::vector<int> plus, slot_of(src_leaves);
    for (int x = 0; x < src_leaves; ++x)
      if (top[x] == kPlus) plus.push_back(x);

    std::vector<int> a(src_leaves, 0);
    for (int b = 0; b < M_.dim(); ++b) {
      std::fill(a.begin(), a.end(), 0);
      int col = b * static_cast<int>(int_pow(A_.dim(), src_leaves));
      do {
        // module slot: act with the deleted labels
        SmallVec mod{{b, field_.one()}};
        for (int x : plus) {
          mod = M_.act(mod, a[x], A_);
          if (mod.empty()) break;
        }
        if (!mod.empty()) {
          // per-target-slot products
          std::vector<SmallVec> slot(tgt_leaves);
          std::vector<bool> started(tgt_leaves, false);
          bool dead = false;
          for (int x = 0; x < src_leaves && !dead; ++x) {
            int j = top[x];
            if (j == kPlus) continue;
            if (!started[j]) {
              slot[j] = {{a[x], field_.one()}};
              started[j] = true;
            } else {
              slot[j] = A_.product(slot[j], {{a[x], field_.one()}});
              if (slot[j].empty()) dead = true;
            }
          }
          if (!dead) {
            // expand the tensor of mod ⊗ slot_0 ⊗ ... into matrix entries
            auto expand = [&](auto&& self, int j, int row_tuple, const Scalar& coeff) -> void {
              if (j == tgt_leaves) {
                for (const auto& [bm, cm] : mod)
                  out.add(bm * static_cast<int>(int_pow(A_.dim(), tgt_leaves)) + row_tuple, col,
                          field_.mul(coeff, cm));
                return;
              }
              for (const auto& [k, c] : slot[j])
                self(self, j + 1, row_tuple * A_.dim() + k, field_.mul(coeff, c));
            };
            expand(expand, 0, 0, field_.one());
          }
        }
        ++col;
      } while (next_tuple(a, A_.dim()));
    }
    return out.build();
  }

  std::string name() const override { return "loday"; }

 private:
  AlgebraData A_;
  BimoduleData M_;
};

class DualLodaySystem : public CoefficientSystem {
 public:
  DualLodaySystem(AlgebraData A, BimoduleData M)
      : CoefficientSystem(A.field), A_(std::move(A)), M_(std::move(M)) {}

  Variance variance() const override { return Variance::Contravariant; }

  int dim(const Tree& t) const override {
    return static_cast<int>(int_pow(A_.dim(), t.r[t.n - 1] + 1) * M_.dim());
  }

  std::vector<std::string> labels(const Tree& t) const override {
    std::vector<std::string> out;
    int leaves = t.r[t.n - 1] + 1;
    std::vector<int> a(leaves, 0);
    do {
      std::string s;
      for (int x : a) s += (s.empty() ? "" : "⊗") + A_.basis[x];
      for (int c = 0; c < M_.dim(); ++c) out.push_back(s + "→" + M_.basis[c]);
    } while (next_tuple(a, A_.dim()));
    return out;
  }

  // rows: basis of the source tree, cols: basis of the target tree.
  SparseMatrix matrix(const TreeMorphism& h) const override {
    int n = h.n();
    int src_leaves = h.source.r[n - 1] + 1;
    int tgt_leaves = h.target.r[n - 1] + 1;
    MatrixBuilder out(dim(h.source), dim(h.target), field_);
    const auto& top = h.top();
    std::vector<int> plus;
    for (int x = 0; x < src_leaves; ++x)
      if (top[x] == kPlus) plus.push_back(x);

    std::vector<int> a(src_leaves, 0);
    int row_tuple = 0;
    do {
      // product over the deleted leaves, as an element of A_+ (empty = unit)
      SmallVec u;
      bool unit = plus.empty(), dead = false;
      for (size_t k = 0; k < plus.size() && !dead; ++k) {
        if (k == 0)
          u = {{a[plus[0]], field_.one()}};
        else {
          u = A_.product(u, {{a[plus[k]], field_.one()}});
          if (u.empty()) dead = true;
        }
      }
      if (!dead) {
        std::vector<SmallVec> slot(tgt_leaves);
        std::vector<bool> started(tgt_leaves, false);
        for (int x = 0; x < src_leaves && !dead; ++x) {
          int j = top[x];
          if (j == kPlus) continue;
          if (!started[j]) {
            slot[j] = {{a[x], field_.one()}};
            started[j] = true;
          } else {
            slot[j] = A_.product(slot[j], {{a[x], field_.one()}});
            if (slot[j].empty()) dead = true;
          }
        }
        if (!dead) {
          auto expand = [&](auto&& self, int j, int col_tuple, const Scalar& coeff) -> void {
            if (j == tgt_leaves) {
              for (int c = 0; c < M_.dim(); ++c) {
                // u . e_c in the module (u empty product = identity)
                SmallVec w;
                if (unit)
                  w = {{c, field_.one()}};
                else {
                  SmallVec acc;
                  for (const auto& [l, cl] : u) {
                    for (const auto& [bb, cb] : M_.act({{c, field_.one()}}, l, A_)) {
                      bool found = false;
                      for (auto& e : acc)
                        if (e.first == bb) {
                          e.second = field_.add(e.second, field_.mul(cl, cb));
                          found = true;
                        }
                      if (!found) acc.emplace_back(bb, field_.mul(cl, cb));
                    }
                  }
                  w = std::move(acc);
                }
                for (const auto& [bb, cb] : w)
                  out.add(row_tuple * M_.dim() + bb, col_tuple * M_.dim() + c,
                          field_.mul(coeff, cb));
              }
              return;
            }
            for (const auto& [k, c] : slot[j])
              self(self, j + 1, col_tuple * A_.dim() + k, field_.mul(coeff, c));
          };
          expand(expand, 0, 0, field_.one());
        }
      }
      ++row_tuple;
    } while (next_tuple(a, A_.dim()));
    return out.build();
  }

  std::string name() const override { return "dual_loday"; }

 private:
  AlgebraData A_;
  BimoduleData M_;
};

class RepresentableSystem : public CoefficientSystem {
 public:
  RepresentableSystem(Tree t, const Field& f) : CoefficientSystem(f), t_(std::move(t)) {}

  Variance variance() const override { return Variance::Covariant; }

  int dim(const Tree& s) const override { return static_cast<int>(homset(s).classes.size()); }

  std::vector<std::string> labels(const Tree& s) const override {
    std::vector<std::string> out;
    for (const auto& m : homset(s).classes) out.push_back(morphism_to_string(m));
    return out;
  }

  SparseMatrix matrix(const TreeMorphism& g) const override {
    const HomSet& src = homset(g.source);
    const HomSet& tgt = homset(g.target);
    MatrixBuilder out(static_cast<int>(tgt.classes.size()),
                      static_cast<int>(src.classes.size()), field_);
    for (size_t c = 0; c < src.classes.size(); ++c) {
      TreeMorphism comp = canonicalize(compose(src.classes[c], g));
      auto it = tgt.index.find(canonical_key(comp));
      if (it == tgt.index.end())
        throw ValidationError("representable: composite class missing from the hom-set of " +
                              tree_to_string(g.target));
      out.add(it->second, static_cast<int>(c), field_.one());
    }
    return out.build();
  }

  std::string name() const override { return "representable(" + tree_to_string(t_) + ")"; }

 private:
  struct HomSet {
    std::vector<TreeMorphism> classes;
    std::map<std::string, int> index;
  };

  const HomSet& homset(const Tree& s) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = tree_to_string(s);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      HomSet hs;
      hs.classes = enumerate_hom(t_, s);
      for (size_t i = 0; i < hs.classes.size(); ++i)
        hs.index[canonical_key(hs.classes[i])] = static_cast<int>(i);
      it = cache_.emplace(key, std::move(hs)).first;
    }
    return it->second;
  }

  Tree t_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, HomSet> cache_;
};

class LeavesSystem : public CoefficientSystem {
 public:
  LeavesSystem(int n, const Field& f) : CoefficientSystem(f), n_(n) {}

  Variance variance() const override { return Variance::Covariant; }
  int dim(const Tree& t) const override { return t.r[t.n - 1] + 1; }

  std::vector<std::string> labels(const Tree& t) const override {
    std::vector<std::string> out;
    for (int i = 0; i <= t.r[t.n - 1]; ++i) out.push_back("alpha_" + std::to_string(i));
    return out;
  }

  SparseMatrix matrix(const TreeMorphism& h) const override {
    MatrixBuilder out(dim(h.target), dim(h.source), field_);
    const auto& top = h.top();
    for (int m = 0; m < static_cast<int>(top.size()); ++m)
      if (top[m] != kPlus) out.add(top[m], m, field_.one());
    return out.build();
  }

  std::string name() const override { return "leaves"; }

 private:
  int n_;
};

class DualWrapper : public CoefficientSystem {
 public:
  explicit DualWrapper(SystemPtr inner) : CoefficientSystem(inner->field()), inner_(inner) {}

  Variance variance() const override {
    return inner_->variance() == Variance::Covariant ? Variance::Contravariant
                                                     : Variance::Covariant;
  }
  int dim(const Tree& t) const override { return inner_->dim(t); }
  std::vector<std::string> labels(const Tree& t) const override { return inner_->labels(t); }
  SparseMatrix matrix(const TreeMorphism& h) const override {
    return inner_->matrix(h).transpose();
  }
  std::string name() const override { return "dual(" + inner_->name() + ")"; }

 private:
  SystemPtr inner_;
};

class ExtendTrivialWrapper : public CoefficientSystem {
 public:
  explicit ExtendTrivialWrapper(SystemPtr inner)
      : CoefficientSystem(inner->field()), inner_(inner) {
    if (inner_->variance() != Variance::Covariant)
      throw ValidationError("extend_trivial expects a covariant system");
  }

  Variance variance() const override { return Variance::Covariant; }
  int dim(const Tree& t) const override { return inner_->dim(t); }
  std::vector<std::string> labels(const Tree& t) const override { return inner_->labels(t); }
  SparseMatrix matrix(const TreeMorphism& h) const override {
    for (int v : h.top())
      if (v == kPlus) return SparseMatrix(inner_->dim(h.target), inner_->dim(h.source));
    return inner_->matrix(h);
  }
  std::string name() const override { return "extend_trivial(" + inner_->name() + ")"; }

 private:
  SystemPtr inner_;
};

}  // namespace

SystemPtr loday(const AlgebraData& A, const BimoduleData& M) {
  return std::make_shared<LodaySystem>(A, M);
}

SystemPtr dual_loday(const AlgebraData& A, const BimoduleData& M) {
  return std::make_shared<DualLodaySystem>(A, M);
}

SystemPtr representable(const Tree& t, const Field& f) {
  return std::make_shared<RepresentableSystem>(t, f);
}

SystemPtr leaves_functor(int n, const Field& f) {
  return std::make_shared<LeavesSystem>(n, f);
}

SystemPtr dual_system(SystemPtr inner) { return std::make_shared<DualWrapper>(inner); }

SystemPtr extend_trivial(SystemPtr inner) {
  return std::make_shared<ExtendTrivialWrapper>(inner);
}

}  // namespace enlab
