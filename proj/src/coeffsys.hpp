#pragma once

#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "morphism.hpp"
#include "sparse.hpp"

namespace enlab {

enum class Variance { Covariant, Contravariant };

// A functor from Epi_n^+ (or its opposite) to finitely generated free
// modules: a basis per tree, a matrix per morphism. Matrices act on column
// vectors; for a covariant system matrix(h: t->s) maps basis(t) coordinates
// to basis(s) coordinates, for a contravariant one the arrow is reversed.
// matrix() must be constant on equivalence classes of morphisms.
class CoefficientSystem {
 public:
  explicit CoefficientSystem(const Field& f) : field_(f) {}
  virtual ~CoefficientSystem() = default;

  virtual Variance variance() const = 0;
  virtual int dim(const Tree& t) const = 0;
  virtual std::vector<std::string> labels(const Tree& t) const = 0;
  virtual SparseMatrix matrix(const TreeMorphism& h) const = 0;
  virtual std::string name() const = 0;

  const Field& field() const { return field_; }

 protected:
  Field field_;
};

using SystemPtr = std::shared_ptr<const CoefficientSystem>;

// Loday functor t -> M ⊗ A^{⊗ r_n+1}: deleted leaves act on the module slot,
// each target slot collects the product over its preimage.
SystemPtr loday(const AlgebraData& A, const BimoduleData& M);

// Contravariant analogue t -> Hom(A^{⊗ r_n+1}, M).
SystemPtr dual_loday(const AlgebraData& A, const BimoduleData& M);

// Representable projective P_t = k[Epi_n^+(t, -)]; hom-set bases are
// memoized per target tree.
SystemPtr representable(const Tree& t, const Field& f);

// The leaves functor: t -> free module on the leaves; a morphism sends
// alpha_m to alpha_{h_n(m)}, or to 0 when the leaf is deleted.
SystemPtr leaves_functor(int n, const Field& f);

// Variance flip with transposed matrices.
SystemPtr dual_system(SystemPtr inner);

// Kills every morphism that deletes a leaf; the inner system is only
// consulted on +-free morphisms.
SystemPtr extend_trivial(SystemPtr inner);

}  // namespace enlab
