#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "field.hpp"

namespace enlab {

// Sparse vector in a small basis: (index, coefficient) pairs, sorted, nonzero.
using SmallVec = std::vector<std::pair<int, Scalar>>;

// A finite-dimensional commutative nonunital algebra over the configured
// field, given by structure constants mu_{ij}^k.
struct AlgebraData {
  std::vector<std::string> basis;
  std::vector<Scalar> mul;  // mul[(i*dim + j)*dim + k] = mu_{ij}^k
  Field field = Field::rationals();

  int dim() const { return static_cast<int>(basis.size()); }
  const Scalar& mu(int i, int j, int k) const { return mul[(i * dim() + j) * dim() + k]; }
  // e_i * e_j expanded in the basis.
  SmallVec product(int i, int j) const;
  // u * v for sparse algebra vectors.
  SmallVec product(const SmallVec& u, const SmallVec& v) const;
};

// A symmetric A-bimodule: one action table used on both sides.
struct BimoduleData {
  std::vector<std::string> basis;
  std::vector<Scalar> action;  // action[(a*dimA + i)*dimM + b] = rho_{a i}^b

  int dim() const { return static_cast<int>(basis.size()); }
  const Scalar& rho(int a, int i, int dimA, int b) const {
    return action[(a * dimA + i) * dim() + b];
  }
  // (module vector) . e_i
  SmallVec act(const SmallVec& m, int i, const AlgebraData& A) const;
};

struct UnitalAlgebra {
  AlgebraData alg;
  int unit = 0;  // index of the adjoined unit in alg.basis
};

// Empty iff commutativity, associativity and the module identities all hold;
// otherwise one line per failed identity with the indices involved.
std::vector<std::string> validate(const AlgebraData& A, const BimoduleData& M);

// A_+ = A ⊕ k. Throws if the basis already contains the unit name "1".
UnitalAlgebra unitalize(const AlgebraData& A);

// A_+ viewed as a symmetric A-bimodule (used by the twisted bar complex).
BimoduleData unital_module(const AlgebraData& A);

// The one-dimensional module with zero action.
BimoduleData trivial_module(const AlgebraData& A);
// A acting on itself by multiplication.
BimoduleData regular_module(const AlgebraData& A);
// {"basis":[...], "action":[[a,i,b,coeff],...]}.
BimoduleData module_from_json(const nlohmann::json& j, const AlgebraData& A);

// Builtins: "square_zero" (param = generator count, default 1) and
// "trunc_poly" (param = truncation exponent m >= 2, algebra x·k[x]/(x^m),
// default 3). module is "trivial" (1-dim, zero action) or "A".
std::pair<AlgebraData, BimoduleData> builtin_algebra(const std::string& name_param,
                                                     const std::string& module,
                                                     const Field& field);

// File format: {"field":..., "basis":[...], "mul":[[i,j,k,"num/den"],...],
// "module":{"basis":[...], "action":[[a,i,b,"num/den"],...]}}.
std::pair<AlgebraData, BimoduleData> algebra_from_json(const nlohmann::json& j,
                                                       const Field& field);

}  // namespace enlab
