#include "algebra.hpp"

#include <algorithm>
#include <map>

namespace enlab {

namespace {

SmallVec normalize(std::map<int, Scalar>&& acc, const Field& f) {
  SmallVec out;
  for (auto& [k, v] : acc)
    if (!f.is_zero(v)) out.emplace_back(k, v);
  return out;
}

}  // namespace

SmallVec AlgebraData::product(int i, int j) const {
  SmallVec out;
  for (int k = 0; k < dim(); ++k)
    if (!field.is_zero(mu(i, j, k))) out.emplace_back(k, mu(i, j, k));
  return out;
}

SmallVec AlgebraData::product(const SmallVec& u, const SmallVec& v) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      Scalar c = field.mul(a, b);
      for (int k = 0; k < dim(); ++k) {
        if (field.is_zero(mu(i, j, k))) continue;
        auto [it, fresh] = acc.emplace(k, field.zero());
        it->second = field.add(it->second, field.mul(c, mu(i, j, k)));
      }
    }
  return normalize(std::move(acc), field);
}

SmallVec BimoduleData::act(const SmallVec& m, int i, const AlgebraData& A) const {
  std::map<int, Scalar> acc;
  for (const auto& [a, c] : m)
    for (int b = 0; b < dim(); ++b) {
      if (A.field.is_zero(rho(a, i, A.dim(), b))) continue;
      auto [it, fresh] = acc.emplace(b, A.field.zero());
      it->second = A.field.add(it->second, A.field.mul(c, rho(a, i, A.dim(), b)));
    }
  return normalize(std::move(acc), A.field);
}

std::vector<std::string> validate(const AlgebraData& A, const BimoduleData& M) {
  std::vector<std::string> out;
  const Field& f = A.field;
  int d = A.dim(), dm = M.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (A.mu(i, j, k) != A.mu(j, i, k))
          out.push_back("commutativity fails: mu(" + std::to_string(i) + "," + std::to_string(j) +
                        ")^" + std::to_string(k) + " != mu(" + std::to_string(j) + "," +
                        std::to_string(i) + ")^" + std::to_string(k));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          Scalar lhs = f.zero(), rhs = f.zero();
          for (int l = 0; l < d; ++l) {
            lhs = f.add(lhs, f.mul(A.mu(i, j, l), A.mu(l, k, m)));
            rhs = f.add(rhs, f.mul(A.mu(j, k, l), A.mu(i, l, m)));
          }
          if (lhs != rhs)
            out.push_back("associativity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")^" + std::to_string(m));
        }
  // (m.x).y = m.(xy)
  for (int a = 0; a < dm; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int b = 0; b < dm; ++b) {
          Scalar lhs = f.zero(), rhs = f.zero();
          for (int c = 0; c < dm; ++c)
            lhs = f.add(lhs, f.mul(M.rho(a, i, d, c), M.rho(c, j, d, b)));
          for (int l = 0; l < d; ++l)
            rhs = f.add(rhs, f.mul(A.mu(i, j, l), M.rho(a, l, d, b)));
          if (lhs != rhs)
            out.push_back("module associativity fails at (m" + std::to_string(a) + ",a" +
                          std::to_string(i) + ",a" + std::to_string(j) + ")^m" +
                          std::to_string(b));
        }
  return out;
}

UnitalAlgebra unitalize(const AlgebraData& A) {
  for (const auto& name : A.basis)
    if (name == "1") throw ValidationError("unitalize: basis already contains \"1\"");
  UnitalAlgebra u;
  int d = A.dim(), dd = d + 1;
  u.alg.field = A.field;
  u.alg.basis.push_back("1");
  u.alg.basis.insert(u.alg.basis.end(), A.basis.begin(), A.basis.end());
  u.unit = 0;
  u.alg.mul.assign(dd * dd * dd, A.field.zero());
  auto set = [&](int i, int j, int k, const Scalar& v) { u.alg.mul[(i * dd + j) * dd + k] = v; };
  set(0, 0, 0, A.field.one());
  for (int i = 0; i < d; ++i) {
    set(0, i + 1, i + 1, A.field.one());
    set(i + 1, 0, i + 1, A.field.one());
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) set(i + 1, j + 1, k + 1, A.mu(i, j, k));
  }
  return u;
}

BimoduleData unital_module(const AlgebraData& A) {
  BimoduleData m;
  int d = A.dim(), dm = d + 1;
  m.basis.push_back("1");
  m.basis.insert(m.basis.end(), A.basis.begin(), A.basis.end());
  m.action.assign(dm * d * dm, A.field.zero());
  auto set = [&](int a, int i, int b, const Scalar& v) { m.action[(a * d + i) * dm + b] = v; };
  for (int i = 0; i < d; ++i) {
    set(0, i, i + 1, A.field.one());  // 1 . a_i = a_i
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) set(a + 1, i, b + 1, A.mu(a, i, b));
  }
  return m;
}

BimoduleData trivial_module(const AlgebraData& A) {
  BimoduleData m;
  m.basis = {"m"};
  m.action.assign(A.dim(), A.field.zero());
  return m;
}

BimoduleData regular_module(const AlgebraData& A) {
  BimoduleData m;
  m.basis = A.basis;
  int d = A.dim();
  m.action.assign(d * d * d, A.field.zero());
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int b = 0; b < d; ++b) m.action[(a * d + i) * d + b] = A.mu(a, i, b);
  return m;
}

BimoduleData module_from_json(const nlohmann::json& jm, const AlgebraData& A) {
  const Field& field = A.field;
  int d = A.dim();
  BimoduleData M;
  if (!jm.contains("basis")) throw ValidationError("module literal: missing basis");
  M.basis = jm["basis"].get<std::vector<std::string>>();
  int dm = M.dim();
  if (dm == 0) throw ValidationError("module literal: empty basis");
  M.action.assign(dm * d * dm, field.zero());
  if (jm.contains("action")) {
    for (const auto& e : jm["action"]) {
      if (!e.is_array() || e.size() != 4)
        throw ValidationError("module literal: action entries must be [a,i,b,coeff]");
      int a = e[0].get<int>(), i = e[1].get<int>(), b = e[2].get<int>();
      if (a < 0 || a >= dm || i < 0 || i >= d || b < 0 || b >= dm)
        throw ValidationError("module literal: action index out of range");
      std::string c = e[3].is_string() ? e[3].get<std::string>() : e[3].dump();
      M.action[(a * d + i) * dm + b] = field.from_string(c);
    }
  }
  return M;
}

std::pair<AlgebraData, BimoduleData> builtin_algebra(const std::string& name_param,
                                                     const std::string& module,
                                                     const Field& field) {
  std::string name = name_param;
  long param = -1;
  if (auto colon = name_param.find(':'); colon != std::string::npos) {
    name = name_param.substr(0, colon);
    try {
      param = std::stol(name_param.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("bad builtin parameter in '" + name_param + "'");
    }
  }
  AlgebraData A;
  A.field = field;
  if (name == "square_zero") {
    int g = param < 0 ? 1 : static_cast<int>(param);
    if (g < 1) throw ValidationError("square_zero: need at least one generator");
    for (int i = 0; i < g; ++i) A.basis.push_back(g == 1 ? "x" : "x" + std::to_string(i + 1));
    A.mul.assign(g * g * g, field.zero());
  } else if (name == "trunc_poly") {
    int m = param < 0 ? 3 : static_cast<int>(param);
    if (m < 2) throw ValidationError("trunc_poly: truncation exponent must be >= 2");
    int d = m - 1;  // basis x, x^2, ..., x^{m-1}
    for (int i = 1; i <= d; ++i) A.basis.push_back(i == 1 ? "x" : "x" + std::to_string(i));
    A.mul.assign(d * d * d, field.zero());
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        if (i + j <= d) A.mul[((i - 1) * d + (j - 1)) * d + (i + j - 1)] = field.one();
  } else {
    throw ValidationError("unknown builtin algebra '" + name + "'");
  }
  BimoduleData M;
  if (module == "trivial")
    M = trivial_module(A);
  else if (module == "A")
    M = regular_module(A);
  else
    throw ValidationError("unknown builtin module '" + module + "' (expected trivial or A)");
  return {A, M};
}

std::pair<AlgebraData, BimoduleData> algebra_from_json(const nlohmann::json& j,
                                                       const Field& field) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
    throw ValidationError("algebra file: missing \"basis\" array");
  AlgebraData A;
  A.field = field;
  A.basis = j["basis"].get<std::vector<std::string>>();
  int d = A.dim();
  if (d == 0) throw ValidationError("algebra file: empty basis");
  A.mul.assign(d * d * d, field.zero());
  if (j.contains("mul")) {
    for (const auto& e : j["mul"]) {
      if (!e.is_array() || e.size() != 4)
        throw ValidationError("algebra file: mul entries must be [i,j,k,coeff]");
      int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
      if (i < 0 || i >= d || jj < 0 || jj >= d || k < 0 || k >= d)
        throw ValidationError("algebra file: mul index out of range");
      std::string c = e[3].is_string() ? e[3].get<std::string>() : e[3].dump();
      A.mul[(i * d + jj) * d + k] = field.from_string(c);
    }
  }
  BimoduleData M = j.contains("module") ? module_from_json(j["module"], A) : trivial_module(A);
  auto diags = validate(A, M);
  if (!diags.empty()) {
    std::string msg = "algebra file fails validation:";
    for (const auto& r : diags) msg += " " + r + ";";
    throw ValidationError(msg);
  }
  return {A, M};
}

}  // namespace enlab
