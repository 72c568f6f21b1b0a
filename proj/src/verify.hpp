#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bar.hpp"
#include "complex.hpp"

namespace enlab {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CheckLine> lines;

  void add(const std::string& name, bool ok, const std::string& details = "") {
    pass = pass && ok;
    lines.push_back({name, ok, details});
  }
  void merge(const SuiteReport& other) {
    for (const auto& l : other.lines) add(l.name, l.pass, l.details);
  }
};

// d∘d = 0 on the assembled total complex of the system.
SuiteReport verify_d2(const SystemPtr& F, int n, int max_degree);

// All multicomplex identities, signature by signature.
SuiteReport verify_multicomplex(const SystemPtr& F, int n, int max_degree,
                                const std::string& tag);

// Degree-zero homology from the three-term cokernel presentation agrees with
// the assembled table.
SuiteReport verify_h_zero(const SystemPtr& F, int n, const std::string& tag);

// Entrywise equality of the tree-category complex and the bar-side complex,
// plus agreement of the homology tables.
SuiteReport verify_oracle(const AlgebraData& A, const BimoduleData& M, int n, int max_degree);

// n = 1: the tree-category complex is the standard Hochschild complex.
SuiteReport verify_hochschild(const AlgebraData& A, const BimoduleData& M, int max_degree);

// Representable projectives: Betti_0 = leaf count, higher Betti vanish.
SuiteReport verify_projective(const Tree& t, int max_degree, const Field& field);
SuiteReport verify_projective_all(int n, int hd_cap, int max_degree, const Field& field);

// Leaves functor: Betti = (1, 0, ..., 0).
SuiteReport verify_bstar(int n, int max_degree, const Field& field);

// Chain Betti of the Loday system equals cochain Betti of its Hom-dual.
SuiteReport verify_duality(const AlgebraData& A, const BimoduleData& M, int n, int max_degree);

// Seeded property suites: composition associativity, well-definedness on
// equivalence classes, functoriality and class-constancy of the coefficient
// systems.
SuiteReport verify_category(std::uint64_t seed, int triples, int pairs, int functor_pairs,
                            const Field& field);

// Independent count of n=2 trees of homological degree m: sum of C(b, a)
// over a + b = m.
long composition_count_oracle(int m);

}  // namespace enlab
