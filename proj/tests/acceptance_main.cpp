// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Everything is exact; there are no tolerances to tune.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "verify.hpp"

using namespace enlab;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int id, const std::string& name, bool pass, double secs,
            const std::string& details = "") {
  std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              secs, details.empty() ? "" : " — ", details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string first_failure(const SuiteReport& rep) {
  for (const auto& l : rep.lines)
    if (!l.pass) return l.name + (l.details.empty() ? "" : ": " + l.details);
  return "";
}

std::string betti_str(const std::vector<int>& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

// The per-n assembly depths: D = 8 / 6 / 5 for n = 1 / 2 / 3.
int depth_for(int n) { return n == 1 ? 8 : (n == 2 ? 6 : 5); }

struct SystemCase {
  std::string tag;
  SystemPtr system;
};

std::vector<SystemCase> criterion1_systems(int n, const Field& field) {
  std::vector<SystemCase> out;
  {
    auto [A, M] = builtin_algebra("trunc_poly:3", "A", field);
    out.push_back({"loday(trunc_poly:3, A)", loday(A, M)});
  }
  {
    auto [A, M] = builtin_algebra("square_zero:2", "trivial", field);
    out.push_back({"loday(square_zero:2, trivial)", loday(A, M)});
  }
  out.push_back({"leaves", leaves_functor(n, field)});
  for (int m = 0; m <= 2; ++m)
    for (const auto& t : enumerate_by_degree(n, m))
      out.push_back({"representable(" + tree_to_string(t) + ")", representable(t, field)});
  return out;
}

}  // namespace

int main() {
  const std::vector<Field> fields = {Field::rationals(), Field::prime(2)};

  {  // criteria 1, 2 and 7 over the same matrix of systems
    Timer t1;
    double t2s = 0, t7s = 0;
    SuiteReport c1, c2, c7;
    c1.suite = "multicomplex";
    for (int n = 1; n <= 3; ++n) {
      int D = depth_for(n);
      for (const auto& field : fields) {
        for (const auto& sc : criterion1_systems(n, field)) {
          std::string tag = sc.tag + ", n=" + std::to_string(n) + ", " + field.name();
          c1.merge(verify_multicomplex(sc.system, n, D, tag));
          Timer t2;
          c2.merge(verify_d2(sc.system, n, D));
          t2s += t2.seconds();
          Timer t7;
          c7.merge(verify_h_zero(sc.system, n, tag));
          t7s += t7.seconds();
        }
      }
    }
    double total = t1.seconds();
    report(1, "multicomplex identities for the full system matrix", c1.pass, total - t2s - t7s,
           first_failure(c1));
    report(2, "d∘d = 0 on every assembled total complex", c2.pass, t2s, first_failure(c2));
    report(7, "degree-0 homology equals the three-term cokernel", c7.pass, t7s,
           first_failure(c7));
  }

  {  // criterion 3: Hochschild agreement at n=1
    Timer t;
    SuiteReport rep;
    for (const auto& field : {Field::rationals(), Field::prime(3)}) {
      auto [A, M] = builtin_algebra("trunc_poly:3", "A", field);
      rep.merge(verify_hochschild(A, M, 8));
    }
    report(3, "n=1 tree complex is the Hochschild complex (degree 8, Q and F:3)", rep.pass,
           t.seconds(), first_failure(rep));
  }

  {  // criterion 4: oracle equality
    Timer t;
    SuiteReport rep;
    for (int n = 1; n <= 2; ++n)
      for (const char* spec : {"trunc_poly:2", "trunc_poly:3"}) {
        auto [A, M] = builtin_algebra(spec, "A", Field::rationals());
        rep.merge(verify_oracle(A, M, n, 6));
      }
    report(4, "tree complex equals the iterated-bar oracle entrywise (D=6)", rep.pass,
           t.seconds(), first_failure(rep));
  }

  {  // criterion 5: projective acyclicity
    Timer t;
    SuiteReport rep;
    for (int n = 1; n <= 2; ++n)
      for (const auto& field : fields) rep.merge(verify_projective_all(n, 2, 4, field));
    report(5, "representable projectives are acyclic with H_0 = k^{leaves}", rep.pass,
           t.seconds(), first_failure(rep));
  }

  {  // criterion 6: leaves functor
    Timer t;
    SuiteReport rep;
    for (int n = 1; n <= 3; ++n)
      for (const auto& field : fields) rep.merge(verify_bstar(n, depth_for(n), field));
    // the n=1 special case on the cochain side
    for (const auto& field : fields) {
      GradedComplex c = build_cochain(dual_system(leaves_functor(1, field)), 1, 8);
      auto betti = homology_table(c);
      bool ok = betti[0] == 1;
      for (size_t m = 1; m < betti.size(); ++m) ok = ok && betti[m] == 0;
      rep.add("n=1 cochain of the dual leaves functor over " + field.name(), ok,
              "betti " + betti_str(betti));
    }
    report(6, "leaves functor has homology k concentrated in degree 0", rep.pass, t.seconds(),
           first_failure(rep));
  }

  {  // criterion 8: field duality
    Timer t;
    SuiteReport rep;
    for (int n = 1; n <= 2; ++n)
      for (const auto& field : fields) {
        auto [A, M] = builtin_algebra("trunc_poly:3", "A", field);
        rep.merge(verify_duality(A, M, n, 6));
      }
    report(8, "cochain Betti of the dual equals chain Betti (degrees <= 5)", rep.pass,
           t.seconds(), first_failure(rep));
  }

  {  // criterion 9: Fibonacci Betti table for the square-zero algebra, n=2
    Timer t;
    auto [A, M] = builtin_algebra("square_zero:1", "trivial", Field::rationals());
    GradedComplex c = build_chain(loday(A, M), 2, 8);
    auto betti = homology_table(c);
    std::vector<int> expected = {1, 1, 2, 3, 5, 8, 13, 21};
    bool ok = betti.size() == expected.size();
    for (size_t m = 0; ok && m < expected.size(); ++m) ok = betti[m] == expected[m];
    bool oracle_ok = true;
    for (int m = 0; m <= 7; ++m)
      oracle_ok = oracle_ok && composition_count_oracle(m) == expected[m];
    std::string note;
    if (!ok) {
      // the computed table is what the independent bar-side oracle gives too:
      // the level-one shuffle merges act by nonzero relabelings for any
      // algebra, so the differential does not vanish for n >= 2
      CompareReport cross = compare_with_tree_complex(A, M, 2, 8);
      note = cross.equal ? "; independent bar oracle agrees entrywise with the computed complex"
                         : "; bar oracle DISAGREES: " + cross.mismatch;
    }
    report(9, "square-zero n=2 Betti equals the Fibonacci tree counts", ok && oracle_ok,
           t.seconds(),
           "computed " + betti_str(betti) + ", expected " + betti_str(expected) +
               (oracle_ok ? " (= composition counts)" : " (composition-count oracle disagrees)") +
               note);
  }

  {  // criterion 10: category and functor properties
    Timer t;
    SuiteReport rep = verify_category(20240811ull, 1000, 1000, 500, Field::rationals());
    report(10, "category laws and functoriality over seeded random samples", rep.pass,
           t.seconds(), first_failure(rep));
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
