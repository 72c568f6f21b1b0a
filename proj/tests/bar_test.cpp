#include <doctest.h>

#include <map>

#include "bar.hpp"

using namespace enlab;

namespace {

BarWord letter(int k) {
  BarWord w;
  w.depth = 0;
  w.letter = k;
  return w;
}

BarWord word1(std::vector<int> letters) {
  BarWord w;
  w.depth = 1;
  for (int k : letters) w.parts.push_back(letter(k));
  return w;
}

BarWord nest(std::vector<BarWord> parts) {
  BarWord w;
  w.depth = parts.front().depth + 1;
  w.parts = std::move(parts);
  return w;
}

using Combo = std::map<std::pair<int, BarWord>, Scalar>;

Combo normalize(const std::vector<std::pair<Scalar, BarWord>>& terms, const Field& f) {
  Combo out;
  for (const auto& [c, w] : terms) {
    auto [it, fresh] = out.emplace(std::make_pair(0, w), f.zero());
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) out.erase(it);
  }
  return out;
}

}  // namespace

TEST_CASE("bar word basics") {
  BarWord w = nest({word1({0, 1}), word1({0})});
  CHECK(w.depth == 2);
  CHECK(w.degree() == 5);
  CHECK(word1({0}).degree() == 1);
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  CHECK(word_to_string(w, A.basis) == "[[x|x2]|[x]]");
}

TEST_CASE("word enumeration matches tree counting") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "trivial", Field::rationals());
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 5; ++m) {
      long expect = 0;
      for (const auto& t : enumerate_by_degree(n, m)) {
        long block = 1;
        for (int i = 0; i <= t.r[n - 1]; ++i) block *= A.dim();
        expect += block;
      }
      CHECK(static_cast<long>(enumerate_words(A.dim(), n, m + n).size()) == expect);
    }
}

TEST_CASE("words and trees convert both ways") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& t : enumerate_by_degree(n, m)) {
        std::vector<int> labels(t.r[n - 1] + 1, 0);
        for (size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i % 2);
        BarWord w = word_from_tree(t, labels);
        CHECK(w.degree() == degree(t));
        CHECK(tree_from_word(w) == t);
      }
}

TEST_CASE("bar differential: displayed formula") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  // [x|x] -> + [x2]
  auto terms = bar_differential(A, word1({0, 0}));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first == Scalar(1));
  CHECK(terms[0].second == word1({1}));
  // [x|x|x]: merges at i=0 (+) and i=1 (-)
  auto t3 = bar_differential(A, word1({0, 0, 0}));
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].first == Scalar(1));
  CHECK(t3[1].first == Scalar(-1));
  // square-zero: everything dies
  auto [Z, ZM] = builtin_algebra("square_zero:2", "trivial", Field::rationals());
  for (int len = 2; len <= 4; ++len)
    CHECK(bar_differential(Z, word1(std::vector<int>(len, 0))).empty());
  CHECK_THROWS_AS(bar_differential(A, letter(0)), ValidationError);
}

TEST_CASE("bar differential squares to zero on single-level words") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  const Field& f = A.field;
  for (int len = 2; len <= 6; ++len) {
    std::vector<int> letters(len, 0);
    for (;;) {
      Combo square;
      for (const auto& [c1, w1] : bar_differential(A, word1(letters)))
        if (w1.parts.size() >= 2)
          for (const auto& [c2, w2] : bar_differential(A, w1)) {
            auto [it, fresh] = square.emplace(std::make_pair(0, w2), f.zero());
            it->second = f.add(it->second, f.mul(c1, c2));
            if (f.is_zero(it->second)) square.erase(it);
          }
      CHECK(square.empty());
      int k = len - 1;
      while (k >= 0 && letters[k] == A.dim() - 1) letters[k--] = 0;
      if (k < 0) break;
      ++letters[k];
    }
  }
}

TEST_CASE("shuffle product: signs, commutativity, associativity") {
  auto [A, M] = builtin_algebra("square_zero:2", "trivial", Field::rationals());
  const Field& f = A.field;
  // [a]·[b] = [a|b] - [b|a]
  auto uv = normalize(shuffle_product(A, word1({0}), word1({1})), f);
  REQUIRE(uv.size() == 2);
  CHECK(uv.at({0, word1({0, 1})}) == Scalar(1));
  CHECK(uv.at({0, word1({1, 0})}) == Scalar(-1));
  // graded commutativity: sh(u,v) = (-1)^{|u||v|} sh(v,u)
  std::vector<BarWord> pool = {word1({0}), word1({1}), word1({0, 1}), word1({1, 0}),
                               word1({0, 0, 1})};
  for (const auto& u : pool)
    for (const auto& v : pool) {
      if (u.degree() + v.degree() > 5) continue;
      Combo lhs = normalize(shuffle_product(A, u, v), f);
      Combo rhs = normalize(shuffle_product(A, v, u), f);
      Scalar sgn = (u.degree() * v.degree()) % 2 == 0 ? f.one() : f.neg(f.one());
      for (auto& [k, c] : rhs) c = f.mul(sgn, c);
      CHECK(lhs == rhs);
    }
  // associativity on words of small total degree
  for (const auto& u : pool)
    for (const auto& v : pool)
      for (const auto& w : pool) {
        if (u.degree() + v.degree() + w.degree() > 5) continue;
        Combo lhs, rhs;
        for (const auto& [c1, uv1] : shuffle_product(A, u, v))
          for (const auto& [c2, res] : shuffle_product(A, uv1, w)) {
            auto [it, fresh] = lhs.emplace(std::make_pair(0, res), f.zero());
            it->second = f.add(it->second, f.mul(c1, c2));
            if (f.is_zero(it->second)) lhs.erase(it);
          }
        for (const auto& [c1, vw1] : shuffle_product(A, v, w))
          for (const auto& [c2, res] : shuffle_product(A, u, vw1)) {
            auto [it, fresh] = rhs.emplace(std::make_pair(0, res), f.zero());
            it->second = f.add(it->second, f.mul(c1, c2));
            if (f.is_zero(it->second)) rhs.erase(it);
          }
        CHECK(lhs == rhs);
      }
  CHECK_THROWS_AS(shuffle_product(A, letter(0), word1({0})), ValidationError);
}

TEST_CASE("iterated bar: dimensions and d squared") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  BarComplex b1 = iterated_bar(A, 1, 5);
  for (int m = 0; m <= 5; ++m) {
    long expect = 1;
    for (int i = 0; i <= m; ++i) expect *= A.dim();
    CHECK(b1.dim(m) == expect);
  }
  for (int n = 1; n <= 2; ++n) {
    BarComplex b = iterated_bar(A, n, 6);
    for (int m = 1; m < 6; ++m) CHECK(multiply(b.diff[m], b.diff[m + 1], b.field).is_zero());
  }
  // one-generator square-zero: dimension per degree is the tree count, and
  // the level-one shuffle merges survive
  auto [Z, ZM] = builtin_algebra("square_zero:1", "trivial", Field::rationals());
  BarComplex bz = iterated_bar(Z, 2, 6);
  std::vector<int> fib = {1, 1, 2, 3, 5, 8, 13};
  for (int m = 0; m <= 6; ++m) CHECK(bz.dim(m) == fib[m]);
  CHECK(!bz.diff[3].is_zero());
}

TEST_CASE("twisted complex on the unital module") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  const Field& f = A.field;
  BarComplex tw = twist_complex(A, 1, 6);
  // column of 1 ⊗ [x|x]: bar part -1 ⊗ [x2], twist part 2 x ⊗ [x]
  int col = -1, row_bar = -1, row_tw = -1;
  for (size_t i = 0; i < tw.basis[1].size(); ++i)
    if (tw.basis[1][i].module == 0 && tw.basis[1][i].word == word1({0, 0}))
      col = static_cast<int>(i);
  for (size_t i = 0; i < tw.basis[0].size(); ++i) {
    if (tw.basis[0][i].module == 0 && tw.basis[0][i].word == word1({1})) row_bar = static_cast<int>(i);
    if (tw.basis[0][i].module == 1 && tw.basis[0][i].word == word1({0})) row_tw = static_cast<int>(i);
  }
  REQUIRE(col >= 0);
  Scalar bar_entry = f.zero(), twist_entry = f.zero();
  for (const auto& e : tw.diff[1].entries()) {
    if (e.col != col) continue;
    if (e.row == row_bar) bar_entry = e.value;
    if (e.row == row_tw) twist_entry = e.value;
  }
  CHECK(bar_entry == Scalar(-1));
  CHECK(twist_entry == Scalar(2));
  // the twisting condition: (bar + delta)^2 = 0
  for (int n = 1; n <= 2; ++n) {
    BarComplex t = twist_complex(A, n, 5);
    for (int m = 1; m < 5; ++m) CHECK(multiply(t.diff[m], t.diff[m + 1], t.field).is_zero());
  }
}

TEST_CASE("singleton top fibres contribute no twist") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  // [[x]|[x]]: both innermost brackets have one letter
  BarWord w = nest({word1({0}), word1({0})});
  for (const auto& ev : boundary_events(A, w, true)) CHECK(ev.deleted_letter == -1);
}

TEST_CASE("coefficient complexes") {
  auto [A, K] = builtin_algebra("trunc_poly:3", "trivial", Field::rationals());
  // trivial coefficients: the twist dies and the bar complex survives
  CoefficientComplexes cc = coefficient_complexes(A, K, 2, 5);
  BarComplex plain = iterated_bar(A, 2, 5);
  CHECK(compare_bar_complexes(cc.chain, plain, A, K).equal);
  // chain and cochain Betti numbers agree over a field
  auto [T, TA] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  CoefficientComplexes tc = coefficient_complexes(T, TA, 1, 6);
  CHECK(homology_table(tc.chain) == homology_table(tc.cochain));
}

TEST_CASE("hochschild complex") {
  auto [Z, ZK] = builtin_algebra("square_zero:2", "trivial", Field::rationals());
  BarComplex hz = hochschild(Z, ZK, 5);
  for (int m = 0; m <= 5; ++m) {
    long expect = 1;
    for (int i = 0; i <= m; ++i) expect *= Z.dim();
    CHECK(hz.dim(m) == expect);
    if (m >= 1) CHECK(hz.diff[m].is_zero());
  }
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  BarComplex hh = hochschild(A, M, 8);
  for (int m = 1; m < 8; ++m) CHECK(multiply(hh.diff[m], hh.diff[m + 1], hh.field).is_zero());
  // the assembled n=1 oracle is the Hochschild complex on the nose
  BarComplex assembled = coefficient_complexes(A, M, 1, 8).chain;
  CHECK(compare_bar_complexes(hh, assembled, A, M).equal);
}

TEST_CASE("cochain oracle equality with the tree cochain complex") {
  auto check = [](const char* spec, int n, int D) {
    auto [A, M] = builtin_algebra(spec, "A", Field::rationals());
    GradedComplex ts = build_cochain(dual_loday(A, M), n, D);
    BarComplex bs = coefficient_complexes(A, M, n, D).cochain;
    std::vector<std::vector<int>> to_bar(D + 1);
    for (int m = 0; m <= D; ++m) {
      REQUIRE(ts.dim(m) == bs.dim(m));
      std::map<std::pair<int, BarWord>, int> pos;
      for (size_t i = 0; i < bs.basis[m].size(); ++i)
        pos[{bs.basis[m][i].module, bs.basis[m][i].word}] = static_cast<int>(i);
      to_bar[m].resize(ts.dim(m));
      int idx = 0;
      for (const auto& t : ts.basis[m].trees) {
        int leaves = t.r[t.n - 1] + 1;
        std::vector<int> a(leaves, 0);
        for (;;) {  // tree-side dual basis: tuple outer, module inner
          BarWord w = word_from_tree(t, a);
          for (int c = 0; c < M.dim(); ++c) to_bar[m][idx++] = pos.at({c, w});
          int k = leaves - 1;
          while (k >= 0 && a[k] == A.dim() - 1) a[k--] = 0;
          if (k < 0) break;
          ++a[k];
        }
      }
    }
    for (int m = 0; m < D; ++m) {
      MatrixBuilder mb(bs.dim(m + 1), bs.dim(m), A.field);
      for (const auto& e : ts.diff[m].entries())
        mb.add(to_bar[m + 1][e.row], to_bar[m][e.col], e.value);
      CHECK(mb.build() == bs.diff[m]);
    }
  };
  check("trunc_poly:3", 1, 5);
  check("trunc_poly:2", 2, 4);
}

TEST_CASE("oracle equality with the tree complex") {
  auto [A, M] = builtin_algebra("trunc_poly:3", "A", Field::rationals());
  CompareReport r1 = compare_with_tree_complex(A, M, 1, 6);
  CHECK(r1.equal);
  if (!r1.equal) MESSAGE(r1.mismatch);
  auto [B, BM] = builtin_algebra("trunc_poly:2", "A", Field::rationals());
  CompareReport r2 = compare_with_tree_complex(B, BM, 2, 5);
  CHECK(r2.equal);
  if (!r2.equal) MESSAGE(r2.mismatch);
  // fault injection: a flipped sign is reported with labels
  BarComplex hh = hochschild(A, M, 4);
  BarComplex assembled = coefficient_complexes(A, M, 1, 4).chain;
  const auto& e = hh.diff[2].entries().front();
  MatrixBuilder mb(hh.diff[2].rows(), hh.diff[2].cols(), hh.field);
  for (const auto& en : hh.diff[2].entries()) mb.add(en.row, en.col, en.value);
  mb.add(e.row, e.col, hh.field.mul(hh.field.from_long(-2), e.value));
  hh.diff[2] = mb.build();
  CompareReport bad = compare_bar_complexes(hh, assembled, A, M);
  CHECK(!bad.equal);
  CHECK(bad.mismatch.find("degree 2") != std::string::npos);
  CHECK(bad.mismatch.find("⊗") != std::string::npos);
}
