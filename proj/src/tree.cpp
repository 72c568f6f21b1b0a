#include "tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace enlab {

bool Tree::operator<(const Tree& o) const {
  if (n != o.n) return n < o.n;
  if (r != o.r) return r < o.r;
  return maps < o.maps;
}

void validate_tree(const Tree& t) {
  if (t.n < 1) throw ValidationError("tree must have at least one level");
  if (static_cast<int>(t.r.size()) != t.n)
    throw ValidationError("tree has " + std::to_string(t.r.size()) + " widths for n=" +
                          std::to_string(t.n));
  for (int j = 1; j <= t.n; ++j)
    if (t.r[j - 1] < 0)
      throw ValidationError("level " + std::to_string(j) + ": negative width");
  if (static_cast<int>(t.maps.size()) != t.n - 1)
    throw ValidationError("tree has " + std::to_string(t.maps.size()) + " maps for n=" +
                          std::to_string(t.n));
  for (int j = 2; j <= t.n; ++j) {
    const auto& f = t.maps[j - 2];
    if (static_cast<int>(f.size()) != t.width(j))
      throw ValidationError("level " + std::to_string(j) + ": map length " +
                            std::to_string(f.size()) + " != " + std::to_string(t.width(j)));
    int prev = -1;
    for (int x = 0; x < t.width(j); ++x) {
      if (f[x] < 0 || f[x] > t.r[j - 2])
        throw ValidationError("level " + std::to_string(j) + ": value out of range at vertex " +
                              std::to_string(x));
      if (f[x] < prev)
        throw ValidationError("level " + std::to_string(j) + ": map not order-preserving at vertex " +
                              std::to_string(x));
      if (f[x] > prev + 1)
        throw ValidationError("level " + std::to_string(j) + ": map not surjective (skips " +
                              std::to_string(prev + 1) + ")");
      prev = f[x];
    }
    if (prev != t.r[j - 2])
      throw ValidationError("level " + std::to_string(j) + ": map not surjective (misses " +
                            std::to_string(prev + 1) + ")");
  }
}

Tree linear_tree(int n) {
  Tree t;
  t.n = n;
  t.r.assign(n, 0);
  t.maps.assign(n - 1, {0});
  return t;
}

Tree corolla(int leaves) {
  Tree t;
  t.n = 1;
  t.r = {leaves - 1};
  return t;
}

int degree(const Tree& t) {
  int d = 0;
  for (int rj : t.r) d += rj + 1;
  return d;
}

int homological_degree(const Tree& t) { return std::accumulate(t.r.begin(), t.r.end(), 0); }

int fibre_start(const Tree& t, int j, int v) {
  const auto& f = t.maps[j - 2];
  return static_cast<int>(std::lower_bound(f.begin(), f.end(), v) - f.begin());
}

int fibre_size(const Tree& t, int j, int v) {
  const auto& f = t.maps[j - 2];
  return static_cast<int>(std::upper_bound(f.begin(), f.end(), v) -
                          std::lower_bound(f.begin(), f.end(), v));
}

std::pair<int, int> descendant_block(const Tree& t, int j, int i, int l) {
  int lo = i, hi = i + 1;
  for (int m = j + 1; m <= l; ++m) {
    const auto& f = t.maps[m - 2];
    lo = static_cast<int>(std::lower_bound(f.begin(), f.end(), lo) - f.begin());
    hi = static_cast<int>(std::lower_bound(f.begin(), f.end(), hi) - f.begin());
  }
  return {lo, hi};
}

EdgeLabeling edge_labels(const Tree& t) {
  EdgeLabeling out;
  out.label.resize(t.n);
  for (int j = 1; j <= t.n; ++j) out.label[j - 1].assign(t.width(j), 0);
  int counter = 0;
  // Depth-first: label the edge down to a vertex, then recurse into its fibre.
  auto dfs = [&](auto&& self, int j, int i) -> void {
    out.label[j - 1][i] = ++counter;
    if (j == t.n) return;
    int lo = fibre_start(t, j + 1, i);
    int sz = fibre_size(t, j + 1, i);
    for (int x = lo; x < lo + sz; ++x) self(self, j + 1, x);
  };
  for (int i = 0; i <= t.r[0]; ++i) dfs(dfs, 1, i);
  assert(counter == degree(t));
  return out;
}

int sign_exponent(const Tree& t, const EdgeLabeling& labels, int j, int i) {
  if (j < 1 || j > t.n || i < 0 || i > t.r[j - 1])
    throw ValidationError("sign_exponent: vertex (" + std::to_string(j) + "," +
                          std::to_string(i) + ") out of range");
  if (j == t.n) return labels.label[j - 1][i];
  int best = 0;
  for (int l = j + 1; l <= t.n; ++l) {
    auto [lo, hi] = descendant_block(t, j, i, l);
    for (int x = lo; x < hi; ++x) best = std::max(best, labels.label[l - 1][x]);
  }
  return best;
}

int sign_exponent(const Tree& t, int j, int i) {
  return sign_exponent(t, edge_labels(t), j, i);
}

Tree subtree(const Tree& t, int j, int i) {
  if (j < 1 || j >= t.n)
    throw ValidationError("subtree: level must satisfy 1 <= j <= n-1");
  if (i < 0 || i > t.r[j - 1]) throw ValidationError("subtree: vertex out of range");
  Tree s;
  s.n = t.n - j;
  s.r.resize(s.n);
  s.maps.resize(s.n - 1);
  std::pair<int, int> prev = {i, i + 1};
  for (int m = 1; m <= s.n; ++m) {
    auto blk = descendant_block(t, j, i, j + m);
    s.r[m - 1] = blk.second - blk.first - 1;
    if (m >= 2) {
      s.maps[m - 2].resize(blk.second - blk.first);
      for (int x = blk.first; x < blk.second; ++x)
        s.maps[m - 2][x - blk.first] = t.parent(j + m, x) - prev.first;
    }
    prev = blk;
  }
  return s;
}

std::vector<std::vector<int>> surviving_vertices(const Tree& t, const std::vector<int>& leaves) {
  std::vector<std::vector<int>> s(t.n);
  s[t.n - 1] = leaves;
  std::sort(s[t.n - 1].begin(), s[t.n - 1].end());
  s[t.n - 1].erase(std::unique(s[t.n - 1].begin(), s[t.n - 1].end()), s[t.n - 1].end());
  for (int j = t.n; j >= 2; --j) {
    std::vector<int>& lower = s[j - 2];
    for (int x : s[j - 1]) {
      int v = t.parent(j, x);
      if (lower.empty() || lower.back() != v) lower.push_back(v);
    }
  }
  return s;
}

Tree restrict_tree(const Tree& t, const std::vector<int>& leaves) {
  if (leaves.empty()) throw ValidationError("restrict: empty leaf set");
  for (int x : leaves)
    if (x < 0 || x > t.r[t.n - 1]) throw ValidationError("restrict: leaf out of range");
  auto s = surviving_vertices(t, leaves);
  Tree out;
  out.n = t.n;
  out.r.resize(t.n);
  out.maps.resize(t.n - 1);
  for (int j = 1; j <= t.n; ++j) out.r[j - 1] = static_cast<int>(s[j - 1].size()) - 1;
  for (int j = 2; j <= t.n; ++j) {
    out.maps[j - 2].resize(s[j - 1].size());
    for (size_t k = 0; k < s[j - 1].size(); ++k) {
      int v = t.parent(j, s[j - 1][k]);
      auto it = std::lower_bound(s[j - 2].begin(), s[j - 2].end(), v);
      out.maps[j - 2][k] = static_cast<int>(it - s[j - 2].begin());
    }
  }
  return out;
}

std::vector<std::vector<int>> monotone_surjections(int a, int b) {
  std::vector<std::vector<int>> out;
  if (b > a || b < 0) return out;
  std::vector<int> cur(a + 1);
  auto rec = [&](auto&& self, int x, int val) -> void {
    if (x == a + 1) {
      if (val == b) out.push_back(cur);
      return;
    }
    // remaining positions must still reach b
    for (int step = 0; step <= 1; ++step) {
      int v = (x == 0) ? 0 : val + step;
      if (x == 0 && step == 1) break;
      if (v > b) continue;
      if (b - v > a - x) continue;  // cannot climb to b any more
      cur[x] = v;
      self(self, x + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Tree> enumerate_trees(int n, const std::vector<int>& signature) {
  if (n < 1 || static_cast<int>(signature.size()) != n)
    throw ValidationError("enumerate_trees: bad signature length");
  for (int v : signature)
    if (v < 0) throw ValidationError("enumerate_trees: negative signature entry");
  std::vector<Tree> out;
  Tree t;
  t.n = n;
  t.r = signature;
  t.maps.resize(n - 1);
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.push_back(t);
      return;
    }
    for (auto& f : monotone_surjections(signature[j - 1], signature[j - 2])) {
      t.maps[j - 2] = f;
      self(self, j + 1);
    }
  };
  rec(rec, 2);
  return out;
}

std::vector<std::vector<int>> signatures_by_degree(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, int j, int prev, int left) -> void {
    if (j == n) {
      if (left >= prev) {
        cur[j - 1] = left;
        out.push_back(cur);
      }
      return;
    }
    for (int v = prev; v * (n - j + 1) <= left; ++v) {
      cur[j - 1] = v;
      self(self, j + 1, v, left - v);
    }
  };
  if (n == 1) {
    if (m >= 0) out.push_back({m});
    return out;
  }
  rec(rec, 1, 0, m);
  return out;
}

std::vector<Tree> enumerate_by_degree(int n, int m) {
  std::vector<Tree> out;
  for (const auto& sig : signatures_by_degree(n, m)) {
    auto trees = enumerate_trees(n, sig);
    out.insert(out.end(), trees.begin(), trees.end());
  }
  return out;
}

nlohmann::json tree_to_json(const Tree& t) {
  nlohmann::json j;
  j["r"] = t.r;
  if (t.n > 1) j["maps"] = t.maps;
  return j;
}

Tree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r") || !j["r"].is_array())
    throw ValidationError("tree literal must be an object with an \"r\" array");
  Tree t;
  t.r = j["r"].get<std::vector<int>>();
  t.n = static_cast<int>(t.r.size());
  if (t.n == 0) throw ValidationError("tree literal: empty \"r\"");
  if (j.contains("maps") && !j["maps"].empty())
    t.maps = j["maps"].get<std::vector<std::vector<int>>>();
  else
    t.maps.clear();
  if (t.n > 1 && static_cast<int>(t.maps.size()) != t.n - 1)
    throw ValidationError("tree literal: expected " + std::to_string(t.n - 1) + " maps");
  validate_tree(t);
  return t;
}

std::string tree_to_string(const Tree& t) {
  std::string s = "r=(";
  for (int j = 0; j < t.n; ++j) s += (j ? "," : "") + std::to_string(t.r[j]);
  s += ")";
  for (int j = 2; j <= t.n; ++j) {
    s += ";f" + std::to_string(j) + "=(";
    for (int x = 0; x < t.width(j); ++x) s += (x ? "," : "") + std::to_string(t.parent(j, x));
    s += ")";
  }
  return s;
}

}  // namespace enlab
