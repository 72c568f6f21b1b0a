#include "morphism.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace enlab {

namespace {

// Fibre of the (implicit, for n==1) level-j map over the parent of vertex x.
// For j==1 or n==1 the whole level is one fibre.
std::pair<int, int> fibre_range_of(const Tree& t, int j, int x) {
  if (j == 1) return {0, t.r[0] + 1};
  int v = t.parent(j, x);
  int lo = fibre_start(t, j, v);
  return {lo, lo + fibre_size(t, j, v)};
}

std::string level_tag(int i) { return "level " + std::to_string(i); }

}  // namespace

Validity check_valid(const TreeMorphism& h) {
  Validity v;
  auto fail = [&](const std::string& r) {
    v.ok = false;
    v.reasons.push_back(r);
  };
  const Tree& src = h.source;
  const Tree& tgt = h.target;
  if (src.n != tgt.n) {
    fail("source and target level counts differ");
    return v;
  }
  int n = src.n;
  if (static_cast<int>(h.levels.size()) != n) {
    fail("morphism has " + std::to_string(h.levels.size()) + " level maps for n=" +
         std::to_string(n));
    return v;
  }
  for (int i = 1; i <= n; ++i)
    if (static_cast<int>(h.levels[i - 1].size()) != src.width(i)) {
      fail(level_tag(i) + ": map length mismatch");
      return v;
    }

  // Levels below the top: total surjections, order conditions, full squares.
  for (int i = 1; i < n; ++i) {
    const auto& hi = h.levels[i - 1];
    std::vector<bool> hit(tgt.width(i), false);
    for (int x = 0; x < src.width(i); ++x) {
      if (hi[x] < 0 || hi[x] > tgt.r[i - 1]) {
        fail(level_tag(i) + ": value out of range at vertex " + std::to_string(x));
        return v;
      }
      hit[hi[x]] = true;
    }
    for (int y = 0; y < tgt.width(i); ++y)
      if (!hit[y]) fail(level_tag(i) + ": not surjective (misses " + std::to_string(y) + ")");
    if (i == 1) {
      for (int x = 0; x + 1 < src.width(1); ++x)
        if (hi[x] > hi[x + 1])
          fail("level 1: not order-preserving at vertex " + std::to_string(x));
    } else {
      for (int x = 0; x + 1 < src.width(i); ++x)
        if (src.parent(i, x) == src.parent(i, x + 1) && hi[x] > hi[x + 1])
          fail(level_tag(i) + ": not order-preserving on the fibre at vertex " +
               std::to_string(x));
      for (int x = 0; x < src.width(i); ++x)
        if (tgt.parent(i, hi[x]) != h.levels[i - 2][src.parent(i, x)])
          fail(level_tag(i) + ": square does not commute at vertex " + std::to_string(x));
    }
  }

  // Top level.
  const auto& hn = h.levels[n - 1];
  std::vector<bool> hit(tgt.width(n), false);
  for (int x = 0; x < src.width(n); ++x) {
    if (hn[x] != kPlus && (hn[x] < 0 || hn[x] > tgt.r[n - 1])) {
      fail("top level: value out of range at leaf " + std::to_string(x));
      return v;
    }
    if (hn[x] != kPlus) hit[hn[x]] = true;
  }
  for (int y = 0; y < tgt.width(n); ++y)
    if (!hit[y]) fail("top level: image misses " + std::to_string(y));
  for (int x = 0; x < src.width(n);) {
    auto [lo, hi_] = fibre_range_of(src, n, x);
    // alive positions must form an interval
    int first_alive = -1, last_alive = -1;
    for (int y = lo; y < hi_; ++y)
      if (hn[y] != kPlus) {
        if (first_alive < 0) first_alive = y;
        last_alive = y;
      }
    if (first_alive >= 0) {
      for (int y = first_alive; y <= last_alive; ++y)
        if (hn[y] == kPlus) {
          fail("top level: surviving leaves of the fibre at " + std::to_string(lo) +
               " are not an interval");
          break;
        }
      for (int y = first_alive; y < last_alive; ++y)
        if (hn[y] != kPlus && hn[y + 1] != kPlus && hn[y] > hn[y + 1])
          fail("top level: not order-preserving on the fibre at leaf " + std::to_string(y));
    }
    x = hi_;
  }
  if (n >= 2) {
    for (int x = 0; x < src.width(n); ++x)
      if (hn[x] != kPlus && tgt.parent(n, hn[x]) != h.levels[n - 2][src.parent(n, x)])
        fail("top level: square does not commute at leaf " + std::to_string(x));
  }
  return v;
}

bool is_valid(const TreeMorphism& h) { return check_valid(h).ok; }

TreeMorphism identity(const Tree& t) {
  TreeMorphism h;
  h.source = t;
  h.target = t;
  h.levels.resize(t.n);
  for (int i = 1; i <= t.n; ++i) {
    h.levels[i - 1].resize(t.width(i));
    std::iota(h.levels[i - 1].begin(), h.levels[i - 1].end(), 0);
  }
  return h;
}

std::vector<std::vector<int>> survivor_sets(const TreeMorphism& h) {
  std::vector<int> alive;
  for (int x = 0; x < h.source.width(h.n()); ++x)
    if (h.top()[x] != kPlus) alive.push_back(x);
  return surviving_vertices(h.source, alive);
}

bool equivalent(const TreeMorphism& a, const TreeMorphism& b) {
  if (a.source != b.source || a.target != b.target)
    throw ValidationError("equivalent: morphisms have different endpoints");
  return canonical_key(a) == canonical_key(b);
}

std::string canonical_key(const TreeMorphism& h) {
  auto s = survivor_sets(h);
  std::string key = tree_to_string(h.source) + ">" + tree_to_string(h.target) + "|";
  for (int i = 1; i <= h.n(); ++i) {
    if (i > 1) key += ";";
    size_t si = 0;
    for (int x = 0; x < h.source.width(i); ++x) {
      if (x) key += ",";
      bool alive = si < s[i - 1].size() && s[i - 1][si] == x;
      if (alive) {
        key += std::to_string(h.levels[i - 1][x]);
        ++si;
      } else {
        key += (i == h.n()) ? "+" : "*";
      }
    }
  }
  return key;
}

namespace {

// Fills the dead (non-surviving) vertices of levels 1..n-1 with valid values.
// Greedy minimal choice when rng == nullptr, uniform among feasible otherwise.
// Alive values and the top level are taken as-is.
TreeMorphism complete_from_class(const TreeMorphism& h, std::mt19937_64* rng) {
  TreeMorphism out = h;
  int n = h.n();
  auto s = survivor_sets(h);
  for (int i = 1; i < n; ++i) {
    std::vector<bool> alive(h.source.width(i), false);
    for (int x : s[i - 1]) alive[x] = true;
    for (int x = 0; x < h.source.width(i); ++x) {
      if (alive[x]) continue;
      int lo, hi;
      if (i == 1) {
        lo = 0;
        hi = h.target.r[0];
      } else {
        int pv = out.levels[i - 2][h.source.parent(i, x)];
        lo = fibre_start(h.target, i, pv);
        hi = lo + fibre_size(h.target, i, pv) - 1;
      }
      auto [flo, fhi] = fibre_range_of(h.source, i, x);
      int lb = lo;
      if (x > flo) lb = std::max(lb, out.levels[i - 1][x - 1]);
      int ub = hi;
      if (rng) {
        // stay below the next already-fixed alive value in scope
        for (int y = x + 1; y < fhi; ++y)
          if (alive[y]) {
            ub = std::min(ub, out.levels[i - 1][y]);
            break;
          }
      }
      if (lb > ub)
        throw ValidationError("representative completion infeasible; morphism class data is inconsistent");
      int pick = lb;
      if (rng && ub > lb)
        pick = lb + static_cast<int>((*rng)() % static_cast<std::uint64_t>(ub - lb + 1));
      out.levels[i - 1][x] = pick;
    }
  }
  return out;
}

}  // namespace

TreeMorphism canonicalize(const TreeMorphism& h) { return complete_from_class(h, nullptr); }

TreeMorphism random_representative(const TreeMorphism& h, std::mt19937_64& rng) {
  return complete_from_class(h, &rng);
}

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& h) {
  if (g.target != h.source)
    throw ValidationError("compose: target of the first morphism differs from source of the second");
  TreeMorphism out;
  out.source = g.source;
  out.target = h.target;
  int n = g.n();
  out.levels.resize(n);
  for (int i = 1; i < n; ++i) {
    out.levels[i - 1].resize(g.source.width(i));
    for (int x = 0; x < g.source.width(i); ++x)
      out.levels[i - 1][x] = h.levels[i - 1][g.levels[i - 1][x]];
  }
  out.levels[n - 1].resize(g.source.width(n));
  for (int x = 0; x < g.source.width(n); ++x) {
    int gx = g.levels[n - 1][x];
    out.levels[n - 1][x] = (gx == kPlus) ? kPlus : h.levels[n - 1][gx];
  }
  return out;
}

TreeMorphism top_merge(const Tree& t, int i) {
  int n = t.n;
  if (i < 0 || i + 1 > t.r[n - 1])
    throw ValidationError("top_merge: leaf " + std::to_string(i) + " out of range");
  if (n >= 2 && t.parent(n, i) != t.parent(n, i + 1))
    throw ValidationError("top_merge: leaves " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + " lie in different fibres");
  TreeMorphism h;
  h.source = t;
  h.target = t;
  h.target.r[n - 1] -= 1;
  if (n >= 2) h.target.maps[n - 2].erase(h.target.maps[n - 2].begin() + (i + 1));
  h.levels.resize(n);
  for (int l = 1; l < n; ++l) {
    h.levels[l - 1].resize(t.width(l));
    std::iota(h.levels[l - 1].begin(), h.levels[l - 1].end(), 0);
  }
  h.levels[n - 1].resize(t.width(n));
  for (int x = 0; x < t.width(n); ++x) h.levels[n - 1][x] = x <= i ? x : x - 1;
  return h;
}

TreeMorphism delete_leaf(const Tree& t, int i) {
  int n = t.n;
  if (i < 0 || i > t.r[n - 1])
    throw ValidationError("delete_leaf: leaf " + std::to_string(i) + " out of range");
  auto [lo, hi] = fibre_range_of(t, n, i);
  if (hi - lo < 2)
    throw ValidationError("delete_leaf: leaf " + std::to_string(i) +
                          " is alone in its fibre (not a generator)");
  if (i != lo && i != hi - 1)
    throw ValidationError("delete_leaf: leaf " + std::to_string(i) +
                          " is neither minimal nor maximal in its fibre");
  TreeMorphism h;
  h.source = t;
  h.target = t;
  h.target.r[n - 1] -= 1;
  if (n >= 2) h.target.maps[n - 2].erase(h.target.maps[n - 2].begin() + i);
  h.levels.resize(n);
  for (int l = 1; l < n; ++l) {
    h.levels[l - 1].resize(t.width(l));
    std::iota(h.levels[l - 1].begin(), h.levels[l - 1].end(), 0);
  }
  h.levels[n - 1].resize(t.width(n));
  for (int x = 0; x < t.width(n); ++x)
    h.levels[n - 1][x] = x < i ? x : (x == i ? kPlus : x - 1);
  return h;
}

std::vector<Shuffle> enumerate_shuffles(int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("enumerate_shuffles: negative block size");
  std::vector<Shuffle> out;
  // choose the target positions of the left block, lexicographically
  std::vector<int> pos(a);
  auto rec = [&](auto&& self, int k, int from) -> void {
    if (k == a) {
      Shuffle s;
      s.a = a;
      s.b = b;
      s.perm.resize(a + b);
      std::vector<bool> used(a + b, false);
      for (int x = 0; x < a; ++x) {
        s.perm[x] = pos[x];
        used[pos[x]] = true;
      }
      int q = 0;
      for (int y = 0; y < b; ++y) {
        while (used[q]) ++q;
        s.perm[a + y] = q++;
      }
      out.push_back(std::move(s));
      return;
    }
    for (int p = from; p <= a + b - (a - k); ++p) {
      pos[k] = p;
      self(self, k + 1, p + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

int shuffle_sign(const Shuffle& s, const std::vector<int>& left_deg,
                 const std::vector<int>& right_deg) {
  if (static_cast<int>(left_deg.size()) != s.a || static_cast<int>(right_deg.size()) != s.b)
    throw ValidationError("shuffle_sign: degree list sizes do not match the blocks");
  long exponent = 0;
  for (int x = 0; x < s.a; ++x)
    for (int y = 0; y < s.b; ++y)
      if (s.perm[x] > s.perm[s.a + y])
        exponent += static_cast<long>(left_deg[x] + 1) * (right_deg[y] + 1);
  return exponent % 2 == 0 ? 1 : -1;
}

TreeMorphism merge_shuffle(const Tree& t, int j, int i, const Shuffle& s) {
  int n = t.n;
  if (j < 1 || j >= n) throw ValidationError("merge_shuffle: level must satisfy 1 <= j <= n-1");
  if (i < 0 || i + 1 > t.r[j - 1])
    throw ValidationError("merge_shuffle: vertex " + std::to_string(i) + " out of range");
  if (j >= 2 && t.parent(j, i) != t.parent(j, i + 1))
    throw ValidationError("merge_shuffle: vertices " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + " lie in different fibres");
  int a = fibre_size(t, j + 1, i);
  int b = fibre_size(t, j + 1, i + 1);
  if (s.a != a || s.b != b)
    throw ValidationError("merge_shuffle: shuffle blocks (" + std::to_string(s.a) + "," +
                          std::to_string(s.b) + ") do not match fibre sizes (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
  int p = fibre_start(t, j + 1, i);

  // Vertex relabelings per level, levels j+1..n.
  std::vector<std::vector<int>> perm(n + 1);
  perm[j + 1].resize(t.width(j + 1));
  for (int x = 0; x < t.width(j + 1); ++x)
    perm[j + 1][x] = (x < p || x >= p + a + b) ? x : p + s.perm[x - p];
  for (int l = j + 2; l <= n; ++l) {
    // carry each block over a level-(l-1) vertex to its new start
    int cnt = t.width(l - 1);
    std::vector<int> inv(cnt);
    for (int v = 0; v < cnt; ++v) inv[perm[l - 1][v]] = v;
    std::vector<int> newstart(cnt);
    int acc = 0;
    for (int q = 0; q < cnt; ++q) {
      newstart[inv[q]] = acc;
      acc += fibre_size(t, l, inv[q]);
    }
    perm[l].resize(t.width(l));
    for (int x = 0; x < t.width(l); ++x) {
      int v = t.parent(l, x);
      perm[l][x] = newstart[v] + (x - fibre_start(t, l, v));
    }
  }

  // Target tree.
  Tree tgt;
  tgt.n = n;
  tgt.r = t.r;
  tgt.r[j - 1] -= 1;
  tgt.maps = t.maps;
  if (j >= 2) tgt.maps[j - 2].erase(tgt.maps[j - 2].begin() + (i + 1));
  tgt.maps[j + 1 - 2].assign(t.width(j + 1), 0);
  for (int x = 0; x < t.width(j + 1); ++x) {
    int v = t.parent(j + 1, x);
    tgt.maps[j - 1][perm[j + 1][x]] = v <= i ? v : v - 1;
  }
  for (int l = j + 2; l <= n; ++l) {
    tgt.maps[l - 2].assign(t.width(l), 0);
    for (int x = 0; x < t.width(l); ++x)
      tgt.maps[l - 2][perm[l][x]] = perm[l - 1][t.parent(l, x)];
  }
  validate_tree(tgt);

  TreeMorphism h;
  h.source = t;
  h.target = tgt;
  h.levels.resize(n);
  for (int l = 1; l < j; ++l) {
    h.levels[l - 1].resize(t.width(l));
    std::iota(h.levels[l - 1].begin(), h.levels[l - 1].end(), 0);
  }
  h.levels[j - 1].resize(t.width(j));
  for (int x = 0; x < t.width(j); ++x) h.levels[j - 1][x] = x <= i ? x : x - 1;
  for (int l = j + 1; l <= n; ++l) h.levels[l - 1] = perm[l];
  return h;
}

TreeMorphism restriction_morphism(const Tree& t, const std::vector<int>& leaves) {
  std::vector<int> I = leaves;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty()) throw ValidationError("restriction_morphism: empty leaf set");
  int n = t.n;
  for (int x : I)
    if (x < 0 || x > t.r[n - 1]) throw ValidationError("restriction_morphism: leaf out of range");
  // interval condition per top fibre
  std::vector<bool> in(t.width(n), false);
  for (int x : I) in[x] = true;
  for (int x = 0; x < t.width(n);) {
    auto [lo, hi] = fibre_range_of(t, n, x);
    int first = -1, last = -1;
    for (int y = lo; y < hi; ++y)
      if (in[y]) {
        if (first < 0) first = y;
        last = y;
      }
    for (int y = first; first >= 0 && y <= last; ++y)
      if (!in[y])
        throw ValidationError("restriction_morphism: leaves do not meet the fibre at " +
                              std::to_string(lo) + " in an interval");
    x = hi;
  }

  TreeMorphism h;
  h.source = t;
  h.target = restrict_tree(t, I);
  h.levels.resize(n);
  auto s = surviving_vertices(t, I);
  for (int i = 1; i <= n; ++i) {
    h.levels[i - 1].assign(t.width(i), i == n ? kPlus : 0);
    for (size_t k = 0; k < s[i - 1].size(); ++k)
      h.levels[i - 1][s[i - 1][k]] = static_cast<int>(k);
  }
  return canonicalize(h);
}

namespace {

// Weakly increasing maps from c slots into [lo, hi].
void monotone_maps_into(int c, int lo, int hi, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(c);
  auto rec = [&](auto&& self, int k, int from) -> void {
    if (k == c) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur[k] = v;
      self(self, k + 1, v);
    }
  };
  if (lo > hi && c > 0) return;
  rec(rec, 0, lo);
}

// All top-level maps on one fibre [lo, hi) of the source: an alive interval
// plus a weakly increasing map into [tlo, thi], dead leaves sent to +.
std::vector<std::vector<int>> top_fibre_choices(int lo, int hi, int tlo, int thi) {
  std::vector<std::vector<int>> out;
  int c = hi - lo;
  for (int len = 0; len <= c; ++len)
    for (int start = 0; start + len <= c; ++start) {
      if (len == 0 && start > 0) break;  // one empty choice is enough
      std::vector<std::vector<int>> alive;
      monotone_maps_into(len, tlo, thi, alive);
      for (auto& m : alive) {
        std::vector<int> f(c, kPlus);
        for (int k = 0; k < len; ++k) f[start + k] = m[k];
        out.push_back(std::move(f));
      }
    }
  return out;
}

}  // namespace

std::vector<TreeMorphism> enumerate_hom(const Tree& t, const Tree& s) {
  if (t.n != s.n) throw ValidationError("enumerate_hom: trees have different level counts");
  int n = t.n;
  std::vector<TreeMorphism> result;
  for (int i = 0; i < n; ++i)
    if (s.r[i] > t.r[i]) return result;  // surjectivity forces degree descent levelwise

  std::map<std::string, TreeMorphism> classes;
  TreeMorphism h;
  h.source = t;
  h.target = s;
  h.levels.resize(n);

  // level n: per-fibre choices given the level below; checks surjectivity
  auto assemble_top = [&]() {
    std::vector<std::vector<std::vector<int>>> per_fibre;
    std::vector<int> starts;
    for (int x = 0; x < t.width(n);) {
      auto [lo, hi] = fibre_range_of(t, n, x);
      int tlo = 0, thi = s.r[n - 1];
      if (n >= 2) {
        int pv = h.levels[n - 2][t.parent(n, x)];
        tlo = fibre_start(s, n, pv);
        thi = tlo + fibre_size(s, n, pv) - 1;
      }
      per_fibre.push_back(top_fibre_choices(lo, hi, tlo, thi));
      starts.push_back(lo);
      x = hi;
    }
    std::vector<int> top(t.width(n), kPlus);
    auto rec = [&](auto&& self, size_t fi) -> void {
      if (fi == per_fibre.size()) {
        std::vector<bool> hit(s.width(n), false);
        for (int v : top)
          if (v != kPlus) hit[v] = true;
        for (bool b : hit)
          if (!b) return;
        h.levels[n - 1] = top;
        TreeMorphism rep = canonicalize(h);
        assert(is_valid(rep));
        classes.emplace(canonical_key(rep), rep);
        return;
      }
      for (const auto& choice : per_fibre[fi]) {
        std::copy(choice.begin(), choice.end(), top.begin() + starts[fi]);
        self(self, fi + 1);
      }
    };
    rec(rec, 0);
  };

  // levels 2..n-1 fibrewise, then the top
  auto assemble_mid = [&](auto&& self, int i) -> void {
    if (i == n) {
      assemble_top();
      return;
    }
    std::vector<std::vector<std::vector<int>>> per_fibre;
    std::vector<int> starts;
    for (int x = 0; x < t.width(i);) {
      auto [lo, hi] = fibre_range_of(t, i, x);
      int pv = h.levels[i - 2][t.parent(i, x)];
      int tlo = fibre_start(s, i, pv);
      int thi = tlo + fibre_size(s, i, pv) - 1;
      std::vector<std::vector<int>> maps;
      monotone_maps_into(hi - lo, tlo, thi, maps);
      per_fibre.push_back(std::move(maps));
      starts.push_back(lo);
      x = hi;
    }
    std::vector<int> level(t.width(i));
    auto rec = [&](auto&& rself, size_t fi) -> void {
      if (fi == per_fibre.size()) {
        std::vector<bool> hit(s.width(i), false);
        for (int v : level) hit[v] = true;
        for (bool b : hit)
          if (!b) return;
        h.levels[i - 1] = level;
        self(self, i + 1);
        return;
      }
      for (const auto& choice : per_fibre[fi]) {
        std::copy(choice.begin(), choice.end(), level.begin() + starts[fi]);
        rself(rself, fi + 1);
      }
    };
    rec(rec, 0);
  };

  if (n == 1) {
    assemble_top();
  } else {
    for (auto& h1 : monotone_surjections(t.r[0], s.r[0])) {
      h.levels[0] = h1;
      assemble_mid(assemble_mid, 2);
    }
  }

  result.reserve(classes.size());
  for (auto& [k, m] : classes) result.push_back(std::move(m));
  std::sort(result.begin(), result.end(),
            [](const TreeMorphism& a, const TreeMorphism& b) { return a.levels < b.levels; });
  return result;
}

nlohmann::json morphism_to_json(const TreeMorphism& h) {
  nlohmann::json j;
  j["source"] = tree_to_json(h.source);
  j["target"] = tree_to_json(h.target);
  j["levels"] = h.levels;
  return j;
}

TreeMorphism morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("levels"))
    throw ValidationError("morphism literal must contain source, target, levels");
  TreeMorphism h;
  h.source = tree_from_json(j["source"]);
  h.target = tree_from_json(j["target"]);
  h.levels = j["levels"].get<std::vector<std::vector<int>>>();
  auto v = check_valid(h);
  if (!v.ok) {
    std::string msg = "invalid morphism:";
    for (const auto& r : v.reasons) msg += " " + r + ";";
    throw ValidationError(msg);
  }
  return h;
}

std::string morphism_to_string(const TreeMorphism& h) {
  std::string s = "[" + tree_to_string(h.source) + " -> " + tree_to_string(h.target) + ":";
  for (int i = 1; i <= h.n(); ++i) {
    s += i > 1 ? " |" : " ";
    for (size_t x = 0; x < h.levels[i - 1].size(); ++x) {
      int v = h.levels[i - 1][x];
      s += (x ? "," : "") + (v == kPlus ? std::string("+") : std::to_string(v));
    }
  }
  return s + "]";
}

}  // namespace enlab
