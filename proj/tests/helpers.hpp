#pragma once

// Shared test fixtures: the example matrix families used across the suite,
// seeded random generators, and independent brute-force oracles that
// re-derive the quantities under test straight from their definitions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tdopt/decomp.hpp"
#include "tdopt/graph.hpp"
#include "tdopt/ipsolve.hpp"
#include "tdopt/linalg.hpp"
#include "tdopt/matrix.hpp"
#include "tdopt/matroid.hpp"

namespace testutil {

using namespace tdopt;

// Square golden family: all-ones first row, row i >= 1 carries a 2 at column
// i-1. Every entry is nonzero, so the dual graph is complete and the dual
// tree-depth equals the row count.
inline RatMatrix golden_a(int m) {
  RatMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = 1;
  for (int i = 1; i < m; ++i) a.at(i, i - 1) = 2;
  return a;
}

// The row transform that subtracts the first row from every other row.
inline RatMatrix golden_b(int m) {
  RatMatrix b = RatMatrix::identity(m);
  for (int i = 1; i < m; ++i) b.at(i, 0) = -1;
  return b;
}

// golden_b(m) * golden_a(m): all-ones first row, then the unit rows
// e_0 .. e_{m-2}. Its dual graph is a star centered on row 0.
inline RatMatrix golden_a_prime(int m) {
  RatMatrix a(m, m);
  for (int j = 0; j < m; ++j) a.at(0, j) = 1;
  for (int i = 1; i < m; ++i) a.at(i, i - 1) = 1;
  return a;
}

// m x (m+1): an all-ones column next to J + I. The columns are the ones
// vector plus ones+e_i for each i, so every m of the m+1 columns are
// independent: the column matroid is uniform of rank m on m+1 elements.
// Not free-with-parallels, so branch-depth exceeds 1; it is 2 for m <= 3
// and 3 for m = 4, 5.
inline RatMatrix wide_a(int m) {
  RatMatrix a(m, m + 1);
  for (int i = 0; i < m; ++i) {
    a.at(i, 0) = 1;
    for (int j = 0; j < m; ++j) a.at(i, j + 1) = (i == j) ? 2 : 1;
  }
  return a;
}

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline RatMatrix random_int_matrix(std::mt19937_64& g, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a.at(i, j) = d(g);
  return a;
}

// Zero-heavy variant; sparse matrices give dual graphs with several
// components and therefore branching decomposition trees.
inline RatMatrix random_sparse_matrix(std::mt19937_64& g, int rows, int cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  RatMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int v = d(g);
      a.at(i, j) = (v < -1 || v > 1) ? 0 : v;
    }
  return a;
}

// Regular by construction: unit lower times unit upper triangular, with one
// row scaled by 3/2 so rational entries show up too.
inline RatMatrix random_regular(std::mt19937_64& g, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  RatMatrix l = RatMatrix::identity(n);
  RatMatrix u = RatMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) l.at(i, j) = d(g);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u.at(i, j) = d(g);
  RatMatrix r = l * u;
  if (n > 0) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int row = pick(g);
    for (int j = 0; j < n; ++j) r.at(row, j) *= Rat(Int(3), Int(2));
  }
  return r;
}

inline RatMatrix random_full_row_rank(std::mt19937_64& g, int rows, int cols, bool sparse) {
  for (;;) {
    RatMatrix a = sparse ? random_sparse_matrix(g, rows, cols) : random_int_matrix(g, rows, cols, -2, 2);
    if (rank(a) == rows) return a;
  }
}

inline Vec to_vec(const std::vector<Int>& x) {
  Vec v;
  v.reserve(x.size());
  for (const Int& e : x) v.push_back(Rat(e));
  return v;
}

// Tree-depth by its deletion recursion: td of a connected graph is 1 plus
// the best vertex deletion, td of a disconnected graph is the max over
// components. Exponential; callers keep the vertex count small.
class TreedepthOracle {
 public:
  explicit TreedepthOracle(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {}

  int run() { return n_ == 0 ? 0 : td_of((std::uint32_t{1} << n_) - 1); }

 private:
  std::vector<std::uint32_t> components(std::uint32_t mask) const {
    std::vector<std::uint32_t> out;
    std::uint32_t left = mask;
    while (left) {
      std::uint32_t comp = 0;
      std::uint32_t frontier = std::uint32_t{1} << std::countr_zero(left);
      while (frontier) {
        comp |= frontier;
        std::uint32_t next = 0;
        for (int v = 0; v < n_; ++v)
          if (frontier >> v & 1)
            for (int w : g_.neighbors(v))
              if ((mask >> w & 1) && !(comp >> w & 1)) next |= std::uint32_t{1} << w;
        frontier = next;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  int td_of(std::uint32_t mask) {
    if (!mask) return 0;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    auto comps = components(mask);
    int best = 0;
    if (comps.size() > 1) {
      for (std::uint32_t c : comps) best = std::max(best, td_of(c));
    } else {
      best = n_ + 1;
      for (int v = 0; v < n_; ++v)
        if (mask >> v & 1) best = std::min(best, 1 + td_of(mask & ~(std::uint32_t{1} << v)));
    }
    memo_[mask] = best;
    return best;
  }

  const SimpleGraph& g_;
  int n_;
  std::map<std::uint32_t, int> memo_;
};

inline int treedepth_oracle(const SimpleGraph& g) { return TreedepthOracle(g).run(); }

// Branch-depth straight from the definition: enumerate parent vectors with
// parent[v] < v (every rooted tree on rank+1 nodes appears up to
// relabeling), all element-to-leaf assignments, and test every nonempty
// element subset against the root-path edge bound. Doubly exponential;
// callers keep rank <= 4 and ground <= 6.
inline int branch_depth_oracle(const VectorMatroid& m) {
  const int r = m.rank();
  if (r == 0) return 0;
  const int nodes = r + 1;
  const std::vector<int>& ids = m.ids();
  const int n = static_cast<int>(ids.size());

  int best = r;  // a single-leaf path with rank edges is always valid

  auto consider = [&](const std::vector<int>& par) {
    std::vector<int> dep(nodes, 0);
    int depth = 0;
    for (int v = 1; v < nodes; ++v) {
      dep[v] = dep[par[v]] + 1;
      depth = std::max(depth, dep[v]);
    }
    if (depth >= best) return;

    std::vector<char> has_child(nodes, 0);
    for (int v = 1; v < nodes; ++v) has_child[par[v]] = 1;
    std::vector<int> leaf;
    for (int v = 0; v < nodes; ++v)
      if (!has_child[v]) leaf.push_back(v);
    const int nl = static_cast<int>(leaf.size());

    std::vector<std::uint32_t> pmask(nl, 0);  // edges keyed by their child node
    for (int i = 0; i < nl; ++i)
      for (int v = leaf[i]; v != 0; v = par[v]) pmask[i] |= std::uint32_t{1} << v;

    std::vector<int> assign(n, 0);
    for (;;) {
      bool ok = true;
      for (std::uint32_t sub = 1; ok && sub < (std::uint32_t{1} << n); ++sub) {
        std::uint32_t edges = 0;
        std::vector<int> sel;
        for (int e = 0; e < n; ++e)
          if (sub >> e & 1) {
            edges |= pmask[assign[e]];
            sel.push_back(ids[e]);
          }
        if (m.rank_of(sel) > std::popcount(edges)) ok = false;
      }
      if (ok) {
        best = depth;
        return;
      }
      int k = 0;
      for (; k < n; ++k) {
        if (++assign[k] < nl) break;
        assign[k] = 0;
      }
      if (k == n) break;
    }
  };

  std::vector<int> par(nodes, -1);
  std::function<void(int)> gen = [&](int v) {
    if (v == nodes) {
      consider(par);
      return;
    }
    for (int p = 0; p < v; ++p) {
      par[v] = p;
      gen(v + 1);
    }
  };
  gen(1);
  return best;
}

// Random elimination forest of a graph: pick a random vertex per component
// as the root and recurse on the remaining components. The closure of the
// result always contains the graph.
inline RootedForest random_elimination_forest(std::mt19937_64& g, const SimpleGraph& graph) {
  const int n = graph.vertex_count();
  RootedForest f;
  f.parent.assign(n, -1);

  std::function<void(std::vector<int>, int)> peel = [&](std::vector<int> comp, int par) {
    std::uniform_int_distribution<std::size_t> d(0, comp.size() - 1);
    const int v = comp[d(g)];
    f.parent[v] = par;
    std::set<int> rest(comp.begin(), comp.end());
    rest.erase(v);
    while (!rest.empty()) {
      std::vector<int> cc;
      std::vector<int> stack{*rest.begin()};
      std::set<int> seen{*rest.begin()};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        cc.push_back(x);
        for (int w : graph.neighbors(x))
          if (rest.count(w) && !seen.count(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
      for (int x : cc) rest.erase(x);
      peel(cc, v);
    }
  };

  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int w : graph.neighbors(x))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    peel(comp, -1);
  }
  return f;
}

// A valid decomposition of column_matroid(a) built from a random elimination
// forest of the dual graph; a must have full row rank.
inline DepthDecomposition random_decomposition(std::mt19937_64& g, const RatMatrix& a) {
  return from_dual_forest(a, random_elimination_forest(g, dual_graph(a)));
}

inline ObjectiveTerm random_term(std::mt19937_64& g) {
  std::uniform_int_distribution<int> kind(0, 2), coef(-2, 2), lead(0, 2), shift(-1, 1);
  switch (kind(g)) {
    case 0:
      return ObjectiveTerm::linear(Rat(coef(g)));
    case 1:
      return ObjectiveTerm::quadratic(Rat(lead(g)), Rat(coef(g)));
    default: {
      // convex by sampling (x - c)^2 + s x at three points
      const int c = shift(g), s = coef(g);
      std::vector<std::pair<Int, Rat>> pts;
      for (int x : {-2, 0, 2}) pts.push_back({Int(x), Rat((x - c) * (x - c) + s * x)});
      return ObjectiveTerm::pwl(std::move(pts));
    }
  }
}

// An instance with a finite box and a planted feasible point.
struct RandomInstance {
  IPInstance inst;
  std::vector<Int> seed_point;
};

inline RandomInstance random_feasible_instance(std::mt19937_64& g, int vars, int rows) {
  std::uniform_int_distribution<int> width(1, 4), low(-2, 2);
  RandomInstance out;
  out.inst.a = random_int_matrix(g, rows, vars, -2, 2);
  for (int j = 0; j < vars; ++j) {
    const int l = low(g), w = width(g);
    out.inst.lower.push_back(Int(l));
    out.inst.upper.push_back(Int(l + w));
    std::uniform_int_distribution<int> inside(l, l + w);
    out.seed_point.push_back(Int(inside(g)));
  }
  out.inst.b = out.inst.a * to_vec(out.seed_point);
  for (int j = 0; j < vars; ++j) out.inst.objective.push_back(random_term(g));
  return out;
}

// Every integer point of the finite box satisfying a x = b, ascending lex.
inline std::vector<std::vector<Int>> enumerate_feasible(const IPInstance& inst) {
  std::vector<std::vector<Int>> out;
  const int n = inst.vars();
  std::vector<Int> x(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      if (inst.is_feasible(x)) out.push_back(x);
      return;
    }
    for (Int v = *inst.lower[j]; v <= *inst.upper[j]; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace testutil
