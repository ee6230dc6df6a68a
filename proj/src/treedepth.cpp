#include "tdopt/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tdopt/errors.hpp"

namespace tdopt {

namespace {

// Solver for one connected component, vertices relabeled 0..k-1 (k <= 32).
class ComponentSolver {
 public:
  ComponentSolver(const SimpleGraph& g, const std::vector<int>& verts) : verts_(verts) {
    int k = static_cast<int>(verts.size());
    nbr_.assign(k, 0);
    std::unordered_map<int, int> local;
    for (int i = 0; i < k; ++i) local[verts[i]] = i;
    for (int i = 0; i < k; ++i)
      for (int w : g.neighbors(verts[i])) {
        auto it = local.find(w);
        if (it != local.end()) nbr_[i] |= uint32_t(1) << it->second;
      }
  }

  // Fills parents (global labels) and returns the component tree-depth.
  int solve(std::vector<int>& parent_out) {
    uint32_t all = verts_.size() == 32 ? ~uint32_t(0)
                                       : (uint32_t(1) << verts_.size()) - 1;
    int value = best(all);
    build(all, -1, parent_out);
    return value;
  }

 private:
  struct Entry {
    int value;
    int root;  // local index of the optimal root
  };

  std::vector<uint32_t> components(uint32_t mask) const {
    std::vector<uint32_t> out;
    uint32_t rest = mask;
    while (rest) {
      uint32_t seed = rest & (~rest + 1);
      uint32_t comp = seed, frontier = seed;
      while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= nbr_[v] & mask & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      rest &= ~comp;
    }
    return out;
  }

  // Minimum height over rooted forests covering the induced subgraph on mask;
  // mask is connected by construction.
  int best(uint32_t mask) {
    if (std::popcount(mask) == 1) {
      memo_[mask] = {1, std::countr_zero(mask)};
      return 1;
    }
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second.value;
    Entry e{static_cast<int>(verts_.size()) + 1, -1};
    uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int worst = 0;
      for (uint32_t comp : components(mask & ~(uint32_t(1) << v)))
        worst = std::max(worst, best(comp));
      if (1 + worst < e.value) e = {1 + worst, v};
    }
    memo_[mask] = e;
    return e.value;
  }

  void build(uint32_t mask, int parent_global, std::vector<int>& parent_out) {
    int root = memo_.at(mask).root;
    parent_out[verts_[root]] = parent_global;
    for (uint32_t comp : components(mask & ~(uint32_t(1) << root)))
      build(comp, verts_[root], parent_out);
  }

  std::vector<int> verts_;
  std::vector<uint32_t> nbr_;
  std::unordered_map<uint32_t, Entry> memo_;
};

std::vector<std::vector<int>> graph_components(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, verts;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

// Greedy: root at the vertex whose removal leaves the smallest largest piece.
void greedy_build(const SimpleGraph& g, const std::vector<int>& verts, int parent,
                  std::vector<int>& parent_out) {
  if (verts.empty()) return;
  if (verts.size() == 1) {
    parent_out[verts[0]] = parent;
    return;
  }
  std::vector<bool> in(g.vertex_count(), false);
  for (int v : verts) in[v] = true;
  auto pieces_without = [&](int r) {
    std::vector<std::vector<int>> pieces;
    std::vector<bool> seen(g.vertex_count(), false);
    seen[r] = true;
    for (int s : verts) {
      if (seen[s]) continue;
      std::vector<int> stack{s}, piece;
      seen[s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        piece.push_back(v);
        for (int w : g.neighbors(v))
          if (in[w] && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      std::sort(piece.begin(), piece.end());
      pieces.push_back(std::move(piece));
    }
    return pieces;
  };
  int best_root = verts[0];
  std::size_t best_worst = verts.size() + 1;
  for (int r : verts) {
    std::size_t worst = 0;
    for (const auto& p : pieces_without(r)) worst = std::max(worst, p.size());
    if (worst < best_worst) {
      best_worst = worst;
      best_root = r;
    }
  }
  parent_out[best_root] = parent;
  for (const auto& p : pieces_without(best_root)) greedy_build(g, p, best_root, parent_out);
}

}  // namespace

TreedepthResult treedepth_exact(const SimpleGraph& g, const Limits& lim) {
  if (g.vertex_count() > lim.td_max_vertices || g.vertex_count() > 32)
    throw SizeLimit("treedepth: " + std::to_string(g.vertex_count()) +
                    " vertices exceed the exact-search bound");
  TreedepthResult out;
  out.forest.parent.assign(g.vertex_count(), -1);
  for (const auto& verts : graph_components(g)) {
    ComponentSolver solver(g, verts);
    out.value = std::max(out.value, solver.solve(out.forest.parent));
  }
  out.exact = true;
  return out;
}

TreedepthResult treedepth_bound(const SimpleGraph& g) {
  TreedepthResult out;
  out.forest.parent.assign(g.vertex_count(), -1);
  for (const auto& verts : graph_components(g))
    greedy_build(g, verts, -1, out.forest.parent);
  out.value = out.forest.height();
  out.exact = false;
  return out;
}

TreedepthResult treedepth(const SimpleGraph& g, const Limits& lim) {
  if (g.vertex_count() <= lim.td_max_vertices && g.vertex_count() <= 32)
    return treedepth_exact(g, lim);
  return treedepth_bound(g);
}

}  // namespace tdopt
