#include "tdopt/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>

#include "tdopt/errors.hpp"
#include "tdopt/linalg.hpp"

namespace tdopt {

int RootedTree::root() const {
  int r = -1;
  for (int v = 0; v < size(); ++v)
    if (parent[v] < 0) {
      if (r >= 0) throw Error("tree: multiple roots");
      r = v;
    }
  if (r < 0) throw Error("tree: no root");
  return r;
}

int RootedTree::depth_of(int v) const {
  int d = 0;
  for (int a = parent[v]; a >= 0; a = parent[a]) ++d;
  return d;
}

int RootedTree::depth() const {
  int d = 0;
  for (int v = 0; v < size(); ++v) d = std::max(d, depth_of(v));
  return d;
}

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<std::vector<int>> ch(size());
  for (int v = 0; v < size(); ++v)
    if (parent[v] >= 0) ch[parent[v]].push_back(v);
  return ch;
}

std::vector<int> RootedTree::leaves() const {
  auto ch = children();
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (ch[v].empty()) out.push_back(v);
  return out;
}

bool RootedTree::is_path() const {
  for (const auto& c : children())
    if (c.size() > 1) return false;
  return true;
}

std::vector<int> RootedTree::path_from_root(int v) const {
  std::vector<int> path;
  for (int x = v; x >= 0; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> RootedTree::subtree(int v) const {
  auto ch = children();
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int c : ch[x]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void RootedTree::check() const {
  if (size() == 0) throw Error("tree: empty");
  root();  // throws unless exactly one
  int n = size();
  for (int v = 0; v < n; ++v) {
    if (parent[v] >= n || parent[v] == v) throw Error("tree: bad parent entry");
    int steps = 0;
    for (int a = parent[v]; a >= 0; a = parent[a])
      if (++steps > n) throw Error("tree: parent cycle");
  }
}

namespace {

// Used leaves, their element groups, and their root-path edge sets.
struct LeafTable {
  std::vector<int> used;                        // leaf nodes carrying elements
  std::vector<std::vector<int>> ids;            // per used leaf
  std::vector<std::vector<int>> path_nodes;     // non-root nodes on the root path
};

LeafTable leaf_table(const DepthDecomposition& d) {
  LeafTable t;
  std::map<int, std::vector<int>> groups;
  for (const auto& [id, leaf] : d.leaf_map) groups[leaf].push_back(id);
  for (const auto& [leaf, ids] : groups) {
    t.used.push_back(leaf);
    t.ids.push_back(ids);
    std::vector<int> path = d.tree.path_from_root(leaf);
    path.erase(path.begin());  // drop the root: entries now stand for edges
    t.path_nodes.push_back(std::move(path));
  }
  return t;
}

}  // namespace

bool validate(const VectorMatroid& m, const DepthDecomposition& d, const Limits& lim) {
  d.tree.check();
  std::set<int> leaf_set;
  for (int v : d.tree.leaves()) leaf_set.insert(v);
  for (int id : m.ids())
    if (!d.leaf_map.count(id)) return false;
  if (d.leaf_map.size() != static_cast<std::size_t>(m.size())) return false;
  for (const auto& [id, leaf] : d.leaf_map)
    if (!leaf_set.count(leaf)) return false;
  if (d.tree.size() - 1 != m.rank()) return false;

  LeafTable t = leaf_table(d);
  int u = static_cast<int>(t.used.size());
  if (u > lim.validate_max_leaves)
    throw SizeLimit("validate: " + std::to_string(u) + " used leaves exceed the bound");
  // Every leaf must carry an element: the full ground set otherwise misses the
  // unused leaf's pendant edge and the rank bound cannot be met.
  if (u < static_cast<int>(leaf_set.size())) return false;

  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << u); ++mask) {
    std::vector<char> edge_seen(d.tree.size(), 0);
    int edges = 0;
    std::vector<int> ids;
    for (int i = 0; i < u; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int v : t.path_nodes[i])
        if (!edge_seen[v]) {
          edge_seen[v] = 1;
          ++edges;
        }
      ids.insert(ids.end(), t.ids[i].begin(), t.ids[i].end());
    }
    if (m.rank_of(ids) > edges) return false;
  }
  return true;
}

DepthDecomposition from_dual_forest(const RatMatrix& a, const RootedForest& f) {
  int m = a.rows();
  if (f.size() != m) throw WitnessInvalid("from_dual_forest: forest size != row count");
  f.check();
  if (rank(a) != m) throw RankDeficient("from_dual_forest: rows are dependent");
  SimpleGraph gd = dual_graph(a);
  SimpleGraph cl = closure(f);
  for (auto [u, v] : gd.edges())
    if (!cl.has_edge(u, v))
      throw WitnessInvalid("from_dual_forest: dual edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") not covered by the forest");

  // Tree: forest plus a fresh root above its roots. Node i == row i, root == m.
  DepthDecomposition d;
  d.tree.parent.assign(m + 1, -1);
  for (int v = 0; v < m; ++v) d.tree.parent[v] = f.parent[v] < 0 ? m : f.parent[v];
  d.tree.parent[m] = -1;

  std::vector<int> leaves = d.tree.leaves();
  auto is_below = [&](int node, int anc) {
    for (int x = node; x >= 0; x = d.tree.parent[x])
      if (x == anc) return true;
    return false;
  };
  for (int j = 0; j < a.cols(); ++j) {
    // A column's support rows are pairwise adjacent in the dual graph, so the
    // closure property puts them on one root path; the deepest of them has the
    // rest as ancestors. Any leaf under it covers the whole support.
    int deepest = -1, best_depth = -1;
    for (int i = 0; i < m; ++i)
      if (!a.at(i, j).is_zero()) {
        int dep = d.tree.depth_of(i);
        if (dep > best_depth) {
          best_depth = dep;
          deepest = i;
        }
      }
    int pick = -1;
    for (int leaf : leaves)
      if (deepest < 0 || is_below(leaf, deepest)) {
        pick = leaf;
        break;
      }
    if (pick < 0) throw Error("from_dual_forest: no leaf under a support row");
    d.leaf_map[j] = pick;
  }
  try {
    if (!validate(VectorMatroid::column_matroid(a), d))
      throw WitnessInvalid("from_dual_forest: constructed decomposition is invalid");
  } catch (const SizeLimit&) {
    // Too many leaves for the subset check; construction is sound by the
    // support-chain argument above.
  }
  return d;
}

std::vector<Branch> primary_branches(const RootedTree& t) {
  auto ch = t.children();
  int v = t.root();
  while (ch[v].size() == 1) v = ch[v][0];
  if (ch[v].empty()) return {};  // rooted path
  std::vector<Branch> out;
  for (int c : ch[v]) {
    Branch b;
    b.attach = v;
    b.top = c;
    b.nodes = t.subtree(c);
    b.nodes.push_back(v);
    std::sort(b.nodes.begin(), b.nodes.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Branch& x, const Branch& y) { return x.top < y.top; });
  return out;
}

namespace {

std::vector<int> ids_below(const DepthDecomposition& d, const Branch& s) {
  std::vector<int> sub = d.tree.subtree(s.top);
  std::set<int> nodes(sub.begin(), sub.end());
  std::vector<int> out;
  for (const auto& [id, leaf] : d.leaf_map)
    if (nodes.count(leaf)) out.push_back(id);
  return out;
}

long leaf_depth_sum(const RootedTree& t) {
  long sum = 0;
  for (int leaf : t.leaves()) sum += t.depth_of(leaf);
  return sum;
}

}  // namespace

bool is_at_capacity(const VectorMatroid& m, const DepthDecomposition& d, const Branch& s) {
  int r = m.rank_of(ids_below(d, s));
  return r == s.edge_count() + d.tree.depth_of(s.attach);
}

DepthDecomposition repair_capacity(const VectorMatroid& m, DepthDecomposition d,
                                   std::vector<long>* measure_trace, const Limits& lim) {
  if (measure_trace) measure_trace->push_back(leaf_depth_sum(d.tree));
  long guard = static_cast<long>(d.tree.size()) * d.tree.size() + 8;
  while (true) {
    if (d.tree.is_path()) break;
    std::vector<Branch> branches = primary_branches(d.tree);
    const Branch* victim = nullptr;
    for (const Branch& b : branches)
      if (!is_at_capacity(m, d, b)) {
        victim = &b;
        break;
      }
    if (!victim) break;
    int attach = victim->attach;
    if (d.tree.parent[attach] < 0)
      throw CapacityViolated(
          "repair_capacity: an under-capacity branch at the root; the decomposition "
          "cannot have been valid");
    d.tree.parent[victim->top] = d.tree.parent[attach];
    if (measure_trace) measure_trace->push_back(leaf_depth_sum(d.tree));
    if (--guard < 0) throw Error("repair_capacity: no progress");
  }
  try {
    if (!validate(m, d, lim))
      throw CapacityViolated("repair_capacity: result no longer validates");
  } catch (const SizeLimit&) {
    // Too many leaves to re-validate; the moves themselves preserve validity.
  }
  return d;
}

namespace {

Subspace intersection_subspace_impl(const VectorMatroid& m, const DepthDecomposition& d,
                                    ExtendStats* stats) {
  if (d.tree.is_path())
    throw Error("intersection_subspace: a rooted path has no primary branches");
  std::vector<Branch> branches = primary_branches(d.tree);
  for (const Branch& b : branches)
    if (!is_at_capacity(m, d, b))
      throw CapacityViolated("intersection_subspace: branch is not at capacity");
  int h = d.tree.depth_of(branches[0].attach);
  std::vector<Subspace> hulls;
  hulls.reserve(branches.size());
  for (const Branch& b : branches) hulls.push_back(m.span_of(ids_below(d, b)));
  Subspace k = intersect(hulls[0], hulls[1]);
  for (std::size_t i = 0; i < hulls.size(); ++i)
    for (std::size_t j = i + 1; j < hulls.size(); ++j) {
      if (stats) ++stats->pairwise_checks;
      if (!(intersect(hulls[i], hulls[j]) == k))
        throw CapacityViolated("intersection_subspace: pairwise hull intersections differ");
    }
  if (k.dim() != h)
    throw CapacityViolated("intersection_subspace: dim " + std::to_string(k.dim()) +
                           " != attach depth " + std::to_string(h));
  return k;
}

}  // namespace

Subspace intersection_subspace(const VectorMatroid& m, const DepthDecomposition& d) {
  return intersection_subspace_impl(m, d, nullptr);
}

namespace {

// Branch as a standalone decomposition: nodes renumbered ascending, attach at
// the root. Returns the local decomposition plus local -> original node ids.
std::pair<DepthDecomposition, std::vector<int>> extract_branch(const DepthDecomposition& d,
                                                               const Branch& s) {
  std::vector<int> nodes = s.nodes;  // ascending, includes attach
  std::map<int, int> local;
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
  DepthDecomposition out;
  out.tree.parent.assign(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    int v = nodes[i];
    if (v == s.attach) continue;
    int p = v == s.top ? s.attach : d.tree.parent[v];
    out.tree.parent[i] = local.at(p);
  }
  std::set<int> below(nodes.begin(), nodes.end());
  for (const auto& [id, leaf] : d.leaf_map)
    if (below.count(leaf) && leaf != s.attach) out.leaf_map[id] = local.at(leaf);
  return {out, nodes};
}

ExtendedDepthDecomposition extend_rec(const VectorMatroid& m, const DepthDecomposition& d,
                                      ExtendStats* stats, const Limits& lim) {
  std::vector<long> trace;
  DepthDecomposition fixed = repair_capacity(m, d, &trace, lim);
  if (stats) stats->repair_moves += static_cast<long>(trace.size()) - 1;

  if (fixed.tree.is_path()) {
    if (stats) ++stats->path_steps;
    int r = m.rank();
    std::vector<int> ids = m.ids();
    std::sort(ids.begin(), ids.end());
    std::vector<Vec> basis;
    for (int id : ids) {
      if (static_cast<int>(basis.size()) == r) break;
      std::vector<Vec> trial = basis;
      trial.push_back(m.vector_of(id));
      if (Subspace::span_of(m.ambient(), trial).dim() == static_cast<int>(trial.size()))
        basis = std::move(trial);
    }
    if (static_cast<int>(basis.size()) != r)
      throw Error("extend: ground set does not span its own rank");
    ExtendedDepthDecomposition out;
    out.tree = fixed.tree;
    out.leaf_map = fixed.leaf_map;
    auto ch = fixed.tree.children();
    int v = fixed.tree.root();
    int depth = 0;
    while (!ch[v].empty()) {
      v = ch[v][0];
      out.basis_map[v] = basis[depth++];
    }
    return out;
  }

  if (stats) ++stats->branching_steps;
  std::vector<Branch> branches = primary_branches(fixed.tree);
  Subspace k = intersection_subspace_impl(m, fixed, stats);
  int h = fixed.tree.depth_of(branches[0].attach);

  std::vector<ExtendedDepthDecomposition> parts;
  for (const Branch& b : branches) {
    std::vector<int> sub_ids = ids_below(fixed, b);
    VectorMatroid mi = m.contract_to_quotient(sub_ids, k);
    auto [di, old_nodes] = extract_branch(fixed, b);
    parts.push_back(extend_rec(mi, di, stats, lim));
  }

  // Reassemble: a path of h edges from the root carrying K's basis, with every
  // part hanging from the path's end.
  ExtendedDepthDecomposition out;
  out.tree.parent.assign(h + 1, -1);
  for (int j = 1; j <= h; ++j) {
    out.tree.parent[j] = j - 1;
    out.basis_map[j] = k.basis()[j - 1];
  }
  int z = h;
  for (const ExtendedDepthDecomposition& part : parts) {
    int proot = part.tree.root();
    std::map<int, int> to_global;
    to_global[proot] = z;
    for (int v = 0; v < part.tree.size(); ++v) {
      if (v == proot) continue;
      int g = out.tree.size();
      out.tree.parent.push_back(-2);  // placeholder
      to_global[v] = g;
    }
    for (int v = 0; v < part.tree.size(); ++v) {
      if (v == proot) continue;
      out.tree.parent[to_global.at(v)] = to_global.at(part.tree.parent[v]);
    }
    for (const auto& [node, vec] : part.basis_map) out.basis_map[to_global.at(node)] = vec;
    for (const auto& [id, leaf] : part.leaf_map) out.leaf_map[id] = to_global.at(leaf);
  }
  return out;
}

}  // namespace

ExtendedDepthDecomposition extend(const VectorMatroid& m, const DepthDecomposition& d,
                                  ExtendStats* stats, const Limits& lim) {
  try {
    if (!validate(m, d, lim)) throw CapacityViolated("extend: input does not validate");
  } catch (const SizeLimit&) {
    // Leaf count beyond the validation cap; proceed on the caller's word.
  }
  ExtendedDepthDecomposition out = extend_rec(m, d, stats, lim);
  if (out.tree.depth() > d.tree.depth())
    throw Error("extend: depth increased, which the construction forbids");
  try {
    if (!validate_extended(m, out, lim))
      throw Error("extend: result fails its own invariants");
  } catch (const SizeLimit&) {
  }
  return out;
}

bool validate_extended(const VectorMatroid& m, const ExtendedDepthDecomposition& e,
                       const Limits& lim) {
  DepthDecomposition d{e.tree, e.leaf_map};
  if (!validate(m, d, lim)) return false;
  int root = e.tree.root();
  if (static_cast<int>(e.basis_map.size()) != e.tree.size() - 1) return false;
  std::vector<Vec> image;
  for (int v = 0; v < e.tree.size(); ++v) {
    if (v == root) {
      if (e.basis_map.count(v)) return false;
      continue;
    }
    auto it = e.basis_map.find(v);
    if (it == e.basis_map.end()) return false;
    if (static_cast<int>(it->second.size()) != m.ambient()) return false;
    image.push_back(it->second);
  }
  if (Subspace::span_of(m.ambient(), image).dim() != static_cast<int>(image.size()))
    return false;
  if (static_cast<int>(image.size()) != m.rank()) return false;
  for (int id : m.ids()) {
    std::vector<int> path = e.tree.path_from_root(e.leaf_map.at(id));
    std::vector<Vec> along;
    for (int v : path)
      if (v != root) along.push_back(e.basis_map.at(v));
    if (!Subspace::span_of(m.ambient(), along).contains(m.vector_of(id))) return false;
  }
  return true;
}

namespace {

// Unlabeled rooted tree shapes, canonical by sorted child encodings.
struct Shape {
  std::vector<Shape> kids;
  int nodes = 1;
  int depth = 0;
  std::string enc = "()";
};

Shape make_shape(std::vector<Shape> kids) {
  Shape s;
  std::sort(kids.begin(), kids.end(), [](const Shape& a, const Shape& b) { return a.enc < b.enc; });
  s.kids = std::move(kids);
  s.nodes = 1;
  s.depth = 0;
  std::string enc = "(";
  for (const Shape& k : s.kids) {
    s.nodes += k.nodes;
    s.depth = std::max(s.depth, k.depth + 1);
    enc += k.enc;
  }
  enc += ")";
  s.enc = std::move(enc);
  return s;
}

const std::vector<Shape>& shapes_with_nodes(int n) {
  static std::vector<std::vector<Shape>> memo{{}, {make_shape({})}};
  while (static_cast<int>(memo.size()) <= n) {
    int target = static_cast<int>(memo.size());
    // Catalog of candidate subtrees, ordered; multisets chosen with
    // non-decreasing catalog index so each combination appears once.
    std::vector<const Shape*> catalog;
    for (int s = 1; s < target; ++s)
      for (const Shape& sh : memo[s]) catalog.push_back(&sh);
    std::vector<Shape> result;
    std::vector<Shape> chosen;
    auto dfs = [&](auto&& self, int start, int remaining) -> void {
      if (remaining == 0) {
        result.push_back(make_shape(chosen));
        return;
      }
      for (std::size_t i = start; i < catalog.size(); ++i) {
        if (catalog[i]->nodes > remaining) continue;
        chosen.push_back(*catalog[i]);
        self(self, static_cast<int>(i), remaining - catalog[i]->nodes);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0, target - 1);
    memo.push_back(std::move(result));
  }
  return memo[n];
}

RootedTree shape_to_tree(const Shape& s) {
  RootedTree t;
  t.parent.push_back(-1);
  auto emit = [&](auto&& self, const Shape& sh, int my_id) -> void {
    for (const Shape& k : sh.kids) {
      int id = t.size();
      t.parent.push_back(my_id);
      self(self, k, id);
    }
  };
  emit(emit, s, 0);
  return t;
}

// Marked-leaf encoding: leaves with equal encodings are automorphic images of
// one another, so the first element only needs one of each.
std::string marked_encoding(const RootedTree& t, const std::vector<std::vector<int>>& ch,
                            int node, int marked) {
  std::vector<std::string> subs;
  for (int c : ch[node]) subs.push_back(marked_encoding(t, ch, c, marked));
  std::sort(subs.begin(), subs.end());
  std::string out = node == marked ? "(*" : "(";
  for (const std::string& s : subs) out += s;
  out += ")";
  return out;
}

class AssignmentSearch {
 public:
  AssignmentSearch(const VectorMatroid& m) : m_(m) {
    ids_ = m.ids();
    std::sort(ids_.begin(), ids_.end());
    n_ = static_cast<int>(ids_.size());
  }

  bool search(const RootedTree& t, DepthDecomposition& out) {
    leaves_ = t.leaves();
    int l = static_cast<int>(leaves_.size());
    if (l > n_ || l > 20) return false;
    auto ch = t.children();

    path_mask_.assign(l, 0);
    for (int i = 0; i < l; ++i)
      for (int v : t.path_from_root(leaves_[i]))
        if (t.parent[v] >= 0) path_mask_[i] |= std::uint32_t(1) << v;
    cap_.assign(std::size_t(1) << l, 0);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << l); ++s) {
      std::uint32_t nodes = 0;
      for (int i = 0; i < l; ++i)
        if (s >> i & 1) nodes |= path_mask_[i];
      cap_[s] = std::popcount(nodes);
    }
    subsets_containing_.assign(l, {});
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << l); ++s)
      for (int i = 0; i < l; ++i)
        if (s >> i & 1) subsets_containing_[i].push_back(s);

    first_candidates_.clear();
    std::set<std::string> seen;
    for (int i = 0; i < l; ++i)
      if (seen.insert(marked_encoding(t, ch, t.root(), leaves_[i])).second)
        first_candidates_.push_back(i);

    leaf_elems_.assign(l, 0);
    assigned_.assign(n_, -1);
    if (!dfs(0)) return false;
    out.tree = t;
    out.leaf_map.clear();
    for (int k = 0; k < n_; ++k) out.leaf_map[ids_[k]] = leaves_[assigned_[k]];
    return true;
  }

 private:
  int rank_of_mask(std::uint32_t mask) {
    auto it = rank_memo_.find(mask);
    if (it != rank_memo_.end()) return it->second;
    RatMatrix mm(m_.ambient(), std::popcount(mask));
    int col = 0;
    for (int k = 0; k < n_; ++k)
      if (mask >> k & 1) {
        const Vec& v = m_.vector_of(ids_[k]);
        for (int i = 0; i < m_.ambient(); ++i) mm.at(i, col) = v[i];
        ++col;
      }
    int r = rank(mm);
    rank_memo_[mask] = r;
    return r;
  }

  bool dfs(int pos) {
    int l = static_cast<int>(leaves_.size());
    if (pos == n_) {
      for (int i = 0; i < l; ++i)
        if (leaf_elems_[i] == 0) return false;
      return true;
    }
    int unused = 0;
    for (int i = 0; i < l; ++i)
      if (leaf_elems_[i] == 0) ++unused;
    if (n_ - pos < unused) return false;

    const std::vector<int>& cands =
        pos == 0 ? first_candidates_ : all_leaves(l);
    for (int li : cands) {
      leaf_elems_[li] |= std::uint32_t(1) << pos;
      assigned_[pos] = li;
      bool ok = true;
      for (std::uint32_t s : subsets_containing_[li]) {
        std::uint32_t elems = 0;
        for (int i = 0; i < l; ++i)
          if (s >> i & 1) elems |= leaf_elems_[i];
        if (rank_of_mask(elems) > cap_[s]) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(pos + 1)) return true;
      leaf_elems_[li] &= ~(std::uint32_t(1) << pos);
      assigned_[pos] = -1;
    }
    return false;
  }

  const std::vector<int>& all_leaves(int l) {
    if (static_cast<int>(all_.size()) != l) {
      all_.resize(l);
      std::iota(all_.begin(), all_.end(), 0);
    }
    return all_;
  }

  const VectorMatroid& m_;
  std::vector<int> ids_;
  int n_ = 0;
  std::vector<int> leaves_;
  std::vector<std::uint32_t> path_mask_;
  std::vector<int> cap_;
  std::vector<std::vector<std::uint32_t>> subsets_containing_;
  std::vector<int> first_candidates_;
  std::vector<std::uint32_t> leaf_elems_;
  std::vector<int> assigned_;
  std::vector<int> all_;
  std::unordered_map<std::uint32_t, int> rank_memo_;
};

}  // namespace

BranchDepthResult branch_depth_exact(const VectorMatroid& m, const Limits& lim) {
  int r = m.rank();
  if (r > lim.bd_max_rank)
    throw SizeLimit("branch_depth_exact: rank " + std::to_string(r) + " exceeds the bound");
  if (m.size() > lim.bd_max_ground || m.size() > 30)
    throw SizeLimit("branch_depth_exact: ground set " + std::to_string(m.size()) +
                    " exceeds the bound");
  BranchDepthResult out;
  if (r == 0) {
    out.depth = 0;
    out.witness.tree.parent = {-1};
    for (int id : m.ids()) out.witness.leaf_map[id] = 0;
    return out;
  }
  AssignmentSearch search(m);
  for (int d = 1; d <= r; ++d) {
    for (const Shape& s : shapes_with_nodes(r + 1)) {
      if (s.depth != d) continue;
      RootedTree t = shape_to_tree(s);
      DepthDecomposition witness;
      if (search.search(t, witness)) {
        out.depth = d;
        out.witness = std::move(witness);
        return out;
      }
    }
  }
  throw Error("branch_depth_exact: no decomposition found, which cannot happen");
}

}  // namespace tdopt
