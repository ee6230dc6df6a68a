#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdopt/graph.hpp"
#include "tdopt/limits.hpp"
#include "tdopt/matroid.hpp"

namespace tdopt {

// Rooted tree as a parent map with exactly one root.
struct RootedTree {
  std::vector<int> parent;  // -1 once

  int size() const { return static_cast<int>(parent.size()); }
  int root() const;
  int depth_of(int v) const;
  int depth() const;  // edges on the longest root-to-node path
  std::vector<std::vector<int>> children() const;
  std::vector<int> leaves() const;  // childless nodes; a lone root is its own leaf
  bool is_path() const;             // every node has at most one child
  std::vector<int> path_from_root(int v) const;  // root..v inclusive
  std::vector<int> subtree(int v) const;         // v and descendants, ascending
  void check() const;
};

// Tree plus an assignment of matroid elements to its leaves. The defining
// inequality: for every element subset, rank <= number of edges on the union
// of root paths to the subset's leaves. Edge count always equals rank(M).
struct DepthDecomposition {
  RootedTree tree;
  std::map<int, int> leaf_map;  // element id -> leaf node
};

// A branch hangs off the shallowest node with two or more children whose
// ancestors form a single-child chain: one such node (attach), one child
// (top), and everything below the child.
struct Branch {
  int attach = -1;
  int top = -1;
  std::vector<int> nodes;  // attach + subtree(top), ascending

  int edge_count() const { return static_cast<int>(nodes.size()) - 1; }
};

// Full validity check via leaf preimages: testing every subset of used leaves
// is equivalent to testing every element subset, because adding an element
// never changes the leaf union and dropping unused leaves only lowers the
// right-hand side. Raises SizeLimit when used leaves exceed the configured cap.
bool validate(const VectorMatroid& m, const DepthDecomposition& d, const Limits& lim = Limits());

// Decomposition induced by a tree-depth witness of the dual graph: a fresh
// root above the forest, every column mapped to the smallest-index leaf under
// the deepest row of its support. Requires independent rows (RankDeficient)
// and a forest whose closure covers the dual graph (WitnessInvalid).
DepthDecomposition from_dual_forest(const RatMatrix& a, const RootedForest& f);

std::vector<Branch> primary_branches(const RootedTree& t);

// rank(elements below s) == edge_count(s) + depth(attach); ">" is impossible
// for a valid decomposition, so false means strictly under capacity.
bool is_at_capacity(const VectorMatroid& m, const DepthDecomposition& d, const Branch& s);

// Reparents under-capacity branches one level up until all primary branches
// are at capacity. Each move lifts a whole subtree, so the sum of leaf depths
// strictly decreases; measure_trace (when given) records that sum before the
// first move and after every move. Depth never increases.
DepthDecomposition repair_capacity(const VectorMatroid& m, DepthDecomposition d,
                                   std::vector<long>* measure_trace = nullptr,
                                   const Limits& lim = Limits());

// Common intersection K of the spans of the primary branches' element sets.
// With every branch at capacity, all pairwise intersections coincide and
// dim K equals the attach depth; any violation raises CapacityViolated.
// Requires a non-path tree.
Subspace intersection_subspace(const VectorMatroid& m, const DepthDecomposition& d);

// Depth-decomposition enriched with a vector per non-root node; the vectors
// form a basis of the span of the ground set, and every element lies in the
// span of the vectors on its leaf's root path.
struct ExtendedDepthDecomposition {
  RootedTree tree;
  std::map<int, int> leaf_map;
  std::map<int, Vec> basis_map;  // non-root node -> vector
};

struct ExtendStats {
  long repair_moves = 0;
  long branching_steps = 0;   // recursion steps that split into branches
  long path_steps = 0;        // recursion steps that bottomed out on a path
  long pairwise_checks = 0;   // hull intersection pairs compared (all equal)
};

// Constructive extension: repair capacity, split off the primary branches,
// recurse on their quotients by K, and reassemble along a path carrying a
// basis of K. Depth never increases. Input must validate.
ExtendedDepthDecomposition extend(const VectorMatroid& m, const DepthDecomposition& d,
                                  ExtendStats* stats = nullptr, const Limits& lim = Limits());

bool validate_extended(const VectorMatroid& m, const ExtendedDepthDecomposition& e,
                       const Limits& lim = Limits());

struct BranchDepthResult {
  int depth = 0;
  DepthDecomposition witness;
};

// Exact branch-depth: for d = 1, 2, ... enumerate rooted tree shapes with
// rank(M) edges and depth exactly d (up to isomorphism), and search leaf
// assignments depth-first with incremental subset-rank pruning; the first
// element is only placed on one leaf per automorphism orbit. Raises SizeLimit
// beyond lim.bd_max_rank / lim.bd_max_ground.
BranchDepthResult branch_depth_exact(const VectorMatroid& m, const Limits& lim = Limits());

}  // namespace tdopt
