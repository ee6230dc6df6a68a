#include "tdopt/rowtransform.hpp"

#include <algorithm>
#include <string>

#include "tdopt/errors.hpp"
#include "tdopt/linalg.hpp"
#include "tdopt/matroid.hpp"
#include "tdopt/treedepth.hpp"

namespace tdopt {

namespace {

// Non-root nodes in preorder, children visited in ascending id order. This is
// the one basis ordering used everywhere, so outputs are reproducible.
std::vector<int> preorder_nodes(const RootedTree& t) {
  auto ch = t.children();
  std::vector<int> order;
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (t.parent[v] >= 0) order.push_back(v);
    for (auto it = ch[v].rbegin(); it != ch[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

}  // namespace

TransformResult build_transform(const RatMatrix& a, const ExtendedDepthDecomposition& e) {
  int m = a.rows();
  if (m > 0 && rank(a) != m)
    throw RankDeficient("build_transform: rows are dependent; preprocess first");
  if (e.tree.size() - 1 != m)
    throw WitnessInvalid("build_transform: tree edge count != row count");

  TransformResult out;
  if (m == 0) {
    out.A_prime = a;
    out.reported_depth = 0;
    return out;
  }

  std::vector<int> order = preorder_nodes(e.tree);
  std::vector<int> pos_of(e.tree.size(), -1);
  for (int k = 0; k < m; ++k) pos_of[order[k]] = k;

  RatMatrix bg(m, m);
  for (int k = 0; k < m; ++k) {
    const Vec& w = e.basis_map.at(order[k]);
    if (static_cast<int>(w.size()) != m)
      throw WitnessInvalid("build_transform: basis vector has wrong length");
    for (int i = 0; i < m; ++i) bg.at(i, k) = w[i];
  }
  out.B = invert(bg);

  // Column j of A' holds the coordinates of column j of A in the basis
  // {g(v)}, which vanish off the root path of its leaf. Solving only the
  // restricted system keeps every intermediate number small; the full product
  // must then agree entry for entry.
  RatMatrix full = out.B * a;
  out.A_prime = RatMatrix(m, a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    int leaf = e.leaf_map.at(j);
    std::vector<int> w_nodes;
    for (int v : e.tree.path_from_root(leaf))
      if (e.tree.parent[v] >= 0) w_nodes.push_back(v);
    RatMatrix sys(m, static_cast<int>(w_nodes.size()));
    for (std::size_t k = 0; k < w_nodes.size(); ++k) {
      const Vec& g = e.basis_map.at(w_nodes[k]);
      for (int i = 0; i < m; ++i) sys.at(i, static_cast<int>(k)) = g[i];
    }
    Vec coef = solve_system(sys, a.col(j));
    for (std::size_t k = 0; k < w_nodes.size(); ++k)
      out.A_prime.at(pos_of[w_nodes[k]], j) = coef[k];
  }
  if (!(out.A_prime == full))
    throw Error("build_transform: restricted solves disagree with the full product");

  out.witness_forest.parent.assign(m, -1);
  for (int k = 0; k < m; ++k) {
    int p = e.tree.parent[order[k]];
    out.witness_forest.parent[k] = e.tree.parent[p] < 0 ? -1 : pos_of[p];
  }
  if (!verify_td_witness(dual_graph(out.A_prime), out.witness_forest))
    throw WitnessInvalid("build_transform: forest does not cover the dual graph");
  out.reported_depth = out.witness_forest.height();
  if (out.reported_depth != e.tree.depth())
    throw Error("build_transform: forest height != tree depth");
  return out;
}

namespace {

std::vector<int> independent_rows(const RatMatrix& a) {
  std::vector<int> kept;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<int> trial = kept;
    trial.push_back(i);
    RatMatrix sub = a.select_rows(trial);
    if (rank(sub) == static_cast<int>(trial.size())) kept = std::move(trial);
  }
  return kept;
}

}  // namespace

TransformResult transform_pipeline(const RatMatrix& a, int depth_bound, TransformMode mode,
                                   const Limits& lim) {
  std::vector<int> kept = independent_rows(a);
  RatMatrix a0 = a.select_rows(kept);
  std::vector<int> removed;
  {
    std::size_t ki = 0;
    for (int i = 0; i < a.rows(); ++i) {
      if (ki < kept.size() && kept[ki] == i)
        ++ki;
      else
        removed.push_back(i);
    }
  }

  VectorMatroid matroid = VectorMatroid::column_matroid(a0, lim.rank_cache_capacity);
  bool exact_route;
  switch (mode) {
    case TransformMode::Exact:
      exact_route = true;
      break;
    case TransformMode::Heuristic:
      exact_route = false;
      break;
    default:
      exact_route = a0.rows() <= lim.bd_max_rank && a0.cols() <= lim.bd_max_ground;
  }

  TransformResult out;
  if (exact_route) {
    BranchDepthResult bd = branch_depth_exact(matroid, lim);
    if (depth_bound > 0 && bd.depth > depth_bound)
      throw BranchDepthExceeded("branch-depth " + std::to_string(bd.depth) + " exceeds " +
                                std::to_string(depth_bound));
    ExtendedDepthDecomposition ext = extend(matroid, bd.witness, nullptr, lim);
    out = build_transform(a0, ext);
    out.exact = true;
  } else {
    TreedepthResult td = treedepth(dual_graph(a0), lim);
    DepthDecomposition d0 = from_dual_forest(a0, td.forest);
    ExtendedDepthDecomposition ext = extend(matroid, d0, nullptr, lim);
    out = build_transform(a0, ext);
    out.exact = false;
  }
  out.removed_rows = std::move(removed);
  return out;
}

ComplexityReport entry_complexity_certificate(const RatMatrix& a, const TransformResult& r) {
  ComplexityReport rep;
  rep.ec_input = entry_complexity(a);
  rep.ec_output = entry_complexity(r.A_prime);
  rep.ec_transform = entry_complexity(r.B);
  rep.depth = r.reported_depth;
  rep.support_on_root_paths = true;
  for (int j = 0; j < r.A_prime.cols(); ++j) {
    std::vector<int> support;
    for (int i = 0; i < r.A_prime.rows(); ++i)
      if (!r.A_prime.at(i, j).is_zero()) support.push_back(i);
    rep.max_column_support = std::max(rep.max_column_support, static_cast<int>(support.size()));
    if (support.empty()) continue;
    int deepest = support[0];
    for (int i : support)
      if (r.witness_forest.depth_of(i) > r.witness_forest.depth_of(deepest)) deepest = i;
    for (int i : support)
      if (!r.witness_forest.is_ancestor(i, deepest)) rep.support_on_root_paths = false;
  }
  return rep;
}

std::pair<RatMatrix, Vec> integerize(const RatMatrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error("integerize: right side length != row count");
  RatMatrix a2 = a;
  Vec b2 = b;
  for (int i = 0; i < a.rows(); ++i) {
    Int l = b[i].den();
    for (int j = 0; j < a.cols(); ++j) l = lcm_positive(l, a.at(i, j).den());
    if (l == 1) continue;
    Rat scale(l);
    for (int j = 0; j < a.cols(); ++j) a2.at(i, j) *= scale;
    b2[i] *= scale;
  }
  return {std::move(a2), std::move(b2)};
}

}  // namespace tdopt
