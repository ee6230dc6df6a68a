#pragma once

#include <set>
#include <utility>
#include <vector>

#include "tdopt/matrix.hpp"

namespace tdopt {

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);  // self-loops rejected, duplicates ignored
  bool has_edge(int u, int v) const;
  const std::set<int>& neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // each with u < v, sorted

  bool operator==(const SimpleGraph& o) const;

 private:
  void check_vertex(int v) const;
  int n_;
  std::vector<std::set<int>> adj_;
};

// Forest of rooted trees as a parent map; -1 marks a root.
struct RootedForest {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<int> roots() const;
  std::vector<std::vector<int>> children() const;
  int depth_of(int v) const;  // edges from its root
  int height() const;         // vertices on the longest root-to-leaf path
  bool is_ancestor(int a, int v) const;  // true when a lies on the root path of v (or a == v)
  void check() const;  // parents in range, no cycles
};

// Columns adjacent when some row is nonzero in both.
SimpleGraph primal_graph(const RatMatrix& a);

// Rows adjacent when some column is nonzero in both.
SimpleGraph dual_graph(const RatMatrix& a);

// Adds an edge from every vertex to each of its proper ancestors.
SimpleGraph closure(const RootedForest& f);

// True when f has one node per vertex of g and every edge of g joins an
// ancestor-descendant pair of f.
bool verify_td_witness(const SimpleGraph& g, const RootedForest& f);

}  // namespace tdopt
