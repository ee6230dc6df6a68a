#include "tdopt/graph.hpp"

#include <algorithm>

#include "tdopt/errors.hpp"

namespace tdopt {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0) throw Error("negative vertex count");
  adj_.resize(n);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error("vertex out of range");
}

int SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : adj_) total += s.size();
  return static_cast<int>(total / 2);
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("self-loop rejected");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) > 0;
}

const std::set<int>& SimpleGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool SimpleGraph::operator==(const SimpleGraph& o) const {
  return n_ == o.n_ && adj_ == o.adj_;
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (parent[v] < 0) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> RootedForest::children() const {
  std::vector<std::vector<int>> ch(size());
  for (int v = 0; v < size(); ++v)
    if (parent[v] >= 0) ch[parent[v]].push_back(v);
  return ch;
}

int RootedForest::depth_of(int v) const {
  int d = 0;
  for (int a = parent[v]; a >= 0; a = parent[a]) ++d;
  return d;
}

int RootedForest::height() const {
  int h = 0;
  for (int v = 0; v < size(); ++v) h = std::max(h, depth_of(v) + 1);
  return h;
}

bool RootedForest::is_ancestor(int a, int v) const {
  for (int x = v; x >= 0; x = parent[x])
    if (x == a) return true;
  return false;
}

void RootedForest::check() const {
  int n = size();
  for (int v = 0; v < n; ++v) {
    if (parent[v] < -1 || parent[v] >= n || parent[v] == v)
      throw Error("forest: bad parent entry");
    int steps = 0;
    for (int a = parent[v]; a >= 0; a = parent[a])
      if (++steps > n) throw Error("forest: parent cycle");
  }
}

SimpleGraph primal_graph(const RatMatrix& a) {
  SimpleGraph g(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<int> support;
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) support.push_back(j);
    for (std::size_t x = 0; x < support.size(); ++x)
      for (std::size_t y = x + 1; y < support.size(); ++y)
        g.add_edge(support[x], support[y]);
  }
  return g;
}

SimpleGraph dual_graph(const RatMatrix& a) { return primal_graph(a.transpose()); }

SimpleGraph closure(const RootedForest& f) {
  f.check();
  SimpleGraph g(f.size());
  for (int v = 0; v < f.size(); ++v)
    for (int a = f.parent[v]; a >= 0; a = f.parent[a]) g.add_edge(v, a);
  return g;
}

bool verify_td_witness(const SimpleGraph& g, const RootedForest& f) {
  if (f.size() != g.vertex_count()) return false;
  f.check();
  for (auto [u, v] : g.edges())
    if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u)) return false;
  return true;
}

}  // namespace tdopt
