#pragma once

#include "tdopt/graph.hpp"
#include "tdopt/limits.hpp"

namespace tdopt {

struct TreedepthResult {
  int value = 0;
  RootedForest forest;  // witness: closure(forest) covers the graph, height == value
  bool exact = true;
};

// Minimum height of a covering rooted forest, by the deletion recursion
// td(G) = 1 + min over v of td(G - v) on each connected piece, memoized on
// vertex subsets. Raises SizeLimit above lim.td_max_vertices.
TreedepthResult treedepth_exact(const SimpleGraph& g, const Limits& lim = Limits());

// Upper bound from a greedy balanced-separator elimination order.
TreedepthResult treedepth_bound(const SimpleGraph& g);

// Exact within the cap, greedy beyond it.
TreedepthResult treedepth(const SimpleGraph& g, const Limits& lim = Limits());

}  // namespace tdopt
