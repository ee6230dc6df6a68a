#pragma once

#include <vector>

#include "tdopt/decomp.hpp"
#include "tdopt/graph.hpp"
#include "tdopt/limits.hpp"
#include "tdopt/matrix.hpp"

namespace tdopt {

// B is regular with B * A_kept = A_prime, where A_kept is the input minus the
// rows listed in removed_rows. witness_forest lives on the rows of A_prime and
// its closure covers the dual graph, so its height certifies td of that graph.
struct TransformResult {
  RatMatrix B{0, 0};
  RatMatrix A_prime{0, 0};
  RootedForest witness_forest;
  int reported_depth = 0;
  bool exact = true;
  std::vector<int> removed_rows;
};

enum class TransformMode { Auto, Exact, Heuristic };

// Expresses each column of a in the basis carried by e. Requires a to have
// full row rank and e to be an extended depth-decomposition of its column
// matroid. The result's rows follow a preorder walk of e's tree.
TransformResult build_transform(const RatMatrix& a, const ExtendedDepthDecomposition& e);

// Full pipeline: drop dependent rows, find a depth-decomposition (exact search
// within the limits, dual-forest heuristic beyond them), extend it, transform.
// With depth_bound > 0 and the exact route, throws BranchDepthExceeded when
// the branch-depth provably exceeds the bound; the heuristic route proves
// nothing and never throws it.
TransformResult transform_pipeline(const RatMatrix& a, int depth_bound = 0,
                                   TransformMode mode = TransformMode::Auto,
                                   const Limits& lim = Limits());

struct ComplexityReport {
  long ec_input = 0;
  long ec_output = 0;
  long ec_transform = 0;
  int depth = 0;
  int max_column_support = 0;
  bool support_on_root_paths = false;
};

ComplexityReport entry_complexity_certificate(const RatMatrix& a, const TransformResult& r);

// Scales each row of [a | b] by the lcm of its denominators. Zero pattern and
// integer solution set are unchanged.
std::pair<RatMatrix, Vec> integerize(const RatMatrix& a, const Vec& b);

}  // namespace tdopt
