#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdopt/limits.hpp"
#include "tdopt/matrix.hpp"
#include "tdopt/rowtransform.hpp"

namespace tdopt {

// One separable convex summand f_i(x_i). Values are exact rationals.
struct ObjectiveTerm {
  enum class Kind { Linear, Quadratic, Pwl };
  Kind kind = Kind::Linear;
  Rat c;                                    // linear coefficient
  Rat a;                                    // quadratic leading coefficient, >= 0
  std::vector<std::pair<Int, Rat>> points;  // pwl breakpoints, x strictly increasing

  static ObjectiveTerm linear(Rat coef);
  static ObjectiveTerm quadratic(Rat lead, Rat coef);
  static ObjectiveTerm pwl(std::vector<std::pair<Int, Rat>> pts);

  void check() const;  // throws ObjectiveInvalid on a non-convex shape
  Rat eval(const Int& x) const;
};

// min f(x) s.t. a x = b, l <= x <= u, x integral. Empty objective means f = 0.
struct IPInstance {
  RatMatrix a{0, 0};
  Vec b;
  std::vector<std::optional<Int>> lower;  // nullopt = -inf
  std::vector<std::optional<Int>> upper;  // nullopt = +inf
  std::vector<ObjectiveTerm> objective;

  int vars() const { return a.cols(); }
  void check() const;
  Rat value_of(const std::vector<Int>& x) const;
  bool is_feasible(const std::vector<Int>& x) const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit };
std::string to_string(SolveStatus s);

struct IPSolution {
  SolveStatus status = SolveStatus::Limit;
  std::vector<Int> x;  // set when optimal
  Rat value;
  long steps = 0;
  // transform metadata, meaningful when transformed
  bool transformed = false;
  int depth = 0;
  bool exact_depth = false;
};

struct PreprocessResult {
  bool infeasible = false;
  IPInstance inst;
  std::vector<int> removed_rows;
};

// Keeps a maximal independent row set; infeasible when b escapes the row
// space. The solution set is unchanged otherwise.
PreprocessResult preprocess(const IPInstance& inst);

// Exact optimum by enumerating the box in ascending lexicographic order, so
// ties resolve to the lexicographically smallest point. Finite bounds only.
IPSolution solve_bruteforce(const IPInstance& inst, const Limits& lim = Limits());

// Augmentation walk from a feasible point: integer kernel directions up to a
// growing infinity-norm bound, best convex step per direction, then a second
// pass that walks to the lexicographically smallest optimum. Complete for
// finite boxes (the bound reaches the widest box edge); instances with
// infinite bounds end in Limit unless unboundedness is detected.
IPSolution solve_augmentation(const IPInstance& inst, const std::vector<Int>& start,
                              const Limits& lim = Limits());

enum class SolveMode { Exact, Heuristic, None };

// Front end: preprocess, optionally transform to an equivalent system with
// shallow dual tree-depth, integerize, find a feasible start, augment.
IPSolution solve(const IPInstance& inst, int depth_bound = 0, SolveMode mode = SolveMode::Exact,
                 const Limits& lim = Limits());

}  // namespace tdopt
