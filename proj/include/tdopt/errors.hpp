#pragma once

#include <stdexcept>
#include <string>

namespace tdopt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Matrix has no inverse.
struct SingularMatrix : Error {
  using Error::Error;
};

// Linear system has no solution.
struct InconsistentSystem : Error {
  using Error::Error;
};

// Rows were expected to be linearly independent.
struct RankDeficient : Error {
  using Error::Error;
};

// Input exceeds a configured exact-search bound.
struct SizeLimit : Error {
  using Error::Error;
};

// A claimed tree-depth witness does not cover the graph.
struct WitnessInvalid : Error {
  using Error::Error;
};

// A decomposition invariant (validity or capacity) failed to hold.
struct CapacityViolated : Error {
  using Error::Error;
};

// Exact search proved the branch-depth exceeds the requested bound.
struct BranchDepthExceeded : Error {
  using Error::Error;
};

// No starting point found for the augmentation walk.
struct NoFeasibleStart : Error {
  using Error::Error;
};

// Objective term violates its shape requirements (convexity etc).
struct ObjectiveInvalid : Error {
  using Error::Error;
};

}  // namespace tdopt
