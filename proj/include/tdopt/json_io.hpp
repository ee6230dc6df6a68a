#pragma once

#include <string>
#include <vector>

#include "tdopt/decomp.hpp"
#include "tdopt/ipsolve.hpp"
#include "tdopt/limits.hpp"
#include "tdopt/matrix.hpp"
#include "tdopt/rowtransform.hpp"

namespace tdopt {

// All rationals are serialized as strings ("3", "-1/2"); key order is fixed,
// so equal inputs produce identical bytes.

std::string to_json(const RatMatrix& a, bool pretty = false);
std::string to_json(const RatMatrix& a, const DepthDecomposition& d, bool pretty = false);
std::string to_json(const RatMatrix& a, const ExtendedDepthDecomposition& e, bool pretty = false);
std::string to_json(const RatMatrix& a, const TransformResult& r, bool pretty = false);
std::string to_json(const IPInstance& inst, bool pretty = false);
// oracle, when given, adds an agreement block comparing optimal values.
std::string to_json(const IPSolution& s, bool pretty = false, const IPSolution* oracle = nullptr);

RatMatrix matrix_from_json(const std::string& text);
IPInstance instance_from_json(const std::string& text);

struct VerifyCheck {
  std::string name;
  bool ok = false;
};

struct VerifyReport {
  std::string kind;
  std::vector<VerifyCheck> checks;
  bool all_ok() const;
};

// Re-checks a serialized artifact (decomposition, extended decomposition, or
// transform result) against the matrix embedded in it.
VerifyReport verify_artifact(const std::string& text, const Limits& lim = Limits());

}  // namespace tdopt
