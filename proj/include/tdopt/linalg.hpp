#pragma once

#include <optional>
#include <vector>

#include "tdopt/matrix.hpp"

namespace tdopt {

struct RrefResult {
  RatMatrix r;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Gauss-Jordan with exact arithmetic; the pivot is the first nonzero entry in
// each column, no magnitude heuristics. Entries stay fully reduced because Rat
// renormalizes after every operation.
RrefResult rref(const RatMatrix& m);

int rank(const RatMatrix& m);

// Inverse of a square matrix; raises SingularMatrix.
RatMatrix invert(const RatMatrix& m);

// One exact solution of M x = rhs with free variables set to zero; raises
// InconsistentSystem when none exists.
Vec solve_system(const RatMatrix& m, const Vec& rhs);

// Basis of the right kernel of M (one vector per free column).
std::vector<Vec> kernel(const RatMatrix& m);

// A linear subspace of Q^ambient, stored as an independent spanning subset of
// whatever vectors it was built from (first-wins order).
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span_of(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains_all(const std::vector<Vec>& vs) const;
  bool operator==(const Subspace& o) const;  // equality as sets of vectors

 private:
  int ambient_;
  std::vector<Vec> basis_;
};

Subspace intersect(const Subspace& u, const Subspace& v);

struct QuotientResult {
  Subspace complement;      // spanned by standard unit vectors, disjoint from K
  std::vector<Vec> images;  // complement component of each input vector
};

// Splits each vector w in span(K u vectors) as w = image + k with k in K and
// image in a fixed complement. The complement is chosen deterministically:
// extend a basis of K by standard unit vectors in index order until every
// input vector is covered.
QuotientResult quotient_by(const Subspace& k, const std::vector<Vec>& vectors);

}  // namespace tdopt
