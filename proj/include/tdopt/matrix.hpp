#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tdopt/rat.hpp"

namespace tdopt {

using Vec = std::vector<Rat>;

// Dense rational matrix, row-major. Dimensions may be zero (a 0xN or Mx0
// matrix is a legitimate edge of the decomposition pipeline).
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  RatMatrix transpose() const;
  RatMatrix select_rows(const std::vector<int>& idx) const;
  RatMatrix select_cols(const std::vector<int>& idx) const;
  RatMatrix augment(const RatMatrix& right) const;  // [this | right]

  bool operator==(const RatMatrix& o) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend Vec operator*(const RatMatrix& a, const Vec& x);

  // Text format: first line "rows cols", then one line per row with
  // whitespace-separated entries, each "p" or "p/q".
  static RatMatrix parse(std::istream& in);
  static RatMatrix parse(const std::string& text);
  std::string str() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rat> a_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

// Largest entry encoding length; 0 for a matrix with no entries.
long entry_complexity(const RatMatrix& m);

}  // namespace tdopt
