#include "tdopt/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tdopt/errors.hpp"

namespace tdopt {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rat());
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw Error("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Rat& RatMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rat& RatMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

Vec RatMatrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec RatMatrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void RatMatrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw Error("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::select_rows(const std::vector<int>& idx) const {
  RatMatrix m(static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

RatMatrix RatMatrix::select_cols(const std::vector<int>& idx) const {
  RatMatrix m(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = at(i, idx[j]);
  return m;
}

RatMatrix RatMatrix::augment(const RatMatrix& right) const {
  if (right.rows_ != rows_) throw Error("augment: row count mismatch");
  RatMatrix m(rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Vec operator*(const RatMatrix& a, const Vec& x) {
  if (a.cols_ != static_cast<int>(x.size())) throw Error("matrix-vector dimension mismatch");
  Vec y(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (!a.at(i, j).is_zero() && !x[j].is_zero()) y[i] += a.at(i, j) * x[j];
  return y;
}

RatMatrix RatMatrix::parse(std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("matrix header: expected 'rows cols'");
  if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000)
    throw ParseError("matrix header: dimensions out of range");
  RatMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw ParseError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         "): unexpected end of input");
      m.at(i, j) = Rat::parse(tok);
    }
  return m;
}

RatMatrix RatMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  RatMatrix m = parse(in);
  std::string extra;
  if (in >> extra) throw ParseError("matrix: trailing content '" + extra + "'");
  return m;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << "\n";
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

long entry_complexity(const RatMatrix& m) {
  long best = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) best = std::max(best, entry_complexity(m.at(i, j)));
  return best;
}

}  // namespace tdopt
