#include "tdopt/linalg.hpp"

#include <algorithm>

#include "tdopt/errors.hpp"

namespace tdopt {

RrefResult rref(const RatMatrix& m) {
  RrefResult out;
  out.r = m;
  RatMatrix& r = out.r;
  int pr = 0;  // next pivot row
  for (int c = 0; c < r.cols() && pr < r.rows(); ++c) {
    int piv = -1;
    for (int i = pr; i < r.rows(); ++i)
      if (!r.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(pr, j));
    Rat inv = r.at(pr, c).inverse();
    for (int j = c; j < r.cols(); ++j) r.at(pr, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pr || r.at(i, c).is_zero()) continue;
      Rat f = r.at(i, c);
      for (int j = c; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pr, j);
    }
    out.pivot_cols.push_back(c);
    ++pr;
  }
  out.rank = pr;
  return out;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("invert: matrix not square");
  int n = m.rows();
  RrefResult rr = rref(m.augment(RatMatrix::identity(n)));
  // every pivot must land in the left block; a pivot escaping into the
  // identity half means the left block lost rank
  for (int k = 0; k < n; ++k)
    if (k >= rr.rank || rr.pivot_cols[k] != k)
      throw SingularMatrix("invert: matrix is singular");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

Vec solve_system(const RatMatrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw Error("solve_system: rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult rr = rref(aug);
  for (int k = 0; k < rr.rank; ++k)
    if (rr.pivot_cols[k] == m.cols())
      throw InconsistentSystem("solve_system: no solution");
  Vec x(m.cols(), Rat());
  for (int k = 0; k < rr.rank; ++k) x[rr.pivot_cols[k]] = rr.r.at(k, m.cols());
  return x;
}

std::vector<Vec> kernel(const RatMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rat());
    v[f] = Rat(1);
    for (int k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Incremental independence tracker: a row-echelon store of inserted vectors.
class EchelonStore {
 public:
  explicit EchelonStore(int) {}

  // True (and keeps v) when v is independent of everything inserted so far.
  bool insert(Vec v) {
    reduce(v);
    int lead = lead_of(v);
    if (lead < 0) return false;
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const Vec& a, const Vec& b) { return lead_of(a) < lead_of(b); });
    return true;
  }

  bool spans(const Vec& v) const {
    Vec w = v;
    reduce(w);
    return lead_of(w) < 0;
  }

 private:
  static int lead_of(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  void reduce(Vec& v) const {
    for (const Vec& r : rows_) {
      int lead = lead_of(r);
      if (lead < 0 || v[lead].is_zero()) continue;
      Rat f = v[lead] / r[lead];
      for (std::size_t j = lead; j < v.size(); ++j) v[j] -= f * r[j];
    }
  }

  std::vector<Vec> rows_;
};

}  // namespace

Subspace Subspace::span_of(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  EchelonStore store(ambient);
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) throw Error("subspace: ambient mismatch");
    if (store.insert(v)) s.basis_.push_back(v);
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("subspace: ambient mismatch");
  EchelonStore store(ambient_);
  for (const Vec& b : basis_) store.insert(b);
  return store.spans(v);
}

bool Subspace::contains_all(const std::vector<Vec>& vs) const {
  EchelonStore store(ambient_);
  for (const Vec& b : basis_) store.insert(b);
  for (const Vec& v : vs) {
    if (static_cast<int>(v.size()) != ambient_) throw Error("subspace: ambient mismatch");
    if (!store.spans(v)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim() == o.dim() && o.contains_all(basis_);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw Error("intersect: ambient mismatch");
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.ambient());
  // Kernel of [U | V]: a combination summing to zero pairs a U-part with a
  // V-part; the U-part values span the intersection.
  int p = u.dim(), q = v.dim();
  RatMatrix c(u.ambient(), p + q);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < u.ambient(); ++i) c.at(i, j) = u.basis()[j][i];
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < v.ambient(); ++i) c.at(i, p + j) = v.basis()[j][i];
  std::vector<Vec> members;
  for (const Vec& z : kernel(c)) {
    Vec w(u.ambient(), Rat());
    for (int j = 0; j < p; ++j)
      if (!z[j].is_zero())
        for (int i = 0; i < u.ambient(); ++i) w[i] += z[j] * u.basis()[j][i];
    members.push_back(std::move(w));
  }
  return Subspace::span_of(u.ambient(), members);
}

QuotientResult quotient_by(const Subspace& k, const std::vector<Vec>& vectors) {
  int ambient = k.ambient();
  EchelonStore store(ambient);
  for (const Vec& b : k.basis())
    if (!store.insert(b)) throw Error("quotient_by: dependent basis in K");
  std::vector<Vec> units;
  auto covered = [&] {
    for (const Vec& v : vectors)
      if (!store.spans(v)) return false;
    return true;
  };
  for (int i = 0; i < ambient && !covered(); ++i) {
    Vec e(ambient, Rat());
    e[i] = Rat(1);
    if (store.insert(e)) units.push_back(std::move(e));
  }
  if (!covered()) throw Error("quotient_by: vectors escape the ambient space");

  // Solve [units | K] (beta; kappa) = w; the image is the units part.
  int b = static_cast<int>(units.size());
  RatMatrix sys(ambient, b + k.dim());
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < ambient; ++i) sys.at(i, j) = units[j][i];
  for (int j = 0; j < k.dim(); ++j)
    for (int i = 0; i < ambient; ++i) sys.at(i, b + j) = k.basis()[j][i];
  QuotientResult out{Subspace::span_of(ambient, units), {}};
  out.images.reserve(vectors.size());
  for (const Vec& w : vectors) {
    Vec coef = solve_system(sys, w);
    Vec img(ambient, Rat());
    for (int j = 0; j < b; ++j)
      if (!coef[j].is_zero())
        for (int i = 0; i < ambient; ++i) img[i] += coef[j] * units[j][i];
    out.images.push_back(std::move(img));
  }
  return out;
}

}  // namespace tdopt
