#include "tdopt/ipsolve.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tdopt/errors.hpp"
#include "tdopt/linalg.hpp"

namespace tdopt {

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

}  // namespace

ObjectiveTerm ObjectiveTerm::linear(Rat coef) {
  ObjectiveTerm t;
  t.kind = Kind::Linear;
  t.c = std::move(coef);
  return t;
}

ObjectiveTerm ObjectiveTerm::quadratic(Rat lead, Rat coef) {
  ObjectiveTerm t;
  t.kind = Kind::Quadratic;
  t.a = std::move(lead);
  t.c = std::move(coef);
  return t;
}

ObjectiveTerm ObjectiveTerm::pwl(std::vector<std::pair<Int, Rat>> pts) {
  ObjectiveTerm t;
  t.kind = Kind::Pwl;
  t.points = std::move(pts);
  return t;
}

void ObjectiveTerm::check() const {
  switch (kind) {
    case Kind::Linear:
      return;
    case Kind::Quadratic:
      if (a.is_negative()) throw ObjectiveInvalid("quadratic term with negative leading coefficient");
      return;
    case Kind::Pwl: {
      if (points.empty()) throw ObjectiveInvalid("piecewise term with no breakpoints");
      for (std::size_t k = 1; k < points.size(); ++k)
        if (!(points[k - 1].first < points[k].first))
          throw ObjectiveInvalid("piecewise breakpoints not strictly increasing");
      Rat prev;
      bool have_prev = false;
      for (std::size_t k = 1; k < points.size(); ++k) {
        Rat slope = (points[k].second - points[k - 1].second) /
                    Rat(points[k].first - points[k - 1].first);
        if (have_prev && slope < prev) throw ObjectiveInvalid("piecewise slopes decrease");
        prev = slope;
        have_prev = true;
      }
      return;
    }
  }
}

Rat ObjectiveTerm::eval(const Int& x) const {
  switch (kind) {
    case Kind::Linear:
      return c * Rat(x);
    case Kind::Quadratic:
      return a * Rat(x) * Rat(x) + c * Rat(x);
    case Kind::Pwl: {
      if (points.size() == 1) return points[0].second;
      std::size_t seg = 0;  // segment [x_seg, x_seg+1] used for x, end slopes extend
      while (seg + 2 < points.size() && points[seg + 1].first <= x) ++seg;
      Rat slope = (points[seg + 1].second - points[seg].second) /
                  Rat(points[seg + 1].first - points[seg].first);
      return points[seg].second + slope * Rat(x - points[seg].first);
    }
  }
  throw ObjectiveInvalid("unknown objective kind");
}

void IPInstance::check() const {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("instance: |b| != row count");
  int n = vars();
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw Error("instance: bound lists must have one entry per variable");
  if (!objective.empty() && static_cast<int>(objective.size()) != n)
    throw Error("instance: objective must be empty or one term per variable");
  for (const ObjectiveTerm& t : objective) t.check();
  for (int i = 0; i < n; ++i)
    if (lower[i] && upper[i] && *lower[i] > *upper[i])
      throw Error("instance: lower bound exceeds upper bound");
}

Rat IPInstance::value_of(const std::vector<Int>& x) const {
  Rat v;
  for (std::size_t i = 0; i < objective.size(); ++i) v += objective[i].eval(x[i]);
  return v;
}

bool IPInstance::is_feasible(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != vars()) return false;
  for (int i = 0; i < vars(); ++i) {
    if (lower[i] && x[i] < *lower[i]) return false;
    if (upper[i] && x[i] > *upper[i]) return false;
  }
  for (int i = 0; i < a.rows(); ++i) {
    Rat sum;
    for (int j = 0; j < a.cols(); ++j) sum += a.at(i, j) * Rat(x[j]);
    if (!(sum == b[i])) return false;
  }
  return true;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unbounded:
      return "unbounded";
    case SolveStatus::Limit:
      return "limit";
  }
  return "unknown";
}

PreprocessResult preprocess(const IPInstance& inst) {
  inst.check();
  PreprocessResult out;
  RatMatrix ab = inst.a.augment(RatMatrix(inst.a.rows(), 1));
  for (int i = 0; i < inst.a.rows(); ++i) ab.at(i, inst.a.cols()) = inst.b[i];
  if (rank(ab) > rank(inst.a)) {
    out.infeasible = true;
    out.inst = inst;
    return out;
  }
  std::vector<int> kept;
  for (int i = 0; i < inst.a.rows(); ++i) {
    std::vector<int> trial = kept;
    trial.push_back(i);
    if (rank(inst.a.select_rows(trial)) == static_cast<int>(trial.size())) kept = std::move(trial);
  }
  out.inst = inst;
  out.inst.a = inst.a.select_rows(kept);
  out.inst.b.clear();
  for (int i : kept) out.inst.b.push_back(inst.b[i]);
  std::size_t ki = 0;
  for (int i = 0; i < inst.a.rows(); ++i) {
    if (ki < kept.size() && kept[ki] == i)
      ++ki;
    else
      out.removed_rows.push_back(i);
  }
  return out;
}

namespace {

// Lexicographic walk over the box with interval pruning on the residual of
// each row. Visits feasible points in ascending lexicographic order.
class BoxWalk {
 public:
  BoxWalk(const IPInstance& inst, std::vector<Int> lo, std::vector<Int> hi)
      : inst_(inst), lo_(std::move(lo)), hi_(std::move(hi)), n_(inst.vars()) {
    int m = inst_.a.rows();
    suffix_min_.assign(m, std::vector<Rat>(n_ + 1));
    suffix_max_.assign(m, std::vector<Rat>(n_ + 1));
    for (int i = 0; i < m; ++i)
      for (int j = n_ - 1; j >= 0; --j) {
        Rat c = inst_.a.at(i, j);
        Rat at_lo = c * Rat(lo_[j]), at_hi = c * Rat(hi_[j]);
        if (at_hi < at_lo) std::swap(at_lo, at_hi);
        suffix_min_[i][j] = suffix_min_[i][j + 1] + at_lo;
        suffix_max_[i][j] = suffix_max_[i][j + 1] + at_hi;
      }
  }

  // Calls visit(x) for each feasible point; stop when it returns false.
  template <typename F>
  void run(F&& visit) {
    std::vector<Int> x(n_);
    std::vector<Rat> partial(inst_.a.rows());
    walk(0, x, partial, visit);
  }

 private:
  template <typename F>
  bool walk(int pos, std::vector<Int>& x, std::vector<Rat>& partial, F&& visit) {
    for (int i = 0; i < inst_.a.rows(); ++i) {
      Rat residual = inst_.b[i] - partial[i];
      if (residual < suffix_min_[i][pos] || suffix_max_[i][pos] < residual) return true;
    }
    if (pos == n_) return visit(std::as_const(x));
    for (Int v = lo_[pos]; v <= hi_[pos]; ++v) {
      x[pos] = v;
      std::vector<Rat> next = partial;
      for (int i = 0; i < inst_.a.rows(); ++i) next[i] += inst_.a.at(i, pos) * Rat(v);
      if (!walk(pos + 1, x, next, visit)) return false;
    }
    return true;
  }

  const IPInstance& inst_;
  std::vector<Int> lo_, hi_;
  int n_;
  std::vector<std::vector<Rat>> suffix_min_, suffix_max_;
};

}  // namespace

IPSolution solve_bruteforce(const IPInstance& inst, const Limits& lim) {
  inst.check();
  std::vector<Int> lo(inst.vars()), hi(inst.vars());
  Int volume = 1;
  for (int i = 0; i < inst.vars(); ++i) {
    if (!inst.lower[i] || !inst.upper[i])
      throw SizeLimit("solve_bruteforce: needs a finite box");
    lo[i] = *inst.lower[i];
    hi[i] = *inst.upper[i];
    volume *= hi[i] - lo[i] + 1;
    if (volume > lim.bruteforce_box_cap)
      throw SizeLimit("solve_bruteforce: box volume exceeds the cap");
  }

  IPSolution out;
  out.status = SolveStatus::Infeasible;
  bool have = false;
  BoxWalk walk(inst, lo, hi);
  walk.run([&](const std::vector<Int>& x) {
    ++out.steps;
    Rat v = inst.value_of(x);
    if (!have || v < out.value) {
      have = true;
      out.value = v;
      out.x = x;  // first hit in lex order wins ties
      out.status = SolveStatus::Optimal;
    }
    return true;
  });
  return out;
}

namespace {

// Integer kernel vectors of a with infinity norm <= bound, enumerated through
// the free variables of the reduced system. Sorted lexicographically.
class KernelPool {
 public:
  explicit KernelPool(const RatMatrix& a) : n_(a.cols()) {
    RrefResult r = rref(a);
    std::vector<char> is_pivot(n_, 0);
    for (int c : r.pivot_cols) is_pivot[c] = 1;
    for (int j = 0; j < n_; ++j)
      if (!is_pivot[j]) free_cols_.push_back(j);
    // pivot value rows: pivot_cols[k] is determined by row k of the rref
    rref_ = r.r;
    pivot_cols_ = r.pivot_cols;
  }

  int free_count() const { return static_cast<int>(free_cols_.size()); }

  // Extends the pool to the given norm bound. Returns false when the
  // enumeration would exceed the candidate cap.
  bool extend(const Int& bound, long long candidate_cap,
              std::vector<std::vector<Int>>& pool_out) {
    Int candidates = 1;
    for (int k = 0; k < free_count(); ++k) {
      candidates *= 2 * bound + 1;
      if (candidates > candidate_cap) return false;
    }
    std::set<std::vector<Int>> pool(pool_out.begin(), pool_out.end());
    std::vector<Int> t(free_count(), -bound);
    while (true) {
      std::vector<Int> g(n_, 0);
      bool integral = true, in_norm = true, zero = true;
      for (int k = 0; k < free_count(); ++k) g[free_cols_[k]] = t[k];
      for (std::size_t row = 0; row < pivot_cols_.size() && integral; ++row) {
        Rat value;
        for (int k = 0; k < free_count(); ++k)
          value -= rref_.at(static_cast<int>(row), free_cols_[k]) * Rat(t[k]);
        if (!value.is_integer())
          integral = false;
        else
          g[pivot_cols_[row]] = value.num();
      }
      if (integral) {
        for (int j = 0; j < n_; ++j) {
          if (g[j] != 0) zero = false;
          if (g[j] > bound || g[j] < -bound) in_norm = false;
        }
        if (!zero && in_norm) pool.insert(std::move(g));
      }
      int k = free_count() - 1;
      while (k >= 0 && t[k] == bound) t[k--] = -bound;
      if (k < 0) break;
      ++t[k];
    }
    pool_out.assign(pool.begin(), pool.end());
    return true;
  }

 private:
  int n_;
  std::vector<int> free_cols_;
  std::vector<int> pivot_cols_;
  RatMatrix rref_{0, 0};
};

struct StepRange {
  bool lo_inf = true, hi_inf = true;
  Int lo, hi;
};

StepRange step_range(const IPInstance& inst, const std::vector<Int>& x,
                     const std::vector<Int>& g) {
  StepRange r;
  auto cap_hi = [&](const Int& v) {
    if (r.hi_inf || v < r.hi) r.hi = v;
    r.hi_inf = false;
  };
  auto cap_lo = [&](const Int& v) {
    if (r.lo_inf || v > r.lo) r.lo = v;
    r.lo_inf = false;
  };
  for (int i = 0; i < inst.vars(); ++i) {
    if (g[i] == 0) continue;
    if (g[i] > 0) {
      if (inst.upper[i]) cap_hi(fdiv(*inst.upper[i] - x[i], g[i]));
      if (inst.lower[i]) cap_lo(cdiv(*inst.lower[i] - x[i], g[i]));
    } else {
      if (inst.upper[i]) cap_lo(cdiv(*inst.upper[i] - x[i], g[i]));
      if (inst.lower[i]) cap_hi(fdiv(*inst.lower[i] - x[i], g[i]));
    }
  }
  return r;
}

// Slope of f(x + t g) as t -> +inf. Any active quadratic forces +inf (second
// value true). Used to recognize unbounded rays.
std::pair<Rat, bool> asymptotic_slope(const IPInstance& inst, const std::vector<Int>& g) {
  Rat slope;
  for (int i = 0; i < inst.vars(); ++i) {
    if (g[i] == 0 || inst.objective.empty()) continue;
    const ObjectiveTerm& t = inst.objective[i];
    switch (t.kind) {
      case ObjectiveTerm::Kind::Linear:
        slope += t.c * Rat(g[i]);
        break;
      case ObjectiveTerm::Kind::Quadratic:
        if (!t.a.is_zero()) return {Rat(), true};
        slope += t.c * Rat(g[i]);
        break;
      case ObjectiveTerm::Kind::Pwl: {
        if (t.points.size() < 2) break;
        std::size_t last = t.points.size() - 1;
        Rat s_first =
            (t.points[1].second - t.points[0].second) / Rat(t.points[1].first - t.points[0].first);
        Rat s_last = (t.points[last].second - t.points[last - 1].second) /
                     Rat(t.points[last].first - t.points[last - 1].first);
        slope += (g[i] > 0 ? s_last : s_first) * Rat(g[i]);
        break;
      }
    }
  }
  return {slope, false};
}

class Augmenter {
 public:
  Augmenter(const IPInstance& inst, std::vector<Int> start, const Limits& lim)
      : inst_(inst), x_(std::move(start)), lim_(lim), pool_src_(inst.a) {}

  IPSolution run() {
    IPSolution out;
    bool all_finite = true;
    Int widest = 0;
    for (int i = 0; i < inst_.vars(); ++i) {
      if (!inst_.lower[i] || !inst_.upper[i])
        all_finite = false;
      else {
        Int width = *inst_.upper[i] - *inst_.lower[i];
        if (width > widest) widest = width;
      }
    }
    bool certified = true;
    Int b_max = all_finite ? widest : Int(8);
    if (!all_finite) certified = false;

    if (pool_src_.free_count() == 0 || b_max == 0) {
      // Kernel is trivial or the box is a single point: the start is the only
      // feasible point, hence optimal.
      out.status = SolveStatus::Optimal;
      out.x = x_;
      out.value = inst_.value_of(x_);
      out.steps = steps_;
      return out;
    }

    Int bound = 1;
    if (bound > b_max) bound = b_max;
    if (!pool_src_.extend(bound, lim_.bruteforce_box_cap, pool_)) certified = false;

    while (true) {
      int move = improving_move();
      if (move == kUnbounded) {
        out.status = SolveStatus::Unbounded;
        out.steps = steps_;
        return out;
      }
      if (move == kBudget) {
        out.status = SolveStatus::Limit;
        out.x = x_;
        out.value = inst_.value_of(x_);
        out.steps = steps_;
        return out;
      }
      if (move == kMoved) continue;
      if (bound < b_max) {
        bound = bound * 2 < b_max ? bound * 2 : b_max;
        if (!pool_src_.extend(bound, lim_.bruteforce_box_cap, pool_)) {
          certified = false;
          break;
        }
        continue;
      }
      break;  // stuck at the full norm bound
    }

    // Value cannot improve; now walk to the lexicographically smallest
    // optimum so ties resolve reproducibly.
    while (certified) {
      int move = lex_move();
      if (move == kBudget) {
        out.status = SolveStatus::Limit;
        out.x = x_;
        out.value = inst_.value_of(x_);
        out.steps = steps_;
        return out;
      }
      if (move != kMoved) break;
    }

    out.status = certified ? SolveStatus::Optimal : SolveStatus::Limit;
    out.x = x_;
    out.value = inst_.value_of(x_);
    out.steps = steps_;
    return out;
  }

 private:
  static constexpr int kNone = 0, kMoved = 1, kUnbounded = 2, kBudget = 3;

  Rat value_at(const std::vector<Int>& g, const Int& t) {
    std::vector<Int> y = x_;
    for (int i = 0; i < inst_.vars(); ++i) y[i] += t * g[i];
    return inst_.value_of(y);
  }

  // Difference f(x + (t+1) g) - f(x + t g); nondecreasing in t by convexity.
  Rat delta(const std::vector<Int>& g, const Int& t) {
    return value_at(g, t + 1) - value_at(g, t);
  }

  // First t in [lo, hi-1] with pred(delta(t)); hi when none.
  template <typename P>
  Int first_with(const std::vector<Int>& g, Int lo, Int hi, P&& pred) {
    while (lo < hi) {
      Int mid = fdiv(lo + hi, 2);
      if (pred(delta(g, mid)))
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

  // Minimizer plateau [p, q] of f along g over the feasible step range.
  // Returns false when the range is infinite and the walk cannot pin it down
  // (unbounded ray is reported through *ray).
  bool plateau(const std::vector<Int>& g, Int& p, Int& q, bool* ray) {
    StepRange r = step_range(inst_, x_, g);
    *ray = false;
    if (r.hi_inf) {
      auto [slope, quad] = asymptotic_slope(inst_, g);
      if (!quad && slope < Rat()) {
        *ray = true;
        return false;
      }
      Int h = 1;
      int guard = 0;
      while (delta(g, h) < Rat()) {
        h *= 2;
        if (++guard > 64) return false;
      }
      r.hi = h + 1;
      r.hi_inf = false;
    }
    if (r.lo_inf) {
      std::vector<Int> neg(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
      auto [slope, quad] = asymptotic_slope(inst_, neg);
      if (!quad && slope < Rat()) {
        *ray = true;
        return false;
      }
      Int h = 1;
      int guard = 0;
      while (delta(g, -h - 1) > Rat()) {
        h *= 2;
        if (++guard > 64) return false;
      }
      r.lo = -h - 1;
      r.lo_inf = false;
    }
    p = first_with(g, r.lo, r.hi, [](const Rat& d) { return !(d < Rat()); });
    q = first_with(g, r.lo, r.hi, [](const Rat& d) { return Rat() < d; });
    return true;
  }

  int improving_move() {
    Rat current = inst_.value_of(x_);
    for (const std::vector<Int>& g : pool_) {
      Int p, q;
      bool ray = false;
      if (!plateau(g, p, q, &ray)) {
        if (ray) return kUnbounded;
        continue;
      }
      if (value_at(g, p) < current) {
        if (steps_ >= lim_.augment_step_budget) return kBudget;
        apply(g, p);
        return kMoved;
      }
    }
    return kNone;
  }

  int lex_move() {
    for (const std::vector<Int>& g : pool_) {
      Int p, q;
      bool ray = false;
      if (!plateau(g, p, q, &ray)) continue;  // rays were handled earlier
      Rat current = inst_.value_of(x_);
      if (!(value_at(g, p) == current)) continue;  // 0 is then not on the plateau
      for (const Int& t : {p, q}) {
        if (t == 0) continue;
        std::vector<Int> y = x_;
        for (int i = 0; i < inst_.vars(); ++i) y[i] += t * g[i];
        if (std::lexicographical_compare(y.begin(), y.end(), x_.begin(), x_.end())) {
          if (steps_ >= lim_.augment_step_budget) return kBudget;
          apply(g, t);
          return kMoved;
        }
      }
    }
    return kNone;
  }

  void apply(const std::vector<Int>& g, const Int& t) {
    for (int i = 0; i < inst_.vars(); ++i) x_[i] += t * g[i];
    ++steps_;
  }

  const IPInstance& inst_;
  std::vector<Int> x_;
  const Limits& lim_;
  KernelPool pool_src_;
  std::vector<std::vector<Int>> pool_;
  long steps_ = 0;
};

}  // namespace

IPSolution solve_augmentation(const IPInstance& inst, const std::vector<Int>& start,
                              const Limits& lim) {
  inst.check();
  if (!inst.is_feasible(start)) throw NoFeasibleStart("solve_augmentation: start infeasible");
  return Augmenter(inst, start, lim).run();
}

namespace {

// Search window for variables without a finite bound; feasibility inside it is
// genuine, exhaustion is not a proof of infeasibility.
const long kInfiniteWindow = 32;

struct StartSearch {
  std::optional<std::vector<Int>> point;
  bool exhaustive = true;
};

StartSearch find_feasible(const IPInstance& inst, const Limits&) {
  StartSearch out;
  std::vector<Int> lo(inst.vars()), hi(inst.vars());
  for (int i = 0; i < inst.vars(); ++i) {
    if (inst.lower[i])
      lo[i] = *inst.lower[i];
    else {
      lo[i] = -kInfiniteWindow;
      out.exhaustive = false;
    }
    if (inst.upper[i])
      hi[i] = *inst.upper[i];
    else {
      hi[i] = kInfiniteWindow;
      out.exhaustive = false;
    }
    if (hi[i] < lo[i]) return out;  // empty box, exhaustively so
  }
  BoxWalk walk(inst, lo, hi);
  walk.run([&](const std::vector<Int>& x) {
    out.point = x;
    return false;  // first point in lex order is enough
  });
  return out;
}

}  // namespace

IPSolution solve(const IPInstance& inst, int depth_bound, SolveMode mode, const Limits& lim) {
  inst.check();
  PreprocessResult pre = preprocess(inst);
  if (pre.infeasible) {
    IPSolution out;
    out.status = SolveStatus::Infeasible;
    return out;
  }
  IPInstance work = pre.inst;
  bool transformed = false;
  int depth = 0;
  bool exact_depth = false;
  if (mode != SolveMode::None) {
    TransformMode tm =
        mode == SolveMode::Exact ? TransformMode::Exact : TransformMode::Heuristic;
    TransformResult tr = transform_pipeline(work.a, depth_bound, tm, lim);
    Vec b2 = tr.B * work.b;
    auto [ai, bi] = integerize(tr.A_prime, b2);
    work.a = std::move(ai);
    work.b = std::move(bi);
    transformed = true;
    depth = tr.reported_depth;
    exact_depth = tr.exact;
  } else {
    auto [ai, bi] = integerize(work.a, work.b);
    work.a = std::move(ai);
    work.b = std::move(bi);
  }

  StartSearch start = find_feasible(work, lim);
  IPSolution out;
  if (!start.point) {
    out.status = start.exhaustive ? SolveStatus::Infeasible : SolveStatus::Limit;
  } else {
    out = solve_augmentation(work, *start.point, lim);
  }
  out.transformed = transformed;
  out.depth = depth;
  out.exact_depth = exact_depth;
  return out;
}

}  // namespace tdopt
