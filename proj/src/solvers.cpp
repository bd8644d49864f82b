#include <flatsep/solvers.hpp>

#include <algorithm>
#include <thread>
#include <utility>

namespace flatsep {

namespace {

// --- transversal decision -------------------------------------------------
//
// View the finished choice as the s x (D+1) matrix of homogenized chosen
// points (one row per set, last column all ones). A choice works iff that
// matrix has rank <= m+1, and the rank can be evaluated column-wise: each
// coordinate contributes the length-s vector of its chosen values. A
// column is fully known as soon as every set that is non-constant in it
// has been decided ("closed"), and a column that is constant inside every
// set is known before the search starts. Known columns only ever join the
// final matrix, so rank(known columns) > m+1 is an exact prune, and at a
// leaf every column is known, making the test exact rather than heuristic.
struct Decider {
  const PointFamily& fam;
  int m;
  Stats* stats;

  int s = 0;
  int D = 0;
  // Candidate points per set; a locked set exposes exactly one.
  std::vector<std::vector<const Point*>> cand;
  // Constant columns per set (over its candidates) and their values.
  std::vector<std::vector<char>> constant;
  std::vector<std::vector<Rational>> constval;
  // Varying columns per set, sets varying in each column.
  std::vector<std::vector<int>> varycols;
  std::vector<std::vector<int>> touch;

  std::vector<int> order;                 // processing order over sets
  std::vector<std::vector<int>> closing;  // columns closed after position t

  Decider(const PointFamily& f, int target, const std::vector<int>& locked,
          Stats* st)
      : fam(f), m(target), stats(st) {
    s = static_cast<int>(fam.sets.size());
    D = fam.dimension;
    cand.resize(s);
    for (int h = 0; h < s; ++h) {
      if (locked[h] >= 0) {
        cand[h].push_back(&fam.sets[h][locked[h]]);
      } else {
        for (const Point& p : fam.sets[h]) cand[h].push_back(&p);
      }
    }
    constant.assign(s, std::vector<char>(D, 1));
    constval.assign(s, std::vector<Rational>(D));
    for (int h = 0; h < s; ++h)
      for (int c = 0; c < D; ++c) {
        const Rational& v0 = (*cand[h][0])[c];
        for (size_t i = 1; i < cand[h].size(); ++i)
          if ((*cand[h][i])[c] != v0) {
            constant[h][c] = 0;
            break;
          }
        if (constant[h][c]) constval[h][c] = v0;
      }
    varycols.resize(s);
    touch.assign(D, {});
    for (int c = 0; c < D; ++c)
      for (int h = 0; h < s; ++h)
        if (!constant[h][c]) {
          touch[c].push_back(h);
          varycols[h].push_back(c);
        }
    build_order();
  }

  // Sets are scheduled column-first: repeatedly take the open column with
  // the fewest undecided non-constant sets (ties: lowest column index) and
  // append its undecided sets in index order, so every column gets closed
  // -- and tested -- as early as the family's structure allows. Sets that
  // are constant everywhere go last; they can never fail a test.
  void build_order() {
    std::vector<char> done(s, 0);
    std::vector<int> remaining(D, 0);
    for (int c = 0; c < D; ++c) remaining[c] = static_cast<int>(touch[c].size());
    for (;;) {
      int best = -1;
      for (int c = 0; c < D; ++c)
        if (remaining[c] > 0 && (best < 0 || remaining[c] < remaining[best]))
          best = c;
      if (best < 0) break;
      for (int h : touch[best])
        if (!done[h]) {
          done[h] = 1;
          order.push_back(h);
          for (int c : varycols[h]) --remaining[c];
        }
    }
    for (int h = 0; h < s; ++h)
      if (!done[h]) order.push_back(h);

    std::vector<int> pos(s, -1);
    for (size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
    closing.assign(order.size(), {});
    for (int c = 0; c < D; ++c) {
      if (touch[c].empty()) continue;  // known up front, part of the base
      int last = -1;
      for (int h : touch[c]) last = std::max(last, pos[h]);
      closing[last].push_back(c);
    }
  }

  // Length-s slot vector of a column known before the search: the
  // per-set constant values.
  Vec base_column(int c) const {
    Vec v(s);
    for (int h = 0; h < s; ++h) v[h] = constval[h][c];
    return v;
  }

  bool decide() {
    Echelon base(s);
    for (int c = 0; c < D; ++c)
      if (touch[c].empty()) base.add(base_column(c));
    base.add(Vec(s, Rational(1)));  // homogenizing column
    int r0 = base.rank();
    if (r0 > m + 1) return false;
    if (r0 == m + 1) return decide_saturated(base);
    return decide_growing(base);
  }

  // Saturated case: the known columns already have rank m+1, so any later
  // column independent of them is an immediate contradiction and any run
  // where every column stays dependent is a yes. Dependence against a
  // fixed row space is a handful of dot products with its kernel basis,
  // maintained incrementally along the search path.
  bool decide_saturated(const Echelon& base) {
    std::vector<Vec> kernel;
    {
      std::vector<char> is_pivot(s, 0);
      for (int p : base.pivots()) is_pivot[p] = 1;
      for (int f = 0; f < s; ++f)
        if (!is_pivot[f]) kernel.push_back(base.kernel_vector(f));
    }
    if (kernel.empty()) return true;  // every completion stays at rank m+1
    const int W = static_cast<int>(kernel.size());

    // acc[c][w] accumulates kernel[w] . (column c); constant slots are
    // folded in up front, decided slots are added as the search descends.
    std::vector<std::vector<Rational>> acc(D, std::vector<Rational>(W));
    for (int c = 0; c < D; ++c) {
      if (touch[c].empty()) continue;
      for (int h = 0; h < s; ++h)
        if (constant[h][c])
          for (int w = 0; w < W; ++w) acc[c][w] += kernel[w][h] * constval[h][c];
    }
    // delta[h][i] = per-candidate contributions, premultiplied.
    struct Contribution {
      int col;
      std::vector<Rational> d;
    };
    std::vector<std::vector<std::vector<Contribution>>> delta(s);
    for (int h = 0; h < s; ++h) {
      delta[h].resize(cand[h].size());
      for (size_t i = 0; i < cand[h].size(); ++i)
        for (int c : varycols[h]) {
          Contribution contrib;
          contrib.col = c;
          contrib.d.resize(W);
          for (int w = 0; w < W; ++w)
            contrib.d[w] = kernel[w][h] * (*cand[h][i])[c];
          delta[h][i].push_back(std::move(contrib));
        }
    }

    std::vector<size_t> pick(order.size(), 0);
    int t = 0;
    const int depth = static_cast<int>(order.size());
    while (t >= 0) {
      if (t == depth) return true;
      int h = order[t];
      bool descended = false;
      while (pick[t] < cand[h].size()) {
        size_t i = pick[t];
        bump_candidates(stats);
        for (const Contribution& con : delta[h][i])
          for (int w = 0; w < W; ++w) acc[con.col][w] += con.d[w];
        bool ok = true;
        for (int c : closing[t]) {
          for (int w = 0; w < W; ++w)
            if (acc[c][w] != 0) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (ok) {
          ++t;
          descended = true;
          break;
        }
        for (const Contribution& con : delta[h][i])
          for (int w = 0; w < W; ++w) acc[con.col][w] -= con.d[w];
        ++pick[t];
      }
      if (descended) continue;
      // exhausted this level: unwind the parent's current pick
      pick[t] = 0;
      --t;
      if (t >= 0) {
        int hp = order[t];
        size_t ip = pick[t];
        for (const Contribution& con : delta[hp][ip])
          for (int w = 0; w < W; ++w) acc[con.col][w] -= con.d[w];
        ++pick[t];
      }
    }
    return false;
  }

  // General case: keep a live echelon of the known columns and add each
  // column as it closes; rank > m+1 prunes, a full-depth run accepts.
  bool decide_growing(Echelon& live) {
    std::vector<const Point*> chosen(s, nullptr);
    std::vector<size_t> pick(order.size(), 0);
    std::vector<int> added(order.size(), 0);
    const int depth = static_cast<int>(order.size());
    int t = 0;
    auto undo = [&](int lvl) {
      while (added[lvl] > 0) {
        live.pop();
        --added[lvl];
      }
    };
    while (t >= 0) {
      if (t == depth) return true;
      int h = order[t];
      bool descended = false;
      while (pick[t] < cand[h].size()) {
        bump_candidates(stats);
        chosen[h] = cand[h][pick[t]];
        added[t] = 0;
        bool ok = true;
        for (int c : closing[t]) {
          Vec u(s);
          for (int h2 = 0; h2 < s; ++h2)
            u[h2] = constant[h2][c] ? constval[h2][c] : (*chosen[h2])[c];
          if (live.add(std::move(u))) {
            if (live.rank() > m + 1) {
              live.pop();
              ok = false;
              break;
            }
            ++added[t];
          }
        }
        if (ok) {
          ++t;
          descended = true;
          break;
        }
        undo(t);
        ++pick[t];
      }
      if (descended) continue;
      pick[t] = 0;
      --t;
      if (t >= 0) {
        undo(t);
        ++pick[t];
      }
    }
    return false;
  }
};

bool transversal_decide(const PointFamily& family, int m,
                        const std::vector<int>& locked, Stats* stats) {
  Decider d(family, m, locked, stats);
  return d.decide();
}

bool on_hyperplane(const Hyperplane& h, const Point& p) {
  return dot(h.normal, p) == h.offset;
}

}  // namespace

std::optional<TransversalCertificate> finite_flat_transversal(
    const PointFamily& family, int m, Stats* stats) {
  family.validate();
  const int D = family.dimension;
  if (m < 0 || m > D)
    throw Error(ErrorCode::BadTarget, "flat dimension target out of range");
  const int s = static_cast<int>(family.sets.size());
  for (const auto& set : family.sets)
    if (set.empty()) return std::nullopt;

  auto finish = [&](std::vector<int> chosen) {
    std::vector<Point> pts;
    pts.reserve(s);
    for (int i = 0; i < s; ++i) pts.push_back(family.sets[i][chosen[i]]);
    Flat flat = flat_from_points(pts);
    if (flat.dim() > m)
      throw Error(ErrorCode::Internal, "transversal certificate rank check");
    for (const Point& p : pts)
      if (!flat_contains(flat, p))
        throw Error(ErrorCode::Internal, "transversal certificate containment");
    return TransversalCertificate{std::move(chosen), std::move(flat)};
  };

  // s points always fit in an (s-1)-flat, so the all-first choice -- the
  // lexicographic minimum -- is a certificate whenever m >= s-1.
  if (m >= s - 1) return finish(std::vector<int>(s, 0));

  std::vector<int> locked(s, -1);
  if (!transversal_decide(family, m, locked, stats)) return std::nullopt;
  // Lexicographically first certificate by self-reduction: fix each set to
  // its smallest point index that keeps the rest solvable.
  for (int i = 0; i < s; ++i) {
    const int n_i = static_cast<int>(family.sets[i].size());
    if (n_i == 1) {
      locked[i] = 0;
      continue;
    }
    bool fixed = false;
    for (int j = 0; j < n_i; ++j) {
      locked[i] = j;
      if (transversal_decide(family, m, locked, stats)) {
        fixed = true;
        break;
      }
    }
    if (!fixed)
      throw Error(ErrorCode::Internal, "transversal self-reduction dead end");
  }
  return finish(std::move(locked));
}

std::optional<TransversalCertificate> hyperplane_transversal_points(
    const PointFamily& family, Stats* stats) {
  family.validate();
  return finite_flat_transversal(family, family.dimension - 1, stats);
}

void SegmentFamily::validate() const {
  if (dimension < 1)
    throw Error(ErrorCode::MalformedInstance,
                "segment family dimension must be at least 1");
  for (size_t i = 0; i < segments.size(); ++i)
    if (static_cast<int>(segments[i].first.size()) != dimension ||
        static_cast<int>(segments[i].second.size()) != dimension)
      throw Error(ErrorCode::DimensionMismatch,
                  "segment endpoint has wrong length", static_cast<long>(i));
}

std::optional<Hyperplane> segment_hyperplane_transversal(
    const SegmentFamily& segs, Stats* stats) {
  segs.validate();
  if (segs.segments.empty())
    throw Error(ErrorCode::EmptyInput, "segment family has no segments");
  const int D = segs.dimension;
  const int k = static_cast<int>(segs.segments.size());

  std::vector<int> nondeg;
  for (int i = 0; i < k; ++i)
    if (segs.segments[i].first != segs.segments[i].second) nondeg.push_back(i);
  const int s = static_cast<int>(nondeg.size());
  if (s >= 63)
    throw Error(ErrorCode::BudgetExceeded,
                "orientation pattern space too large to enumerate");

  // Variables: normal a_0..a_{D-1}, then the offset a0. A segment [P,Q]
  // meets {a.x = a0} iff a.P - a0 and a.Q - a0 have opposite closed signs.
  const int vars = D + 1;
  auto side_row = [&](const Point& p, Rel rel) {
    LPRow row{Vec(vars, Rational(0)), rel, Rational(0)};
    for (int d = 0; d < D; ++d) row.coeffs[d] = p[d];
    row.coeffs[D] = -1;
    return row;
  };

  for (std::uint64_t code = 0; code < (std::uint64_t(1) << s); ++code) {
    bump_candidates(stats);
    LPInstance lp;
    lp.variables = vars;
    for (int i = 0, t = 0; i < k; ++i) {
      const auto& [P, Q] = segs.segments[i];
      if (P == Q) {
        lp.rows.push_back(side_row(P, Rel::EQ));
      } else {
        bool flip = ((code >> t) & 1) != 0;
        ++t;
        lp.rows.push_back(side_row(P, flip ? Rel::LE : Rel::GE));
        lp.rows.push_back(side_row(Q, flip ? Rel::GE : Rel::LE));
      }
    }
    lp.rows.push_back(LPRow{Vec(vars, Rational(0)), Rel::EQ, Rational(0)});
    LPRow& norm = lp.rows.back();
    for (int j = 0; j < D; ++j) {
      norm.coeffs[j] = 1;
      for (int sign : {1, -1}) {
        norm.rhs = sign;
        LPOutcome o = lp_solve(lp, stats);
        if (o.status == LPStatus::Feasible) {
          Vec a(o.assignment.begin(), o.assignment.begin() + D);
          return make_canonical_hyperplane(std::move(a), o.assignment[D]);
        }
      }
      norm.coeffs[j] = 0;
    }
  }
  return std::nullopt;
}

MaxHypReport maxhyp_exact(const std::vector<Point>& points, int dimension,
                          int threads, Stats* stats) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "maxhyp on an empty point list");
  if (dimension < 1)
    throw Error(ErrorCode::MalformedInstance, "dimension must be at least 1");
  for (size_t i = 0; i < points.size(); ++i)
    if (static_cast<int>(points[i].size()) != dimension)
      throw Error(ErrorCode::DimensionMismatch, "point has wrong length",
                  static_cast<long>(i));
  const int n = static_cast<int>(points.size());
  const int D = dimension;

  if (affine_rank(points) <= D - 1) {
    bump_candidates(stats);
    return MaxHypReport{hyperplane_through(points, D),
                        static_cast<long long>(n)};
  }

  // Full-rank input: some hyperplane through D affinely independent input
  // points attains the optimum, so the D-subsets are a complete candidate
  // list. Enumerate them in lexicographic index order.
  std::vector<std::vector<int>> combos;
  {
    std::vector<int> c(D);
    for (int i = 0; i < D; ++i) c[i] = i;
    for (;;) {
      combos.push_back(c);
      int i = D - 1;
      while (i >= 0 && c[i] == n - D + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < D; ++j) c[j] = c[j - 1] + 1;
    }
  }
  bump_candidates(stats, combos.size());

  struct Best {
    long long count = -1;
    Hyperplane h;
  };
  auto consider = [&](Best& best, const std::vector<int>& combo) {
    std::vector<Point> sub;
    sub.reserve(D);
    for (int idx : combo) sub.push_back(points[idx]);
    if (affine_rank(sub) != D - 1) return;
    Hyperplane h = hyperplane_through(sub, D);
    long long cnt = 0;
    for (const Point& p : points)
      if (on_hyperplane(h, p)) ++cnt;
    if (cnt > best.count ||
        (cnt == best.count && compare_hyperplanes(h, best.h) < 0)) {
      best.count = cnt;
      best.h = std::move(h);
    }
  };

  int T = std::max(1, std::min<int>(threads, static_cast<int>(combos.size())));
  std::vector<Best> bests(T);
  if (T == 1) {
    for (const auto& combo : combos) consider(bests[0], combo);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (int w = 0; w < T; ++w)
      pool.emplace_back([&, w]() {
        for (size_t i = w; i < combos.size(); i += T)
          consider(bests[w], combos[i]);
      });
    for (auto& th : pool) th.join();
  }
  Best best;
  for (const Best& b : bests) {
    if (b.count < 0) continue;
    if (b.count > best.count ||
        (b.count == best.count && compare_hyperplanes(b.h, best.h) < 0))
      best = b;
  }
  if (best.count < 0)
    throw Error(ErrorCode::Internal, "full-rank input without a spanning subset");
  return MaxHypReport{best.h, best.count};
}

}  // namespace flatsep
