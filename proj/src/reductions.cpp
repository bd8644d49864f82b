#include <flatsep/reductions.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace flatsep {
namespace {

constexpr long long kScanBudget = 1ll << 20;
constexpr long long kChoiceBudget = 1'000'000;

Point zero_point(int dimension) {
  return Point(static_cast<std::size_t>(dimension), Rational(0));
}

bool is_origin_singleton(const std::vector<Point>& set) {
  return set.size() == 1 && is_zero(set[0]);
}

/// All ways to pick one point per set, as index tuples; the caller has
/// already bounded the product of the set sizes.
std::vector<std::vector<int>> product_choices(
    const std::vector<std::vector<Point>>& sets) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(sets.size(), 0);
  for (;;) {
    out.push_back(pick);
    int t = static_cast<int>(sets.size()) - 1;
    while (t >= 0 && pick[t] + 1 == static_cast<int>(sets[t].size())) {
      pick[t] = 0;
      --t;
    }
    if (t < 0) break;
    ++pick[t];
  }
  return out;
}

}  // namespace

void SubsetSumInstance::validate() const {
  if (a.empty())
    throw Error(ErrorCode::MalformedInstance,
                "subset-sum instance has no items");
}

void BinPackingInstance::validate() const {
  if (w.empty())
    throw Error(ErrorCode::MalformedInstance,
                "bin-packing instance has no items");
  if (bins < 1)
    throw Error(ErrorCode::MalformedInstance,
                "bin count must be at least 1, got " + std::to_string(bins));
  if (capacity < 1)
    throw Error(ErrorCode::MalformedInstance,
                "bin capacity must be at least 1, got " +
                    std::to_string(capacity));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < 1)
      throw Error(ErrorCode::MalformedInstance,
                  "item " + std::to_string(i + 1) + " has weight " +
                      std::to_string(w[i]) + "; weights must be positive",
                  static_cast<long>(i));
}

void Graph::validate() const {
  if (n < 0)
    throw Error(ErrorCode::MalformedInstance,
                "vertex count must be nonnegative, got " + std::to_string(n));
  std::vector<std::pair<int, int>> seen;
  for (std::size_t t = 0; t < edges.size(); ++t) {
    const auto& [u, v] = edges[t];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::MalformedInstance,
                  "edge " + std::to_string(t + 1) + " leaves the vertex range",
                  static_cast<long>(t));
    if (u >= v)
      throw Error(ErrorCode::MalformedInstance,
                  "edge " + std::to_string(t + 1) +
                      " must list its endpoints in increasing order",
                  static_cast<long>(t));
    seen.push_back(edges[t]);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw Error(ErrorCode::MalformedInstance, "duplicate edge");
}

PointFamily subsetsum_to_hyptrans(const SubsetSumInstance& inst) {
  inst.validate();
  const int n = static_cast<int>(inst.a.size());
  PointFamily out;
  out.dimension = n + 1;
  for (int i = 0; i < n; ++i) {
    Point v = zero_point(n + 1);
    v[0] = inst.a[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(1 + i)] = 1;
    Point w = zero_point(n + 1);
    w[static_cast<std::size_t>(1 + i)] = 1;
    out.sets.push_back({std::move(v), std::move(w)});
  }
  Point u = zero_point(n + 1);
  u[0] = -inst.b;
  for (int i = 1; i <= n; ++i) u[static_cast<std::size_t>(i)] = -1;
  out.sets.push_back({std::move(u)});
  out.sets.push_back({zero_point(n + 1)});
  return out;
}

std::optional<BinPackingInstance> binpacking_to_equal(
    const BinPackingInstance& inst) {
  inst.validate();
  Integer total = 0;
  for (long long wi : inst.w) {
    if (wi > inst.capacity) return std::nullopt;
    total += wi;
  }
  const Integer room = Integer(inst.bins) * inst.capacity;
  if (total > room) return std::nullopt;
  const Integer pad = room - total;
  if (pad > kChoiceBudget)
    throw Error(ErrorCode::BudgetExceeded,
                "equal-fill padding would add " + pad.str() + " unit items");
  BinPackingInstance out = inst;
  for (Integer t = 0; t < pad; ++t) out.w.push_back(1);
  return out;
}

FlatTransInstance equalbin_to_flattrans(const BinPackingInstance& equalFill) {
  equalFill.validate();
  const int n = static_cast<int>(equalFill.w.size());
  const int k = equalFill.bins;
  if (Integer(k) * n + k + n > kChoiceBudget)
    throw Error(ErrorCode::BudgetExceeded,
                "ambient dimension k + n + k*n is out of range");
  const int pairs = k * n;
  const int dim = k + n + pairs;
  auto pair_coord = [k, n](int i, int j) {  // 1-based item i, bin j
    return k + n + (i - 1) * k + (j - 1);
  };
  PointFamily fam;
  fam.dimension = dim;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      Point v = zero_point(dim);
      v[static_cast<std::size_t>(j - 1)] =
          equalFill.w[static_cast<std::size_t>(i - 1)];
      v[static_cast<std::size_t>(k + i - 1)] = 1;
      v[static_cast<std::size_t>(pair_coord(i, j))] = 1;
      Point u = zero_point(dim);
      u[static_cast<std::size_t>(pair_coord(i, j))] = 1;
      fam.sets.push_back({std::move(v), std::move(u)});
    }
  }
  Point c = zero_point(dim);
  for (int x = 0; x < dim; ++x)
    c[static_cast<std::size_t>(x)] = x < k ? Rational(-equalFill.capacity)
                                           : Rational(-1);
  fam.sets.push_back({std::move(c)});
  fam.sets.push_back({zero_point(dim)});
  return {std::move(fam), pairs};
}

PointFamily flattrans_to_hyptrans(const PointFamily& family, LiftMode mode) {
  family.validate();
  const int m = static_cast<int>(family.sets.size());
  const int dim = family.dimension;
  if (!is_origin_singleton(family.sets.back()))
    throw Error(ErrorCode::PreconditionViolated,
                "the last set must be exactly the origin",
                static_cast<long>(m - 1));
  if (m > dim + 1)
    throw Error(ErrorCode::PreconditionViolated,
                std::to_string(m) + " sets in dimension " +
                    std::to_string(dim) + "; lifting needs at most D+1 sets");
  if (m == dim + 1) return family;  // already the hyperplane question

  PointFamily out;
  if (mode == LiftMode::Paper) {
    out.dimension = dim + 2;
    for (int i = 0; i + 1 < m; ++i) {
      std::vector<Point> padded;
      for (const Point& p : family.sets[static_cast<std::size_t>(i)]) {
        Point q = p;
        q.push_back(0);
        q.push_back(0);
        padded.push_back(std::move(q));
      }
      out.sets.push_back(std::move(padded));
    }
    for (int label = m; label <= dim + 2; ++label) {
      Point s = zero_point(dim + 2);
      s[static_cast<std::size_t>(dim)] = 1;
      s[static_cast<std::size_t>(dim + 1)] = label;
      out.sets.push_back({std::move(s)});
    }
    out.sets.push_back({zero_point(dim + 2)});
    return out;
  }

  // Repaired mode: pad inside R^D with moment-curve directions that avoid
  // the span of every choice of one point per earlier set.
  out.dimension = dim;
  std::vector<std::vector<Point>> originals(family.sets.begin(),
                                            family.sets.end() - 1);
  long long products = 1;
  for (const auto& set : originals) {
    products *= static_cast<long long>(set.size());
    if (products > kChoiceBudget)
      throw Error(ErrorCode::BudgetExceeded,
                  "padding scan would enumerate more than 10^6 point choices");
    if (products == 0) break;
  }
  std::vector<Echelon> bases;
  if (products > 0)
    for (const auto& pick : product_choices(originals)) {
      Echelon e(dim);
      for (std::size_t t = 0; t < pick.size(); ++t)
        e.add(originals[t][static_cast<std::size_t>(pick[t])]);
      bases.push_back(std::move(e));
    }
  std::vector<Point> pads;
  const int want = dim + 1 - m;
  long long s = 0;
  while (static_cast<int>(pads.size()) < want) {
    if (++s > 2'000'000)
      throw Error(ErrorCode::Internal, "moment-curve scan failed to advance");
    Point q(static_cast<std::size_t>(dim));
    Rational power = 1;
    for (int x = 0; x < dim; ++x) {
      q[static_cast<std::size_t>(x)] = power;
      power *= s;
    }
    bool clear = true;
    for (const Echelon& base : bases) {
      Echelon span = base;
      for (const Point& pad : pads) span.add(pad);
      Vec residual = q;
      span.reduce(residual);
      if (is_zero(residual)) {
        clear = false;
        break;
      }
    }
    if (clear) pads.push_back(std::move(q));
  }
  out.sets = std::move(originals);
  for (Point& pad : pads) out.sets.push_back({std::move(pad)});
  out.sets.push_back({zero_point(dim)});
  return out;
}

SegmentFamily twopoint_to_segments(const PointFamily& family) {
  family.validate();
  const int k = static_cast<int>(family.sets.size());
  const int dim = family.dimension;
  bool have_origin = false;
  for (int i = 0; i < k; ++i) {
    const auto& set = family.sets[static_cast<std::size_t>(i)];
    if (set.empty())
      throw Error(ErrorCode::EmptySet,
                  "set " + std::to_string(i + 1) + " is empty",
                  static_cast<long>(i));
    if (set.size() > 2)
      throw Error(ErrorCode::SetTooLarge,
                  "set " + std::to_string(i + 1) + " has " +
                      std::to_string(set.size()) +
                      " points; segment lifting needs at most two per set",
                  static_cast<long>(i));
    have_origin = have_origin || is_origin_singleton(set);
  }
  if (!have_origin)
    throw Error(ErrorCode::NoOriginSet,
                "no set is exactly the origin singleton");

  SegmentFamily out;
  out.dimension = dim + k;
  auto lifted = [dim, k](const Point& p, int unit) {
    Point q = p;
    q.resize(static_cast<std::size_t>(dim + k), Rational(0));
    if (unit >= 0) q[static_cast<std::size_t>(dim + unit)] = 1;
    return q;
  };
  for (int i = 0; i < k; ++i) {
    const auto& set = family.sets[static_cast<std::size_t>(i)];
    const Point& a = set[0];
    const Point& b = set.size() == 2 ? set[1] : set[0];
    out.segments.emplace_back(lifted(a, -1), lifted(b, -1));
    out.segments.emplace_back(lifted(scale(a, Rational(-1)), i),
                              lifted(scale(b, Rational(2)), i));
  }
  Point origin = zero_point(dim + k);
  out.segments.emplace_back(origin, origin);
  return out;
}

FlatTransInstance clique_to_flattrans(const Graph& g, int k) {
  g.validate();
  if (k < 2 || k > g.n)
    throw Error(ErrorCode::BadK, "clique size must satisfy 2 <= k <= n, got " +
                                     std::to_string(k) + " with n = " +
                                     std::to_string(g.n));
  const int n = g.n;
  const int big = k * k + 2 * k;  // gadget count; also the target dimension
  const int dim = k * k + 4 * k;
  std::vector<Rational> kpow(static_cast<std::size_t>(n + 2));
  kpow[0] = 1;
  for (int e = 1; e <= n + 1; ++e)
    kpow[static_cast<std::size_t>(e)] = kpow[static_cast<std::size_t>(e - 1)] * k;
  std::vector<std::vector<bool>> adj(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  auto left = [big](int a) { return big + (a - 1); };         // slot a, 1-based
  auto right = [big, k](int b) { return big + k + (b - 1); };  // slot b, 1-based

  PointFamily fam;
  fam.dimension = dim;
  int gadget = 0;  // f: row-major encoding gadgets, then rows, then columns
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      std::vector<Point> set;
      if (a == b) {
        for (int i = 1; i <= n; ++i) {
          Point p = zero_point(dim);
          p[static_cast<std::size_t>(gadget)] = 1;
          p[static_cast<std::size_t>(left(a))] = kpow[static_cast<std::size_t>(i)];
          p[static_cast<std::size_t>(right(a))] = kpow[static_cast<std::size_t>(i)];
          set.push_back(std::move(p));
        }
      } else {
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i == j || !adj[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(j - 1)])
              continue;
            Point p = zero_point(dim);
            p[static_cast<std::size_t>(gadget)] = 1;
            p[static_cast<std::size_t>(left(a))] =
                kpow[static_cast<std::size_t>(i)];
            p[static_cast<std::size_t>(right(b))] =
                kpow[static_cast<std::size_t>(j)];
            set.push_back(std::move(p));
          }
      }
      fam.sets.push_back(std::move(set));
      ++gadget;
    }
  for (int a = 1; a <= k; ++a) {
    std::vector<Point> set;
    for (int i = 1; i <= n; ++i) {
      Point p = zero_point(dim);
      p[static_cast<std::size_t>(gadget)] = 1;
      p[static_cast<std::size_t>(left(a))] = -kpow[static_cast<std::size_t>(i + 1)];
      set.push_back(std::move(p));
    }
    fam.sets.push_back(std::move(set));
    ++gadget;
  }
  for (int b = 1; b <= k; ++b) {
    std::vector<Point> set;
    for (int j = 1; j <= n; ++j) {
      Point p = zero_point(dim);
      p[static_cast<std::size_t>(gadget)] = 1;
      p[static_cast<std::size_t>(right(b))] = -kpow[static_cast<std::size_t>(j + 1)];
      set.push_back(std::move(p));
    }
    fam.sets.push_back(std::move(set));
    ++gadget;
  }
  fam.sets.push_back({zero_point(dim)});
  Point p1 = zero_point(dim);
  for (int x = 0; x < big; ++x) p1[static_cast<std::size_t>(x)] = -1;
  fam.sets.push_back({std::move(p1)});
  return {std::move(fam), big};
}

std::optional<std::vector<int>> solve_subsetsum(const SubsetSumInstance& inst) {
  inst.validate();
  const int n = static_cast<int>(inst.a.size());
  if (n > 20)
    throw Error(ErrorCode::BudgetExceeded,
                "subset scan over 2^" + std::to_string(n) +
                    " codes is out of budget");
  for (long long code = 0; code < (1ll << n); ++code) {
    Integer sum = 0;
    for (int i = 0; i < n; ++i)
      if (code >> i & 1) sum += inst.a[static_cast<std::size_t>(i)];
    if (sum == inst.b) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (code >> i & 1) subset.push_back(i);
      return subset;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> solve_equalbin(
    const BinPackingInstance& equalFill) {
  equalFill.validate();
  const int n = static_cast<int>(equalFill.w.size());
  const int k = equalFill.bins;
  long long scans = 1;
  for (int t = 0; t < n; ++t) {
    scans *= k;
    if (scans > kScanBudget)
      throw Error(ErrorCode::BudgetExceeded,
                  "assignment scan over " + std::to_string(k) + "^" +
                      std::to_string(n) + " codes is out of budget");
  }
  Integer total = 0;
  for (long long wi : equalFill.w) total += wi;
  if (total != Integer(k) * equalFill.capacity) return std::nullopt;
  std::vector<int> asn(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<Integer> fill(static_cast<std::size_t>(k), Integer(0));
    for (int t = 0; t < n; ++t)
      fill[static_cast<std::size_t>(asn[static_cast<std::size_t>(t)])] +=
          equalFill.w[static_cast<std::size_t>(t)];
    bool exact = true;
    for (const Integer& f : fill) exact = exact && f == equalFill.capacity;
    if (exact) return asn;
    int t = n - 1;
    while (t >= 0 && asn[static_cast<std::size_t>(t)] == k - 1)
      asn[static_cast<std::size_t>(t--)] = 0;
    if (t < 0) return std::nullopt;
    ++asn[static_cast<std::size_t>(t)];
  }
}

std::optional<std::vector<int>> has_clique(const Graph& g, int k) {
  g.validate();
  if (k < 1)
    throw Error(ErrorCode::BadK,
                "clique size must be positive, got " + std::to_string(k));
  if (k > g.n) return std::nullopt;
  Integer combos = 1;
  for (int i = 1; i <= k; ++i) combos = combos * (g.n - k + i) / i;
  if (combos > kScanBudget)
    throw Error(ErrorCode::BudgetExceeded,
                "vertex-subset scan is out of budget: C(" +
                    std::to_string(g.n) + ", " + std::to_string(k) +
                    ") = " + combos.str());
  std::vector<std::pair<int, int>> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  auto adjacent = [&edges](int u, int v) {
    return std::binary_search(edges.begin(), edges.end(),
                              std::make_pair(std::min(u, v), std::max(u, v)));
  };
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pick[static_cast<std::size_t>(t)] = t;
  for (;;) {
    bool clique = true;
    for (int s = 0; s < k && clique; ++s)
      for (int t = s + 1; t < k && clique; ++t)
        clique = adjacent(pick[static_cast<std::size_t>(s)],
                          pick[static_cast<std::size_t>(t)]);
    if (clique) return pick;
    int t = k - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == g.n - k + t) --t;
    if (t < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s)
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
  }
}

}  // namespace flatsep
