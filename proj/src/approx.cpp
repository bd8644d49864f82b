#include <flatsep/approx.hpp>

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

namespace flatsep {

namespace {

long long incidence_count(const std::vector<Point>& points,
                          const Hyperplane& h) {
  long long c = 0;
  for (const Point& p : points)
    if (dot(h.normal, p) == h.offset) ++c;
  return c;
}

struct Best {
  long long count = -1;
  Hyperplane h;

  void consider(Hyperplane cand, long long cnt) {
    if (cnt > count || (cnt == count && compare_hyperplanes(cand, h) < 0)) {
      count = cnt;
      h = std::move(cand);
    }
  }
};

}  // namespace

double f_of_k(long long k) {
  if (k <= 4) return 1.0;
  double lg = std::log2(static_cast<double>(k));
  return lg / std::log2(lg);
}

ApproxReport approx_maxhyp(const std::vector<Point>& points, int dimension,
                           int threads, Stats* stats) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "heuristic on an empty point list");
  if (dimension < 1)
    throw Error(ErrorCode::MalformedInstance, "dimension must be at least 1");
  for (size_t i = 0; i < points.size(); ++i)
    if (static_cast<int>(points[i].size()) != dimension)
      throw Error(ErrorCode::DimensionMismatch, "point has wrong length",
                  static_cast<long>(i));
  const int D = dimension;
  const long long k = static_cast<long long>(points.size());

  ApproxReport rep;
  rep.fk = f_of_k(k);

  if (k <= D) {
    // k points span at most a (k-1)-flat, so one hyperplane carries all.
    rep.mode = ApproxCase::AllPoints;
    rep.hyperplane = hyperplane_through(points, D);
    rep.count = k;
    bump_candidates(stats);
    return rep;
  }

  if (rep.fk < static_cast<double>(D)) {
    rep.mode = ApproxCase::AnyDPoints;
    std::vector<Point> head(points.begin(), points.begin() + D);
    rep.hyperplane = hyperplane_through(head, D);
    rep.count = incidence_count(points, rep.hyperplane);
    bump_candidates(stats);
    return rep;
  }

  rep.mode = ApproxCase::Grouped;
  const int g = static_cast<int>(std::ceil(rep.fk));
  rep.groupSize = g;

  // Blocks of g consecutive points; a tail too short to host a D-subset
  // joins its predecessor (there is one: k > D rules out a lone short
  // block).
  std::vector<std::pair<size_t, size_t>> groups;
  for (size_t from = 0; from < points.size(); from += g)
    groups.emplace_back(from, std::min(points.size(), from + size_t(g)));
  if (groups.size() > 1 &&
      groups.back().second - groups.back().first < static_cast<size_t>(D)) {
    groups[groups.size() - 2].second = groups.back().second;
    groups.pop_back();
  }

  std::vector<Hyperplane> candidates;
  for (auto [from, to] : groups) {
    const size_t before = candidates.size();
    std::vector<int> c(D);
    for (int i = 0; i < D; ++i) c[i] = static_cast<int>(from) + i;
    const int last = static_cast<int>(to);
    for (;;) {
      std::vector<Point> sub;
      sub.reserve(D);
      for (int idx : c) sub.push_back(points[idx]);
      if (affine_rank(sub) == D - 1)
        candidates.push_back(hyperplane_through(sub, D));
      int i = D - 1;
      while (i >= 0 && c[i] == last - D + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < D; ++j) c[j] = c[j - 1] + 1;
    }
    if (candidates.size() == before) {
      // Every D-subset was degenerate, so the whole block spans less
      // than D-1 dimensions and has one completed hull hyperplane.
      std::vector<Point> whole(points.begin() + from, points.begin() + to);
      candidates.push_back(hyperplane_through(whole, D));
    }
  }
  bump_candidates(stats, candidates.size());

  const int T =
      std::max(1, std::min<int>(threads, static_cast<int>(candidates.size())));
  std::vector<Best> bests(T);
  if (T == 1) {
    for (const Hyperplane& h : candidates)
      bests[0].consider(h, incidence_count(points, h));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (int w = 0; w < T; ++w)
      pool.emplace_back([&, w]() {
        for (size_t i = w; i < candidates.size(); i += T)
          bests[w].consider(candidates[i],
                            incidence_count(points, candidates[i]));
      });
    for (auto& th : pool) th.join();
  }
  Best best;
  for (Best& b : bests)
    if (b.count >= 0) best.consider(std::move(b.h), b.count);
  rep.hyperplane = std::move(best.h);
  rep.count = best.count;
  return rep;
}

}  // namespace flatsep
