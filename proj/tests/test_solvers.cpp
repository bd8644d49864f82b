#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <flatsep/solvers.hpp>

#include "oracles.hpp"

#include <random>

using namespace flatsep;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> ps) {
  std::vector<Point> v;
  for (auto& p : ps) v.push_back(pt(p));
  return v;
}

PointFamily sum_family_one_item(long a, long b) {
  PointFamily f;
  f.dimension = 2;
  f.sets = {pts({{a, 1}, {0, 1}}), pts({{-b, -1}}), pts({{0, 0}})};
  return f;
}

void check_certificate(const PointFamily& f, const TransversalCertificate& c,
                       int m) {
  REQUIRE(c.chosen.size() == f.sets.size());
  CHECK(c.flat.dim() <= m);
  for (size_t i = 0; i < f.sets.size(); ++i) {
    REQUIRE(c.chosen[i] >= 0);
    REQUIRE(c.chosen[i] < static_cast<int>(f.sets[i].size()));
    CHECK(flat_contains(c.flat, f.sets[i][c.chosen[i]]));
  }
}

PointFamily random_family(std::mt19937_64& rng, int max_sets, int max_dim,
                          int max_pts) {
  std::uniform_int_distribution<int> dims(1, max_dim);
  std::uniform_int_distribution<int> nsets(2, max_sets);
  std::uniform_int_distribution<int> npts(1, max_pts);
  std::uniform_int_distribution<long> coord(-2, 2);
  PointFamily f;
  f.dimension = dims(rng);
  int s = nsets(rng);
  for (int i = 0; i < s; ++i) {
    std::vector<Point> set;
    int n = npts(rng);
    for (int j = 0; j < n; ++j) {
      Point p;
      for (int d = 0; d < f.dimension; ++d) p.emplace_back(coord(rng));
      set.push_back(std::move(p));
    }
    f.sets.push_back(std::move(set));
  }
  return f;
}

}  // namespace

TEST_CASE("one-item sum family: line transversal exists exactly at b=1") {
  PointFamily yes = sum_family_one_item(1, 1);
  auto cert = finite_flat_transversal(yes, 1);
  REQUIRE(cert.has_value());
  check_certificate(yes, *cert, 1);
  // lexicographically first: the (a,1) endpoint of the first set
  CHECK(cert->chosen == std::vector<int>{0, 0, 0});
  CHECK(cert->flat.dim() == 1);

  PointFamily no = sum_family_one_item(1, 2);
  CHECK(!finite_flat_transversal(no, 1).has_value());
}

TEST_CASE("two-item sum family lands in the saturated search case") {
  // v1 + v2 + u = 0 makes the all-first choice affinely dependent with 0.
  PointFamily f;
  f.dimension = 3;
  f.sets = {pts({{1, 1, 0}, {0, 1, 0}}), pts({{2, 0, 1}, {0, 0, 1}}),
            pts({{-3, -1, -1}}), pts({{0, 0, 0}})};
  auto cert = finite_flat_transversal(f, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->chosen == std::vector<int>{0, 0, 0, 0});
  check_certificate(f, *cert, 2);
  CHECK(testing::oracle_flat_transversal(f, 2) == cert->chosen);

  // b = 4 is unreachable from {0,1,2}-sums: no certificate.
  PointFamily no = f;
  no.sets[2] = pts({{-4, -1, -1}});
  CHECK(!finite_flat_transversal(no, 2).has_value());
  CHECK(!testing::oracle_flat_transversal(no, 2).has_value());
}

TEST_CASE("k sets always fit a (k-1)-flat") {
  std::mt19937_64 rng(420001);
  for (int t = 0; t < 25; ++t) {
    PointFamily f = random_family(rng, 4, 5, 3);
    int k = static_cast<int>(f.sets.size());
    if (k - 1 > f.dimension) continue;
    auto cert = finite_flat_transversal(f, k - 1);
    REQUIRE(cert.has_value());
    check_certificate(f, *cert, k - 1);
  }
}

TEST_CASE("target validation and empty sets") {
  PointFamily f;
  f.dimension = 2;
  f.sets = {pts({{0, 0}}), pts({{1, 1}})};
  CHECK_THROWS_AS(finite_flat_transversal(f, 3), Error);
  CHECK_THROWS_AS(finite_flat_transversal(f, -1), Error);

  PointFamily empty_set = f;
  empty_set.sets.push_back({});
  CHECK(!finite_flat_transversal(empty_set, 1).has_value());

  PointFamily no_sets;
  no_sets.dimension = 2;
  CHECK_THROWS_AS(finite_flat_transversal(no_sets, 1), Error);
}

TEST_CASE("solver matches the no-pruning product walk, including the "
          "lexicographic tie-break") {
  std::mt19937_64 rng(98321);
  std::uniform_int_distribution<int> mpick(0, 6);
  int agreements = 0;
  for (int t = 0; t < 140; ++t) {
    PointFamily f = random_family(rng, 5, 4, 3);
    int m = mpick(rng) % (f.dimension + 1);
    std::uint64_t product = 1;
    for (const auto& set : f.sets) product *= set.size();
    REQUIRE(product <= 300);  // keep the reference walk honest and fast
    auto expected = testing::oracle_flat_transversal(f, m);
    auto got = finite_flat_transversal(f, m);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) {
      CHECK(got->chosen == *expected);
      check_certificate(f, *got, m);
      ++agreements;
    }
  }
  CHECK(agreements > 20);  // the mix must exercise the yes path
}

TEST_CASE("duplicate points: the first copy wins the tie-break") {
  // A 0-flat transversal must pick the same location from both sets; the
  // origin appears twice in the first set and the earlier copy wins.
  PointFamily f;
  f.dimension = 2;
  f.sets = {pts({{3, 1}, {0, 0}, {0, 0}}), pts({{5, 5}, {0, 0}})};
  auto cert = finite_flat_transversal(f, 0);
  REQUIRE(cert.has_value());
  CHECK(cert->chosen == std::vector<int>{1, 1});
  CHECK(cert->flat.dim() == 0);
}

TEST_CASE("hyperplane transversal wrapper") {
  PointFamily collinear;
  collinear.dimension = 2;
  collinear.sets = {pts({{0, 0}}), pts({{1, 1}}), pts({{2, 2}})};
  auto cert = hyperplane_transversal_points(collinear);
  REQUIRE(cert.has_value());
  CHECK(cert->flat.dim() <= 1);

  PointFamily triangle;
  triangle.dimension = 2;
  triangle.sets = {pts({{0, 0}}), pts({{1, 0}}), pts({{0, 1}})};
  CHECK(!hyperplane_transversal_points(triangle).has_value());

  std::mt19937_64 rng(5150);
  for (int t = 0; t < 10; ++t) {
    PointFamily two = random_family(rng, 2, 2, 3);
    two.dimension = 2;
    for (auto& set : two.sets)
      for (auto& p : set) p.resize(2, Rational(0));
    auto c = hyperplane_transversal_points(two);
    REQUIRE(c.has_value());  // 2 sets in the plane always admit a line
  }
}

// --- segments -------------------------------------------------------------

TEST_CASE("segment transversal: three vertical unit segments") {
  SegmentFamily segs;
  segs.dimension = 2;
  for (long x : {-1L, 0L, 1L})
    segs.segments.push_back({pt({x, 0}), pt({x, 1})});
  auto h = segment_hyperplane_transversal(segs);
  REQUIRE(h.has_value());
  for (const auto& [P, Q] : segs.segments)
    CHECK(testing::oracle_segment_meets(*h, P, Q));
}

TEST_CASE("segment transversal: split top segments force a miss") {
  SegmentFamily segs;
  segs.dimension = 2;
  segs.segments.push_back({pt({0, 0}), pt({1, 0})});
  segs.segments.push_back({pt({0, 3}), pt({1, 3})});
  segs.segments.push_back({pt({3, 3}), pt({4, 3})});
  CHECK(!segment_hyperplane_transversal(segs).has_value());
}

TEST_CASE("segment transversal: all-degenerate collinear input returns the "
          "common line") {
  SegmentFamily segs;
  segs.dimension = 2;
  for (long x : {0L, 1L, 2L})
    segs.segments.push_back({pt({x, x}), pt({x, x})});
  auto h = segment_hyperplane_transversal(segs);
  REQUIRE(h.has_value());
  CHECK(*h == make_canonical_hyperplane({Rational(1), Rational(-1)}, 0));
}

TEST_CASE("degenerate segment families agree with the point solver") {
  std::mt19937_64 rng(771);
  for (int t = 0; t < 30; ++t) {
    PointFamily f = random_family(rng, 4, 3, 1);
    SegmentFamily segs;
    segs.dimension = f.dimension;
    for (const auto& set : f.sets)
      segs.segments.push_back({set[0], set[0]});
    bool points_yes = hyperplane_transversal_points(f).has_value();
    bool segs_yes = segment_hyperplane_transversal(segs).has_value();
    CHECK(points_yes == segs_yes);
  }
}

TEST_CASE("planar segment solver matches the endpoint-pair line oracle") {
  // In the plane, if any line meets every closed segment then some line
  // through two distinct endpoints does (slide and rotate a transversal
  // until it pins twice), so the pair lines are a complete reference.
  std::mt19937_64 rng(99122);
  std::uniform_int_distribution<int> nseg(2, 4);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int t = 0; t < 40; ++t) {
    SegmentFamily segs;
    segs.dimension = 2;
    int k = nseg(rng);
    std::vector<Point> ends;
    for (int i = 0; i < k; ++i) {
      Point P = pt({coord(rng), coord(rng)});
      Point Q = pt({coord(rng), coord(rng)});
      ends.push_back(P);
      ends.push_back(Q);
      segs.segments.push_back({std::move(P), std::move(Q)});
    }
    bool oracle_yes = false;
    for (size_t i = 0; i < ends.size() && !oracle_yes; ++i)
      for (size_t j = i + 1; j < ends.size() && !oracle_yes; ++j) {
        if (ends[i] == ends[j]) continue;
        Vec dir = sub(ends[j], ends[i]);
        Vec normal = {dir[1], -dir[0]};
        Hyperplane h = make_canonical_hyperplane(normal, dot(normal, ends[i]));
        bool all = true;
        for (const auto& [P, Q] : segs.segments)
          if (!testing::oracle_segment_meets(h, P, Q)) {
            all = false;
            break;
          }
        oracle_yes = oracle_yes || all;
      }
    bool distinct = false;
    for (const auto& e : ends) distinct = distinct || e != ends[0];
    if (!distinct) continue;  // single repeated endpoint: oracle has no pairs
    auto got = segment_hyperplane_transversal(segs);
    CHECK(got.has_value() == oracle_yes);
    if (got)
      for (const auto& [P, Q] : segs.segments)
        CHECK(testing::oracle_segment_meets(*got, P, Q));
  }
}

TEST_CASE("segment input validation") {
  SegmentFamily empty;
  empty.dimension = 2;
  CHECK_THROWS_AS(segment_hyperplane_transversal(empty), Error);
  SegmentFamily bad;
  bad.dimension = 2;
  bad.segments.push_back({pt({1, 2}), pt({1})});
  CHECK_THROWS_AS(segment_hyperplane_transversal(bad), Error);
}

// --- exact MaxHyp ----------------------------------------------------------

TEST_CASE("maxhyp: collinear triple beats the stray point") {
  auto points = pts({{0, 0}, {1, 1}, {2, 2}, {5, 0}});
  MaxHypReport r = maxhyp_exact(points, 2);
  CHECK(r.count == 3);
  CHECK(r.hyperplane ==
        make_canonical_hyperplane({Rational(1), Rational(-1)}, 0));
}

TEST_CASE("maxhyp: single point and rank-deficient shortcut") {
  MaxHypReport one = maxhyp_exact(pts({{1, 2, 3}}), 3);
  CHECK(one.count == 1);
  CHECK(dot(one.hyperplane.normal, pt({1, 2, 3})) == one.hyperplane.offset);

  auto coplanar = pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  MaxHypReport r = maxhyp_exact(coplanar, 3);
  CHECK(r.count == 4);
  CHECK(r.hyperplane ==
        make_canonical_hyperplane({Rational(0), Rational(0), Rational(1)}, 0));

  CHECK_THROWS_AS(maxhyp_exact({}, 2), Error);
}

TEST_CASE("maxhyp counts duplicates with multiplicity") {
  auto points = pts({{0, 0}, {0, 0}, {1, 1}, {2, 0}});
  MaxHypReport r = maxhyp_exact(points, 2);
  CHECK(r.count == 3);  // the doubled origin plus (1,1) on x=y
}

TEST_CASE("maxhyp agrees with a pairwise line scan in the plane") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> npts(3, 9);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int t = 0; t < 25; ++t) {
    std::vector<Point> points;
    int n = npts(rng);
    for (int i = 0; i < n; ++i) points.push_back(pt({coord(rng), coord(rng)}));
    if (testing::oracle_affine_rank(points) < 2) continue;
    long long best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (points[i] == points[j]) continue;
        Vec dir = sub(points[j], points[i]);
        Vec normal = {dir[1], -dir[0]};
        Hyperplane h =
            make_canonical_hyperplane(normal, dot(normal, points[i]));
        long long cnt = 0;
        for (const auto& p : points)
          if (dot(h.normal, p) == h.offset) ++cnt;
        best = std::max(best, cnt);
      }
    MaxHypReport r = maxhyp_exact(points, 2);
    CHECK(r.count == best);
    long long recount = 0;
    for (const auto& p : points)
      if (dot(r.hyperplane.normal, p) == r.hyperplane.offset) ++recount;
    CHECK(recount == r.count);
  }
}

TEST_CASE("maxhyp is worker-count invariant") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<long> coord(-5, 5);
  for (int t = 0; t < 8; ++t) {
    std::vector<Point> points;
    for (int i = 0; i < 12; ++i)
      points.push_back(pt({coord(rng), coord(rng), coord(rng)}));
    MaxHypReport a = maxhyp_exact(points, 3, 1);
    MaxHypReport b = maxhyp_exact(points, 3, 4);
    CHECK(a.count == b.count);
    CHECK(a.hyperplane == b.hyperplane);
  }
}

TEST_CASE("work counters are reproducible") {
  PointFamily f = sum_family_one_item(1, 1);
  Stats s1, s2;
  (void)finite_flat_transversal(f, 1, &s1);
  (void)finite_flat_transversal(f, 1, &s2);
  CHECK(s1.candidates == s2.candidates);
  CHECK(s1.candidates > 0);
  CHECK(s1.lps == 0);

  SegmentFamily segs;
  segs.dimension = 2;
  for (long x : {-1L, 0L, 1L})
    segs.segments.push_back({pt({x, 0}), pt({x, 1})});
  Stats t1;
  (void)segment_hyperplane_transversal(segs, &t1);
  CHECK(t1.lps > 0);
  CHECK(t1.candidates >= 1);

  std::vector<Point> cloud = pts({{0, 0}, {1, 0}, {0, 1}, {2, 3}});
  Stats m1;
  (void)maxhyp_exact(cloud, 2, 1, &m1);
  CHECK(m1.candidates == 6);  // C(4,2) pair subsets
}
