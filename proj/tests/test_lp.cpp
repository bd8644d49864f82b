#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <flatsep/lp.hpp>

#include <random>

#include "oracles.hpp"

using namespace flatsep;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

LPRow row(std::initializer_list<long> cs, Rel rel, long rhs) {
  LPRow r;
  for (long c : cs) r.coeffs.emplace_back(c);
  r.rel = rel;
  r.rhs = rhs;
  return r;
}

}  // namespace

TEST_CASE("bounded one-variable maximum") {
  LPInstance lp;
  lp.variables = 1;
  lp.rows = {row({1}, Rel::LE, 3), row({1}, Rel::GE, 0)};
  lp.objective = LPObjective{Direction::Maximize, {Q("1")}};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Optimal);
  CHECK(o.value == Q("3"));
  CHECK(o.assignment == Vec{Q("3")});
}

TEST_CASE("infeasible pair yields a checkable contradiction") {
  LPInstance lp;
  lp.variables = 1;
  lp.rows = {row({1}, Rel::GE, 1), row({1}, Rel::LE, 0)};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Infeasible);
  CHECK(farkas_is_valid(lp, o.farkas));
  // combination (x >= 1)*(-1) + (x <= 0)*(+1): 0 <= -1
  CHECK(o.farkas == Vec{Q("-1"), Q("1")});
  Rational bound = o.farkas[0] * lp.rows[0].rhs + o.farkas[1] * lp.rows[1].rhs;
  CHECK(bound == Q("-1"));
}

TEST_CASE("unbounded maximum reports an improving ray") {
  LPInstance lp;
  lp.variables = 1;
  lp.rows = {row({1}, Rel::GE, 0)};
  lp.objective = LPObjective{Direction::Maximize, {Q("1")}};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Unbounded);
  REQUIRE(o.ray.size() == 1);
  CHECK(o.ray[0] > 0);
}

TEST_CASE("free variables and equality rows") {
  LPInstance lp;
  lp.variables = 2;
  lp.rows = {row({1, 1}, Rel::EQ, 5)};
  lp.objective = LPObjective{Direction::Minimize, {Q("1"), Q("1")}};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Optimal);
  CHECK(o.value == Q("5"));
  CHECK(o.assignment[0] + o.assignment[1] == Q("5"));

  // minimizing x - y along the same line is unbounded
  lp.objective = LPObjective{Direction::Minimize, {Q("1"), Q("-1")}};
  o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Unbounded);
  CHECK(o.ray[0] + o.ray[1] == 0);
  CHECK(o.ray[0] < o.ray[1]);
}

TEST_CASE("feasibility-only instances return assignments") {
  LPInstance lp;
  lp.variables = 2;
  lp.rows = {row({1, 0}, Rel::GE, -2), row({1, 0}, Rel::LE, 7),
             row({0, 1}, Rel::EQ, -3)};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Feasible);
  CHECK(o.assignment[1] == Q("-3"));
  CHECK(o.assignment[0] >= Q("-2"));
  CHECK(o.assignment[0] <= Q("7"));
}

TEST_CASE("malformed instances are rejected") {
  LPInstance lp;
  lp.variables = 2;
  lp.rows = {row({1}, Rel::LE, 0)};
  CHECK_THROWS_AS(lp_solve(lp), Error);
  lp.rows = {row({1, 1}, Rel::LE, 0)};
  lp.objective = LPObjective{Direction::Maximize, {Q("1")}};
  CHECK_THROWS_AS(lp_solve(lp), Error);
}

TEST_CASE("degenerate pivoting terminates at the optimum") {
  // A classically cycling-prone instance (heavy degeneracy at the
  // origin); anti-cycling pivoting must still reach the optimum.
  LPInstance lp;
  lp.variables = 4;
  lp.rows = {
      row({1, -240, -1, 36}, Rel::LE, 0),   // scaled by 4
      row({1, -180, -1, 12}, Rel::LE, 0),   // scaled by 2 (x/50 kept exact)
      row({0, 0, 1, 0}, Rel::LE, 1),
      row({1, 0, 0, 0}, Rel::GE, 0),
      row({0, 1, 0, 0}, Rel::GE, 0),
      row({0, 0, 1, 0}, Rel::GE, 0),
      row({0, 0, 0, 1}, Rel::GE, 0),
  };
  lp.objective =
      LPObjective{Direction::Minimize,
                  {Q("-3/4"), Q("150"), Q("-1/50"), Q("6")}};
  LPOutcome o = lp_solve(lp);
  REQUIRE(o.status == LPStatus::Optimal);
  auto oracle = testing::oracle_lp(lp);
  REQUIRE(oracle.feasible);
  REQUIRE(oracle.best.has_value());
  CHECK(o.value == *oracle.best);
}

TEST_CASE("random boxed instances match the vertex-enumeration oracle") {
  std::mt19937_64 rng(775204);
  std::uniform_int_distribution<int> nvar(1, 3), nrow(1, 4), coef(-3, 3),
      rhs(-4, 4), relpick(0, 2), objpick(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    LPInstance lp;
    lp.variables = nvar(rng);
    int m = nrow(rng);
    for (int i = 0; i < m; ++i) {
      LPRow r;
      for (int j = 0; j < lp.variables; ++j) r.coeffs.emplace_back(coef(rng));
      r.rel = static_cast<Rel>(relpick(rng));
      r.rhs = rhs(rng);
      lp.rows.push_back(std::move(r));
    }
    // box keeps the region bounded so the oracle is complete
    for (int j = 0; j < lp.variables; ++j) {
      LPRow up{Vec(lp.variables, Rational(0)), Rel::LE, Rational(5)};
      up.coeffs[j] = 1;
      lp.rows.push_back(std::move(up));
      LPRow lo{Vec(lp.variables, Rational(0)), Rel::GE, Rational(-5)};
      lo.coeffs[j] = 1;
      lp.rows.push_back(std::move(lo));
    }
    if (objpick(rng) != 0) {
      LPObjective obj;
      obj.direction =
          (objpick(rng) == 1) ? Direction::Maximize : Direction::Minimize;
      for (int j = 0; j < lp.variables; ++j)
        obj.coeffs.emplace_back(coef(rng));
      lp.objective = obj;
    }

    LPOutcome o = lp_solve(lp);
    auto oracle = testing::oracle_lp(lp);
    if (!oracle.feasible) {
      CHECK(o.status == LPStatus::Infeasible);
      CHECK(farkas_is_valid(lp, o.farkas));
    } else if (lp.objective) {
      REQUIRE(o.status == LPStatus::Optimal);
      CHECK(o.value == *oracle.best);
    } else {
      REQUIRE(o.status == LPStatus::Feasible);
      CHECK(testing::oracle_point_feasible(lp, o.assignment));
    }
  }
}

TEST_CASE("separated hulls on a line") {
  SeparationResult r = hulls_intersect({pt({0})}, {pt({1})});
  REQUIRE_FALSE(r.intersecting);
  CHECK(r.margin == Q("1/2"));
  Hyperplane h = r.hyperplane();
  CHECK(h.normal == Vec{Q("1")});
  CHECK(h.offset == Q("1/2"));
  // signed checks: A on the positive side
  CHECK(dot(r.normal, pt({0})) - r.offset >= r.margin);
  CHECK(dot(r.normal, pt({1})) - r.offset <= -r.margin);
}

TEST_CASE("overlapping hulls on a line give exact weights") {
  SeparationResult r = hulls_intersect({pt({0}), pt({2})}, {pt({1})});
  REQUIRE(r.intersecting);
  CHECK(r.point == Vec{Q("1")});
  CHECK(r.weightsA == Vec{Q("1/2"), Q("1/2")});
  CHECK(r.weightsB == Vec{Q("1")});
}

TEST_CASE("point inside a triangle") {
  std::vector<Point> A = {pt({0, 0}), pt({2, 0}), pt({0, 2})};
  std::vector<Point> B = {{Q("1/2"), Q("1/2")}};
  SeparationResult r = hulls_intersect(A, B);
  REQUIRE(r.intersecting);
  CHECK(r.point == B[0]);
  Rational wsum = 0;
  Vec rebuilt(2, Rational(0));
  for (size_t i = 0; i < A.size(); ++i) {
    CHECK(r.weightsA[i] >= 0);
    wsum += r.weightsA[i];
    for (int d = 0; d < 2; ++d) rebuilt[d] += r.weightsA[i] * A[i][d];
  }
  CHECK(wsum == 1);
  CHECK(rebuilt == r.point);
}

TEST_CASE("hull test validates inputs") {
  CHECK_THROWS_AS(hulls_intersect({}, {pt({1})}), Error);
  CHECK_THROWS_AS(hulls_intersect({pt({1})}, {}), Error);
  CHECK_THROWS_AS(hulls_intersect({pt({1})}, {pt({1, 2})}), Error);
}

TEST_CASE("random hull pairs match the support-enumeration oracle") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> cnt(1, 4), coord(-3, 3), dims(1, 2);
  for (int trial = 0; trial < 80; ++trial) {
    int D = dims(rng);
    std::vector<Point> A(cnt(rng), Point(D)), B(cnt(rng), Point(D));
    for (auto& p : A)
      for (auto& x : p) x = coord(rng);
    for (auto& p : B)
      for (auto& x : p) x = coord(rng);
    SeparationResult r = hulls_intersect(A, B);
    bool expect = testing::oracle_hulls_intersect(A, B);
    CHECK(r.intersecting == expect);
    // answer kind is symmetric under swapping the sides
    SeparationResult rs = hulls_intersect(B, A);
    CHECK(rs.intersecting == r.intersecting);
    if (r.intersecting) {
      Rational sa = 0, sb = 0;
      Vec ra(D, Rational(0)), rb(D, Rational(0));
      for (size_t i = 0; i < A.size(); ++i) {
        CHECK(r.weightsA[i] >= 0);
        sa += r.weightsA[i];
        for (int d = 0; d < D; ++d) ra[d] += r.weightsA[i] * A[i][d];
      }
      for (size_t j = 0; j < B.size(); ++j) {
        CHECK(r.weightsB[j] >= 0);
        sb += r.weightsB[j];
        for (int d = 0; d < D; ++d) rb[d] += r.weightsB[j] * B[j][d];
      }
      CHECK(sa == 1);
      CHECK(sb == 1);
      CHECK(ra == r.point);
      CHECK(rb == r.point);
    } else {
      CHECK(r.margin > 0);
      for (const auto& p : A) CHECK(dot(r.normal, p) - r.offset >= r.margin);
      for (const auto& q : B) CHECK(dot(r.normal, q) - r.offset <= -r.margin);
    }
  }
}

TEST_CASE("flat meets hull where a segment crosses the axis") {
  Flat xaxis{pt({0, 0}), {Vec{Q("1"), Q("0")}}};
  auto hit = flat_meets_hull(xaxis, {pt({1, -1}), pt({1, 1})});
  REQUIRE(hit.has_value());
  CHECK(*hit == pt({1, 0}));

  auto miss = flat_meets_hull(xaxis, {pt({0, 1}), pt({1, 2})});
  CHECK_FALSE(miss.has_value());
}

TEST_CASE("full-dimensional flat returns the first vertex") {
  Flat all{pt({0, 0}), {Vec{Q("1"), Q("0")}, Vec{Q("0"), Q("1")}}};
  auto hit = flat_meets_hull(all, {pt({3, 4}), pt({5, 6})});
  REQUIRE(hit.has_value());
  CHECK(*hit == pt({3, 4}));
}

TEST_CASE("flat-hull weights re-evaluate to the meeting point") {
  Flat diag{pt({0, 0, 0}), {Vec{Q("1"), Q("1"), Q("1")}}};
  std::vector<Point> S = {pt({2, 0, 2}), pt({0, 2, 2}), pt({2, 2, 0})};
  auto meet = flat_meets_hull_weighted(diag, S);
  REQUIRE(meet.has_value());
  Rational wsum = 0;
  Vec rebuilt(3, Rational(0));
  for (size_t i = 0; i < S.size(); ++i) {
    CHECK(meet->weights[i] >= 0);
    wsum += meet->weights[i];
    for (int d = 0; d < 3; ++d) rebuilt[d] += meet->weights[i] * S[i][d];
  }
  CHECK(wsum == 1);
  CHECK(rebuilt == meet->point);
  CHECK(flat_contains(diag, meet->point));

  CHECK_THROWS_AS(flat_meets_hull(diag, {}), Error);
}
