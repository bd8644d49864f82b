#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/rational.hpp>
#include <flatsep/stats.hpp>

#include <optional>
#include <vector>

namespace flatsep {

enum class Rel { LE, EQ, GE };

struct LPRow {
  Vec coeffs;
  Rel rel;
  Rational rhs;
};

enum class Direction { Maximize, Minimize };

struct LPObjective {
  Direction direction;
  Vec coeffs;
};

/// Linear program over free (sign-unrestricted) variables. Nonnegativity,
/// when wanted, is expressed as an explicit GE row.
struct LPInstance {
  int variables = 0;
  std::vector<LPRow> rows;
  std::optional<LPObjective> objective;
};

enum class LPStatus { Feasible, Optimal, Infeasible, Unbounded };

/// Infeasibility certificate: one signed multiplier per constraint row,
/// nonnegative on LE rows, nonpositive on GE rows, unrestricted on EQ
/// rows, such that sum_i mult[i] * row_i is the zero functional while
/// sum_i mult[i] * rhs_i < 0 -- an exact contradiction 0 <= negative.
/// farkas_is_valid re-checks all of that from scratch.
struct LPOutcome {
  LPStatus status = LPStatus::Feasible;
  Vec assignment;   // Feasible / Optimal
  Rational value;   // Optimal only
  Vec farkas;       // Infeasible only
  Vec ray;          // Unbounded only: improving feasible direction
};

/// Exact two-phase primal simplex with Bland's anti-cycling rule
/// (entering: smallest eligible column index; leaving: minimum ratio,
/// ties by smallest basic column index). Deterministic. Each call adds
/// one to stats->lps when stats is given.
LPOutcome lp_solve(const LPInstance& instance, Stats* stats = nullptr);

bool farkas_is_valid(const LPInstance& instance, const Vec& multipliers);

/// Outcome of testing two convex hulls for intersection. Exactly one of
/// the two field groups is meaningful, keyed by `intersecting`.
struct SeparationResult {
  bool intersecting = false;

  // intersecting: point = sum weightsA . A = sum weightsB . B, both
  // weight vectors convex (nonnegative, sum 1).
  Point point;
  Vec weightsA;
  Vec weightsB;

  // separated: normal . p - offset >= margin on every point of A and
  // <= -margin on every point of B, margin > 0 (A on the positive side).
  Vec normal;
  Rational offset;
  Rational margin;

  /// The separator as a canonical hyperplane (sign information dropped).
  Hyperplane hyperplane() const {
    return make_canonical_hyperplane(normal, offset);
  }
};

/// Decides conv(A) against conv(B) by an exact convex-combination
/// feasibility program; on disjoint hulls extracts a maximum-margin
/// separator with the normal confined to the unit box.
SeparationResult hulls_intersect(const std::vector<Point>& A,
                                 const std::vector<Point>& B,
                                 Stats* stats = nullptr);

/// A point of flat-hull intersection together with its convex weights
/// over S, or nullopt when the flat misses the hull.
struct FlatHullMeet {
  Point point;
  Vec weights;
};
std::optional<FlatHullMeet> flat_meets_hull_weighted(
    const Flat& flat, const std::vector<Point>& S, Stats* stats = nullptr);

/// Convenience wrapper returning only the meeting point.
std::optional<Point> flat_meets_hull(const Flat& flat,
                                     const std::vector<Point>& S,
                                     Stats* stats = nullptr);

}  // namespace flatsep
