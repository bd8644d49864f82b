#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/lp.hpp>
#include <flatsep/rational.hpp>
#include <flatsep/stats.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace flatsep {

/// One point picked from every set, all lying on `flat` (dim <= the target
/// the search was run with). Indices are 0-based positions into each set.
struct TransversalCertificate {
  std::vector<int> chosen;
  Flat flat;
};

/// Closed segments [first, second]; equal endpoints (degenerate segments,
/// i.e. points) are allowed.
struct SegmentFamily {
  int dimension = 0;
  std::vector<std::pair<Point, Point>> segments;

  void validate() const;  // throws Error on dimension mismatches / D < 1
};

/// A hyperplane together with the exact number of input points lying on
/// it, counted with multiplicity.
struct MaxHypReport {
  Hyperplane hyperplane;
  long long count = 0;
};

/// Decides whether one point can be chosen from every set so that the
/// chosen points fit in an m-dimensional flat, i.e. whether some m-flat
/// meets every set. Returns the lexicographically first certificate under
/// the order (set index, then point index); none if any set is empty.
/// Throws Error(BadTarget) unless 0 <= m <= D.
///
/// The search is a depth-first scan with exact rank pruning driven by
/// coordinate completion: a coordinate whose value is fixed on every
/// not-yet-decided set contributes a fully known column, and the rank of
/// the known columns (plus the homogenizing all-ones column) can only
/// grow toward the rank of the finished choice, so exceeding m+1 prunes.
std::optional<TransversalCertificate> finite_flat_transversal(
    const PointFamily& family, int m, Stats* stats = nullptr);

/// finite_flat_transversal at m = D-1.
std::optional<TransversalCertificate> hyperplane_transversal_points(
    const PointFamily& family, Stats* stats = nullptr);

/// Some hyperplane {a.x = a0}, a != 0, meeting every closed segment, or
/// nullopt. A segment [P,Q] meets the hyperplane iff a.P - a0 and
/// a.Q - a0 have opposite closed signs; the solver enumerates all 2^s
/// orientation patterns over the s nondegenerate segments (increasing
/// binary code, bit t = t-th nondegenerate segment in input order),
/// treats degenerate segments as equality constraints, and within each
/// pattern tests the 2D normalizations a_j = +1, a_j = -1 (j ascending,
/// +1 before -1) by exact LP feasibility. First hit wins.
std::optional<Hyperplane> segment_hyperplane_transversal(
    const SegmentFamily& segs, Stats* stats = nullptr);

/// Exact maximum number of points (with multiplicity) on one hyperplane.
/// If the whole input is rank-deficient the hyperplane through all points
/// is returned with count = |points|; otherwise every D-subset of affine
/// rank D-1 is a candidate and the best count wins, ties broken by the
/// smallest canonical hyperplane. Candidate evaluation may be split
/// across `threads` workers; the total order (count desc, hyperplane asc)
/// makes the merged result partition-independent.
MaxHypReport maxhyp_exact(const std::vector<Point>& points, int dimension,
                          int threads = 1, Stats* stats = nullptr);

}  // namespace flatsep
